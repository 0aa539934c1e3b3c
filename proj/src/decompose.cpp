/* decompose.cpp -- language covers by inclusion-maximal posets */

#include "poshuffle/decompose.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "poshuffle/errors.hpp"
#include "poshuffle/extraction.hpp"

namespace poshuffle {

namespace {

using Bits = std::vector<std::uint64_t>;

bool bits_subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i])
            return false;
    return true;
}

std::size_t bits_count(const Bits& a) {
    std::size_t total = 0;
    for (const std::uint64_t x : a)
        total += static_cast<std::size_t>(std::popcount(x));
    return total;
}

} // namespace

PosetCover decompose(const Language& language, const DecomposeOptions& options) {
    const ExtractedOrder base = extract_order(language);
    const std::size_t n = base.events.size();
    const std::size_t max_events = std::min<std::size_t>(options.max_events, 7);
    if (n > max_events)
        throw SizeLimitError("decomposition supports at most " + std::to_string(max_events) +
                             " events, got " + std::to_string(n));

    // Traces as index sequences; index order equals symbol order, so these
    // stay sorted and support binary search.
    const auto& words = language.words();
    const std::size_t w_count = words.size();
    std::vector<std::vector<std::size_t>> traces(w_count);
    for (std::size_t w = 0; w < w_count; ++w)
        for (const Symbol& s : words[w])
            traces[w].push_back(static_cast<std::size_t>(
                std::lower_bound(base.events.begin(), base.events.end(), s) -
                base.events.begin()));

    const std::size_t bit_blocks = (w_count + 63) / 64;
    const auto pack = [n](const std::vector<char>& m) {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < n * n; ++i)
            key |= std::uint64_t{m[i] != 0} << i;
        return key;
    };

    // Is every linear extension of m inside the language? If so, which
    // traces does it cover? Aborts on the first stray extension.
    const auto language_within = [&](const std::vector<char>& m,
                                     Bits& covered) -> bool {
        covered.assign(bit_blocks, 0);
        std::vector<std::size_t> npred(n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (a != b && m[b * n + a])
                    ++npred[a];
        std::vector<char> fired(n, 0);
        std::vector<std::size_t> order;
        order.reserve(n);
        const auto rec = [&](const auto& rec) -> bool {
            if (order.size() == n) {
                const auto it = std::lower_bound(traces.begin(), traces.end(), order);
                if (it == traces.end() || *it != order)
                    return false;
                const auto w = static_cast<std::size_t>(it - traces.begin());
                covered[w / 64] |= std::uint64_t{1} << (w % 64);
                return true;
            }
            for (std::size_t a = 0; a < n; ++a) {
                if (fired[a] || npred[a] != 0)
                    continue;
                fired[a] = 1;
                order.push_back(a);
                for (std::size_t b = 0; b < n; ++b)
                    if (a != b && m[a * n + b])
                        --npred[b];
                const bool ok = rec(rec);
                for (std::size_t b = 0; b < n; ++b)
                    if (a != b && m[a * n + b])
                        ++npred[b];
                order.pop_back();
                fired[a] = 0;
                if (!ok)
                    return false;
            }
            return true;
        };
        return rec(rec);
    };

    // Base-concurrent pairs drive a ternary search: leave the pair alone or
    // orient it either way, closing transitively at every step. Once a
    // candidate's language fits inside the input, anything stricter is
    // dominated and skipped.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!base.leq[u * n + v] && !base.leq[v * n + u])
                pairs.emplace_back(u, v);

    std::unordered_set<std::uint64_t> visited;         // (pair index, matrix) nodes
    std::unordered_map<std::uint64_t, char> tested;    // matrix -> is candidate
    std::map<std::uint64_t, std::pair<std::vector<char>, Bits>> candidates;

    const auto rec = [&](const auto& rec, const std::vector<char>& m,
                         std::size_t k) -> void {
        const std::uint64_t mkey = pack(m);
        if (!visited.insert(mkey | (std::uint64_t{k} << 56)).second)
            return;
        if (visited.size() > options.max_orders)
            throw SizeLimitError("decomposition search exceeds " +
                                 std::to_string(options.max_orders) + " orders");

        const auto cached = tested.find(mkey);
        if (cached != tested.end() ? cached->second != 0 : false)
            return; // already a recorded candidate
        if (cached == tested.end()) {
            Bits covered;
            if (language_within(m, covered)) {
                tested.emplace(mkey, 1);
                candidates.emplace(mkey, std::pair{m, std::move(covered)});
                return;
            }
            tested.emplace(mkey, 0);
        }

        if (k == pairs.size())
            return;
        const auto [u, v] = pairs[k];
        rec(rec, m, k + 1);
        if (m[u * n + v] || m[v * n + u])
            return; // closure already oriented this pair; both branches collapse
        for (const auto& [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
            std::vector<char> next = m;
            next[x * n + y] = 1;
            close_relation(next, n);
            if (antisymmetric(next, n))
                rec(rec, next, k + 1);
        }
    };
    rec(rec, base.leq, 0);

    // Keep candidates maximal by language inclusion.
    struct Entry {
        std::vector<char> leq;
        Bits covered;
        std::size_t count;
        std::vector<std::pair<EventId, EventId>> hasse;
    };
    std::vector<Entry> entries;
    for (const auto& [key, cand] : candidates) {
        (void)key;
        bool dominated = false;
        for (const auto& [okey, other] : candidates) {
            if (okey != key && bits_subset(cand.second, other.second) &&
                cand.second != other.second) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            const auto p = Poset::from_closed_matrix(base.events, cand.first);
            if (!p)
                throw std::logic_error("candidate order is not a valid poset");
            entries.push_back(
                Entry{cand.first, cand.second, bits_count(cand.second), p->hasse()});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.count != b.count)
            return a.count > b.count;
        return a.hasse < b.hasse;
    });

    PosetCover cover;
    Bits covered(bit_blocks, 0);
    std::size_t covered_count = 0;
    for (const Entry& e : entries) {
        if (covered_count == w_count)
            break;
        bool adds = false;
        for (std::size_t i = 0; i < bit_blocks; ++i)
            if (e.covered[i] & ~covered[i]) {
                adds = true;
                break;
            }
        if (!adds)
            continue;
        for (std::size_t i = 0; i < bit_blocks; ++i)
            covered[i] |= e.covered[i];
        covered_count = bits_count(covered);
        cover.posets.push_back(*Poset::from_closed_matrix(base.events, e.leq));
    }
    if (covered_count != w_count)
        throw std::logic_error("cover search failed to cover the language");
    return cover;
}

} // namespace poshuffle
