/* trace_semantics.cpp -- linear extensions and swap moves */

#include "poshuffle/trace_semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "poshuffle/errors.hpp"

namespace poshuffle {

namespace {

// Visits every linear extension of p as a vector of event indices, in
// lexicographic order. Throws SizeLimitError past limits.max_traces.
template <typename Visit>
void for_each_extension(const Poset& p, const Limits& limits, Visit&& visit) {
    const std::size_t n = p.size();
    std::vector<std::size_t> npred(n, 0); // unfired strict predecessors
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (p.less(b, a))
                ++npred[a];
    std::vector<char> fired(n, 0);
    std::vector<std::size_t> order;
    order.reserve(n);
    std::size_t count = 0;

    const auto rec = [&](const auto& rec) -> void {
        if (order.size() == n) {
            if (++count > limits.max_traces)
                throw SizeLimitError("poset has more than " +
                                     std::to_string(limits.max_traces) + " traces");
            visit(order);
            return;
        }
        for (std::size_t a = 0; a < n; ++a) {
            if (fired[a] || npred[a] != 0)
                continue;
            fired[a] = 1;
            order.push_back(a);
            for (std::size_t b = 0; b < n; ++b)
                if (p.less(a, b))
                    --npred[b];
            rec(rec);
            for (std::size_t b = 0; b < n; ++b)
                if (p.less(a, b))
                    ++npred[b];
            order.pop_back();
            fired[a] = 0;
        }
    };
    rec(rec);
}

} // namespace

Language lang(const Poset& p, const Limits& limits) {
    std::vector<Word> words;
    for_each_extension(p, limits, [&](const std::vector<std::size_t>& order) {
        Word w;
        w.reserve(order.size());
        for (const std::size_t a : order)
            w.push_back(p.event(a));
        words.push_back(std::move(w));
    });
    return Language::from_sorted_unique(std::move(words));
}

Language lang_labelled(const LPoset& lp, const Limits& limits) {
    std::set<Word> words;
    for_each_extension(lp.poset(), limits, [&](const std::vector<std::size_t>& order) {
        Word w;
        w.reserve(order.size());
        for (const std::size_t a : order)
            w.push_back(lp.label_at(a));
        words.insert(std::move(w));
    });
    return Language::from_sorted_unique({words.begin(), words.end()});
}

Language swap_neighbours(const Poset& p, const Trace& trace) {
    const std::size_t n = p.size();
    if (trace.size() != n)
        throw TraceNotInLanguageError("trace has " + std::to_string(trace.size()) +
                                      " events, poset has " + std::to_string(n));
    std::vector<std::size_t> idx(n);
    std::vector<char> seen(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        std::size_t a;
        try {
            a = p.index_of(trace[u]);
        } catch (const UnknownEventError&) {
            throw TraceNotInLanguageError("trace mentions unknown event '" + trace[u] + "'");
        }
        if (seen[a])
            throw TraceNotInLanguageError("trace repeats event '" + trace[u] + "'");
        seen[a] = 1;
        idx[u] = a;
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (p.less(idx[v], idx[u]))
                throw TraceNotInLanguageError("trace orders '" + trace[u] + "' before '" +
                                              trace[v] + "' against the poset");

    std::vector<Word> out;
    for (std::size_t u = 0; u + 1 < n; ++u) {
        if (!p.concurrent(idx[u], idx[u + 1]))
            continue;
        Word w = trace;
        std::swap(w[u], w[u + 1]);
        out.push_back(std::move(w));
    }
    return Language(std::move(out));
}

bool swap_connected(const Poset& p, const Limits& limits) {
    const Language all = lang(p, limits);
    if (all.size() <= 1)
        return true;
    const auto& words = all.words();
    const auto index_of_word = [&](const Word& w) {
        const auto it = std::lower_bound(words.begin(), words.end(), w);
        if (it == words.end() || *it != w)
            throw std::logic_error("swap produced a trace outside the language");
        return static_cast<std::size_t>(it - words.begin());
    };

    std::vector<char> visited(words.size(), 0);
    std::vector<std::size_t> queue{0};
    visited[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const std::size_t at = queue.back();
        queue.pop_back();
        for (const Word& w : swap_neighbours(p, words[at])) {
            const std::size_t to = index_of_word(w);
            if (!visited[to]) {
                visited[to] = 1;
                ++reached;
                queue.push_back(to);
            }
        }
    }
    return reached == words.size();
}

unsigned long long count_extensions(const Poset& p, unsigned long long cap) {
    const std::size_t n = p.size();
    if (n > 64)
        throw SizeLimitError("extension counting supports at most 64 events");
    // Successor masks feed a downset DP: the count below a fired-set depends
    // only on the set.
    std::vector<std::uint64_t> preds(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (p.less(b, a))
                preds[a] |= std::uint64_t{1} << b;
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    std::unordered_map<std::uint64_t, unsigned long long> memo;
    const auto rec = [&](const auto& rec, std::uint64_t fired) -> unsigned long long {
        if (fired == full)
            return 1;
        const auto it = memo.find(fired);
        if (it != memo.end())
            return it->second;
        unsigned long long total = 0;
        for (std::size_t a = 0; a < n; ++a) {
            const std::uint64_t bit = std::uint64_t{1} << a;
            if ((fired & bit) || (preds[a] & ~fired))
                continue;
            total += rec(rec, fired | bit);
            if (total > cap) {
                total = cap + 1;
                break;
            }
        }
        memo.emplace(fired, total);
        return total;
    };
    return rec(rec, 0);
}

} // namespace poshuffle
