/* characterize.cpp -- semantic and structural single-poset verdicts */

#include "poshuffle/characterize.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "poshuffle/errors.hpp"
#include "poshuffle/extraction.hpp"
#include "poshuffle/shuffle.hpp"
#include "poshuffle/trace_semantics.hpp"

namespace poshuffle {

namespace {

// Strict decimal in 1..arity ("01" and the like are rejected).
int parse_label(const std::string& label, int arity) {
    bool ok = !label.empty() && label.size() <= 9 && label[0] != '0';
    int value = 0;
    for (const char c : label) {
        if (c < '0' || c > '9') {
            ok = false;
            break;
        }
        value = value * 10 + (c - '0');
    }
    if (!ok || value < 1 || value > arity)
        throw ArityError("trajectory label '" + label + "' is not an operand index in 1.." +
                         std::to_string(arity));
    return value;
}

// Linear extension count of the order given by strict-predecessor masks,
// saturating at cap + 1.
unsigned long long count_extensions_masks(const std::vector<std::uint64_t>& preds,
                                          unsigned long long cap) {
    const std::size_t n = preds.size();
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

std::string slot_name(int label, std::size_t occurrence) {
    return "(" + std::to_string(label) + "," + std::to_string(occurrence) + ")";
}

} // namespace

ShuffleInstance::ShuffleInstance(LPoset trajectory, std::vector<Poset> operands)
    : trajectory_(std::move(trajectory)), operands_(std::move(operands)) {
    if (operands_.empty())
        throw ArityError("a shuffle needs at least one operand");
    const int n = arity();
    label_counts_.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t a = 0; a < trajectory_.size(); ++a)
        ++label_counts_[static_cast<std::size_t>(parse_label(trajectory_.label_at(a), n)) - 1];

    std::vector<EventId> all;
    for (const Poset& p : operands_)
        all.insert(all.end(), p.events().begin(), p.events().end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
        if (all[i] == all[i + 1])
            throw DisjointnessError("event '" + all[i] + "' appears in more than one operand");
}

bool ShuffleInstance::counts_fit() const {
    for (std::size_t i = 0; i < operands_.size(); ++i)
        if (label_counts_[i] != operands_[i].size())
            return false;
    return true;
}

std::vector<UniformityViolation> check_lemma2(const ShuffleInstance& instance,
                                              const Poset& p) {
    for (const Poset& op : instance.operands())
        for (const EventId& id : op.events())
            if (!p.contains(id))
                throw UnknownEventError("checked poset is missing operand event '" + id + "'");

    std::vector<UniformityViolation> out;
    const auto& ops = instance.operands();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const Poset& pi = ops[i];
        for (std::size_t a = 0; a < pi.size(); ++a)
            for (std::size_t b = a + 1; b < pi.size(); ++b) {
                if (!pi.concurrent(a, b))
                    continue;
                for (std::size_t j = 0; j < ops.size(); ++j) {
                    if (j == i)
                        continue;
                    for (const EventId& c : ops[j].events()) {
                        const Relation ra = p.relation(pi.event(a), c);
                        const Relation rb = p.relation(pi.event(b), c);
                        if (ra != rb)
                            out.push_back({pi.event(a), pi.event(b), c,
                                           static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                                           ra, rb});
                    }
                }
            }
    }
    return out; // loop order already sorts by (operand_ab, a, b, operand_c, c)
}

namespace detail {

SlotProfile slot_profile(const LPoset& trajectory, int arity, const Limits& limits) {
    const Poset& tp = trajectory.poset();
    const std::size_t n = tp.size();
    if (n > 64)
        throw SizeLimitError("structural analysis supports at most 64 trajectory events");

    SlotProfile profile;
    profile.counts.assign(static_cast<std::size_t>(arity), 0);
    std::vector<std::size_t> label_of(n); // 0-based operand index
    for (std::size_t a = 0; a < n; ++a) {
        label_of[a] = static_cast<std::size_t>(parse_label(trajectory.label_at(a), arity)) - 1;
        ++profile.counts[label_of[a]];
    }
    profile.offsets.assign(static_cast<std::size_t>(arity), 0);
    for (std::size_t i = 1; i < profile.offsets.size(); ++i)
        profile.offsets[i] = profile.offsets[i - 1] + profile.counts[i - 1];
    profile.total_slots = n;

    std::vector<std::uint64_t> preds(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (tp.less(b, a))
                preds[a] |= std::uint64_t{1} << b;
    const auto enabled = [&](std::uint64_t m, std::size_t a) {
        return !(m & (std::uint64_t{1} << a)) && (preds[a] & ~m) == 0;
    };

    // All order ideals (downward-closed fired-sets), by search from the
    // empty set.
    constexpr std::size_t ideal_cap = std::size_t{1} << 22;
    std::vector<std::uint64_t> ideals;
    std::unordered_set<std::uint64_t> seen;
    ideals.push_back(0);
    seen.insert(0);
    for (std::size_t at = 0; at < ideals.size(); ++at) {
        const std::uint64_t m = ideals[at];
        for (std::size_t a = 0; a < n; ++a) {
            if (!enabled(m, a))
                continue;
            const std::uint64_t next = m | (std::uint64_t{1} << a);
            if (seen.insert(next).second) {
                ideals.push_back(next);
                if (ideals.size() > ideal_cap)
                    throw SizeLimitError("trajectory has too many order ideals");
            }
        }
    }

    // max_with[i][j][c]: over ideals with at most c events of label i+1, the
    // maximum count of label j+1. Always-before falls out of these tables:
    // the l-th occurrence of j+1 can precede the k-th of i+1 iff some ideal
    // holds >= l events of j+1 and <= k-1 of i+1.
    const std::size_t na = static_cast<std::size_t>(arity);
    std::vector<std::vector<std::vector<std::size_t>>> max_with(
        na, std::vector<std::vector<std::size_t>>(na));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            max_with[i][j].assign(profile.counts[i] + 1, 0);
    std::vector<std::size_t> v(na);
    for (const std::uint64_t m : ideals) {
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t a = 0; a < n; ++a)
            if (m & (std::uint64_t{1} << a))
                ++v[label_of[a]];
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) {
                auto& row = max_with[i][j];
                for (std::size_t c = v[i]; c < row.size(); ++c)
                    row[c] = std::max(row[c], v[j]);
            }
    }

    profile.always_before.assign(n * n, 0);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t k = 1; k <= profile.counts[i]; ++k)
            for (std::size_t j = 0; j < na; ++j)
                for (std::size_t l = 1; l <= profile.counts[j]; ++l) {
                    const std::size_t s = profile.offsets[i] + k - 1;
                    const std::size_t t = profile.offsets[j] + l - 1;
                    if (l > max_with[i][j][k - 1])
                        profile.always_before[s * n + t] = 1;
                }

    // Distinct label words, counted on the determinized ideal graph: a word
    // maps to the unique sequence of ideal sets it can reach.
    const unsigned long long cap = limits.max_traces;
    std::map<std::vector<std::uint64_t>, unsigned long long> frontier;
    frontier[{0}] = 1;
    for (std::size_t step = 0; step < n; ++step) {
        std::map<std::vector<std::uint64_t>, unsigned long long> next_frontier;
        for (const auto& [state, ways] : frontier) {
            for (std::size_t lab = 0; lab < na; ++lab) {
                std::set<std::uint64_t> next_state;
                for (const std::uint64_t m : state)
                    for (std::size_t a = 0; a < n; ++a)
                        if (label_of[a] == lab && enabled(m, a))
                            next_state.insert(m | (std::uint64_t{1} << a));
                if (next_state.empty())
                    continue;
                auto& slot = next_frontier[{next_state.begin(), next_state.end()}];
                slot = std::min(slot + ways, cap + 1);
            }
        }
        frontier = std::move(next_frontier);
    }
    profile.distinct_words = 0;
    for (const auto& [state, ways] : frontier) {
        (void)state;
        profile.distinct_words = std::min(profile.distinct_words + ways, cap + 1);
    }
    return profile;
}

} // namespace detail

namespace {

BlockStructureResult block_structure_impl(const ShuffleInstance& instance,
                                          const Limits& limits,
                                          detail::SlotProfile* profile_out) {
    const auto& counts = instance.label_counts();
    for (std::size_t i = 0; i < instance.operands().size(); ++i)
        if (counts[i] != instance.operands()[i].size())
            return BlockStructureFailure{
                "label " + std::to_string(i + 1) + " occurs " + std::to_string(counts[i]) +
                " times but operand " + std::to_string(i + 1) + " has " +
                std::to_string(instance.operands()[i].size()) + " events"};

    const detail::SlotProfile profile =
        detail::slot_profile(instance.trajectory(), instance.arity(), limits);
    if (profile_out)
        *profile_out = profile;
    if (profile.distinct_words > limits.max_traces)
        throw SizeLimitError("trajectory language exceeds " +
                             std::to_string(limits.max_traces) + " words");

    // Each operand's groups take consecutive occurrence slots, in group
    // order; that assignment is forced.
    BlockStructure bs;
    bs.blocks.resize(instance.operands().size());
    for (std::size_t i = 0; i < instance.operands().size(); ++i) {
        const GroupDecomposition d = instance.operands()[i].groups();
        std::size_t slot = 1;
        for (std::size_t g = 0; g < d.groups.size(); ++g) {
            bs.blocks[i].push_back(Block{static_cast<int>(i) + 1, static_cast<int>(g) + 1,
                                         slot, d.groups[g].size()});
            slot += d.groups[g].size();
        }
    }

    // Cross-operand block rectangles must be uniformly lt, gt or unordered
    // under always-before.
    enum class Kind { lt, gt, conc };
    const auto pair_kind = [&](std::size_t s, std::size_t t) {
        const bool st = profile.ab(s, t);
        const bool ts = profile.ab(t, s);
        if (st && ts)
            throw std::logic_error("contradictory always-before relation");
        return st ? Kind::lt : ts ? Kind::gt : Kind::conc;
    };
    const auto kind_name = [](Kind k) {
        return k == Kind::lt ? "before" : k == Kind::gt ? "after" : "unordered against";
    };

    std::vector<std::pair<BlockRef, BlockRef>> cross_lt;
    for (std::size_t i = 0; i < bs.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < bs.blocks.size(); ++j)
            for (const Block& bi : bs.blocks[i])
                for (const Block& bj : bs.blocks[j]) {
                    bool first = true;
                    Kind kind = Kind::conc;
                    std::size_t k0 = 0, l0 = 0;
                    for (std::size_t k = bi.first_slot; k < bi.first_slot + bi.size; ++k)
                        for (std::size_t l = bj.first_slot; l < bj.first_slot + bj.size; ++l) {
                            const std::size_t s = profile.slot(bi.operand, k);
                            const std::size_t t = profile.slot(bj.operand, l);
                            const Kind here = pair_kind(s, t);
                            if (first) {
                                kind = here;
                                k0 = k;
                                l0 = l;
                                first = false;
                            } else if (here != kind) {
                                return BlockStructureFailure{
                                    "blocks (" + std::to_string(bi.operand) + "," +
                                    std::to_string(bi.index) + ") and (" +
                                    std::to_string(bj.operand) + "," +
                                    std::to_string(bj.index) +
                                    ") are not uniformly related: slot " +
                                    slot_name(bi.operand, k0) + " is " + kind_name(kind) +
                                    " slot " + slot_name(bj.operand, l0) + " but slot " +
                                    slot_name(bi.operand, k) + " is " + kind_name(here) +
                                    " slot " + slot_name(bj.operand, l)};
                            }
                        }
                    if (first)
                        continue; // one of the blocks is empty of slots
                    if (kind == Kind::lt)
                        cross_lt.emplace_back(BlockRef{bi.operand, bi.index},
                                              BlockRef{bj.operand, bj.index});
                    else if (kind == Kind::gt)
                        cross_lt.emplace_back(BlockRef{bj.operand, bj.index},
                                              BlockRef{bi.operand, bi.index});
                }

    // The trajectory must realize every interleaving the block order allows:
    // compare its distinct word count against the extensions of the slot
    // order induced by label chains plus the lt blocks.
    std::vector<std::uint64_t> slot_preds(profile.total_slots, 0);
    for (std::size_t i = 0; i < profile.counts.size(); ++i)
        for (std::size_t k = 2; k <= profile.counts[i]; ++k)
            slot_preds[profile.offsets[i] + k - 1] |=
                std::uint64_t{1} << (profile.offsets[i] + k - 2);
    for (const auto& [x, y] : cross_lt) {
        const Block& bx = bs.blocks[static_cast<std::size_t>(x.first) - 1]
                                   [static_cast<std::size_t>(x.second) - 1];
        const Block& by = bs.blocks[static_cast<std::size_t>(y.first) - 1]
                                   [static_cast<std::size_t>(y.second) - 1];
        for (std::size_t k = bx.first_slot; k < bx.first_slot + bx.size; ++k)
            for (std::size_t l = by.first_slot; l < by.first_slot + by.size; ++l)
                slot_preds[profile.slot(by.operand, l)] |=
                    std::uint64_t{1} << profile.slot(bx.operand, k);
    }
    const unsigned long long patterns =
        count_extensions_masks(slot_preds, limits.max_traces);
    if (patterns > limits.max_traces)
        throw SizeLimitError("block order allows more than " +
                             std::to_string(limits.max_traces) + " interleavings");
    if (patterns != profile.distinct_words)
        return BlockStructureFailure{"trajectory realizes " +
                                     std::to_string(profile.distinct_words) + " of the " +
                                     std::to_string(patterns) +
                                     " interleavings the block order allows"};

    bs.block_order = std::move(cross_lt);
    for (std::size_t i = 0; i < bs.blocks.size(); ++i)
        for (std::size_t g = 0; g < bs.blocks[i].size(); ++g)
            for (std::size_t h = g + 1; h < bs.blocks[i].size(); ++h)
                bs.block_order.emplace_back(
                    BlockRef{static_cast<int>(i) + 1, static_cast<int>(g) + 1},
                    BlockRef{static_cast<int>(i) + 1, static_cast<int>(h) + 1});
    std::sort(bs.block_order.begin(), bs.block_order.end());
    return bs;
}

} // namespace

BlockStructureResult block_structure(const ShuffleInstance& instance, const Limits& limits) {
    return block_structure_impl(instance, limits, nullptr);
}

ShuffleVerdict shuffle_semantic(const ShuffleInstance& instance, const Limits& limits) {
    ShuffleVerdict verdict;
    if (!instance.counts_fit()) {
        verdict.empty_shuffle = true;
        verdict.note = "empty shuffle: label counts do not match operand sizes";
        return verdict;
    }

    const Language trajectories = lang_labelled(instance.trajectory(), limits);
    std::vector<Language> operand_langs;
    operand_langs.reserve(instance.operands().size());
    for (const Poset& p : instance.operands())
        operand_langs.push_back(lang(p, limits));
    const Language shuffled =
        shuffle_languages(trajectories, operand_langs, instance.arity(), limits);

    const PosetLanguageCheck check = is_poset_language(shuffled, limits);
    verdict.language_size = shuffled.size();
    verdict.violations = check_lemma2(instance, check.reconstructed);
    if (check.is_poset_language) {
        verdict.single = true;
        verdict.result = check.reconstructed;
    } else {
        verdict.witness = check.witness;
    }
    return verdict;
}

ShuffleVerdict shuffle_structural(const ShuffleInstance& instance, const Limits& limits) {
    ShuffleVerdict verdict;
    if (!instance.counts_fit()) {
        verdict.empty_shuffle = true;
        verdict.note = "empty shuffle: label counts do not match operand sizes";
        return verdict;
    }

    detail::SlotProfile profile;
    const BlockStructureResult result = block_structure_impl(instance, limits, &profile);
    if (const auto* failure = std::get_if<BlockStructureFailure>(&result)) {
        verdict.note = failure->reason;
        return verdict;
    }
    const BlockStructure& bs = std::get<BlockStructure>(result);

    // Result order: operand orders plus group-to-group edges for every
    // cross-operand lt block pair.
    std::vector<EventId> events;
    for (const Poset& p : instance.operands())
        events.insert(events.end(), p.events().begin(), p.events().end());
    std::sort(events.begin(), events.end());
    const std::size_t n = events.size();
    const auto index_of = [&](const EventId& id) {
        return static_cast<std::size_t>(
            std::lower_bound(events.begin(), events.end(), id) - events.begin());
    };

    std::vector<char> leq(n * n, 0);
    std::vector<GroupDecomposition> groups;
    groups.reserve(instance.operands().size());
    for (const Poset& p : instance.operands()) {
        groups.push_back(p.groups());
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < p.size(); ++b)
                if (p.leq(a, b))
                    leq[index_of(p.event(a)) * n + index_of(p.event(b))] = 1;
    }
    for (const auto& [x, y] : bs.block_order) {
        if (x.first == y.first)
            continue; // same-operand pairs are already inside the operand order
        const auto& gx = groups[static_cast<std::size_t>(x.first) - 1]
                             .groups[static_cast<std::size_t>(x.second) - 1];
        const auto& gy = groups[static_cast<std::size_t>(y.first) - 1]
                             .groups[static_cast<std::size_t>(y.second) - 1];
        for (const EventId& a : gx)
            for (const EventId& b : gy)
                leq[index_of(a) * n + index_of(b)] = 1;
    }
    close_relation(leq, n);
    auto poset = Poset::from_closed_matrix(std::move(events), std::move(leq));
    if (!poset) { // defensive: uniform rectangles cannot produce a cycle
        verdict.note = "result relation is cyclic";
        return verdict;
    }

    unsigned long long size = profile.distinct_words;
    for (const Poset& p : instance.operands()) {
        const unsigned long long c = count_extensions(p, limits.max_traces);
        if (c > limits.max_traces / std::max<unsigned long long>(size, 1))
            throw SizeLimitError("shuffle result exceeds " +
                                 std::to_string(limits.max_traces) + " traces");
        size *= c;
    }
    verdict.single = true;
    verdict.result = *std::move(poset);
    verdict.language_size = size;
    return verdict;
}

} // namespace poshuffle
