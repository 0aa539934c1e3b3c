/* characterize.hpp -- when does a shuffle of posets denote a single poset? */

#ifndef POSHUFFLE_CHARACTERIZE_HPP
#define POSHUFFLE_CHARACTERIZE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "poshuffle/language.hpp"
#include "poshuffle/limits.hpp"
#include "poshuffle/poset.hpp"

namespace poshuffle {

// A trajectory lposet (labels are the decimal strings "1".."n") together with
// n operand posets with pairwise disjoint event sets.
class ShuffleInstance {
  public:
    // Throws ArityError on a label outside "1".."n" and DisjointnessError on
    // overlapping operand event sets.
    ShuffleInstance(LPoset trajectory, std::vector<Poset> operands);

    const LPoset& trajectory() const { return trajectory_; }
    const std::vector<Poset>& operands() const { return operands_; }
    int arity() const { return static_cast<int>(operands_.size()); }

    // label_counts()[i]: number of trajectory events labelled i+1.
    const std::vector<std::size_t>& label_counts() const { return label_counts_; }

    // True when every operand's size matches its label count; otherwise the
    // shuffle language is empty.
    bool counts_fit() const;

  private:
    LPoset trajectory_;
    std::vector<Poset> operands_;
    std::vector<std::size_t> label_counts_;
};

// A concurrent pair (a, b) of one operand whose relations to an event c of
// another operand differ in the checked poset.
struct UniformityViolation {
    EventId a, b;   // concurrent in operand `operand_ab`
    EventId c;      // event of operand `operand_c`
    int operand_ab; // 1-based
    int operand_c;  // 1-based
    Relation rel_a; // relation of a to c
    Relation rel_b; // relation of b to c

    bool operator==(const UniformityViolation&) const = default;
};

// All uniformity violations of p against the instance's operands, sorted by
// (operand_ab, a, b, operand_c, c). Throws UnknownEventError if p is missing
// an operand event. An empty result for the reconstruction of the shuffle
// language is necessary (not sufficient) for the shuffle to be a poset.
std::vector<UniformityViolation> check_lemma2(const ShuffleInstance& instance,
                                              const Poset& p);

// One verdict shape for both decision routes.
struct ShuffleVerdict {
    bool single = false;               // the shuffle language is some poset's language
    std::optional<Poset> result;       // that poset, when single
    std::optional<Trace> witness;      // semantic route: lex-least missing trace
    unsigned long long language_size = 0;
    bool empty_shuffle = false;        // label counts don't match operand sizes
    std::vector<UniformityViolation> violations; // semantic route: vs reconstruction
    std::string note;                  // structural route: failure reason
};

// Decides by brute force: materializes the shuffle language, reconstructs an
// order from it, and compares languages. Throws SizeLimitError past caps.
ShuffleVerdict shuffle_semantic(const ShuffleInstance& instance,
                                const Limits& limits = {});

// A block: one group of operand `operand`, matched to a run of consecutive
// occurrence slots of its label. Slot k means the k-th occurrence of the
// label in any trajectory word.
struct Block {
    int operand = 0;          // 1-based
    int index = 0;            // 1-based position in the operand's group order
    std::size_t first_slot = 0; // 1-based occurrence rank
    std::size_t size = 0;

    bool operator==(const Block&) const = default;
};

using BlockRef = std::pair<int, int>; // (operand, block index), both 1-based

struct BlockStructure {
    std::vector<std::vector<Block>> blocks;                 // per operand
    std::vector<std::pair<BlockRef, BlockRef>> block_order; // all lt pairs, sorted
};

struct BlockStructureFailure {
    std::string reason;
};

using BlockStructureResult = std::variant<BlockStructure, BlockStructureFailure>;

// Matches the operands' groups against the trajectory's occurrence slots:
// groups map to consecutive slot runs, every cross-operand pair of blocks
// must relate uniformly (all before / all after / all unordered) under the
// trajectory's always-before relation, and the trajectory must realize every
// interleaving the resulting block order allows. Any failure is reported with
// the first violated constraint.
BlockStructureResult block_structure(const ShuffleInstance& instance,
                                     const Limits& limits = {});

// Decides via block_structure, without materializing the shuffle language;
// when single, the result order is the union of the operand orders and the
// block order, and language_size is (#trajectory words) * prod |lang(P_i)|.
ShuffleVerdict shuffle_structural(const ShuffleInstance& instance,
                                  const Limits& limits = {});

namespace detail {

// Everything the structural route reads from a trajectory: its label counts,
// the always-before relation on occurrence slots, and the number of distinct
// label words. Two trajectories with the same label language get identical
// profiles.
struct SlotProfile {
    std::vector<std::size_t> counts;  // per label 1..arity
    std::vector<std::size_t> offsets; // slot id base per label
    std::size_t total_slots = 0;
    std::vector<char> always_before;  // total_slots^2, row-major
    unsigned long long distinct_words = 0; // saturates at limits.max_traces + 1

    std::size_t slot(int label, std::size_t occurrence) const {
        return offsets[static_cast<std::size_t>(label) - 1] + occurrence - 1;
    }
    bool ab(std::size_t s, std::size_t t) const {
        return always_before[s * total_slots + t] != 0;
    }

    bool operator==(const SlotProfile&) const = default;
};

SlotProfile slot_profile(const LPoset& trajectory, int arity,
                         const Limits& limits = {});

} // namespace detail

} // namespace poshuffle

#endif
