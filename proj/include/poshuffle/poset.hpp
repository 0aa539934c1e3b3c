/* poset.hpp -- finite partial orders and labelled posets over named events */

#ifndef POSHUFFLE_POSET_HPP
#define POSHUFFLE_POSET_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace poshuffle {

using EventId = std::string;

// How two events of one poset relate to each other.
enum class Relation { lt, gt, eq, concurrent };

std::string to_string(Relation r);

// The groups of a poset: connected components of its concurrency relation,
// listed in their relative order (which is always total); events within a
// group are sorted lexicographically.
struct GroupDecomposition {
    std::vector<std::vector<EventId>> groups;
};

// A finite poset. Events are stored sorted, so an event's index is also its
// lexicographic rank; the matrix holds the full reflexive-transitive order.
class Poset {
  public:
    Poset() = default;

    // Builds the reflexive-transitive closure of `cover` over `events`.
    // Throws DuplicateEventError, UnknownEventError, CycleError.
    static Poset from_cover(std::vector<EventId> events,
                            const std::vector<std::pair<EventId, EventId>>& cover);

    // Wraps an already-closed order matrix (row-major, leq[a*n+b] != 0 means
    // a <= b). Returns nullopt unless the matrix is reflexive, transitive and
    // antisymmetric. `sorted_events` must be sorted and duplicate-free.
    static std::optional<Poset> from_closed_matrix(std::vector<EventId> sorted_events,
                                                   std::vector<char> leq);

    std::size_t size() const { return events_.size(); }
    const std::vector<EventId>& events() const { return events_; }
    const EventId& event(std::size_t a) const { return events_[a]; }

    bool contains(const EventId& id) const;
    std::size_t index_of(const EventId& id) const; // throws UnknownEventError

    bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    bool concurrent(std::size_t a, std::size_t b) const { return !leq(a, b) && !leq(b, a); }

    Relation relation_at(std::size_t a, std::size_t b) const;
    Relation relation(const EventId& a, const EventId& b) const;

    // Covering pairs (the transitive reduction), sorted lexicographically.
    std::vector<std::pair<EventId, EventId>> hasse() const;

    GroupDecomposition groups() const;

    const std::vector<char>& matrix() const { return leq_; }

    bool operator==(const Poset&) const = default;

  private:
    std::vector<EventId> events_; // sorted, unique
    std::vector<char> leq_;      // size() * size(), closed
};

// In-place reflexive-transitive closure of an n*n relation matrix.
void close_relation(std::vector<char>& m, std::size_t n);

// True when m has no off-diagonal 2-cycle.
bool antisymmetric(const std::vector<char>& m, std::size_t n);

// A poset whose events additionally carry labels; distinct events may share
// a label.
class LPoset {
  public:
    LPoset() = default;

    // `labels` must assign exactly the events of `p`. Throws
    // UnknownEventError on a labelled non-event, SchemaError on a missing
    // label.
    static LPoset from(Poset p, const std::map<EventId, std::string>& labels);

    const Poset& poset() const { return poset_; }
    std::size_t size() const { return poset_.size(); }
    const std::string& label_at(std::size_t a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label_of(const EventId& id) const;

    bool operator==(const LPoset&) const = default;

  private:
    Poset poset_;
    std::vector<std::string> labels_; // parallel to poset_.events()
};

} // namespace poshuffle

#endif
