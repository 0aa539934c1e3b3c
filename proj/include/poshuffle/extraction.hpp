/* extraction.hpp -- recovering an order from a language of traces */

#ifndef POSHUFFLE_EXTRACTION_HPP
#define POSHUFFLE_EXTRACTION_HPP

#include <optional>
#include <vector>

#include "poshuffle/language.hpp"
#include "poshuffle/limits.hpp"
#include "poshuffle/poset.hpp"

namespace poshuffle {

// The order extracted from a language: a != b are related iff some trace has
// a before b and no trace has b before a, closed under transitivity.
struct ExtractedOrder {
    std::vector<EventId> events; // sorted
    std::vector<char> leq;       // closed matrix, row-major

    Poset to_poset() const;
};

// Throws EmptyLanguageError; NonUniformLanguageError unless every trace is a
// permutation of one shared event set.
ExtractedOrder extract_order(const Language& language);

// The poset on the language's events carrying the extracted order.
Poset reconstruct(const Language& language);

struct PosetLanguageCheck {
    bool is_poset_language = false;
    Poset reconstructed;
    // When false: the lexicographically least trace of the reconstruction's
    // language that is missing from the input language.
    std::optional<Trace> witness;
};

// Decides whether `language` is exactly the language of some poset (then
// necessarily of reconstruct(language)).
PosetLanguageCheck is_poset_language(const Language& language, const Limits& limits = {});

} // namespace poshuffle

#endif
