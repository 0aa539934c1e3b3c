/* decompose.hpp -- covering a language of traces by finitely many posets */

#ifndef POSHUFFLE_DECOMPOSE_HPP
#define POSHUFFLE_DECOMPOSE_HPP

#include <cstddef>
#include <vector>

#include "poshuffle/language.hpp"
#include "poshuffle/limits.hpp"
#include "poshuffle/poset.hpp"

namespace poshuffle {

struct DecomposeOptions {
    Limits limits;
    std::size_t max_events = 7;   // search is exponential in event pairs
    std::size_t max_orders = 200000; // visited candidate orders
};

// Posets over the language's events, in greedy selection order; the union of
// their languages is exactly the input language.
struct PosetCover {
    std::vector<Poset> posets;
};

// Covers `language` by inclusion-maximal posets: every order extending the
// extracted base order whose language stays inside the input is a candidate;
// candidates maximal by language inclusion are selected greedily (largest
// language first, ties by lexicographic covering-pair encoding) until every
// trace is covered. A language that already is a poset language yields a
// singleton cover. Throws the extraction errors and SizeLimitError past caps.
PosetCover decompose(const Language& language, const DecomposeOptions& options = {});

} // namespace poshuffle

#endif
