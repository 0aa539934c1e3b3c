/* trace_semantics.hpp -- languages of posets and swap moves between traces */

#ifndef POSHUFFLE_TRACE_SEMANTICS_HPP
#define POSHUFFLE_TRACE_SEMANTICS_HPP

#include "poshuffle/language.hpp"
#include "poshuffle/limits.hpp"
#include "poshuffle/poset.hpp"

namespace poshuffle {

// All linear extensions of p as traces over its event ids, sorted. The empty
// poset yields {epsilon}. Throws SizeLimitError past limits.max_traces.
Language lang(const Poset& p, const Limits& limits = {});

// All linear extensions of lp, read through its labels; duplicates collapse.
Language lang_labelled(const LPoset& lp, const Limits& limits = {});

// Traces obtained from `trace` by swapping one adjacent concurrent pair.
// Throws TraceNotInLanguageError unless trace is a linear extension of p.
Language swap_neighbours(const Poset& p, const Trace& trace);

// True when every trace of p is reachable from every other by adjacent
// concurrent swaps.
bool swap_connected(const Poset& p, const Limits& limits = {});

// Number of linear extensions of p, without materializing them; saturates at
// `cap` (returns cap + 1 when exceeded).
unsigned long long count_extensions(const Poset& p, unsigned long long cap);

} // namespace poshuffle

#endif
