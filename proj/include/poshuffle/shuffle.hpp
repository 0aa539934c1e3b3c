/* shuffle.hpp -- interleaving words and languages along trajectory words */

#ifndef POSHUFFLE_SHUFFLE_HPP
#define POSHUFFLE_SHUFFLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "poshuffle/language.hpp"
#include "poshuffle/limits.hpp"

namespace poshuffle {

// A word over operand indices 1..arity, prescribing which operand supplies
// each position of an interleaving.
class TrajectoryWord {
  public:
    // Throws ArityError unless arity >= 1 and every symbol is in 1..arity.
    TrajectoryWord(std::vector<int> symbols, int arity);

    // Parses decimal digits, e.g. "1221112112". Throws ArityError on any
    // non-digit or out-of-range symbol.
    static TrajectoryWord parse(const std::string& digits, int arity);

    // Converts a word whose symbols are the decimal strings "1".."arity".
    static TrajectoryWord from_word(const Word& w, int arity);

    int arity() const { return arity_; }
    std::size_t length() const { return symbols_.size(); }
    int symbol(std::size_t i) const { return symbols_[i]; }
    const std::vector<int>& symbols() const { return symbols_; }

    // Occurrences of each operand index; counts()[i] is for operand i+1.
    std::vector<std::size_t> counts() const;

  private:
    std::vector<int> symbols_;
    int arity_;
};

// True when the i-th operand length equals the number of i's in t for all i.
// Throws ArityError unless lengths.size() == t.arity().
bool fits(const TrajectoryWord& t, const std::vector<std::size_t>& lengths);

// The interleaving of ws prescribed by t. Throws ArityError on an operand
// count mismatch and DoesNotFitError (with the first offending operand index)
// when t does not fit the word lengths.
Word shuffle_words(const TrajectoryWord& t, const std::vector<Word>& ws);

// Union of shuffle_words over every trajectory in `trajectories` (words over
// "1".."arity") and every combination of operand words; combinations the
// trajectory does not fit are skipped. Result is capped by limits.max_traces.
Language shuffle_languages(const Language& trajectories,
                           const std::vector<Language>& operands, int arity,
                           const Limits& limits = {});

} // namespace poshuffle

#endif
