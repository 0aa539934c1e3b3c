/* language.hpp -- finite word languages over string symbols */

#ifndef POSHUFFLE_LANGUAGE_HPP
#define POSHUFFLE_LANGUAGE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace poshuffle {

using Symbol = std::string;
using Word = std::vector<Symbol>;
using Trace = Word;

// "abcd" -> {"a","b","c","d"}; convenient for single-char symbol sets.
Word word_from_chars(const std::string& chars);

// Symbols joined directly when all are single characters, space-joined
// otherwise; the empty word prints as "(empty)".
std::string format_word(const Word& w);

// A finite set of words, kept sorted and duplicate-free.
class Language {
  public:
    Language() = default;

    // Sorts and de-duplicates.
    explicit Language(std::vector<Word> words);

    // Fast path for callers that already guarantee sortedness/uniqueness.
    static Language from_sorted_unique(std::vector<Word> words);

    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    bool contains(const Word& w) const;

    const std::vector<Word>& words() const { return words_; }
    const Word& at(std::size_t i) const { return words_[i]; }

    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    bool operator==(const Language&) const = default;

  private:
    std::vector<Word> words_;
};

} // namespace poshuffle

#endif
