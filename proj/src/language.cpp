/* language.cpp -- finite word languages */

#include "poshuffle/language.hpp"

#include <algorithm>
#include <cassert>

namespace poshuffle {

Word word_from_chars(const std::string& chars) {
    Word w;
    w.reserve(chars.size());
    for (const char c : chars)
        w.emplace_back(1, c);
    return w;
}

std::string format_word(const Word& w) {
    if (w.empty())
        return "(empty)";
    bool single = true;
    for (const Symbol& s : w)
        single = single && s.size() == 1;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !single)
            out += ' ';
        out += w[i];
    }
    return out;
}

Language::Language(std::vector<Word> words) : words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

Language Language::from_sorted_unique(std::vector<Word> words) {
    assert(std::is_sorted(words.begin(), words.end()));
    assert(std::adjacent_find(words.begin(), words.end()) == words.end());
    Language l;
    l.words_ = std::move(words);
    return l;
}

bool Language::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

} // namespace poshuffle
