/* helpers.hpp -- shared test utilities and independent oracles */

#ifndef POSHUFFLE_TESTS_HELPERS_HPP
#define POSHUFFLE_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "poshuffle/language.hpp"
#include "poshuffle/poset.hpp"

namespace helpers {

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(POSHUFFLE_FIXTURES_DIR) / name;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline poshuffle::Word word(const std::string& chars) {
    return poshuffle::word_from_chars(chars);
}

inline poshuffle::Language language(std::initializer_list<std::string> words) {
    std::vector<poshuffle::Word> ws;
    for (const auto& w : words)
        ws.push_back(word(w));
    return poshuffle::Language(std::move(ws));
}

// Oracle: the traces of a poset, by filtering all permutations of its events.
inline poshuffle::Language oracle_lang(const poshuffle::Poset& p) {
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<poshuffle::Word> out;
    do {
        bool ok = true;
        for (std::size_t u = 0; u < perm.size() && ok; ++u)
            for (std::size_t v = u + 1; v < perm.size() && ok; ++v)
                if (p.less(perm[v], perm[u]))
                    ok = false;
        if (ok) {
            poshuffle::Word w;
            for (const std::size_t a : perm)
                w.push_back(p.event(a));
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return poshuffle::Language(std::move(out));
}

// Oracle: the number of posets on k labelled points, by brute force over all
// 2^(k*(k-1)) irreflexive relations. Independent of the library's generator.
inline std::size_t oracle_poset_count(std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j)
                arcs.emplace_back(i, j);
    std::size_t count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << arcs.size()); ++bits) {
        std::vector<std::uint16_t> row(k);
        for (std::size_t i = 0; i < k; ++i)
            row[i] = static_cast<std::uint16_t>(1u << i);
        for (std::size_t q = 0; q < arcs.size(); ++q)
            if (bits & (std::uint64_t{1} << q))
                row[arcs[q].first] |= 1u << arcs[q].second;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
            for (std::size_t j = 0; j < k && ok; ++j) {
                if (i == j || !(row[i] & (1u << j)))
                    continue;
                if (i < j && (row[j] & (1u << i)))
                    ok = false; // antisymmetry (checked once per unordered pair)
                if (row[j] & ~row[i])
                    ok = false; // transitivity
            }
        if (ok)
            ++count;
    }
    return count;
}

} // namespace helpers

#endif
