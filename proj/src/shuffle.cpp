/* shuffle.cpp -- interleaving along trajectory words */

#include "poshuffle/shuffle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "poshuffle/errors.hpp"

namespace poshuffle {

TrajectoryWord::TrajectoryWord(std::vector<int> symbols, int arity)
    : symbols_(std::move(symbols)), arity_(arity) {
    if (arity_ < 1)
        throw ArityError("arity must be at least 1, got " + std::to_string(arity_));
    for (const int s : symbols_)
        if (s < 1 || s > arity_)
            throw ArityError("trajectory symbol " + std::to_string(s) +
                             " outside 1.." + std::to_string(arity_));
}

TrajectoryWord TrajectoryWord::parse(const std::string& digits, int arity) {
    std::vector<int> symbols;
    symbols.reserve(digits.size());
    for (const char c : digits) {
        if (c < '0' || c > '9')
            throw ArityError(std::string("trajectory symbol '") + c + "' is not a digit");
        symbols.push_back(c - '0');
    }
    return TrajectoryWord(std::move(symbols), arity);
}

TrajectoryWord TrajectoryWord::from_word(const Word& w, int arity) {
    std::vector<int> symbols;
    symbols.reserve(w.size());
    for (const Symbol& s : w) {
        int value = 0;
        bool numeric = !s.empty();
        for (const char c : s) {
            if (c < '0' || c > '9') {
                numeric = false;
                break;
            }
            value = value * 10 + (c - '0');
        }
        if (!numeric)
            throw ArityError("trajectory symbol '" + s + "' is not an operand index");
        symbols.push_back(value);
    }
    return TrajectoryWord(std::move(symbols), arity);
}

std::vector<std::size_t> TrajectoryWord::counts() const {
    std::vector<std::size_t> c(static_cast<std::size_t>(arity_), 0);
    for (const int s : symbols_)
        ++c[static_cast<std::size_t>(s) - 1];
    return c;
}

bool fits(const TrajectoryWord& t, const std::vector<std::size_t>& lengths) {
    if (lengths.size() != static_cast<std::size_t>(t.arity()))
        throw ArityError("expected " + std::to_string(t.arity()) + " operand lengths, got " +
                         std::to_string(lengths.size()));
    return t.counts() == lengths;
}

Word shuffle_words(const TrajectoryWord& t, const std::vector<Word>& ws) {
    if (ws.size() != static_cast<std::size_t>(t.arity()))
        throw ArityError("expected " + std::to_string(t.arity()) + " operand words, got " +
                         std::to_string(ws.size()));
    const std::vector<std::size_t> need = t.counts();
    for (std::size_t i = 0; i < ws.size(); ++i)
        if (need[i] != ws[i].size())
            throw DoesNotFitError(static_cast<int>(i) + 1);

    Word out;
    out.reserve(t.length());
    std::vector<std::size_t> taken(ws.size(), 0);
    for (std::size_t k = 0; k < t.length(); ++k) {
        const std::size_t i = static_cast<std::size_t>(t.symbol(k)) - 1;
        out.push_back(ws[i][taken[i]++]);
    }
    return out;
}

Language shuffle_languages(const Language& trajectories,
                           const std::vector<Language>& operands, int arity,
                           const Limits& limits) {
    if (operands.size() != static_cast<std::size_t>(arity))
        throw ArityError("expected " + std::to_string(arity) + " operand languages, got " +
                         std::to_string(operands.size()));
    const std::size_t n = operands.size();

    // Fitting depends only on word lengths, so bucket operand words by length
    // and walk one bucket per operand for each trajectory.
    std::vector<std::map<std::size_t, std::vector<const Word*>>> by_length(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const Word& w : operands[i])
            by_length[i][w.size()].push_back(&w);

    std::set<Word> out;
    for (const Word& tw : trajectories) {
        const TrajectoryWord t = TrajectoryWord::from_word(tw, arity);
        const std::vector<std::size_t> need = t.counts();

        std::vector<const std::vector<const Word*>*> buckets(n);
        bool any = true;
        for (std::size_t i = 0; i < n && any; ++i) {
            const auto it = by_length[i].find(need[i]);
            if (it == by_length[i].end())
                any = false;
            else
                buckets[i] = &it->second;
        }
        if (!any)
            continue; // this trajectory fits no combination

        std::vector<std::size_t> pick(n, 0);
        std::vector<Word> combo(n);
        while (true) {
            for (std::size_t i = 0; i < n; ++i)
                combo[i] = *(*buckets[i])[pick[i]];
            out.insert(shuffle_words(t, combo));
            if (out.size() > limits.max_traces)
                throw SizeLimitError("shuffle result exceeds " +
                                     std::to_string(limits.max_traces) + " traces");
            std::size_t i = 0;
            while (i < n && ++pick[i] == buckets[i]->size()) {
                pick[i] = 0;
                ++i;
            }
            if (i == n)
                break;
        }
    }
    return Language::from_sorted_unique({out.begin(), out.end()});
}

} // namespace poshuffle
