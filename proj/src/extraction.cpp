/* extraction.cpp -- order extraction and poset-language detection */

#include "poshuffle/extraction.hpp"

#include <algorithm>
#include <stdexcept>

#include "poshuffle/errors.hpp"
#include "poshuffle/trace_semantics.hpp"

namespace poshuffle {

Poset ExtractedOrder::to_poset() const {
    auto p = Poset::from_closed_matrix(events, leq);
    if (!p)
        throw std::logic_error("extracted order is not a valid poset");
    return *std::move(p);
}

ExtractedOrder extract_order(const Language& language) {
    if (language.empty())
        throw EmptyLanguageError("cannot extract an order from an empty language");

    // Every trace must be a permutation of one shared event set.
    std::vector<EventId> events = language.at(0);
    std::sort(events.begin(), events.end());
    for (std::size_t i = 0; i + 1 < events.size(); ++i)
        if (events[i] == events[i + 1])
            throw NonUniformLanguageError("trace '" + format_word(language.at(0)) +
                                          "' repeats event '" + events[i] + "'");
    const std::size_t n = events.size();
    const auto index_of = [&](const Symbol& s) {
        const auto it = std::lower_bound(events.begin(), events.end(), s);
        return it != events.end() && *it == s ? static_cast<std::size_t>(it - events.begin())
                                              : n;
    };

    // before[a*n+b]: some trace places a before b.
    std::vector<char> before(n * n, 0);
    std::vector<std::size_t> pos(n);
    for (const Trace& trace : language) {
        if (trace.size() != n)
            throw NonUniformLanguageError("traces '" + format_word(language.at(0)) +
                                          "' and '" + format_word(trace) +
                                          "' differ in length");
        std::vector<char> seen(n, 0);
        for (std::size_t u = 0; u < n; ++u) {
            const std::size_t a = index_of(trace[u]);
            if (a == n || seen[a])
                throw NonUniformLanguageError("trace '" + format_word(trace) +
                                              "' is not a permutation of the event set");
            seen[a] = 1;
            pos[a] = u;
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (a != b && pos[a] < pos[b])
                    before[a * n + b] = 1;
    }

    ExtractedOrder ex;
    ex.events = std::move(events);
    ex.leq.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a == b || (before[a * n + b] && !before[b * n + a]))
                ex.leq[a * n + b] = 1;
    close_relation(ex.leq, n);
    if (!antisymmetric(ex.leq, n)) // unreachable for permutation languages
        throw std::logic_error("extracted order is not antisymmetric");
    return ex;
}

Poset reconstruct(const Language& language) {
    return extract_order(language).to_poset();
}

PosetLanguageCheck is_poset_language(const Language& language, const Limits& limits) {
    PosetLanguageCheck check;
    check.reconstructed = reconstruct(language);
    const Language full = lang(check.reconstructed, limits);
    // The reconstruction is always complete: every input trace respects the
    // extracted order, so language is a subset of full.
    if (full.size() == language.size()) {
        check.is_poset_language = true;
        return check;
    }
    for (const Trace& t : full) {
        if (!language.contains(t)) {
            check.witness = t; // full is sorted: first miss is lex-least
            break;
        }
    }
    if (!check.witness)
        throw std::logic_error("reconstruction lost an input trace");
    return check;
}

} // namespace poshuffle
