/* poset.cpp -- finite partial orders: validation, reduction, groups */

#include "poshuffle/poset.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "poshuffle/errors.hpp"

namespace poshuffle {

std::string to_string(Relation r) {
    switch (r) {
    case Relation::lt: return "lt";
    case Relation::gt: return "gt";
    case Relation::eq: return "eq";
    case Relation::concurrent: return "concurrent";
    }
    return "?";
}

void close_relation(std::vector<char>& m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        m[i * n + i] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!m[i * n + k])
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (m[k * n + j])
                    m[i * n + j] = 1;
        }
}

bool antisymmetric(const std::vector<char>& m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i * n + j] && m[j * n + i])
                return false;
    return true;
}

Poset Poset::from_cover(std::vector<EventId> events,
                        const std::vector<std::pair<EventId, EventId>>& cover) {
    std::sort(events.begin(), events.end());
    for (std::size_t i = 0; i + 1 < events.size(); ++i)
        if (events[i] == events[i + 1])
            throw DuplicateEventError("event '" + events[i] + "' declared more than once");

    Poset p;
    p.events_ = std::move(events);
    const std::size_t n = p.events_.size();
    p.leq_.assign(n * n, 0);

    for (const auto& [from, to] : cover) {
        const std::size_t a = p.index_of(from);
        const std::size_t b = p.index_of(to);
        p.leq_[a * n + b] = 1;
    }
    close_relation(p.leq_, n);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p.leq_[i * n + j] && p.leq_[j * n + i])
                throw CycleError("events '" + p.events_[i] + "' and '" + p.events_[j] +
                                 "' lie on a cycle");
    return p;
}

std::optional<Poset> Poset::from_closed_matrix(std::vector<EventId> sorted_events,
                                               std::vector<char> leq) {
    const std::size_t n = sorted_events.size();
    assert(std::is_sorted(sorted_events.begin(), sorted_events.end()));
    assert(leq.size() == n * n);
    for (std::size_t i = 0; i < n; ++i)
        if (!leq[i * n + i])
            return std::nullopt;
    if (!antisymmetric(leq, n))
        return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!leq[i * n + j])
                continue;
            for (std::size_t k = 0; k < n; ++k)
                if (leq[j * n + k] && !leq[i * n + k])
                    return std::nullopt;
        }
    Poset p;
    p.events_ = std::move(sorted_events);
    p.leq_ = std::move(leq);
    return p;
}

bool Poset::contains(const EventId& id) const {
    return std::binary_search(events_.begin(), events_.end(), id);
}

std::size_t Poset::index_of(const EventId& id) const {
    const auto it = std::lower_bound(events_.begin(), events_.end(), id);
    if (it == events_.end() || *it != id)
        throw UnknownEventError("unknown event '" + id + "'");
    return static_cast<std::size_t>(it - events_.begin());
}

Relation Poset::relation_at(std::size_t a, std::size_t b) const {
    if (a == b)
        return Relation::eq;
    if (leq(a, b))
        return Relation::lt;
    if (leq(b, a))
        return Relation::gt;
    return Relation::concurrent;
}

Relation Poset::relation(const EventId& a, const EventId& b) const {
    return relation_at(index_of(a), index_of(b));
}

std::vector<std::pair<EventId, EventId>> Poset::hasse() const {
    const std::size_t n = size();
    std::vector<std::pair<EventId, EventId>> cover;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!less(a, b))
                continue;
            bool covering = true;
            for (std::size_t k = 0; k < n && covering; ++k)
                if (less(a, k) && less(k, b))
                    covering = false;
            if (covering)
                cover.emplace_back(events_[a], events_[b]);
        }
    std::sort(cover.begin(), cover.end());
    return cover;
}

GroupDecomposition Poset::groups() const {
    const std::size_t n = size();
    // Connected components of the concurrency relation.
    std::vector<std::size_t> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    const auto root = [&](std::size_t a) {
        while (comp[a] != a)
            a = comp[a] = comp[comp[a]];
        return a;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (concurrent(a, b))
                comp[root(a)] = root(b);

    std::vector<std::vector<std::size_t>> members;
    std::vector<std::size_t> member_of(n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t r = root(a);
        if (r == a) {
            member_of[a] = members.size();
            members.emplace_back();
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        members[member_of[root(a)]].push_back(a);

    // Groups are totally ordered against each other: every cross pair agrees.
    const std::size_t g = members.size();
    std::vector<std::size_t> below(g, 0); // groups strictly before each group
    for (std::size_t x = 0; x < g; ++x)
        for (std::size_t y = x + 1; y < g; ++y) {
            bool all_lt = true, all_gt = true;
            for (const std::size_t a : members[x])
                for (const std::size_t b : members[y]) {
                    all_lt = all_lt && less(a, b);
                    all_gt = all_gt && less(b, a);
                }
            if (all_lt)
                ++below[y];
            else if (all_gt)
                ++below[x];
            else
                throw std::logic_error("groups of a poset must be totally ordered");
        }

    GroupDecomposition d;
    d.groups.resize(g);
    for (std::size_t x = 0; x < g; ++x) {
        auto& out = d.groups[below[x]];
        for (const std::size_t a : members[x])
            out.push_back(events_[a]); // ascending index == lexicographic
    }
    return d;
}

LPoset LPoset::from(Poset p, const std::map<EventId, std::string>& labels) {
    for (const auto& [id, label] : labels) {
        (void)label;
        if (!p.contains(id))
            throw UnknownEventError("label assigned to unknown event '" + id + "'");
    }
    LPoset lp;
    lp.labels_.reserve(p.size());
    for (const EventId& id : p.events()) {
        const auto it = labels.find(id);
        if (it == labels.end())
            throw SchemaError("event '" + id + "' has no label");
        lp.labels_.push_back(it->second);
    }
    lp.poset_ = std::move(p);
    return lp;
}

const std::string& LPoset::label_of(const EventId& id) const {
    return labels_[poset_.index_of(id)];
}

} // namespace poshuffle
