/* test_poset.cpp -- validation, relations, reduction and groups */

#include "doctest.h"

#include "helpers.hpp"
#include "poshuffle/errors.hpp"
#include "poshuffle/io.hpp"
#include "poshuffle/poset.hpp"

using namespace poshuffle;

namespace {

// Four events, a below c and d, b below d, c and d unordered.
Poset example_poset() {
    return Poset::from_cover({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "d"}});
}

// a below b below d, c below d; {a, b, c} forms one concurrency group.
Poset fork_poset() {
    return Poset::from_cover({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "d"}, {"c", "d"}});
}

} // namespace

TEST_CASE("cover pairs close into the full order") {
    const Poset p = example_poset();
    CHECK(p.relation("a", "c") == Relation::lt);
    CHECK(p.relation("c", "a") == Relation::gt);
    CHECK(p.relation("c", "d") == Relation::concurrent);
    CHECK(p.relation("a", "b") == Relation::concurrent);
    CHECK(p.relation("b", "b") == Relation::eq);

    std::vector<std::pair<EventId, EventId>> strict;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.less(a, b))
                strict.emplace_back(p.event(a), p.event(b));
    const std::vector<std::pair<EventId, EventId>> expected{
        {"a", "c"}, {"a", "d"}, {"b", "d"}};
    CHECK(strict == expected);

    const Poset chain = Poset::from_cover({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(chain.relation("a", "c") == Relation::lt); // composed, not declared
}

TEST_CASE("validation rejects broken documents") {
    CHECK_THROWS_AS(Poset::from_cover({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    CHECK_THROWS_AS(
        Poset::from_cover({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
        CycleError);
    CHECK_THROWS_AS(Poset::from_cover({"a"}, {{"a", "x"}}), UnknownEventError);
    CHECK_THROWS_AS(Poset::from_cover({"a", "a"}, {}), DuplicateEventError);
    CHECK_THROWS_AS(example_poset().relation("a", "x"), UnknownEventError);
    CHECK_NOTHROW(Poset::from_cover({"a"}, {{"a", "a"}})); // reflexive is harmless
}

TEST_CASE("hasse is the transitive reduction") {
    const std::vector<std::pair<EventId, EventId>> expected{
        {"a", "c"}, {"a", "d"}, {"b", "d"}};
    CHECK(example_poset().hasse() == expected);

    // A chain declared with all its pairs reduces to the adjacent ones.
    const Poset chain =
        Poset::from_cover({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    const std::vector<std::pair<EventId, EventId>> adjacent{{"a", "b"}, {"b", "c"}};
    CHECK(chain.hasse() == adjacent);

    CHECK(Poset::from_cover({"a", "b"}, {}).hasse().empty());
}

TEST_CASE("groups split along the concurrency relation") {
    SUBCASE("fork: the diamond top is its own group") {
        const GroupDecomposition d = fork_poset().groups();
        REQUIRE(d.groups.size() == 2);
        CHECK(d.groups[0] == std::vector<EventId>{"a", "b", "c"});
        CHECK(d.groups[1] == std::vector<EventId>{"d"});
    }
    SUBCASE("connected concurrency keeps everything together") {
        const GroupDecomposition d = example_poset().groups();
        REQUIRE(d.groups.size() == 1);
        CHECK(d.groups[0] == std::vector<EventId>{"a", "b", "c", "d"});
    }
    SUBCASE("chains split into singletons, ordered by the chain") {
        const Poset p = Poset::from_cover({"x", "y", "z"}, {{"z", "y"}, {"y", "x"}});
        const GroupDecomposition d = p.groups();
        REQUIRE(d.groups.size() == 3);
        CHECK(d.groups[0] == std::vector<EventId>{"z"});
        CHECK(d.groups[1] == std::vector<EventId>{"y"});
        CHECK(d.groups[2] == std::vector<EventId>{"x"});
    }
    SUBCASE("empty poset has no groups") {
        CHECK(Poset::from_cover({}, {}).groups().groups.empty());
    }
}

TEST_CASE("group laws hold on every poset with up to 4 events") {
    std::size_t checked = 0;
    generate_posets(4, [&](const Poset& p) {
        const GroupDecomposition d = p.groups();

        // Partition: every event in exactly one group.
        std::vector<EventId> flat;
        for (const auto& g : d.groups)
            flat.insert(flat.end(), g.begin(), g.end());
        std::vector<EventId> sorted = flat;
        std::sort(sorted.begin(), sorted.end());
        REQUIRE(sorted == p.events());

        // Flattening in group order yields a list where cross-group pairs
        // are strictly ordered left to right.
        std::vector<std::size_t> group_of(p.size());
        for (std::size_t g = 0; g < d.groups.size(); ++g)
            for (const EventId& e : d.groups[g])
                group_of[p.index_of(e)] = g;
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < p.size(); ++b) {
                if (group_of[a] < group_of[b])
                    REQUIRE(p.less(a, b));
                if (a != b && p.concurrent(a, b))
                    REQUIRE(group_of[a] == group_of[b]);
            }
        ++checked;
    });
    CHECK(checked == 1 + 3 + 19 + 219);
}

TEST_CASE("closed matrices round-trip through hasse") {
    generate_posets(4, [&](const Poset& p) {
        const Poset again = Poset::from_cover(p.events(), p.hasse());
        REQUIRE(again == p);
    });
}

TEST_CASE("labelled posets pair labels with events") {
    const LPoset lp = LPoset::from(Poset::from_cover({"u", "v"}, {{"u", "v"}}),
                                   {{"u", "1"}, {"v", "2"}});
    CHECK(lp.label_of("u") == "1");
    CHECK(lp.label_of("v") == "2");
    CHECK(lp.labels() == std::vector<std::string>{"1", "2"});

    const Poset p = Poset::from_cover({"u", "v"}, {});
    CHECK_THROWS_AS(LPoset::from(p, {{"u", "1"}}), SchemaError); // v unlabelled
    CHECK_THROWS_AS(LPoset::from(p, {{"u", "1"}, {"v", "1"}, {"w", "1"}}),
                    UnknownEventError);
}
