/* test_characterize.cpp -- the two single-poset decision routes */

#include <string>
#include <vector>

#include "doctest.h"

#include "helpers.hpp"
#include "poshuffle/characterize.hpp"
#include "poshuffle/errors.hpp"
#include "poshuffle/io.hpp"
#include "poshuffle/trace_semantics.hpp"

using namespace poshuffle;
using helpers::word;

namespace {

LPoset lposet(Poset p, std::vector<std::string> labels) {
    std::map<EventId, std::string> by_event;
    for (std::size_t a = 0; a < p.size(); ++a)
        by_event[p.event(a)] = labels[a];
    return LPoset::from(std::move(p), by_event);
}

// Copies a poset onto fresh event names so operands stay disjoint.
Poset rename(const Poset& p, const std::string& prefix) {
    std::vector<EventId> events;
    for (std::size_t a = 0; a < p.size(); ++a)
        events.push_back(prefix + std::to_string(a + 1));
    std::vector<std::pair<EventId, EventId>> cover;
    for (const auto& [x, y] : p.hasse())
        cover.emplace_back(prefix + std::to_string(p.index_of(x) + 1),
                           prefix + std::to_string(p.index_of(y) + 1));
    return Poset::from_cover(std::move(events), cover);
}

ShuffleInstance fixture_instance(const std::string& trajectory_name) {
    const PosetDocument t = load_poset(helpers::fixture(trajectory_name));
    const PosetDocument p1 = load_poset(helpers::fixture("p_1.json"));
    const PosetDocument p2 = load_poset(helpers::fixture("p_2.json"));
    return ShuffleInstance(t.lposet(), {p1.poset(), p2.poset()});
}

} // namespace

TEST_CASE("instances validate labels and disjointness") {
    const Poset two = Poset::from_cover({"u", "v"}, {{"u", "v"}});
    const Poset pa = Poset::from_cover({"a"}, {});
    const Poset pb = Poset::from_cover({"b"}, {});

    CHECK_NOTHROW(ShuffleInstance(lposet(two, {"1", "2"}), {pa, pb}));
    // Out-of-range, non-numeric and zero-padded labels are all rejected.
    CHECK_THROWS_AS(ShuffleInstance(lposet(two, {"1", "3"}), {pa, pb}), ArityError);
    CHECK_THROWS_AS(ShuffleInstance(lposet(two, {"1", "x"}), {pa, pb}), ArityError);
    CHECK_THROWS_AS(ShuffleInstance(lposet(two, {"1", "01"}), {pa, pb}), ArityError);
    CHECK_THROWS_AS(ShuffleInstance(lposet(two, {"0", "1"}), {pa, pb}), ArityError);
    CHECK_THROWS_AS(ShuffleInstance(lposet(two, {"1", "2"}), {}), ArityError);
    CHECK_THROWS_AS(ShuffleInstance(lposet(two, {"1", "2"}), {pa, pa}),
                    DisjointnessError);

    const ShuffleInstance inst(lposet(two, {"1", "1"}), {pa, pb});
    CHECK(inst.arity() == 2);
    CHECK(inst.label_counts() == std::vector<std::size_t>{2, 0});
    CHECK(!inst.counts_fit());
}

TEST_CASE("both routes agree that a count mismatch empties the shuffle") {
    const Poset two = Poset::from_cover({"u", "v"}, {{"u", "v"}});
    const ShuffleInstance inst(lposet(two, {"1", "1"}),
                               {Poset::from_cover({"a"}, {})});
    for (const ShuffleVerdict& v : {shuffle_semantic(inst), shuffle_structural(inst)}) {
        CHECK(v.empty_shuffle);
        CHECK(!v.single);
        CHECK(!v.result.has_value());
        CHECK(v.language_size == 0);
        CHECK(v.note == "empty shuffle: label counts do not match operand sizes");
    }
}

TEST_CASE("the near-chain trajectory yields a single poset on both routes") {
    const ShuffleInstance inst = fixture_instance("lp_t1.json");
    const Poset expected = load_poset(helpers::fixture("p_r1.json")).poset();

    const ShuffleVerdict sem = shuffle_semantic(inst);
    CHECK(sem.single);
    REQUIRE(sem.result.has_value());
    CHECK(*sem.result == expected);
    CHECK(sem.language_size == 6);
    CHECK(!sem.witness.has_value());
    CHECK(sem.violations.empty());
    CHECK(!sem.empty_shuffle);

    const ShuffleVerdict str = shuffle_structural(inst);
    CHECK(str.single);
    REQUIRE(str.result.has_value());
    CHECK(*str.result == expected);
    CHECK(str.language_size == 6);
    CHECK(str.note.empty());

    CHECK(lang(expected) ==
          load_language(helpers::fixture("l_1.json")).language);
}

TEST_CASE("the looser trajectory fails on both routes") {
    const ShuffleInstance inst = fixture_instance("lp_t2.json");

    const ShuffleVerdict sem = shuffle_semantic(inst);
    CHECK(!sem.single);
    CHECK(!sem.result.has_value());
    REQUIRE(sem.witness.has_value());
    CHECK(*sem.witness == word("aebcd"));
    CHECK(sem.language_size == 9);
    REQUIRE(sem.violations.size() == 1);
    CHECK(sem.violations[0] ==
          UniformityViolation{"a", "c", "e", 1, 2, Relation::lt, Relation::concurrent});

    const ShuffleVerdict str = shuffle_structural(inst);
    CHECK(!str.single);
    CHECK(str.note ==
          "blocks (1,1) and (2,1) are not uniformly related: slot (1,1) is "
          "before slot (2,1) but slot (1,3) is unordered against slot (2,1)");
}

TEST_CASE("block_structure matches groups to slot runs") {
    const BlockStructureResult r = block_structure(fixture_instance("lp_t1.json"));
    REQUIRE(std::holds_alternative<BlockStructure>(r));
    const BlockStructure& bs = std::get<BlockStructure>(r);
    REQUIRE(bs.blocks.size() == 2);
    CHECK(bs.blocks[0] == std::vector<Block>{{1, 1, 1, 3}, {1, 2, 4, 1}});
    CHECK(bs.blocks[1] == std::vector<Block>{{2, 1, 1, 1}});
    CHECK(bs.block_order ==
          std::vector<std::pair<BlockRef, BlockRef>>{{{1, 1}, {1, 2}},
                                                     {{1, 1}, {2, 1}}});

    const BlockStructureResult bad = block_structure(fixture_instance("lp_t2.json"));
    CHECK(std::holds_alternative<BlockStructureFailure>(bad));
}

TEST_CASE("block_structure reports a count mismatch without analysing slots") {
    const Poset two = Poset::from_cover({"u", "v"}, {{"u", "v"}});
    const ShuffleInstance inst(lposet(two, {"1", "1"}),
                               {Poset::from_cover({"a"}, {})});
    const BlockStructureResult r = block_structure(inst);
    REQUIRE(std::holds_alternative<BlockStructureFailure>(r));
    CHECK(std::get<BlockStructureFailure>(r).reason ==
          "label 1 occurs 2 times but operand 1 has 1 events");
}

TEST_CASE("interleaved labels still form blocks of occurrence slots") {
    // An antichain trajectory mixes the labels freely, yet the shuffle is a
    // single poset; the slots of each label still fall into clean blocks.
    const Poset antichain = Poset::from_cover({"u", "v", "w"}, {});
    const ShuffleInstance inst(lposet(antichain, {"1", "1", "2"}),
                               {Poset::from_cover({"a", "b"}, {{"a", "b"}}),
                                Poset::from_cover({"c"}, {})});
    const Poset expected = Poset::from_cover({"a", "b", "c"}, {{"a", "b"}});

    const ShuffleVerdict sem = shuffle_semantic(inst);
    const ShuffleVerdict str = shuffle_structural(inst);
    CHECK(sem.single);
    CHECK(str.single);
    REQUIRE(sem.result.has_value());
    REQUIRE(str.result.has_value());
    CHECK(*sem.result == expected);
    CHECK(*str.result == expected);
    CHECK(sem.language_size == 3);
    CHECK(str.language_size == 3);
}

TEST_CASE("uniform blocks are not enough: every interleaving must occur") {
    // Two 2-chains of trajectory events, each chain headed by its own label
    // and finished by label 1. All block rectangles are uniform, but the
    // trajectory realizes only four of the six interleavings its block order
    // allows, and the shuffle is not a single poset.
    const Poset tp = Poset::from_cover({"p", "q", "x", "y"}, {{"p", "x"}, {"q", "y"}});
    std::map<EventId, std::string> labels{
        {"p", "2"}, {"q", "3"}, {"x", "1"}, {"y", "1"}};
    const ShuffleInstance inst(LPoset::from(tp, labels),
                               {Poset::from_cover({"a", "b"}, {{"a", "b"}}),
                                Poset::from_cover({"c"}, {}),
                                Poset::from_cover({"d"}, {})});

    CHECK(lang_labelled(inst.trajectory()) ==
          helpers::language({"2131", "2311", "3121", "3211"}));

    const ShuffleVerdict sem = shuffle_semantic(inst);
    CHECK(!sem.single);
    REQUIRE(sem.witness.has_value());
    CHECK(*sem.witness == word("acdb"));
    CHECK(sem.language_size == 4);
    // No operand has a concurrent pair, so uniformity holds vacuously: the
    // realization count is what separates this instance.
    CHECK(sem.violations.empty());

    const ShuffleVerdict str = shuffle_structural(inst);
    CHECK(!str.single);
    CHECK(str.note ==
          "trajectory realizes 4 of the 6 interleavings the block order allows");
}

TEST_CASE("degenerate instances work on both routes") {
    SUBCASE("unary shuffle copies the operand") {
        const Poset tp = Poset::from_cover({"u", "v"}, {{"u", "v"}});
        const Poset op = Poset::from_cover({"a", "b"}, {});
        const ShuffleInstance inst(lposet(tp, {"1", "1"}), {op});
        const ShuffleVerdict sem = shuffle_semantic(inst);
        const ShuffleVerdict str = shuffle_structural(inst);
        CHECK(sem.single);
        CHECK(str.single);
        CHECK(*sem.result == op);
        CHECK(*str.result == op);
        CHECK(sem.language_size == 2);
        CHECK(str.language_size == 2);
    }
    SUBCASE("an empty operand contributes nothing") {
        const Poset tp = Poset::from_cover({"u"}, {});
        const ShuffleInstance inst(lposet(tp, {"1"}),
                                   {Poset::from_cover({"a"}, {}),
                                    Poset::from_cover({}, {})});
        const ShuffleVerdict sem = shuffle_semantic(inst);
        const ShuffleVerdict str = shuffle_structural(inst);
        CHECK(sem.single);
        CHECK(str.single);
        CHECK(*sem.result == Poset::from_cover({"a"}, {}));
        CHECK(*str.result == *sem.result);
        CHECK(sem.language_size == 1);
        CHECK(str.language_size == 1);
    }
    SUBCASE("the empty trajectory shuffles empty operands to epsilon") {
        const ShuffleInstance inst(lposet(Poset::from_cover({}, {}), {}),
                                   {Poset::from_cover({}, {})});
        const ShuffleVerdict sem = shuffle_semantic(inst);
        const ShuffleVerdict str = shuffle_structural(inst);
        CHECK(sem.single);
        CHECK(str.single);
        CHECK(sem.result->size() == 0);
        CHECK(str.result->size() == 0);
        CHECK(sem.language_size == 1);
        CHECK(str.language_size == 1);
    }
}

TEST_CASE("check_lemma2 lists the non-uniform triples") {
    const ShuffleInstance inst = fixture_instance("lp_t2.json");

    const Poset r2a = load_poset(helpers::fixture("p_r2a.json")).poset();
    const std::vector<UniformityViolation> against_r2a = check_lemma2(inst, r2a);
    REQUIRE(against_r2a.size() == 2);
    CHECK(against_r2a[0] ==
          UniformityViolation{"a", "c", "e", 1, 2, Relation::lt, Relation::concurrent});
    CHECK(against_r2a[1] ==
          UniformityViolation{"b", "c", "e", 1, 2, Relation::lt, Relation::concurrent});

    const Poset r1 = load_poset(helpers::fixture("p_r1.json")).poset();
    CHECK(check_lemma2(fixture_instance("lp_t1.json"), r1).empty());

    CHECK_THROWS_AS(check_lemma2(inst, Poset::from_cover({"a", "b"}, {})),
                    UnknownEventError);
}

TEST_CASE("slot profiles summarize the trajectory's label language") {
    const PosetDocument t1 = load_poset(helpers::fixture("lp_t1.json"));
    const detail::SlotProfile profile = detail::slot_profile(t1.lposet(), 2);
    CHECK(profile.counts == std::vector<std::size_t>{4, 1});
    CHECK(profile.offsets == std::vector<std::size_t>{0, 4});
    CHECK(profile.total_slots == 5);
    CHECK(profile.distinct_words == 2);
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(profile.ab(profile.slot(1, k), profile.slot(2, 1)) == (k <= 3));
        CHECK(!profile.ab(profile.slot(2, 1), profile.slot(1, k)));
    }
    // Occurrences of one label always stay in order.
    for (std::size_t j = 1; j <= 4; ++j)
        for (std::size_t k = j + 1; k <= 4; ++k) {
            CHECK(profile.ab(profile.slot(1, j), profile.slot(1, k)));
            CHECK(!profile.ab(profile.slot(1, k), profile.slot(1, j)));
        }
}

TEST_CASE("trajectories with one label language get one profile and verdict") {
    // A two-event chain and a two-event antichain labelled 1,1 share the
    // label language {11}; the structural route cannot tell them apart.
    const Poset chain = Poset::from_cover({"u", "v"}, {{"u", "v"}});
    const Poset anti = Poset::from_cover({"u", "v"}, {});
    CHECK(detail::slot_profile(lposet(chain, {"1", "1"}), 1) ==
          detail::slot_profile(lposet(anti, {"1", "1"}), 1));

    const Poset op = Poset::from_cover({"a", "b"}, {});
    const ShuffleVerdict via_chain =
        shuffle_structural(ShuffleInstance(lposet(chain, {"1", "1"}), {op}));
    const ShuffleVerdict via_anti =
        shuffle_structural(ShuffleInstance(lposet(anti, {"1", "1"}), {op}));
    CHECK(via_chain.single == via_anti.single);
    CHECK(via_chain.result == via_anti.result);
    CHECK(via_chain.language_size == via_anti.language_size);
}

TEST_CASE("the two routes agree across a small instance grid") {
    std::vector<Poset> trajectory_posets;
    generate_posets(4, [&](const Poset& p) { trajectory_posets.push_back(p); });

    std::vector<Poset> ops1{Poset::from_cover({}, {})};
    std::vector<Poset> ops2{Poset::from_cover({}, {})};
    generate_posets(2, [&](const Poset& p) {
        ops1.push_back(rename(p, "a"));
        ops2.push_back(rename(p, "x"));
    });

    std::size_t verdicts = 0, singles = 0, fails = 0;
    for (const Poset& tp : trajectory_posets) {
        const std::size_t k = tp.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::vector<std::string> labels;
            for (std::size_t a = 0; a < k; ++a)
                labels.push_back((mask >> a) & 1 ? "2" : "1");
            const LPoset trajectory = lposet(tp, labels);
            for (const Poset& p1 : ops1)
                for (const Poset& p2 : ops2) {
                    const ShuffleInstance inst(trajectory, {p1, p2});
                    const ShuffleVerdict sem = shuffle_semantic(inst);
                    const ShuffleVerdict str = shuffle_structural(inst);
                    ++verdicts;

                    REQUIRE(sem.empty_shuffle == str.empty_shuffle);
                    REQUIRE(sem.single == str.single);
                    if (!sem.single) {
                        if (!sem.empty_shuffle)
                            ++fails;
                        continue;
                    }
                    ++singles;
                    REQUIRE(sem.result.has_value());
                    REQUIRE(str.result.has_value());
                    REQUIRE(*sem.result == *str.result);
                    REQUIRE(sem.language_size == str.language_size);
                    REQUIRE(lang(*str.result).size() == str.language_size);
                    REQUIRE(sem.violations.empty());
                    // The result restricted to an operand is that operand.
                    for (const Poset& op : inst.operands())
                        for (const EventId& a : op.events())
                            for (const EventId& b : op.events())
                                REQUIRE(str.result->relation(a, b) ==
                                        op.relation(a, b));
                }
        }
    }
    CHECK(verdicts == 3670 * 25);
    CHECK(singles > 100);
    CHECK(fails > 100); // the grid exercises both outcomes
}
