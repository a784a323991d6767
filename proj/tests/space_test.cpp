// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "aobs/errors.hpp"
#include "aobs/measure.hpp"
#include "aobs/measures.hpp"
#include "aobs/occupancy.hpp"
#include "aobs/scenarios.hpp"
#include "support/corpus.hpp"

using namespace aobs;

namespace {

ObjectiveSpace singleton_uniform(int cells) {
    std::vector<std::string> labels;
    for (int i = 0; i < cells; ++i) labels.push_back(std::to_string(i + 1));
    std::vector<ObjectiveAtom> atoms;
    for (int i = 0; i < cells; ++i) {
        atoms.push_back({"only" + std::to_string(i + 1), Rational(1, cells),
                         CellSet::single(i, cells), {}});
    }
    return ObjectiveSpace(labels, {}, std::move(atoms));
}

} // namespace

TEST_CASE("extend enumerates |Omega_O| * (M+1) atoms") {
    Model sb = sleeping_beauty();
    CHECK(sb.space.atom_count() == 6); // 2 atoms * (2 cells + boundary)
}

TEST_CASE("extend: minimal one-cell space has two extended atoms") {
    ObjectiveSpace space({"1"}, {}, {{"all", Rational(1), CellSet::full_set(1), {}}});
    CHECK(extend(space).atom_count() == 2);
}

TEST_CASE("extend: random 3-cell 5-atom space has 20 extended atoms") {
    // Direct count oracle: every objective atom pairs with each of the
    // 3 cells plus the boundary.
    std::vector<ObjectiveAtom> atoms;
    for (int i = 0; i < 5; ++i) {
        atoms.push_back({"", Rational(1, 5), CellSet((std::uint64_t)(i % 8), 3), {}});
    }
    ObjectiveSpace space({"1", "2", "3"}, {}, std::move(atoms));
    std::size_t oracle = space.atom_count() * 4;
    CHECK(extend(space).atom_count() == oracle);
    CHECK(oracle == 20);
}

TEST_CASE("objective space validation") {
    CHECK_THROWS_AS(ObjectiveSpace({"1"}, {},
                                   {{"a", Rational(1, 2), CellSet::full_set(1), {}}}),
                    InvalidParamsError); // weights must sum to 1
    CHECK_THROWS_AS(ObjectiveSpace({"1"}, {},
                                   {{"a", Rational(1), CellSet::empty_set(1), {}}}),
                    InvalidParamsError); // P(X = empty) must be < 1
    CHECK_THROWS_AS(ObjectiveSpace({"1"}, {},
                                   {{"a", Rational(-1), CellSet::full_set(1), {}},
                                    {"b", Rational(2), CellSet::full_set(1), {}}}),
                    InvalidParamsError); // negative weight
}

TEST_CASE("duplicate atom labels are rejected") {
    CHECK_THROWS_AS(ObjectiveSpace({"1"}, {},
                                   {{"twin", Rational(1, 2), CellSet::full_set(1), {}},
                                    {"twin", Rational(1, 2), CellSet::full_set(1), {}}}),
                    InvalidParamsError);
}

TEST_CASE("per-atom location sets must match the cell universe") {
    Model sb = sleeping_beauty();
    std::vector<CellSet> wrong = {CellSet::full_set(3), CellSet::full_set(3)};
    CHECK_THROWS_AS(Event::location_in(sb.space, wrong), SpaceMismatchError);
}

TEST_CASE("zero-weight atoms are pruned") {
    ObjectiveSpace space({"1"}, {},
                         {{"gone", Rational(0), CellSet::empty_set(1), {}},
                          {"kept", Rational(1), CellSet::full_set(1), {}}});
    CHECK(space.atom_count() == 1);
    CHECK(space.atom(0).label == "kept");
}

TEST_CASE("probability: normalization, empty set, objective extension") {
    Model sb = sleeping_beauty();
    Measure thirder = build_thirder(sb.space);
    CHECK(probability(thirder, Event::all(sb.space)) == 1);
    CHECK(probability(thirder, Event::none(sb.space)) == 0);
    CHECK(objective_probability(sb.space, *sb.find_event("Heads")) == Rational(1, 2));
}

TEST_CASE("objective extension rejects location-dependent events") {
    Model sb = sleeping_beauty();
    CHECK_THROWS_AS(objective_probability(sb.space, *sb.find_event("Mon")),
                    NotObjectiveError);
}

TEST_CASE("conditional credences on the two-day model") {
    Model sb = sleeping_beauty();
    const Event& heads = *sb.find_event("Heads");
    const Event& monday = *sb.find_event("Mon");

    Measure thirder = build_thirder(sb.space);
    Measure halfer = build_halfer(sb.space);
    CHECK(conditional(thirder, heads, monday) == Rational(1, 2));
    CHECK(conditional(halfer, heads, monday) == Rational(2, 3));
    CHECK(conditional(thirder, heads, Event::all(sb.space)) ==
          probability(thirder, heads));

    CHECK_THROWS_AS(conditional(thirder, heads, Event::none(sb.space)),
                    ConditionOnNullError);
}

TEST_CASE("occupancy stats: two-day model, hand enumeration") {
    Model sb = sleeping_beauty();
    OccupancyStats stats = occupancy_stats(sb.space.base());
    CHECK(stats.set_prob.at(CellSet::single(0, 2)) == Rational(1, 2));
    CHECK(stats.set_prob.at(CellSet::full_set(2)) == Rational(1, 2));
    CHECK(stats.cell_prob[0] == 1);
    CHECK(stats.cell_prob[1] == Rational(1, 2));
    CHECK(stats.mean_count == Rational(3, 2));
    CHECK(stats.inv_mean_count == Rational(2, 3));
}

TEST_CASE("occupancy stats: four beauties") {
    Model fb = four_beauties();
    OccupancyStats stats = occupancy_stats(fb.space.base());
    for (int cell = 0; cell < 3; ++cell) {
        CHECK(stats.cell_prob[(std::size_t)cell] == Rational(1, 2));
    }
    CHECK(stats.mean_count == Rational(3, 2));
    CHECK(stats.inv_mean_count == Rational(2, 3));
}

TEST_CASE("occupancy stats: deterministic full occupancy") {
    const int m = 5;
    ObjectiveSpace space(
        {"1", "2", "3", "4", "5"}, {},
        {{"all", Rational(1), CellSet::full_set(m), {}}});
    OccupancyStats stats = occupancy_stats(space);
    CHECK(stats.set_prob.at(CellSet::full_set(m)) == 1);
    for (const auto& q : stats.cell_prob) CHECK(q == 1);
    CHECK(stats.inv_mean_count == Rational(1, m));
}

TEST_CASE("occupancy identities on random spaces") {
    std::mt19937_64 rng(2026);
    for (int round = 0; round < 30; ++round) {
        ObjectiveSpace space = tests::random_space(rng, {});
        OccupancyStats stats = occupancy_stats(space);

        Rational total = 0, mean = 0;
        for (const auto& [set, q] : stats.set_prob) {
            total += q;
            mean += Rational(set.count()) * q;
        }
        CHECK(total == 1);
        CHECK(mean == stats.mean_count);
        CHECK(stats.inv_mean_count * stats.mean_count == 1);

        Rational cell_sum = 0;
        for (int cell = 0; cell < space.cell_count(); ++cell) {
            Rational from_sets = 0;
            for (const auto& [set, q] : stats.set_prob) {
                if (set.contains(cell)) from_sets += q;
            }
            CHECK(stats.cell_prob[(std::size_t)cell] == from_sets);
            cell_sum += stats.cell_prob[(std::size_t)cell];
        }
        CHECK(cell_sum == stats.mean_count);
    }
}

TEST_CASE("occupancy graph: two-day model is connected through the tails atom") {
    Model sb = sleeping_beauty();
    OccupancyGraph graph = occupancy_graph(sb.space.base());
    CHECK(graph.edges.size() == 1);
    CHECK(graph.has_edge(0, 1));
    CHECK(graph.connected);
}

TEST_CASE("occupancy graph: uniform singletons are edgeless and disconnected") {
    OccupancyGraph graph = occupancy_graph(singleton_uniform(3));
    CHECK(graph.edges.empty());
    CHECK_FALSE(graph.connected);
}

TEST_CASE("occupancy graph: two-universe sweep matches a brute-force oracle") {
    Model pp = presumptuous_philosopher(2, 5);
    OccupancyGraph graph = occupancy_graph(pp.space.base());

    // Enumeration oracle: an edge exactly when some positive-weight atom
    // occupies both cells.
    for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b) {
            bool expect = false;
            for (const auto& atom : pp.space.base().atoms()) {
                if (atom.occupied.contains(a) && atom.occupied.contains(b)) {
                    expect = true;
                }
            }
            CHECK(graph.has_edge(a, b) == expect);
        }
    }
    CHECK(graph.connected);
    CHECK(graph.edges.size() == 10); // the W=1 atom occupies every pair
}

TEST_CASE("finite additivity on random disjoint events") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        ObjectiveSpace base = tests::random_space(rng, {});
        ExtendedSpace space = extend(base);
        Measure m = tests::random_measure(rng, space);
        Event e1 = tests::random_event(rng, space);
        Event e2 = tests::random_event(rng, space) - e1;
        CHECK(probability(m, e1 | e2) == probability(m, e1) + probability(m, e2));
    }
}

TEST_CASE("law of total probability over locations") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 20; ++round) {
        ObjectiveSpace base = tests::random_space(rng, {});
        ExtendedSpace space = extend(base);
        Measure m = tests::random_measure(rng, space);
        Event f = tests::random_event(rng, space);

        Rational sum = probability(m, f & Event::boundary(space));
        for (int cell = 0; cell < base.cell_count(); ++cell) {
            sum += probability(m, f & Event::location_is(space, cell));
        }
        CHECK(sum == probability(m, f));
    }
}

TEST_CASE("objective flag: products pass, location slices fail") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 20; ++round) {
        ObjectiveSpace base = tests::random_space(rng, {});
        ExtendedSpace space = extend(base);

        Event objective = Event::of_objective(space, [&](const ObjectiveAtom& atom) {
            return atom.occupied.count() % 2 == 0;
        });
        CHECK(objective.is_objective());

        Event slice = Event::location_is(space, 0);
        // {S = x} is never objective: membership differs between location x
        // and the boundary for every atom.
        CHECK_FALSE(slice.is_objective());
    }
}

TEST_CASE("measure validation") {
    Model sb = sleeping_beauty();
    std::vector<Rational> weights(sb.space.atom_count(), Rational(0));
    weights[0] = Rational(1, 2);
    CHECK_THROWS_AS(Measure(sb.space, weights), InvalidParamsError);
}
