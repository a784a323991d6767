// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "aobs/errors.hpp"
#include "aobs/feasibility.hpp"
#include "aobs/measures.hpp"
#include "aobs/occupancy.hpp"
#include "aobs/principles.hpp"
#include "aobs/scenarios.hpp"
#include "support/corpus.hpp"

using namespace aobs;

TEST_CASE("null sets alone leave the two free weights") {
    Model sb = sleeping_beauty();
    SolveResult result = solve(compile(sb.space, {Principle::PN}));
    CHECK(result.status == SolveStatus::affine);
    CHECK(result.dimension == 2);
    REQUIRE(result.witness.has_value());
    CHECK(check_pn(*result.witness).holds);
}

TEST_CASE("indifference plus equivalent information pin the thirder point") {
    Model sb = sleeping_beauty();
    SolveResult result =
        solve(compile(sb.space, {Principle::PN, Principle::PI, Principle::PEI}));
    REQUIRE(result.status == SolveStatus::unique);
    CHECK(result.witness->weight(sb.space.index_of(0, 0)) == Rational(1, 3));
    CHECK(result.witness->weight(sb.space.index_of(1, 0)) == Rational(1, 3));
    CHECK(*result.witness == build_thirder(sb.space));
}

TEST_CASE("indifference plus the principal principle pin the halfer point") {
    Model sb = sleeping_beauty();
    SolveResult result =
        solve(compile(sb.space, {Principle::PN, Principle::PI, Principle::PP}));
    REQUIRE(result.status == SolveStatus::unique);
    CHECK(result.witness->weight(sb.space.index_of(0, 0)) == Rational(1, 2));
    CHECK(result.witness->weight(sb.space.index_of(1, 0)) == Rational(1, 4));
    CHECK(*result.witness == build_halfer(sb.space));
}

TEST_CASE("indifference and equivalent information pin the thirder even without PN") {
    // On the two-day model the null-set discipline is implied: PI empties
    // the off-support locations of each outcome, PEI ties the day-one
    // weights together.
    Model sb = sleeping_beauty();
    SolveResult result = solve(compile(sb.space, {Principle::PI, Principle::PEI}));
    REQUIRE(result.status == SolveStatus::unique);
    CHECK(*result.witness == build_thirder(sb.space));
}

TEST_CASE("all four principles clash on the two-day model") {
    Model sb = sleeping_beauty();
    SolveResult result = solve(compile(
        sb.space, {Principle::PN, Principle::PI, Principle::PEI, Principle::PP}));
    CHECK(result.status == SolveStatus::infeasible);
}

TEST_CASE("all four principles agree on a deterministic-count model") {
    ObjectiveSpace base({"1", "2"}, {},
                        {{"a", Rational(1, 3), CellSet::full_set(2), {}},
                         {"b", Rational(2, 3), CellSet::full_set(2), {}}});
    ExtendedSpace space = extend(base);
    SolveResult result = solve(compile(
        space, {Principle::PN, Principle::PI, Principle::PEI, Principle::PP}));
    REQUIRE(result.status == SolveStatus::unique);
    CHECK(*result.witness == build_thirder(space));
    CHECK(*result.witness == build_halfer(space));
}

TEST_CASE("solver oracle agreement with the constructions on random models") {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 20; ++round) {
        tests::CorpusOptions opts;
        opts.require_connected = round % 2 == 0;
        ObjectiveSpace base = tests::random_space(rng, opts);
        ExtendedSpace space = extend(base);

        if (occupancy_graph(base).connected) {
            SolveResult thirder = solve(
                compile(space, {Principle::PN, Principle::PI, Principle::PEI}));
            REQUIRE(thirder.status == SolveStatus::unique);
            CHECK(*thirder.witness == build_thirder(space));
        }

        // The halfer is pinned with or without connectivity.
        SolveResult halfer = solve(
            compile(space, {Principle::PN, Principle::PP, Principle::PIst}));
        REQUIRE(halfer.status == SolveStatus::unique);
        CHECK(*halfer.witness == build_halfer(space));
    }
}

TEST_CASE("adding principles never enlarges the solution set") {
    std::mt19937_64 rng(59);
    const std::vector<Principle> pool = {Principle::PN, Principle::PI,
                                         Principle::PIst, Principle::PEI,
                                         Principle::PP};
    for (int round = 0; round < 10; ++round) {
        ObjectiveSpace base = tests::random_space(rng, {});
        ExtendedSpace space = extend(base);

        std::set<Principle> smaller, larger;
        for (Principle p : pool) {
            if (std::uniform_int_distribution<int>(0, 1)(rng)) smaller.insert(p);
        }
        larger = smaller;
        larger.insert(pool[(std::size_t)std::uniform_int_distribution<int>(
            0, (int)pool.size() - 1)(rng)]);

        CHECK(polytope_contains(compile(space, smaller), compile(space, larger)));
    }
}

TEST_CASE("solver membership matches the checkers on random measures") {
    std::mt19937_64 rng(61);
    int done = 0;
    while (done < 15) {
        tests::CorpusOptions opts;
        opts.max_cells = 3;
        opts.max_atoms = 3;
        ObjectiveSpace base = tests::random_space(rng, opts);
        ExtendedSpace space = extend(base);
        if (space.atom_count() > 12) continue;
        ++done;

        for (int sample = 0; sample < 8; ++sample) {
            Measure m = tests::random_measure(rng, space);
            CHECK(satisfies(compile(space, {Principle::PN}), m) == check_pn(m).holds);
            CHECK(satisfies(compile(space, {Principle::PI}), m) == check_pi(m).holds);
            CHECK(satisfies(compile(space, {Principle::PIst}), m) ==
                  check_pi_strong(m).holds);
            CHECK(satisfies(compile(space, {Principle::PEI}), m) ==
                  check_pei(m).holds);
            CHECK(satisfies(compile(space, {Principle::PP}), m) == check_pp(m).holds);
        }
    }
}

TEST_CASE("solver membership matches the no-future-information checker") {
    std::mt19937_64 rng(63);
    SequentialModel seq(tests::random_hazards(rng, 2), 2);
    ConstraintSystem system =
        compile(seq.space(), {Principle::PNFI}, &seq);
    for (int sample = 0; sample < 30; ++sample) {
        Measure m = tests::random_measure(rng, seq.space());
        CHECK(satisfies(system, m) == check_pnfi(m, seq).holds);
    }
}

TEST_CASE("solution polytopes of equivalent-information and no-future-information") {
    std::mt19937_64 rng(67);
    for (int round = 0; round < 8; ++round) {
        int horizon = std::uniform_int_distribution<int>(1, 3)(rng);
        int levels = std::uniform_int_distribution<int>(1, 2)(rng);
        SequentialModel seq(tests::random_hazards(rng, horizon), levels);

        ConstraintSystem with_pei =
            compile(seq.space(), {Principle::PN, Principle::PEI});
        ConstraintSystem with_pnfi =
            compile(seq.space(), {Principle::PN, Principle::PNFI}, &seq);
        CHECK(same_solution_polytope(with_pei, with_pnfi));

        // Both contain the thirder measure.
        Measure thirder = build_thirder(seq.space());
        CHECK(satisfies(with_pei, thirder));
        CHECK(satisfies(with_pnfi, thirder));
    }
}

TEST_CASE("compiling PNFI without sequential structure is an error") {
    Model sb = sleeping_beauty();
    CHECK_THROWS_AS(compile(sb.space, {Principle::PN, Principle::PNFI}),
                    SequentialStructureError);
}

TEST_CASE("degenerate principle subsets yield the full simplex") {
    Model sb = sleeping_beauty();
    SolveResult result = solve(compile(sb.space, {}));
    CHECK(result.status == SolveStatus::affine);
    CHECK(result.dimension == (int)sb.space.atom_count() - 1);
}
