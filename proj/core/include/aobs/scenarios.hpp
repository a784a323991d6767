// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_SCENARIOS_HPP
#define AOBS_SCENARIOS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "aobs/event.hpp"
#include "aobs/rational.hpp"
#include "aobs/space.hpp"

namespace aobs {

/// An extended space together with its named events, ready for queries.
struct Model {
    ExtendedSpace space;
    std::vector<std::pair<std::string, Event>> events;

    const Event* find_event(const std::string& name) const;
};

/// Default cap on the number of objective atoms a constructor will
/// enumerate exactly; beyond it SizeCapError steers callers to the Monte
/// Carlo estimators.
inline constexpr std::size_t default_atom_budget = std::size_t{1} << 20;

/// The original problem: a fair coin, one awakening on Heads (day 1),
/// two on Tails (days 1 and 2). Events: Heads, Tails, Mon, Tue.
Model sleeping_beauty();

/// Pittard's four-participant variant seen from participant A: the waker W
/// is uniform on {A,B,C,D}; A's possible partners are K = {B,C,D}; A is
/// woken three times iff she is the waker, once otherwise. Events: WA..WD.
Model four_beauties();

/// Two candidate universes: W ~ Ber(1/2) selects whether all of
/// K = {1..total} or only {1..small} is populated. Events: W0, W1.
Model presumptuous_philosopher(int small, int total);

/// N-cycle universe with two equally likely theories: AR (all cycles red)
/// and SR (exactly red_cycles red, uniformly arranged). Observers appear in
/// each cycle independently with probability p; the observable colour of a
/// cycle is its red/blue state. Events: AR, SR. Colours: "R", "B".
Model hartle_srednicki(int cycles, int red_cycles, const Rational& p,
                       std::size_t atom_budget = default_atom_budget);

/// sites planets; the probability of life V has the given finite support
/// {(value, weight)}; conditional on V each planet is independently
/// inhabited with probability V. Events: V0..Vk (value of V), Occ1
/// (site 1 inhabited).
Model probability_of_life(int sites,
                          const std::vector<std::pair<Rational, Rational>>& support,
                          std::size_t atom_budget = default_atom_budget);

/// Two-zone universe: cells -half_width..-1 (zone 0) and 1..half_width
/// (zone 1). Zone 0 cells are inhabited with probability p0; zone 1 cells
/// with probability p1 if W = 0, p2 if W = 1, W ~ Ber(1/2). The observable
/// colour is the zone ("0" or "1"). Events: W0, W1.
Model two_zone(int half_width, const Rational& p0, const Rational& p1,
               const Rational& p2, std::size_t atom_budget = default_atom_budget);

/// Multiverse with discretized constant theta in {0, 1/n, ..., (n-1)/n}.
/// A universe with constant theta exists with probability kappa/n; when it
/// does, its observer count Y_theta in {0..max_observers} follows
/// observer_pmf[theta]. The observable colour of an observer is its theta.
struct CosmoParams {
    int levels = 0;                                 // n
    Rational kappa;                                 // in (0, n)
    int max_observers = 0;                          // n0
    std::vector<std::vector<Rational>> observer_pmf; // per theta, over {0..n0}

    /// E(Y_theta), exact.
    Rational mean_observers(int theta) const;
    /// M_n = sum_theta m(theta)/n, exact.
    Rational mean_density() const;
};

/// Two-point observer-count laws on {1, max_observers} matching the given
/// means (each mean must lie in [1, max_observers]); P(Y = 0) = 0.
CosmoParams cosmo_from_means(int levels, const Rational& kappa, int max_observers,
                             const std::vector<Rational>& means);

Model cosmo_constant(const CosmoParams& params,
                     std::size_t atom_budget = default_atom_budget);

/// Exact pi^(E)(theta) = m(theta) / (n M_n); does not depend on kappa.
Rational cosmo_thirder_pi(const CosmoParams& params, int theta);

/// A sequential (day-structured) model: X = {1..X} where X is the first
/// day whose stop randomization V_n fires, with hazards h_n = P(V_n = 1)
/// for n = 0..M (h_M = 1, h_n < 1 before that), plus a finite uniform
/// auxiliary randomization U with u_levels states. The objective atoms are
/// the full tuples (V_0..V_M, U) of positive probability, so that events
/// generated by future randomizations are measurable.
class SequentialModel {
public:
    SequentialModel(std::vector<Rational> hazards, int u_levels);

    const ExtendedSpace& space() const { return space_; }
    /// Horizon M: days run 1..M; day n corresponds to cell index n-1.
    int horizon() const { return static_cast<int>(hazards_.size()) - 1; }
    int u_levels() const { return u_levels_; }
    const std::vector<Rational>& hazards() const { return hazards_; }

    /// Stop day X of an objective atom (0 when no day is occupied).
    int stop_day(std::size_t objective_atom) const { return stop_[objective_atom]; }
    int auxiliary(std::size_t objective_atom) const { return aux_[objective_atom]; }
    int randomization(std::size_t objective_atom, int day) const {
        return tuples_[objective_atom][static_cast<std::size_t>(day)];
    }

    /// A value pattern for (V_n, ..., V_M, U).
    struct TailPattern {
        std::vector<int> values; // V_n..V_M
        int aux = 0;             // U
    };

    /// The distinct tail patterns of positive probability from day n on;
    /// these are the atoms of sigma(V_n, ..., V_M, U).
    std::vector<TailPattern> tail_patterns(int day) const;

    /// The event {V_n = t_0, ..., V_M = t_{M-n}, U = u}; objective.
    Event tail_event(int day, const TailPattern& tail) const;

    /// Its objective probability, exact.
    Rational tail_probability(int day, const TailPattern& tail) const;

private:
    static ExtendedSpace build(const std::vector<Rational>& hazards, int u_levels,
                               std::vector<std::vector<int>>& tuples,
                               std::vector<int>& aux, std::vector<int>& stops);

    std::vector<Rational> hazards_;
    int u_levels_;
    std::vector<std::vector<int>> tuples_; // per objective atom: V_0..V_M
    std::vector<int> aux_;
    std::vector<int> stop_;
    ExtendedSpace space_;
};

SequentialModel sequential(std::vector<Rational> hazards, int u_levels);

/// P(X = n) computed from the hazards alone, for cross-checks.
Rational sequential_stop_prob(const std::vector<Rational>& hazards, int day);

/// The (corrected) Bayes combination over the improper conditioning events
/// of the N-cycle model: f(p, M) / (f(p, M) + f(p, N)) with
/// f(p, n) = 1 - (1-p)^n. This is what conditioning on "some observer sees
/// red" instead of the actual observation yields; it is a comparator, not a
/// correct credence (the engine's conditional credence is
/// red_cycles / (red_cycles + cycles)).
Rational hs_improper_posterior(int cycles, int red_cycles, const Rational& p);

} // namespace aobs

#endif
