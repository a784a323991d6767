// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_PRINCIPLES_HPP
#define AOBS_PRINCIPLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "aobs/measure.hpp"
#include "aobs/rational.hpp"
#include "aobs/space.hpp"

namespace aobs {

class SequentialModel; // scenarios.hpp

/// The principles an observer's measure may be required to satisfy.
///   PN   - principle of null sets (no mass on impossible locations)
///   PI   - principle of indifference (uniform location given X = B)
///   PIst - strengthened PI (uniform location given any objective refinement)
///   PEI  - principle of equivalent information (objective events given S = x
///          get their objective probabilities given x in X)
///   PP   - principal principle (objective events keep their objective
///          probabilities, conditioned on observers existing)
///   PNFI - no future information (sequential models only)
enum class Principle { PN, PI, PIst, PEI, PP, PNFI };

std::string principle_name(Principle p);
std::optional<Principle> principle_from_name(const std::string& name);

struct Violation {
    std::string witness;
    Rational lhs;
    Rational rhs;
};

struct PrincipleReport {
    Principle principle;
    bool holds = true;
    std::vector<Violation> violations;
    /// True when more violations existed than the report cap admits.
    bool truncated = false;
};

inline constexpr std::size_t default_violation_cap = 32;

PrincipleReport check_pn(const Measure& m,
                         std::size_t violation_cap = default_violation_cap);
PrincipleReport check_pi(const Measure& m,
                         std::size_t violation_cap = default_violation_cap);
PrincipleReport check_pi_strong(const Measure& m,
                                std::size_t violation_cap = default_violation_cap);
PrincipleReport check_pei(const Measure& m,
                          std::size_t violation_cap = default_violation_cap);
PrincipleReport check_pp(const Measure& m,
                         std::size_t violation_cap = default_violation_cap);

/// PNFI on a sequential model: for every day n with m(S = n) > 0 and every
/// atom G of the sigma-field generated by the future randomizations
/// (V_n, ..., V_M, U), m(G | S = n) equals the objective P(G).
PrincipleReport check_pnfi(const Measure& m, const SequentialModel& seq,
                           std::size_t violation_cap = default_violation_cap);

/// Dispatch by principle id; PNFI requires seq.
PrincipleReport check_principle(const Measure& m, Principle p,
                                const SequentialModel* seq = nullptr,
                                std::size_t violation_cap = default_violation_cap);

/// Theorem-level cross-check: on a connected occupancy graph the solution
/// set of {PN, PI, PEI} must be the single point build_thirder returns.
/// On a disconnected graph the report is downgraded: the formula measure is
/// verified to be *a* solution and the solution-set dimension is reported,
/// but uniqueness is not asserted.
struct UniquenessReport {
    bool graph_connected = false;
    bool formula_is_solution = false;
    int solution_dimension = -1; // -1 if the system is infeasible
    bool unique = false;         // dimension 0 and solution == formula
    bool matches_formula = false;
};

UniquenessReport check_uniqueness(const ExtendedSpace& space);

/// Cross-check of the four-principle corollary: {PN, PI, PEI, PP} is
/// solvable iff |X| is deterministic given X nonempty. The forward
/// direction (feasible implies deterministic) holds on connected occupancy
/// graphs; the reverse direction holds unconditionally. `consistent`
/// reports whether the solver and the closed-form test agree to the extent
/// the graph supports.
struct Corollary4PReport {
    bool solver_feasible = false;
    std::optional<int> deterministic_count; // k with P(|X| = k | X nonempty) = 1
    bool graph_connected = false;
    bool consistent = false;
};

Corollary4PReport check_corollary_4p(const ExtendedSpace& space);

} // namespace aobs

#endif
