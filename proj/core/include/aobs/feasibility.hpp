// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_FEASIBILITY_HPP
#define AOBS_FEASIBILITY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aobs/measure.hpp"
#include "aobs/principles.hpp"
#include "aobs/rational.hpp"
#include "aobs/space.hpp"

namespace aobs {

/// One affine equality over the atom weights: coeff . w = rhs.
struct LinearConstraint {
    std::vector<Rational> coeff;
    Rational rhs;
    std::string tag; // provenance, for diagnostics
};

/// An exact affine system over the measure simplex: the listed equalities
/// plus the implicit normalization (sum of weights = 1) and nonnegativity
/// of every weight. Its solution set, intersected with the simplex, is by
/// construction exactly the set of measures satisfying the compiled
/// principles.
class ConstraintSystem {
public:
    explicit ConstraintSystem(ExtendedSpace space) : space_(std::move(space)) {}

    const ExtendedSpace& space() const { return space_; }
    std::size_t variable_count() const { return space_.atom_count(); }
    const std::vector<LinearConstraint>& rows() const { return rows_; }

    void add_row(std::vector<Rational> coeff, Rational rhs, std::string tag);

private:
    ExtendedSpace space_;
    std::vector<LinearConstraint> rows_;
};

/// Compiles a subset of principles into an affine system. Conditional
/// constraints are cleared of denominators; each cleared row is vacuous
/// exactly when the principle's guard event has measure zero, so the
/// compiled polytope equals the principle set (see the per-principle notes
/// in the implementation). PNFI needs the sequential structure.
ConstraintSystem compile(const ExtendedSpace& space,
                         const std::set<Principle>& principles,
                         const SequentialModel* seq = nullptr);

enum class SolveStatus { infeasible, unique, affine };

/// Exact classification of the solution polytope.
///   infeasible - empty;
///   unique     - a single point, returned as `witness`;
///   affine     - positive-dimensional: `witness` is a relative-interior
///                point, `basis` spans the directions of the polytope's
///                affine hull, `dimension` is the polytope dimension, and
///                `forced_zero` lists the variables that vanish on every
///                solution.
struct SolveResult {
    SolveStatus status = SolveStatus::infeasible;
    std::optional<Measure> witness;
    int dimension = 0;
    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> forced_zero;
};

SolveResult solve(const ConstraintSystem& system);

/// Exact membership test of a measure in the system's polytope.
bool satisfies(const ConstraintSystem& system, const Measure& m);

/// Exact polytope comparisons. Because both polytopes are cut out of their
/// affine hulls by the same nonnegativity constraints, equality and
/// containment reduce to (mutual) affine-hull containment.
bool same_solution_polytope(const ConstraintSystem& a, const ConstraintSystem& b);
bool polytope_contains(const ConstraintSystem& outer, const ConstraintSystem& inner);

} // namespace aobs

#endif
