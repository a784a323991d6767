// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_MEASURES_HPP
#define AOBS_MEASURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "aobs/measure.hpp"
#include "aobs/space.hpp"

namespace aobs {

enum class MeasureFamily { thirder, halfer };

/// The thirder measure P_E: weight of (atom, cell) is P_O(atom)/E|X| when
/// the cell is occupied, zero otherwise. The unique measure satisfying
/// PN + PI + PEI when the occupancy graph is connected; when it is not,
/// the returned measure still satisfies all three but carries a
/// uniqueness warning.
Measure build_thirder(const ExtendedSpace& space);

/// The halfer measure P_L: objective mass P_O(atom | X nonempty) spread
/// uniformly over the atom's occupied cells. The unique measure satisfying
/// PN + PP + the strengthened principle of indifference.
Measure build_halfer(const ExtendedSpace& space);

/// The objective law conditioned on the existence of observers: atoms with
/// an empty occupied set are removed and the remaining weights renormalized.
ObjectiveSpace build_tilde_objective(const ObjectiveSpace& space);

/// The thirder construction applied to a restricted occupancy process
/// X' <= X (one cell set per objective atom). Throws SubsetViolationError
/// if X' is not contained in X on some atom and NoObserversError when
/// E|X'| = 0. Defined even when the restricted occupancy graph is
/// disconnected.
Measure build_restricted_thirder(const ExtendedSpace& space,
                                 const std::vector<CellSet>& restricted);

/// Outcome of checking the restriction property for one family:
/// conditioning the family's measure on {S in X'} must reproduce the
/// family's construction for the sub-model X'. Verified on every extended
/// atom's indicator event, which determines all events by additivity.
struct RestrictionReport {
    bool pass = false;
    /// First failing atom event, with both sides; empty when pass.
    std::string counterexample;
    /// P(S in X') under the family measure.
    Rational selection_prob;
    /// For the thirder family: whether P_E(S in X') = E|X'|/E|X| exactly.
    std::optional<bool> selection_identity;
};

RestrictionReport verify_restriction(const ExtendedSpace& space,
                                     const std::vector<CellSet>& restricted,
                                     MeasureFamily family = MeasureFamily::thirder);

} // namespace aobs

#endif
