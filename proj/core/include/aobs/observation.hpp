// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_OBSERVATION_HPP
#define AOBS_OBSERVATION_HPP

#include <vector>

#include "aobs/event.hpp"
#include "aobs/measure.hpp"
#include "aobs/rational.hpp"
#include "aobs/space.hpp"

namespace aobs {

/// Number of occupied cells of the atom showing the given colour. Colours
/// at unoccupied cells never count.
int colour_count(const ObjectiveAtom& atom, int colour);

/// E(L_y), exact.
Rational expected_colour_count(const ExtendedSpace& space, int colour);

struct ColourEvents {
    /// G_y = {L_y >= 1}: some observer sees the colour. Objective.
    Event some_observer;
    /// H_y = {S in X, Z_S = y}: the observer at S sees the colour. Contained
    /// in G_y and in general not objective.
    Event observed;
};

/// Throws UnknownColourError for a colour outside the alphabet.
ColourEvents colour_events(const ExtendedSpace& space, int colour);

/// P_E(F | Z_S = y) = E(1_F L_y) / E(L_y) for objective F; equals
/// conditioning the thirder measure on H_y. Throws ColourNeverObservedError
/// when E(L_y) = 0.
Rational thirder_given_colour(const ExtendedSpace& space, const Event& objective_f,
                              int colour);

/// P_L(F | Z_S = y), the X^{-1}-weighted analogue; equals conditioning the
/// halfer measure on H_y.
Rational halfer_given_colour(const ExtendedSpace& space, const Event& objective_f,
                             int colour);

/// P(F | G_y): conditioning on the objective event "someone sees y" instead
/// of the actual observation. G_y is an improper conditioning event -- it
/// is implied by, but coarser than, H_y -- so this is a comparator, not a
/// credence; it matches thirder_given_colour exactly when the colouring is
/// injective and can differ arbitrarily otherwise.
Rational improper_conditioning(const ExtendedSpace& space, const Event& objective_f,
                               int colour);

struct InjectivityReport {
    std::vector<bool> per_colour; // P(L_y <= 1) = 1 for each colour
    bool overall = true;
};

InjectivityReport is_injective(const ExtendedSpace& space);

} // namespace aobs

#endif
