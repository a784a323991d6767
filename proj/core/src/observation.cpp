// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#include "aobs/observation.hpp"

#include "aobs/errors.hpp"

namespace aobs {

namespace {

void check_colour(const ExtendedSpace& space, int colour) {
    if (colour < 0 || colour >= space.base().colour_count()) {
        throw UnknownColourError("colour index outside the alphabet");
    }
}

void check_objective(const Event& f) {
    if (!f.is_objective()) {
        throw NotObjectiveError("colour conditioning needs an objective event");
    }
}

} // namespace

int colour_count(const ObjectiveAtom& atom, int colour) {
    int count = 0;
    atom.occupied.for_each([&](int cell) {
        if (atom.colours[static_cast<std::size_t>(cell)] == colour) ++count;
    });
    return count;
}

Rational expected_colour_count(const ExtendedSpace& space, int colour) {
    check_colour(space, colour);
    Rational sum = 0;
    for (const auto& atom : space.base().atoms()) {
        sum += Rational(colour_count(atom, colour)) * atom.weight;
    }
    return sum;
}

ColourEvents colour_events(const ExtendedSpace& space, int colour) {
    check_colour(space, colour);
    Event some = Event::of_objective(space, [colour](const ObjectiveAtom& atom) {
        return colour_count(atom, colour) >= 1;
    });

    boost::dynamic_bitset<> bits(space.atom_count());
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        const auto& atom = space.base().atom(a);
        atom.occupied.for_each([&](int cell) {
            if (atom.colours[static_cast<std::size_t>(cell)] == colour) {
                bits.set(space.index_of(a, cell));
            }
        });
    }
    return {std::move(some), Event(space, std::move(bits))};
}

Rational thirder_given_colour(const ExtendedSpace& space, const Event& objective_f,
                              int colour) {
    check_colour(space, colour);
    check_objective(objective_f);
    Rational numer = 0, denom = 0;
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        const auto& atom = space.base().atom(a);
        Rational term = Rational(colour_count(atom, colour)) * atom.weight;
        denom += term;
        if (objective_f.contains(space.index_of(a, 0))) numer += term;
    }
    if (sgn(denom) == 0) {
        throw ColourNeverObservedError("E(L_y) = 0: colour '" +
                                       space.base().colour_label(colour) +
                                       "' is never observed");
    }
    return numer / denom;
}

Rational halfer_given_colour(const ExtendedSpace& space, const Event& objective_f,
                             int colour) {
    check_colour(space, colour);
    check_objective(objective_f);
    // Ratio of E(1_F L_y / X | X >= 1) to E(L_y / X | X >= 1); the
    // conditioning normalizers cancel.
    Rational numer = 0, denom = 0;
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        const auto& atom = space.base().atom(a);
        int size = atom.occupied.count();
        if (size == 0) continue;
        Rational term = Rational(colour_count(atom, colour)) * atom.weight /
                        Rational(size);
        denom += term;
        if (objective_f.contains(space.index_of(a, 0))) numer += term;
    }
    if (sgn(denom) == 0) {
        throw ColourNeverObservedError("colour '" +
                                       space.base().colour_label(colour) +
                                       "' is never observed");
    }
    return numer / denom;
}

Rational improper_conditioning(const ExtendedSpace& space, const Event& objective_f,
                               int colour) {
    check_colour(space, colour);
    check_objective(objective_f);
    ColourEvents events = colour_events(space, colour);
    Rational denom = objective_probability(space, events.some_observer);
    if (sgn(denom) == 0) {
        throw ColourNeverObservedError("P(G_y) = 0: colour '" +
                                       space.base().colour_label(colour) +
                                       "' is never observed");
    }
    return objective_probability(space, objective_f & events.some_observer) / denom;
}

InjectivityReport is_injective(const ExtendedSpace& space) {
    InjectivityReport report;
    const int colours = space.base().colour_count();
    report.per_colour.assign(static_cast<std::size_t>(colours), true);
    for (int colour = 0; colour < colours; ++colour) {
        for (const auto& atom : space.base().atoms()) {
            if (colour_count(atom, colour) > 1) {
                report.per_colour[static_cast<std::size_t>(colour)] = false;
                report.overall = false;
                break;
            }
        }
    }
    return report;
}

} // namespace aobs
