// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#include "aobs/measures.hpp"

#include <cstddef>

#include "aobs/errors.hpp"
#include "aobs/occupancy.hpp"

namespace aobs {

namespace {

/// Weights of the size-biased (thirder) construction for an arbitrary
/// occupancy process, shared by build_thirder and build_restricted_thirder.
std::vector<Rational> thirder_weights(const ExtendedSpace& space,
                                      const std::vector<CellSet>& occupied) {
    Rational mean = 0;
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        mean += Rational(occupied[a].count()) * space.base().atom(a).weight;
    }
    if (sgn(mean) == 0) {
        throw NoObserversError("E|X| = 0: the size-biased measure is undefined");
    }
    Rational normalizer = Rational(1) / mean;

    std::vector<Rational> weights(space.atom_count(), Rational(0));
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        Rational w = normalizer * space.base().atom(a).weight;
        occupied[a].for_each(
            [&](int cell) { weights[space.index_of(a, cell)] = w; });
    }
    return weights;
}

std::vector<CellSet> native_occupancy(const ExtendedSpace& space) {
    std::vector<CellSet> out;
    out.reserve(space.base().atom_count());
    for (const auto& atom : space.base().atoms()) out.push_back(atom.occupied);
    return out;
}

} // namespace

Measure build_thirder(const ExtendedSpace& space) {
    bool disconnected = !occupancy_graph(space.base()).connected;
    return Measure(space, thirder_weights(space, native_occupancy(space)),
                   /*uniqueness_warning=*/disconnected);
}

Measure build_halfer(const ExtendedSpace& space) {
    const Rational& nonempty = space.base().occupied_nonempty_prob();
    std::vector<Rational> weights(space.atom_count(), Rational(0));
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        const auto& atom = space.base().atom(a);
        int count = atom.occupied.count();
        if (count == 0) continue;
        Rational w = atom.weight / (Rational(count) * nonempty);
        atom.occupied.for_each(
            [&](int cell) { weights[space.index_of(a, cell)] = w; });
    }
    return Measure(space, std::move(weights));
}

ObjectiveSpace build_tilde_objective(const ObjectiveSpace& space) {
    const Rational& nonempty = space.occupied_nonempty_prob();
    std::vector<ObjectiveAtom> atoms;
    atoms.reserve(space.atom_count());
    for (const auto& atom : space.atoms()) {
        if (atom.occupied.empty()) continue;
        ObjectiveAtom copy = atom;
        copy.weight = atom.weight / nonempty;
        atoms.push_back(std::move(copy));
    }
    return ObjectiveSpace(space.cell_labels(), space.colour_labels(),
                          std::move(atoms));
}

Measure build_restricted_thirder(const ExtendedSpace& space,
                                 const std::vector<CellSet>& restricted) {
    if (restricted.size() != space.base().atom_count()) {
        throw SpaceMismatchError(
            "restricted occupancy needs one cell set per objective atom");
    }
    for (std::size_t a = 0; a < restricted.size(); ++a) {
        if (!restricted[a].subset_of(space.base().atom(a).occupied)) {
            throw SubsetViolationError("restricted occupancy exceeds X on atom '" +
                                       space.base().atom(a).label + "'");
        }
    }
    return Measure(space, thirder_weights(space, restricted));
}

RestrictionReport verify_restriction(const ExtendedSpace& space,
                                     const std::vector<CellSet>& restricted,
                                     MeasureFamily family) {
    RestrictionReport report;

    Measure base = family == MeasureFamily::thirder ? build_thirder(space)
                                                    : build_halfer(space);

    // The family's construction applied to the sub-model X'.
    Measure sub = [&]() -> Measure {
        if (family == MeasureFamily::thirder) {
            return build_restricted_thirder(space, restricted);
        }
        std::vector<Rational> weights(space.atom_count(), Rational(0));
        Rational nonempty = 0;
        for (std::size_t a = 0; a < restricted.size(); ++a) {
            if (!restricted[a].subset_of(space.base().atom(a).occupied)) {
                throw SubsetViolationError("restricted occupancy exceeds X on atom '" +
                                           space.base().atom(a).label + "'");
            }
            if (!restricted[a].empty()) nonempty += space.base().atom(a).weight;
        }
        if (sgn(nonempty) == 0) {
            throw NoObserversError("P(X' nonempty) = 0");
        }
        for (std::size_t a = 0; a < restricted.size(); ++a) {
            int count = restricted[a].count();
            if (count == 0) continue;
            Rational w = space.base().atom(a).weight / (Rational(count) * nonempty);
            restricted[a].for_each(
                [&](int cell) { weights[space.index_of(a, cell)] = w; });
        }
        return Measure(space, std::move(weights));
    }();

    Event selected = Event::location_in(space, restricted);
    report.selection_prob = probability(base, selected);
    if (sgn(report.selection_prob) == 0) {
        report.pass = false;
        report.counterexample = "P(S in X') = 0 under the base measure";
        return report;
    }

    if (family == MeasureFamily::thirder) {
        OccupancyStats stats = occupancy_stats(space.base());
        Rational restricted_mean = 0;
        for (std::size_t a = 0; a < restricted.size(); ++a) {
            restricted_mean +=
                Rational(restricted[a].count()) * space.base().atom(a).weight;
        }
        report.selection_identity =
            report.selection_prob == restricted_mean / stats.mean_count;
    }

    // Atom indicator events determine every event by finite additivity.
    report.pass = true;
    Rational denom = report.selection_prob;
    for (std::size_t i = 0; i < space.atom_count(); ++i) {
        Rational lhs = 0;
        if (selected.contains(i)) lhs = base.weight(i) / denom;
        const Rational& rhs = sub.weight(i);
        if (lhs != rhs) {
            report.pass = false;
            report.counterexample = space.atom_label(i) + ": conditioned " +
                                    lhs.get_str() + " vs sub-model " + rhs.get_str();
            break;
        }
    }
    return report;
}

} // namespace aobs
