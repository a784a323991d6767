// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_SPACE_HPP
#define AOBS_SPACE_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "aobs/cellset.hpp"
#include "aobs/rational.hpp"

namespace aobs {

/// One outcome of the objective experiment: a probability weight, the set
/// of occupied cells, and a colour for every cell (colours at unoccupied
/// cells are part of the data model but are never observed).
struct ObjectiveAtom {
    std::string label;
    Rational weight;
    CellSet occupied;
    std::vector<int> colours; // per cell, index into the colour alphabet
};

/// Finite objective probability space: weighted atoms carrying an occupied
/// cell set and a colouring of the cells. Immutable after construction;
/// cheap to copy (shared immutable state). Construction validates that
/// weights are nonnegative and sum to exactly 1, that some positive-weight
/// atom has a nonempty occupied set, and prunes atoms of weight zero.
class ObjectiveSpace {
public:
    ObjectiveSpace(std::vector<std::string> cell_labels,
                   std::vector<std::string> colour_labels,
                   std::vector<ObjectiveAtom> atoms);

    int cell_count() const { return static_cast<int>(data_->cell_labels.size()); }
    const std::vector<std::string>& cell_labels() const { return data_->cell_labels; }
    const std::string& cell_label(int cell) const {
        return data_->cell_labels[static_cast<std::size_t>(cell)];
    }
    /// Index of the given cell label, or -1.
    int find_cell(const std::string& label) const;

    int colour_count() const { return static_cast<int>(data_->colour_labels.size()); }
    const std::vector<std::string>& colour_labels() const { return data_->colour_labels; }
    const std::string& colour_label(int colour) const {
        return data_->colour_labels[static_cast<std::size_t>(colour)];
    }
    /// Index of the given colour label, or -1.
    int find_colour(const std::string& label) const;

    std::size_t atom_count() const { return data_->atoms.size(); }
    const std::vector<ObjectiveAtom>& atoms() const { return data_->atoms; }
    const ObjectiveAtom& atom(std::size_t i) const { return data_->atoms[i]; }
    /// Index of the given atom label, or -1.
    std::ptrdiff_t find_atom(const std::string& label) const;

    /// P(X != empty); positive by the construction invariant.
    const Rational& occupied_nonempty_prob() const { return data_->nonempty_prob; }

    /// Identity of the underlying immutable state. Two handles to the same
    /// construction compare equal; structurally equal but separately built
    /// spaces do not.
    bool same_space(const ObjectiveSpace& other) const { return data_ == other.data_; }

private:
    struct Data {
        std::vector<std::string> cell_labels;
        std::vector<std::string> colour_labels;
        std::vector<ObjectiveAtom> atoms;
        Rational nonempty_prob;
    };
    std::shared_ptr<const Data> data_;
};

/// The extended space Omega = Omega_O x Omega_A with Omega_A = K + {boundary}.
/// Extended atoms are the pairs (objective atom, location) enumerated in row
/// major order; the final location index stands for the boundary point used
/// when no cell is occupied. Derived entirely from the objective space, so a
/// copy is one shared pointer.
class ExtendedSpace {
public:
    explicit ExtendedSpace(ObjectiveSpace base) : base_(std::move(base)) {}

    const ObjectiveSpace& base() const { return base_; }

    /// Number of locations, i.e. |K| + 1; the last one is the boundary.
    int location_count() const { return base_.cell_count() + 1; }
    int boundary_location() const { return base_.cell_count(); }

    std::size_t atom_count() const {
        return base_.atom_count() * static_cast<std::size_t>(location_count());
    }

    std::size_t index_of(std::size_t objective_atom, int location) const {
        return objective_atom * static_cast<std::size_t>(location_count()) +
               static_cast<std::size_t>(location);
    }
    std::size_t objective_of(std::size_t extended_index) const {
        return extended_index / static_cast<std::size_t>(location_count());
    }
    int location_of(std::size_t extended_index) const {
        return static_cast<int>(extended_index %
                                static_cast<std::size_t>(location_count()));
    }

    /// True when the atom's location lies in its occupied set, i.e. the
    /// atom is compatible with the principle of null sets.
    bool location_occupied(std::size_t extended_index) const {
        int loc = location_of(extended_index);
        if (loc == boundary_location()) return false;
        return base_.atom(objective_of(extended_index)).occupied.contains(loc);
    }

    /// "(label, cell)" or "(label, boundary)" for diagnostics.
    std::string atom_label(std::size_t extended_index) const;

    bool same_space(const ExtendedSpace& other) const {
        return base_.same_space(other.base_);
    }

private:
    ObjectiveSpace base_;
};

/// Builds the extended space over an objective space.
ExtendedSpace extend(const ObjectiveSpace& space);

} // namespace aobs

#endif
