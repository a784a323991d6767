// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#include "aobs/event.hpp"

#include <utility>

#include "aobs/errors.hpp"

namespace aobs {

namespace {

bool compute_objective(const ExtendedSpace& space,
                       const boost::dynamic_bitset<>& members) {
    const int locations = space.location_count();
    const std::size_t atoms = space.base().atom_count();
    for (std::size_t a = 0; a < atoms; ++a) {
        const std::size_t first = space.index_of(a, 0);
        const bool in = members[first];
        for (int loc = 1; loc < locations; ++loc) {
            if (members[first + static_cast<std::size_t>(loc)] != in) return false;
        }
    }
    return true;
}

} // namespace

Event::Event(ExtendedSpace space, boost::dynamic_bitset<> members)
    : space_(std::move(space)), members_(std::move(members)) {
    if (members_.size() != space_.atom_count()) {
        throw SpaceMismatchError("event bitset size does not match the space");
    }
    objective_ = compute_objective(space_, members_);
}

Event Event::none(const ExtendedSpace& space) {
    return Event(space, boost::dynamic_bitset<>(space.atom_count()));
}

Event Event::all(const ExtendedSpace& space) {
    boost::dynamic_bitset<> bits(space.atom_count());
    bits.set();
    return Event(space, std::move(bits));
}

Event Event::of_objective(const ExtendedSpace& space,
                          const std::function<bool(const ObjectiveAtom&)>& pred) {
    boost::dynamic_bitset<> bits(space.atom_count());
    const int locations = space.location_count();
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        if (!pred(space.base().atom(a))) continue;
        for (int loc = 0; loc < locations; ++loc) bits.set(space.index_of(a, loc));
    }
    return Event(space, std::move(bits));
}

Event Event::objective_atom(const ExtendedSpace& space, std::size_t atom) {
    boost::dynamic_bitset<> bits(space.atom_count());
    for (int loc = 0; loc < space.location_count(); ++loc) {
        bits.set(space.index_of(atom, loc));
    }
    return Event(space, std::move(bits));
}

Event Event::location_is(const ExtendedSpace& space, int cell) {
    if (cell < 0 || cell >= space.base().cell_count()) {
        throw InvalidParamsError("location_is: cell index out of range");
    }
    boost::dynamic_bitset<> bits(space.atom_count());
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        bits.set(space.index_of(a, cell));
    }
    return Event(space, std::move(bits));
}

Event Event::boundary(const ExtendedSpace& space) {
    boost::dynamic_bitset<> bits(space.atom_count());
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        bits.set(space.index_of(a, space.boundary_location()));
    }
    return Event(space, std::move(bits));
}

Event Event::location_occupied(const ExtendedSpace& space) {
    boost::dynamic_bitset<> bits(space.atom_count());
    for (std::size_t i = 0; i < space.atom_count(); ++i) {
        if (space.location_occupied(i)) bits.set(i);
    }
    return Event(space, std::move(bits));
}

Event Event::location_in(const ExtendedSpace& space,
                         const std::vector<CellSet>& per_atom) {
    if (per_atom.size() != space.base().atom_count()) {
        throw SpaceMismatchError("location_in: one cell set per objective atom required");
    }
    for (const auto& set : per_atom) {
        if (set.universe_size() != space.base().cell_count()) {
            throw SpaceMismatchError("location_in: cell set over the wrong universe");
        }
    }
    boost::dynamic_bitset<> bits(space.atom_count());
    for (std::size_t a = 0; a < per_atom.size(); ++a) {
        per_atom[a].for_each([&](int cell) { bits.set(space.index_of(a, cell)); });
    }
    return Event(space, std::move(bits));
}

Event Event::cell_occupied(const ExtendedSpace& space, int cell) {
    if (cell < 0 || cell >= space.base().cell_count()) {
        throw InvalidParamsError("cell_occupied: cell index out of range");
    }
    return of_objective(space,
                        [cell](const ObjectiveAtom& a) { return a.occupied.contains(cell); });
}

Event Event::occupancy_equals(const ExtendedSpace& space, const CellSet& value) {
    return of_objective(space,
                        [&value](const ObjectiveAtom& a) { return a.occupied == value; });
}

Event Event::occupancy_count(const ExtendedSpace& space, int k) {
    return of_objective(space,
                        [k](const ObjectiveAtom& a) { return a.occupied.count() == k; });
}

Event Event::operator~() const { return Event(space_, ~members_); }

Event Event::operator&(const Event& other) const {
    check_same(other);
    return Event(space_, members_ & other.members_);
}

Event Event::operator|(const Event& other) const {
    check_same(other);
    return Event(space_, members_ | other.members_);
}

Event Event::operator-(const Event& other) const {
    check_same(other);
    return Event(space_, members_ & ~other.members_);
}

void Event::check_same(const Event& other) const {
    if (!space_.same_space(other.space_)) {
        throw SpaceMismatchError("events belong to different spaces");
    }
}

} // namespace aobs
