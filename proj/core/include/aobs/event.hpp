// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_EVENT_HPP
#define AOBS_EVENT_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <functional>
#include <string>

#include "aobs/space.hpp"

namespace aobs {

/// A subset of extended atoms. Immutable; set algebra returns new events.
/// An event is "objective" when membership does not depend on the location
/// coordinate, i.e. it has the form F x Omega_A for an objective F; the
/// flag is computed once at construction.
class Event {
public:
    static Event none(const ExtendedSpace& space);
    static Event all(const ExtendedSpace& space);

    /// F x Omega_A for F given as a predicate on objective atoms.
    static Event of_objective(const ExtendedSpace& space,
                              const std::function<bool(const ObjectiveAtom&)>& pred);

    /// Indicator of a single objective atom (times Omega_A).
    static Event objective_atom(const ExtendedSpace& space, std::size_t atom);

    /// {S = cell} for a cell location.
    static Event location_is(const ExtendedSpace& space, int cell);

    /// {S = boundary}.
    static Event boundary(const ExtendedSpace& space);

    /// {S in X}: the location is an occupied cell.
    static Event location_occupied(const ExtendedSpace& space);

    /// {S in X'} for a per-atom cell set X'.
    static Event location_in(const ExtendedSpace& space,
                             const std::vector<CellSet>& per_atom);

    /// {cell in X}; objective.
    static Event cell_occupied(const ExtendedSpace& space, int cell);

    /// {X = B}; objective.
    static Event occupancy_equals(const ExtendedSpace& space, const CellSet& value);

    /// {|X| = k}; objective.
    static Event occupancy_count(const ExtendedSpace& space, int k);

    /// Raw membership constructor.
    Event(ExtendedSpace space, boost::dynamic_bitset<> members);

    const ExtendedSpace& space() const { return space_; }
    const boost::dynamic_bitset<>& members() const { return members_; }
    bool contains(std::size_t extended_index) const { return members_[extended_index]; }
    std::size_t member_count() const { return members_.count(); }
    bool is_empty() const { return members_.none(); }

    /// True iff membership is constant across locations for every objective
    /// atom (the representation F x Omega_A of objective events).
    bool is_objective() const { return objective_; }

    Event operator~() const;
    Event operator&(const Event& other) const;
    Event operator|(const Event& other) const;
    /// Set difference.
    Event operator-(const Event& other) const;

    friend bool operator==(const Event& a, const Event& b) {
        return a.space_.same_space(b.space_) && a.members_ == b.members_;
    }

private:
    void check_same(const Event& other) const;

    ExtendedSpace space_;
    boost::dynamic_bitset<> members_;
    bool objective_ = false;
};

} // namespace aobs

#endif
