// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_MEASURE_HPP
#define AOBS_MEASURE_HPP

#include <cstddef>
#include <vector>

#include "aobs/event.hpp"
#include "aobs/rational.hpp"
#include "aobs/space.hpp"

namespace aobs {

/// A candidate probability for the anthropic observer: one exact
/// nonnegative rational weight per extended atom, summing to 1.
class Measure {
public:
    Measure(ExtendedSpace space, std::vector<Rational> weights,
            bool uniqueness_warning = false);

    const ExtendedSpace& space() const { return space_; }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& weight(std::size_t extended_index) const {
        return weights_[extended_index];
    }

    /// Set by build_thirder when the occupancy graph is disconnected: the
    /// returned measure still satisfies PN, PI and PEI but is no longer the
    /// unique one doing so.
    bool uniqueness_warning() const { return uniqueness_warning_; }

    friend bool operator==(const Measure& a, const Measure& b) {
        return a.space_.same_space(b.space_) && a.weights_ == b.weights_;
    }

private:
    ExtendedSpace space_;
    std::vector<Rational> weights_;
    bool uniqueness_warning_;
};

/// Exact probability of an event.
Rational probability(const Measure& m, const Event& e);

/// Exact conditional probability m(f | g). Throws ConditionOnNullError when
/// m(g) = 0.
Rational conditional(const Measure& m, const Event& f, const Event& g);

/// The objective extension P of P_O, defined on objective events only.
/// Throws NotObjectiveError for events that depend on the location.
Rational objective_probability(const ExtendedSpace& space, const Event& f);

/// P(f | g) under the objective extension; both events must be objective.
Rational objective_conditional(const ExtendedSpace& space, const Event& f,
                               const Event& g);

} // namespace aobs

#endif
