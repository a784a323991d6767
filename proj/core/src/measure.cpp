// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#include "aobs/measure.hpp"

#include <utility>

#include "aobs/errors.hpp"

namespace aobs {

Measure::Measure(ExtendedSpace space, std::vector<Rational> weights,
                 bool uniqueness_warning)
    : space_(std::move(space)),
      weights_(std::move(weights)),
      uniqueness_warning_(uniqueness_warning) {
    if (weights_.size() != space_.atom_count()) {
        throw SpaceMismatchError("measure weight count does not match the space");
    }
    Rational total = 0;
    for (const auto& w : weights_) {
        if (sgn(w) < 0) throw InvalidParamsError("measure has a negative weight");
        total += w;
    }
    if (total != 1) {
        throw InvalidParamsError("measure weights sum to " + total.get_str() +
                                 ", expected 1");
    }
}

Rational probability(const Measure& m, const Event& e) {
    if (!m.space().same_space(e.space())) {
        throw SpaceMismatchError("measure and event belong to different spaces");
    }
    Rational sum = 0;
    const auto& bits = e.members();
    for (std::size_t i = bits.find_first(); i != boost::dynamic_bitset<>::npos;
         i = bits.find_next(i)) {
        sum += m.weight(i);
    }
    return sum;
}

Rational conditional(const Measure& m, const Event& f, const Event& g) {
    Rational denom = probability(m, g);
    if (sgn(denom) == 0) {
        throw ConditionOnNullError("conditioning event has probability zero");
    }
    Rational numer = probability(m, f & g);
    return numer / denom;
}

Rational objective_probability(const ExtendedSpace& space, const Event& f) {
    if (!space.same_space(f.space())) {
        throw SpaceMismatchError("event belongs to a different space");
    }
    if (!f.is_objective()) {
        throw NotObjectiveError("the objective extension is defined on objective events only");
    }
    // Membership is constant in the location coordinate; read it at location 0.
    Rational sum = 0;
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        if (f.contains(space.index_of(a, 0))) sum += space.base().atom(a).weight;
    }
    return sum;
}

Rational objective_conditional(const ExtendedSpace& space, const Event& f,
                               const Event& g) {
    Rational denom = objective_probability(space, g);
    if (sgn(denom) == 0) {
        throw ConditionOnNullError("conditioning event has probability zero");
    }
    Rational numer = objective_probability(space, f & g);
    return numer / denom;
}

} // namespace aobs
