// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_MONTECARLO_HPP
#define AOBS_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "aobs/event.hpp"
#include "aobs/measures.hpp"
#include "aobs/rng.hpp"
#include "aobs/scenarios.hpp"
#include "aobs/space.hpp"

namespace aobs {

/// A seeded estimate. Reproducible: the same (seed, parameters) yield the
/// same value bit for bit, independent of the worker count.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
};

/// What one objective draw contributes: the observer count X, the count of
/// observers seeing the query colour (ignored for plain queries), and
/// whether the draw lies in the query event.
struct DrawSummary {
    std::int64_t occupied = 0;
    std::int64_t colour_hits = 0;
    bool in_event = false;
};

/// Draws one objective outcome i.i.d. from the model's objective law.
using Sampler = std::function<DrawSummary(CounterRng&)>;

struct EstimateOptions {
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    /// Worker threads; sample i always uses stream i, and per-block partial
    /// sums are combined in block order, so the result does not depend on
    /// this value.
    int streams = 1;
};

/// Size-biased (thirder) ratio estimator: sum(1_F w) / sum(w) with w = X,
/// or w = L_y for colour queries. Standard error by the delta method.
/// Throws ZeroDenominatorError when the total weight vanishes.
Estimate estimate_thirder(const Sampler& sampler, bool colour_query,
                          const EstimateOptions& options);

/// Halfer estimator: draws with X = 0 are rejected; plain queries average
/// 1_F over accepted draws, colour queries weight by L_y / X. Throws
/// AllRejectedError when every draw has X = 0 and ZeroDenominatorError when
/// the accepted weight vanishes.
Estimate estimate_halfer(const Sampler& sampler, bool colour_query,
                         const EstimateOptions& options);

/// Generic sampler for any exactly enumerated model: draws an objective
/// atom by weight and reports (X, L_y, 1_F). The event must be objective.
Sampler make_space_sampler(const ExtendedSpace& space, const Event& objective_f,
                           std::optional<int> colour);

/// N-cycle model sampler for the query (theory SR given colour R): only the
/// per-theory red observer counts matter, so a draw costs two binomials.
Sampler make_cycle_sampler(int cycles, int red_cycles, double p);

/// Two-zone sampler for the query (W = 0 given zone colour "0"): draws the
/// zone observer counts as binomials.
Sampler make_two_zone_sampler(int half_width, double p0, double p1, double p2);

/// pi^(E) or pi^(L) of the discretized-constant multiverse at one theta.
/// For the thirder this is the exact closed form m(theta)/(n M_n) with zero
/// standard error (kappa cancels); for the halfer a ratio estimator of
/// E(L_theta/X | X > 0).
Estimate estimate_cosmo_pi(const CosmoParams& params, MeasureFamily which,
                           int theta, const EstimateOptions& options);

} // namespace aobs

#endif
