// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_OCCUPANCY_HPP
#define AOBS_OCCUPANCY_HPP

#include <map>
#include <utility>
#include <vector>

#include "aobs/cellset.hpp"
#include "aobs/rational.hpp"
#include "aobs/space.hpp"

namespace aobs {

/// Exact occupancy law of a space: the distribution of the occupied set,
/// the per-cell occupation probabilities, and the observer-count moments
/// used by the thirder construction.
struct OccupancyStats {
    /// q_B = P(X = B), tabulated only for sets of positive probability.
    std::map<CellSet, Rational> set_prob;
    /// Q_x = P(x in X), indexed by cell.
    std::vector<Rational> cell_prob;
    /// E|X|.
    Rational mean_count;
    /// 1 / E|X|; the thirder normalizer.
    Rational inv_mean_count;
};

/// Computes the occupancy law. Throws NoObserversError when E|X| = 0
/// (excluded by the ObjectiveSpace construction invariant).
OccupancyStats occupancy_stats(const ObjectiveSpace& space);

/// Graph on the cells with an edge wherever two cells are jointly occupied
/// with positive probability. Connectivity decides uniqueness of the
/// thirder measure.
struct OccupancyGraph {
    int cell_count = 0;
    std::vector<std::pair<int, int>> edges;
    bool connected = false;

    bool has_edge(int a, int b) const;
};

OccupancyGraph occupancy_graph(const ObjectiveSpace& space);

} // namespace aobs

#endif
