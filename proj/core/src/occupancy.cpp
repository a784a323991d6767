// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#include "aobs/occupancy.hpp"

#include <algorithm>
#include <vector>

#include "aobs/errors.hpp"

namespace aobs {

OccupancyStats occupancy_stats(const ObjectiveSpace& space) {
    OccupancyStats out;
    const int cells = space.cell_count();
    out.cell_prob.assign(static_cast<std::size_t>(cells), Rational(0));
    out.mean_count = 0;
    for (const auto& atom : space.atoms()) {
        out.set_prob[atom.occupied] += atom.weight;
        atom.occupied.for_each([&](int cell) {
            out.cell_prob[static_cast<std::size_t>(cell)] += atom.weight;
        });
        out.mean_count += Rational(atom.occupied.count()) * atom.weight;
    }
    if (sgn(out.mean_count) == 0) {
        throw NoObserversError("E|X| = 0: no observers ever exist");
    }
    out.inv_mean_count = Rational(1) / out.mean_count;
    return out;
}

bool OccupancyGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

OccupancyGraph occupancy_graph(const ObjectiveSpace& space) {
    OccupancyGraph graph;
    const int cells = space.cell_count();
    graph.cell_count = cells;

    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(cells));
    for (int a = 0; a < cells; ++a) {
        for (int b = a + 1; b < cells; ++b) {
            bool edge = false;
            for (const auto& atom : space.atoms()) {
                if (atom.occupied.contains(a) && atom.occupied.contains(b)) {
                    edge = true;
                    break;
                }
            }
            if (edge) {
                graph.edges.emplace_back(a, b);
                adjacency[static_cast<std::size_t>(a)].push_back(b);
                adjacency[static_cast<std::size_t>(b)].push_back(a);
            }
        }
    }

    // Breadth-first search from cell 0; the graph is connected when every
    // cell is reached. A single cell is connected by convention.
    std::vector<bool> seen(static_cast<std::size_t>(cells), false);
    std::vector<int> queue = {0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int w : adjacency[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    graph.connected = reached == cells;
    return graph;
}

} // namespace aobs
