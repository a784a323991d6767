// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#include "aobs/space.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>
#include <utility>

#include "aobs/errors.hpp"

namespace aobs {

ObjectiveSpace::ObjectiveSpace(std::vector<std::string> cell_labels,
                               std::vector<std::string> colour_labels,
                               std::vector<ObjectiveAtom> atoms) {
    auto data = std::make_shared<Data>();
    if (cell_labels.empty()) {
        throw InvalidParamsError("objective space needs at least one cell");
    }
    if (static_cast<int>(cell_labels.size()) > CellSet::max_cells) {
        throw InvalidParamsError("too many cells for exact representation");
    }
    if (colour_labels.empty()) {
        colour_labels.push_back("*"); // single implicit colour
    }
    const int cells = static_cast<int>(cell_labels.size());
    const int colours = static_cast<int>(colour_labels.size());

    // Zero-weight atoms are pruned here so that "positive probability"
    // bookkeeping downstream can quantify over atoms directly.
    std::vector<ObjectiveAtom> kept;
    kept.reserve(atoms.size());
    Rational total = 0;
    Rational nonempty = 0;
    for (auto& atom : atoms) {
        if (sgn(atom.weight) < 0) {
            throw InvalidParamsError("atom '" + atom.label + "' has negative weight");
        }
        if (atom.occupied.universe_size() != cells) {
            throw InvalidParamsError("atom '" + atom.label +
                                     "' has an occupied set over the wrong universe");
        }
        if (atom.colours.empty()) {
            atom.colours.assign(static_cast<std::size_t>(cells), 0);
        }
        if (static_cast<int>(atom.colours.size()) != cells) {
            throw InvalidParamsError("atom '" + atom.label +
                                     "' does not colour every cell");
        }
        for (int c : atom.colours) {
            if (c < 0 || c >= colours) {
                throw InvalidParamsError("atom '" + atom.label +
                                         "' uses an undeclared colour");
            }
        }
        total += atom.weight;
        if (sgn(atom.weight) > 0) {
            if (!atom.occupied.empty()) nonempty += atom.weight;
            if (atom.label.empty()) {
                atom.label = "a" + std::to_string(kept.size());
            }
            kept.push_back(std::move(atom));
        }
    }
    if (total != 1) {
        throw InvalidParamsError("atom weights sum to " + total.get_str() +
                                 ", expected 1");
    }
    if (sgn(nonempty) == 0) {
        throw InvalidParamsError("P(X = empty) must be < 1");
    }
    std::unordered_set<std::string_view> seen;
    seen.reserve(kept.size());
    for (const auto& atom : kept) {
        if (!seen.insert(atom.label).second) {
            throw InvalidParamsError("duplicate atom label '" + atom.label + "'");
        }
    }

    data->cell_labels = std::move(cell_labels);
    data->colour_labels = std::move(colour_labels);
    data->atoms = std::move(kept);
    data->nonempty_prob = nonempty;
    data_ = std::move(data);
}

int ObjectiveSpace::find_cell(const std::string& label) const {
    const auto& labels = data_->cell_labels;
    auto it = std::find(labels.begin(), labels.end(), label);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

int ObjectiveSpace::find_colour(const std::string& label) const {
    const auto& labels = data_->colour_labels;
    auto it = std::find(labels.begin(), labels.end(), label);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

std::ptrdiff_t ObjectiveSpace::find_atom(const std::string& label) const {
    const auto& atoms = data_->atoms;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].label == label) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
}

std::string ExtendedSpace::atom_label(std::size_t extended_index) const {
    const auto& atom = base_.atom(objective_of(extended_index));
    int loc = location_of(extended_index);
    std::string where = loc == boundary_location() ? std::string("boundary")
                                                   : base_.cell_label(loc);
    return "(" + atom.label + ", " + where + ")";
}

ExtendedSpace extend(const ObjectiveSpace& space) { return ExtendedSpace(space); }

} // namespace aobs
