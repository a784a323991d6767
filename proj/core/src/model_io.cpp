// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#include "aobs/model_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "aobs/errors.hpp"
#include "aobs/event_expr.hpp"

namespace aobs {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) {
    throw ParseError("model file: " + what, 0);
}

} // namespace

Model parse_model_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("model file: ") + err.what(),
                         static_cast<std::size_t>(err.byte));
    }
    if (!doc.is_object()) fail("top level must be an object");
    if (!doc.contains("cells") || !doc["cells"].is_array()) {
        fail("'cells' must be a list of labels");
    }

    std::vector<std::string> cells;
    for (const auto& c : doc["cells"]) {
        if (!c.is_string()) fail("cell labels must be strings");
        cells.push_back(c.get<std::string>());
    }

    std::vector<std::string> colours;
    if (doc.contains("colours")) {
        for (const auto& c : doc["colours"]) {
            if (!c.is_string()) fail("colour labels must be strings");
            colours.push_back(c.get<std::string>());
        }
    }

    auto cell_index = [&](const std::string& label) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i] == label) return static_cast<int>(i);
        }
        fail("unknown cell '" + label + "'");
    };
    auto colour_index = [&](const std::string& label) {
        for (std::size_t i = 0; i < colours.size(); ++i) {
            if (colours[i] == label) return static_cast<int>(i);
        }
        fail("unknown colour '" + label + "'");
    };

    if (!doc.contains("atoms") || !doc["atoms"].is_array()) {
        fail("'atoms' must be a list");
    }
    std::vector<ObjectiveAtom> atoms;
    for (const auto& entry : doc["atoms"]) {
        if (!entry.is_object()) fail("each atom must be an object");
        ObjectiveAtom atom;
        if (entry.contains("label")) atom.label = entry["label"].get<std::string>();
        if (!entry.contains("weight") || !entry["weight"].is_string()) {
            fail("atom weights are \"p/q\" strings");
        }
        atom.weight = parse_rational(entry["weight"].get<std::string>());
        atom.occupied = CellSet::empty_set(static_cast<int>(cells.size()));
        if (entry.contains("occupied")) {
            for (const auto& c : entry["occupied"]) {
                atom.occupied = atom.occupied.with(cell_index(c.get<std::string>()));
            }
        }
        if (entry.contains("colours")) {
            if (colours.empty()) fail("atom colours given but no alphabet declared");
            atom.colours.assign(cells.size(), 0);
            for (const auto& [cell_label, colour_label] : entry["colours"].items()) {
                atom.colours[static_cast<std::size_t>(cell_index(cell_label))] =
                    colour_index(colour_label.get<std::string>());
            }
        }
        atoms.push_back(std::move(atom));
    }

    Model model{extend(ObjectiveSpace(std::move(cells), std::move(colours),
                                      std::move(atoms))),
                {}};

    if (doc.contains("events")) {
        if (!doc["events"].is_object()) fail("'events' must be an object");
        for (const auto& [name, expr] : doc["events"].items()) {
            if (!expr.is_string()) fail("event definitions are expression strings");
            Event event = parse_event(model, expr.get<std::string>());
            model.events.emplace_back(name, std::move(event));
        }
    }
    return model;
}

Model load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidParamsError("cannot open model file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model_text(buffer.str());
}

std::string model_to_text(const Model& model) {
    const auto& base = model.space.base();
    ordered_json doc;
    doc["cells"] = base.cell_labels();
    doc["colours"] = base.colour_labels();

    ordered_json atoms = ordered_json::array();
    for (const auto& atom : base.atoms()) {
        ordered_json entry;
        entry["label"] = atom.label;
        entry["weight"] = to_string(atom.weight);
        ordered_json occupied = ordered_json::array();
        atom.occupied.for_each(
            [&](int cell) { occupied.push_back(base.cell_label(cell)); });
        entry["occupied"] = std::move(occupied);
        ordered_json colour_map;
        for (int cell = 0; cell < base.cell_count(); ++cell) {
            colour_map[base.cell_label(cell)] =
                base.colour_label(atom.colours[static_cast<std::size_t>(cell)]);
        }
        entry["colours"] = std::move(colour_map);
        atoms.push_back(std::move(entry));
    }
    doc["atoms"] = std::move(atoms);

    ordered_json events;
    for (const auto& [name, event] : model.events) {
        events[name] = event_to_expression(model, event);
    }
    doc["events"] = std::move(events);
    return doc.dump(2) + "\n";
}

void save_model(const Model& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidParamsError("cannot write model file '" + path + "'");
    }
    out << model_to_text(model);
}

} // namespace aobs
