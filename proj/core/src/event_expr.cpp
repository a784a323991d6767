// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#include "aobs/event_expr.hpp"

#include <cctype>
#include <optional>

#include "aobs/errors.hpp"
#include "aobs/observation.hpp"

namespace aobs {

namespace {

bool is_word_char(char c) {
    return c != '(' && c != ')' && c != '&' && c != '|' && c != '!' &&
           !std::isspace(static_cast<unsigned char>(c));
}

class Parser {
public:
    Parser(const Model& model, const std::string& text)
        : model_(model), text_(text) {}

    Event parse() {
        Event out = parse_or();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing input", pos_);
        }
        return out;
    }

private:
    Event parse_or() {
        Event left = parse_and();
        while (peek() == '|') {
            ++pos_;
            left = left | parse_and();
        }
        return left;
    }

    Event parse_and() {
        Event left = parse_unary();
        while (peek() == '&') {
            ++pos_;
            left = left & parse_unary();
        }
        return left;
    }

    Event parse_unary() {
        skip_space();
        if (peek() == '!') {
            ++pos_;
            return ~parse_unary();
        }
        if (peek() == '(') {
            ++pos_;
            Event inner = parse_or();
            skip_space();
            if (peek() != ')') {
                throw ParseError("expected ')'", pos_);
            }
            ++pos_;
            return inner;
        }
        return parse_word();
    }

    Event parse_word() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_word_char(text_[pos_])) ++pos_;
        if (start == pos_) {
            throw ParseError("expected an event", start);
        }
        std::string word = text_.substr(start, pos_ - start);
        const auto& space = model_.space;

        if (word.rfind("S=", 0) == 0) {
            std::string label = word.substr(2);
            int cell = space.base().find_cell(label);
            if (cell >= 0) return Event::location_is(space, cell);
            if (label == "del") return Event::boundary(space);
            throw ParseError("unknown cell '" + label + "'", start);
        }
        if (word.rfind("X=", 0) == 0) {
            std::string digits = word.substr(2);
            if (digits.empty() ||
                digits.find_first_not_of("0123456789") != std::string::npos) {
                throw ParseError("X= needs a nonnegative integer", start);
            }
            return Event::occupancy_count(space, std::stoi(digits));
        }
        if (word.rfind("ZS=", 0) == 0) {
            std::string label = word.substr(3);
            int colour = space.base().find_colour(label);
            if (colour < 0) {
                throw ParseError("unknown colour '" + label + "'", start);
            }
            return colour_events(space, colour).observed;
        }
        if (word.rfind("A=", 0) == 0) {
            std::string label = word.substr(2);
            std::ptrdiff_t atom = space.base().find_atom(label);
            if (atom < 0) {
                throw ParseError("unknown atom '" + label + "'", start);
            }
            return Event::objective_atom(space, static_cast<std::size_t>(atom));
        }
        if (word == "Omega") return Event::all(space);
        if (word == "Empty") return Event::none(space);
        if (const Event* named = model_.find_event(word)) return *named;
        throw ParseError("unknown event '" + word + "'", start);
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    const Model& model_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

Event parse_event(const Model& model, const std::string& text) {
    return Parser(model, text).parse();
}

std::string event_to_expression(const Model& model, const Event& event) {
    const auto& space = model.space;
    if (event.is_empty()) return "Empty";
    if (event.member_count() == space.atom_count()) return "Omega";

    auto atoms_at = [&](int location, bool& all, bool& any) {
        std::string expr;
        all = true;
        any = false;
        for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
            if (event.contains(space.index_of(a, location))) {
                any = true;
                if (!expr.empty()) expr += " | ";
                expr += "A=" + space.base().atom(a).label;
            } else {
                all = false;
            }
        }
        return expr;
    };

    if (event.is_objective()) {
        bool all = false, any = false;
        return atoms_at(0, all, any);
    }

    std::string out;
    for (int loc = 0; loc < space.location_count(); ++loc) {
        bool all = false, any = false;
        std::string inner = atoms_at(loc, all, any);
        if (!any) continue;
        std::string where = loc == space.boundary_location()
                                ? std::string("S=del")
                                : "S=" + space.base().cell_label(loc);
        if (!out.empty()) out += " | ";
        if (all) {
            out += where;
        } else {
            out += "(" + where + " & (" + inner + "))";
        }
    }
    return out;
}

} // namespace aobs
