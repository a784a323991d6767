// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_EVENT_EXPR_HPP
#define AOBS_EVENT_EXPR_HPP

#include <string>

#include "aobs/event.hpp"
#include "aobs/scenarios.hpp"

namespace aobs {

/// Event expression language over a model's named events:
///
///   expr  := or ; or := and ('|' and)* ; and := unary ('&' unary)*
///   unary := '!' unary | '(' expr ')' | primitive | NAME
///
/// Primitives: `S=<cell>` (observer location; `S=del` is the boundary),
/// `X=<k>` (observer count), `ZS=<colour>` (observed colour), `A=<atom>`
/// (objective atom indicator). `Omega` and `Empty` are always defined.
/// Throws ParseError with the offending position.
Event parse_event(const Model& model, const std::string& text);

/// An expression that parses back to exactly this event; objective events
/// come out as plain atom disjunctions.
std::string event_to_expression(const Model& model, const Event& event);

} // namespace aobs

#endif
