// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_MODEL_IO_HPP
#define AOBS_MODEL_IO_HPP

#include <string>

#include "aobs/scenarios.hpp"

namespace aobs {

/// Model file format: a JSON document with exact rationals as "p/q" strings.
///
///   {
///     "cells":   ["1", "2"],
///     "colours": ["R", "B"],                 // optional
///     "atoms":   [{ "label": "H",            // optional
///                   "weight": "1/2",
///                   "occupied": ["1"],
///                   "colours": {"1": "R", "2": "B"} }],  // optional
///     "events":  { "Heads": "A=H" }          // optional, expression strings
///   }
///
/// Event definitions are evaluated top to bottom and may reference earlier
/// names.
Model parse_model_text(const std::string& text);

Model load_model(const std::string& path);

std::string model_to_text(const Model& model);

void save_model(const Model& model, const std::string& path);

} // namespace aobs

#endif
