// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_ERRORS_HPP
#define AOBS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aobs {

/// Base class for all domain errors raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Conditioning event has probability zero.
class ConditionOnNullError : public Error {
public:
    using Error::Error;
};

/// The model admits no observers (E|X| = 0), so observer-weighted
/// measures are undefined.
class NoObserversError : public Error {
public:
    using Error::Error;
};

/// A restricted occupancy set is not contained in the original one on a
/// positive-weight atom.
class SubsetViolationError : public Error {
public:
    using Error::Error;
};

/// Colour value outside the declared alphabet.
class UnknownColourError : public Error {
public:
    using Error::Error;
};

/// Conditioning on a colour that is observed with probability zero.
class ColourNeverObservedError : public Error {
public:
    using Error::Error;
};

/// Scenario constructor parameters out of range.
class InvalidParamsError : public Error {
public:
    using Error::Error;
};

/// Exact enumeration would exceed the atom budget; use the Monte Carlo
/// path instead.
class SizeCapError : public Error {
public:
    using Error::Error;
};

/// PNFI constraints requested for a space without sequential structure.
class SequentialStructureError : public Error {
public:
    using Error::Error;
};

/// Monte Carlo ratio estimator saw zero total weight.
class ZeroDenominatorError : public Error {
public:
    using Error::Error;
};

/// Every Monte Carlo draw was rejected (no observers in any sample).
class AllRejectedError : public Error {
public:
    using Error::Error;
};

/// Two objects that must live on the same space do not.
class SpaceMismatchError : public Error {
public:
    using Error::Error;
};

/// An operation restricted to objective events received a non-objective one.
class NotObjectiveError : public Error {
public:
    using Error::Error;
};

/// Text input (event expression, rational literal, model file) failed to
/// parse; carries the offset of the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace aobs

#endif
