// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_CELLSET_HPP
#define AOBS_CELLSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "aobs/errors.hpp"

namespace aobs {

/// Subset of the cell universe K, stored as a bitmask over cell indices
/// 0..M-1. The universe size travels with the set so that arguments from
/// different universes cannot be mixed silently.
class CellSet {
public:
    static constexpr int max_cells = 64;

    CellSet() = default;

    CellSet(std::uint64_t bits, int universe_size)
        : bits_(bits), universe_(universe_size) {
        if (universe_size < 0 || universe_size > max_cells) {
            throw InvalidParamsError("cell universe size out of range");
        }
        if (universe_size < max_cells && (bits >> universe_size) != 0) {
            throw InvalidParamsError("cell set has bits outside its universe");
        }
    }

    static CellSet empty_set(int universe_size) { return CellSet(0, universe_size); }

    static CellSet full_set(int universe_size) {
        std::uint64_t bits = universe_size == max_cells
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << universe_size) - 1;
        return CellSet(bits, universe_size);
    }

    static CellSet single(int cell, int universe_size) {
        return CellSet(std::uint64_t{1} << cell, universe_size);
    }

    /// Cells [first, last) of the universe.
    static CellSet range(int first, int last, int universe_size) {
        CellSet out = empty_set(universe_size);
        for (int c = first; c < last; ++c) out = out.with(c);
        return out;
    }

    int universe_size() const { return universe_; }
    std::uint64_t bits() const { return bits_; }

    bool contains(int cell) const {
        return cell >= 0 && cell < universe_ && ((bits_ >> cell) & 1u) != 0;
    }

    CellSet with(int cell) const {
        check_cell(cell);
        return CellSet(bits_ | (std::uint64_t{1} << cell), universe_);
    }

    CellSet without(int cell) const {
        check_cell(cell);
        return CellSet(bits_ & ~(std::uint64_t{1} << cell), universe_);
    }

    int count() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    bool subset_of(const CellSet& other) const {
        check_universe(other);
        return (bits_ & ~other.bits_) == 0;
    }

    CellSet intersect(const CellSet& other) const {
        check_universe(other);
        return CellSet(bits_ & other.bits_, universe_);
    }

    CellSet unite(const CellSet& other) const {
        check_universe(other);
        return CellSet(bits_ | other.bits_, universe_);
    }

    /// Iterates member cells in increasing index order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        std::uint64_t rest = bits_;
        while (rest != 0) {
            int cell = std::countr_zero(rest);
            fn(cell);
            rest &= rest - 1;
        }
    }

    std::vector<int> cells() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int c) { out.push_back(c); });
        return out;
    }

    std::string to_string(const std::vector<std::string>& labels) const {
        std::string out = "{";
        bool first = true;
        for_each([&](int c) {
            if (!first) out += ",";
            out += labels[static_cast<std::size_t>(c)];
            first = false;
        });
        out += "}";
        return out;
    }

    friend bool operator==(const CellSet& a, const CellSet& b) {
        return a.bits_ == b.bits_ && a.universe_ == b.universe_;
    }
    friend bool operator!=(const CellSet& a, const CellSet& b) { return !(a == b); }
    friend bool operator<(const CellSet& a, const CellSet& b) {
        return a.bits_ < b.bits_;
    }

private:
    void check_cell(int cell) const {
        if (cell < 0 || cell >= universe_) {
            throw InvalidParamsError("cell index outside the universe");
        }
    }
    void check_universe(const CellSet& other) const {
        if (universe_ != other.universe_) {
            throw SpaceMismatchError("cell sets belong to different universes");
        }
    }

    std::uint64_t bits_ = 0;
    int universe_ = 0;
};

} // namespace aobs

#endif
