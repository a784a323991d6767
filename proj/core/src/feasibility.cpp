// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact feasibility over the measure simplex. The pipeline:
//
//   1. compile() turns each principle into affine equalities with cleared
//      denominators. Every cleared row comes from an identity
//      m(A and C) * d = r * m(C) with A a subset of C, so the row is
//      vacuous exactly when m(C) = 0 -- the case the principle does not
//      constrain -- and the compiled polytope equals the principle set.
//   2. solve() fixes variables pinned by singleton rows, runs exact
//      Gauss-Jordan on the rest, then handles nonnegativity with an exact
//      rational simplex (Bland's rule) over the free parameters: first a
//      feasibility point, then repeated support maximization to reach a
//      relative-interior point and certify which variables vanish on the
//      whole polytope. The affine hull of the polytope is the equality
//      system plus those forced zeros.
//   3. Because every polytope here is its affine hull intersected with the
//      nonnegative orthant, containment and equality of polytopes reduce
//      to containment of affine hulls, which is a finite exact check.

#include "aobs/feasibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "aobs/errors.hpp"
#include "aobs/measures.hpp"
#include "aobs/occupancy.hpp"
#include "aobs/scenarios.hpp"

namespace aobs {

void ConstraintSystem::add_row(std::vector<Rational> coeff, Rational rhs,
                               std::string tag) {
    if (coeff.size() != variable_count()) {
        throw SpaceMismatchError("constraint width does not match the space");
    }
    rows_.push_back({std::move(coeff), std::move(rhs), std::move(tag)});
}

namespace {

std::vector<Rational> zero_row(std::size_t n) {
    return std::vector<Rational>(n, Rational(0));
}

void compile_pn(const ExtendedSpace& space, ConstraintSystem& cs) {
    for (std::size_t i = 0; i < space.atom_count(); ++i) {
        if (space.location_occupied(i)) continue;
        auto row = zero_row(space.atom_count());
        row[i] = 1;
        cs.add_row(std::move(row), Rational(0), "PN " + space.atom_label(i));
    }
}

void compile_pi(const ExtendedSpace& space, ConstraintSystem& cs) {
    std::map<CellSet, std::vector<std::size_t>> groups;
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        groups[space.base().atom(a).occupied].push_back(a);
    }
    const int cells = space.base().cell_count();
    for (const auto& [value, members] : groups) {
        if (value.empty()) continue;
        Rational size(value.count());
        for (int cell = 0; cell < cells; ++cell) {
            // |B| * m(S=cell, X=B) = 1{cell in B} * m(X=B)
            auto row = zero_row(space.atom_count());
            for (std::size_t a : members) {
                row[space.index_of(a, cell)] += size;
                if (value.contains(cell)) {
                    for (int loc = 0; loc < space.location_count(); ++loc) {
                        row[space.index_of(a, loc)] -= 1;
                    }
                }
            }
            cs.add_row(std::move(row), Rational(0),
                       "PI cell " + space.base().cell_label(cell));
        }
    }
}

void compile_pi_strong(const ExtendedSpace& space, ConstraintSystem& cs) {
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        const auto& atom = space.base().atom(a);
        if (atom.occupied.empty()) continue;
        Rational size(atom.occupied.count());
        atom.occupied.for_each([&](int cell) {
            // |B| * m(atom, cell) = m(atom)
            auto row = zero_row(space.atom_count());
            row[space.index_of(a, cell)] += size;
            for (int loc = 0; loc < space.location_count(); ++loc) {
                row[space.index_of(a, loc)] -= 1;
            }
            cs.add_row(std::move(row), Rational(0), "PIst " + atom.label);
        });
    }
}

void compile_pei(const ExtendedSpace& space, ConstraintSystem& cs) {
    OccupancyStats stats = occupancy_stats(space.base());
    for (int cell = 0; cell < space.base().cell_count(); ++cell) {
        const Rational& q = stats.cell_prob[static_cast<std::size_t>(cell)];
        if (sgn(q) == 0) {
            // P(. | cell in X) is undefined, so the principle forbids any
            // mass at this location.
            auto row = zero_row(space.atom_count());
            for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
                row[space.index_of(a, cell)] = 1;
            }
            cs.add_row(std::move(row), Rational(0),
                       "PEI null cell " + space.base().cell_label(cell));
            continue;
        }
        for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
            const auto& atom = space.base().atom(a);
            // Q_x * m(atom, cell) = P(atom, cell in X) * m(S=cell)
            auto row = zero_row(space.atom_count());
            row[space.index_of(a, cell)] += q;
            if (atom.occupied.contains(cell)) {
                for (std::size_t o = 0; o < space.base().atom_count(); ++o) {
                    row[space.index_of(o, cell)] -= atom.weight;
                }
            }
            cs.add_row(std::move(row), Rational(0),
                       "PEI " + atom.label + " at " + space.base().cell_label(cell));
        }
    }
}

void compile_pp(const ExtendedSpace& space, ConstraintSystem& cs) {
    const Rational& nonempty = space.base().occupied_nonempty_prob();
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        const auto& atom = space.base().atom(a);
        auto row = zero_row(space.atom_count());
        for (int loc = 0; loc < space.location_count(); ++loc) {
            row[space.index_of(a, loc)] = 1;
        }
        Rational rhs = atom.occupied.empty() ? Rational(0) : atom.weight / nonempty;
        cs.add_row(std::move(row), std::move(rhs), "PP " + atom.label);
    }
}

void compile_pnfi(const SequentialModel& seq, ConstraintSystem& cs) {
    const auto& space = seq.space();
    for (int day = 1; day <= seq.horizon(); ++day) {
        const int cell = day - 1;
        for (const auto& tail : seq.tail_patterns(day)) {
            Event g = seq.tail_event(day, tail);
            Rational prob = seq.tail_probability(day, tail);
            // m(G, S=day) = P(G) * m(S=day)
            auto row = zero_row(space.atom_count());
            for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
                Rational coeff = -prob;
                if (g.contains(space.index_of(a, 0))) coeff += 1;
                row[space.index_of(a, cell)] = std::move(coeff);
            }
            cs.add_row(std::move(row), Rational(0),
                       "PNFI day " + std::to_string(day));
        }
    }
}

// ---------------------------------------------------------------------------
// Exact linear algebra helpers.

struct Rref {
    bool consistent = true;
    std::vector<int> pivot_col_of_row;       // per kept row
    std::vector<std::ptrdiff_t> row_of_col;  // -1 if free
    std::vector<std::vector<Rational>> rows; // reduced [coeff | rhs]
};

/// Reduced row echelon form of [A | b]; columns 0..n-1 are variables.
Rref rref(std::vector<std::vector<Rational>> rows, std::size_t n) {
    Rref out;
    out.row_of_col.assign(n, -1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (sgn(rows[i][col]) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Rational inv = Rational(1) / rows[r][col];
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][col]) == 0) continue;
            Rational factor = rows[i][col];
            for (std::size_t j = col; j <= n; ++j) {
                rows[i][j] -= factor * rows[r][j];
            }
        }
        out.pivot_col_of_row.push_back(static_cast<int>(col));
        out.row_of_col[col] = static_cast<std::ptrdiff_t>(r);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][n]) != 0) {
            out.consistent = false;
            break;
        }
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

/// Particular solution (free variables at zero).
std::vector<Rational> particular_solution(const Rref& r, std::size_t n) {
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        x[static_cast<std::size_t>(r.pivot_col_of_row[i])] = r.rows[i][n];
    }
    return x;
}

/// Nullspace basis, one vector per free column.
std::vector<std::vector<Rational>> nullspace_basis(const Rref& r, std::size_t n) {
    std::vector<std::vector<Rational>> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (r.row_of_col[col] >= 0) continue;
        std::vector<Rational> v(n, Rational(0));
        v[col] = 1;
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            v[static_cast<std::size_t>(r.pivot_col_of_row[i])] = -r.rows[i][col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Exact primal simplex (Bland's rule), used on the small reduced problems.
// Minimizes cost . u subject to A u = b, u >= 0.

struct LpResult {
    bool feasible = false;
    Rational value;
    std::vector<Rational> point;
};

class ExactSimplex {
public:
    ExactSimplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
        : a_(std::move(a)), b_(std::move(b)) {
        m_ = a_.size();
        n_ = m_ == 0 ? 0 : a_[0].size();
    }

    LpResult minimize(const std::vector<Rational>& cost) {
        build_tableau();
        // Phase 1: minimize the sum of the artificial variables.
        std::vector<Rational> phase1(n_ + m_, Rational(0));
        for (std::size_t j = n_; j < n_ + m_; ++j) phase1[j] = 1;
        install_cost(phase1, n_ + m_);
        run();
        LpResult out;
        if (sgn(objective()) != 0) return out; // artificial residue: infeasible
        drop_artificials();

        std::vector<Rational> full_cost = cost;
        full_cost.resize(n_ + m_, Rational(0));
        install_cost(full_cost, n_);
        run();

        out.feasible = true;
        out.value = objective();
        out.point.assign(n_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] < n_) out.point[basis_[i]] = rows_[i].back();
        }
        return out;
    }

private:
    void build_tableau() {
        rows_.clear();
        basis_.clear();
        for (std::size_t i = 0; i < m_; ++i) {
            std::vector<Rational> row(n_ + m_ + 1, Rational(0));
            int flip = sgn(b_[i]) < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) row[j] = Rational(flip) * a_[i][j];
            row[n_ + i] = 1;
            row[n_ + m_] = Rational(flip) * b_[i];
            rows_.push_back(std::move(row));
            basis_.push_back(n_ + i);
        }
    }

    void install_cost(const std::vector<Rational>& cost, std::size_t allowed) {
        allowed_ = allowed;
        cost_.assign(cost.begin(), cost.end());
        cost_.push_back(Rational(0)); // objective slot, negated value
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& c = cost[basis_[i]];
            if (sgn(c) == 0) continue;
            for (std::size_t j = 0; j <= n_ + m_; ++j) cost_[j] -= c * rows_[i][j];
        }
    }

    Rational objective() const { return -cost_.back(); }

    void run() {
        const std::size_t width = n_ + m_;
        while (true) {
            // Bland: entering column is the lowest-index negative reduced cost.
            std::size_t enter = width;
            for (std::size_t j = 0; j < allowed_; ++j) {
                if (sgn(cost_[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == width) return; // optimal

            // Ratio test; ties broken by the lowest basis index (Bland).
            std::size_t leave = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (sgn(rows_[i][enter]) <= 0) continue;
                Rational ratio = rows_[i].back() / rows_[i][enter];
                if (leave == rows_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_.size()) {
                // Every objective handed to this solver is bounded over the
                // simplex; an unbounded ray signals a compile bug.
                throw std::logic_error("exact LP: unbounded objective");
            }
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        Rational inv = Rational(1) / rows_[row][col];
        for (auto& v : rows_[row]) v *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row) continue;
            eliminate(rows_[i], rows_[row], col);
        }
        eliminate(cost_, rows_[row], col);
        basis_[row] = col;
    }

    static void eliminate(std::vector<Rational>& target,
                          const std::vector<Rational>& source, std::size_t col) {
        if (sgn(target[col]) == 0) return;
        Rational factor = target[col];
        for (std::size_t j = 0; j < target.size(); ++j) {
            target[j] -= factor * source[j];
        }
    }

    void drop_artificials() {
        // Pivot basic artificials out on any structural column; rows with
        // no structural entry are redundant and removed.
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(rows_[i][j]) != 0) {
                    col = j;
                    break;
                }
            }
            if (col == n_) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                pivot(i, col);
                ++i;
            }
        }
    }

    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
    std::size_t m_ = 0, n_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> cost_;
    std::size_t allowed_ = 0;
};

// ---------------------------------------------------------------------------

/// All equality rows of the system, normalization included.
std::vector<std::vector<Rational>> system_rows(const ConstraintSystem& cs) {
    const std::size_t n = cs.variable_count();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(cs.rows().size() + 1);
    for (const auto& r : cs.rows()) {
        std::vector<Rational> row = r.coeff;
        row.push_back(r.rhs);
        rows.push_back(std::move(row));
    }
    std::vector<Rational> norm(n + 1, Rational(1));
    rows.push_back(std::move(norm));
    return rows;
}

struct Substitution {
    bool consistent = true;
    std::vector<bool> fixed;
    std::vector<Rational> value;               // value of fixed variables
    std::vector<std::size_t> free_vars;        // original indices
    std::vector<std::vector<Rational>> rows;   // over free vars, [coeff | rhs]
};

/// Repeatedly fixes variables pinned by single-variable rows and removes
/// trivial rows. Cuts the PN zeros out before the dense elimination.
Substitution presubstitute(std::vector<std::vector<Rational>> rows, std::size_t n) {
    Substitution out;
    out.fixed.assign(n, false);
    out.value.assign(n, Rational(0));

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = rows.begin(); it != rows.end();) {
            auto& row = *it;
            std::size_t nonzero = 0, var = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(row[j]) != 0) {
                    ++nonzero;
                    var = j;
                    if (nonzero > 1) break;
                }
            }
            if (nonzero == 0) {
                if (sgn(row[n]) != 0) {
                    out.consistent = false;
                    return out;
                }
                it = rows.erase(it);
                continue;
            }
            if (nonzero == 1) {
                Rational value = row[n] / row[var];
                out.fixed[var] = true;
                out.value[var] = value;
                for (auto& other : rows) {
                    if (&other == &row || sgn(other[var]) == 0) continue;
                    other[n] -= other[var] * value;
                    other[var] = 0;
                }
                it = rows.erase(it);
                changed = true;
                continue;
            }
            ++it;
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        if (!out.fixed[j]) out.free_vars.push_back(j);
    }
    for (auto& row : rows) {
        std::vector<Rational> packed;
        packed.reserve(out.free_vars.size() + 1);
        for (std::size_t j : out.free_vars) packed.push_back(std::move(row[j]));
        packed.push_back(std::move(row[n]));
        out.rows.push_back(std::move(packed));
    }
    return out;
}

struct HullDescription {
    bool empty = true;
    std::vector<Rational> point;               // a relative-interior point
    std::vector<std::vector<Rational>> basis;  // affine-hull directions
    std::vector<std::size_t> forced_zero;      // vanish on the whole polytope
};

HullDescription solve_hull(const ConstraintSystem& cs) {
    HullDescription hull;
    const std::size_t n = cs.variable_count();

    Substitution sub = presubstitute(system_rows(cs), n);
    if (!sub.consistent) return hull;
    for (std::size_t j = 0; j < n; ++j) {
        if (sub.fixed[j] && sgn(sub.value[j]) < 0) return hull;
    }

    const std::size_t nr = sub.free_vars.size();
    Rref reduced = rref(sub.rows, nr);
    if (!reduced.consistent) return hull;

    std::vector<Rational> part = particular_solution(reduced, nr);
    std::vector<std::vector<Rational>> dirs = nullspace_basis(reduced, nr);
    const std::size_t k = dirs.size();

    std::vector<Rational> interior; // over free vars
    if (k == 0) {
        for (const auto& v : part) {
            if (sgn(v) < 0) return hull;
        }
        interior = std::move(part);
    } else {
        // Feasibility and support maximization over the free parameters t:
        // x = part + dirs^T t must stay nonnegative. Rows whose direction
        // entries all vanish are constants.
        std::vector<std::size_t> lp_rows;
        for (std::size_t i = 0; i < nr; ++i) {
            bool constant = true;
            for (const auto& d : dirs) {
                if (sgn(d[i]) != 0) {
                    constant = false;
                    break;
                }
            }
            if (constant) {
                if (sgn(part[i]) < 0) return hull;
            } else {
                lp_rows.push_back(i);
            }
        }

        // Standard form over u = (t+, t-, surplus).
        const std::size_t m = lp_rows.size();
        const std::size_t vars = 2 * k + m;
        std::vector<std::vector<Rational>> a(m, std::vector<Rational>(vars, Rational(0)));
        std::vector<Rational> b(m);
        for (std::size_t r = 0; r < m; ++r) {
            std::size_t i = lp_rows[r];
            for (std::size_t j = 0; j < k; ++j) {
                a[r][j] = dirs[j][i];
                a[r][k + j] = -dirs[j][i];
            }
            a[r][2 * k + r] = -1;
            b[r] = -part[i];
        }

        auto point_at = [&](const std::vector<Rational>& u) {
            std::vector<Rational> x = part;
            for (std::size_t j = 0; j < k; ++j) {
                Rational t = u[j] - u[k + j];
                if (sgn(t) == 0) continue;
                for (std::size_t i = 0; i < nr; ++i) x[i] += t * dirs[j][i];
            }
            return x;
        };

        ExactSimplex feas(a, b);
        LpResult first = feas.minimize(std::vector<Rational>(vars, Rational(0)));
        if (!first.feasible) return hull;
        interior = point_at(first.point);

        // Grow the support until the remaining zeros are certified to be
        // implicit equalities (their maximum over the polytope is zero).
        while (true) {
            std::vector<std::size_t> zeros;
            for (std::size_t i = 0; i < nr; ++i) {
                if (sgn(interior[i]) == 0) zeros.push_back(i);
            }
            if (zeros.empty()) break;
            std::vector<Rational> cost(vars, Rational(0));
            Rational base = 0;
            for (std::size_t i : zeros) {
                base += part[i];
                for (std::size_t j = 0; j < k; ++j) {
                    cost[j] -= dirs[j][i];
                    cost[k + j] += dirs[j][i];
                }
            }
            ExactSimplex grow(a, b);
            LpResult res = grow.minimize(cost);
            if (!res.feasible) {
                throw std::logic_error("exact LP: feasible system became infeasible");
            }
            Rational best = base - res.value; // maximum of the zero-sum
            if (sgn(best) == 0) break;
            std::vector<Rational> other = point_at(res.point);
            for (std::size_t i = 0; i < nr; ++i) {
                interior[i] = (interior[i] + other[i]) / 2;
            }
        }
    }

    // Assemble the affine hull: original equalities plus every variable that
    // vanishes identically on the polytope.
    hull.empty = false;
    hull.point.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        if (sub.fixed[j]) hull.point[j] = sub.value[j];
    }
    for (std::size_t i = 0; i < nr; ++i) hull.point[sub.free_vars[i]] = interior[i];
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(hull.point[j]) == 0) hull.forced_zero.push_back(j);
    }

    auto hull_rows = system_rows(cs);
    for (std::size_t j : hull.forced_zero) {
        std::vector<Rational> row(n + 1, Rational(0));
        row[j] = 1;
        hull_rows.push_back(std::move(row));
    }
    Substitution hsub = presubstitute(std::move(hull_rows), n);
    Rref hred = rref(hsub.rows, hsub.free_vars.size());
    if (!hsub.consistent || !hred.consistent) {
        throw std::logic_error("affine hull of a nonempty polytope is inconsistent");
    }
    for (const auto& dir : nullspace_basis(hred, hsub.free_vars.size())) {
        std::vector<Rational> full(n, Rational(0));
        for (std::size_t i = 0; i < hsub.free_vars.size(); ++i) {
            full[hsub.free_vars[i]] = dir[i];
        }
        hull.basis.push_back(std::move(full));
    }
    return hull;
}

/// hull(inner) contained in hull(outer): the inner point satisfies every
/// defining equality of the outer hull and every inner direction is
/// annihilated by them.
bool hull_contained(const HullDescription& inner, const ConstraintSystem& outer_cs,
                    const HullDescription& outer) {
    const std::size_t n = outer_cs.variable_count();
    std::vector<std::vector<Rational>> rows = system_rows(outer_cs);
    for (std::size_t j : outer.forced_zero) {
        std::vector<Rational> row(n + 1, Rational(0));
        row[j] = 1;
        rows.push_back(std::move(row));
    }
    for (const auto& row : rows) {
        Rational at_point = 0;
        for (std::size_t j = 0; j < n; ++j) at_point += row[j] * inner.point[j];
        if (at_point != row[n]) return false;
        for (const auto& dir : inner.basis) {
            Rational along = 0;
            for (std::size_t j = 0; j < n; ++j) along += row[j] * dir[j];
            if (sgn(along) != 0) return false;
        }
    }
    return true;
}

} // namespace

ConstraintSystem compile(const ExtendedSpace& space,
                         const std::set<Principle>& principles,
                         const SequentialModel* seq) {
    if (principles.count(Principle::PNFI) != 0) {
        if (seq == nullptr) {
            throw SequentialStructureError(
                "PNFI requested for a space without sequential structure");
        }
        if (!seq->space().same_space(space)) {
            throw SpaceMismatchError(
                "sequential structure belongs to a different space");
        }
    }
    ConstraintSystem cs(space);
    for (Principle p : principles) {
        switch (p) {
        case Principle::PN: compile_pn(space, cs); break;
        case Principle::PI: compile_pi(space, cs); break;
        case Principle::PIst: compile_pi_strong(space, cs); break;
        case Principle::PEI: compile_pei(space, cs); break;
        case Principle::PP: compile_pp(space, cs); break;
        case Principle::PNFI: compile_pnfi(*seq, cs); break;
        }
    }
    return cs;
}

SolveResult solve(const ConstraintSystem& system) {
    SolveResult out;
    HullDescription hull = solve_hull(system);
    if (hull.empty) {
        out.status = SolveStatus::infeasible;
        return out;
    }
    out.dimension = static_cast<int>(hull.basis.size());
    out.status = out.dimension == 0 ? SolveStatus::unique : SolveStatus::affine;
    out.witness = Measure(system.space(), hull.point);
    out.basis = std::move(hull.basis);
    out.forced_zero = std::move(hull.forced_zero);
    return out;
}

bool satisfies(const ConstraintSystem& system, const Measure& m) {
    if (!system.space().same_space(m.space())) {
        throw SpaceMismatchError("measure and system belong to different spaces");
    }
    for (const auto& row : system.rows()) {
        Rational sum = 0;
        for (std::size_t j = 0; j < row.coeff.size(); ++j) {
            sum += row.coeff[j] * m.weight(j);
        }
        if (sum != row.rhs) return false;
    }
    return true;
}

bool polytope_contains(const ConstraintSystem& outer, const ConstraintSystem& inner) {
    if (!outer.space().same_space(inner.space())) {
        throw SpaceMismatchError("systems live on different spaces");
    }
    HullDescription inner_hull = solve_hull(inner);
    if (inner_hull.empty) return true;
    HullDescription outer_hull = solve_hull(outer);
    if (outer_hull.empty) return false;
    return hull_contained(inner_hull, outer, outer_hull);
}

bool same_solution_polytope(const ConstraintSystem& a, const ConstraintSystem& b) {
    if (!a.space().same_space(b.space())) {
        throw SpaceMismatchError("systems live on different spaces");
    }
    HullDescription ha = solve_hull(a);
    HullDescription hb = solve_hull(b);
    if (ha.empty || hb.empty) return ha.empty == hb.empty;
    return hull_contained(ha, b, hb) && hull_contained(hb, a, ha);
}

} // namespace aobs
