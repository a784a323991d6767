// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0
//
// All checks quantify over atom-level events. For PEI, PP and the
// strengthened PI this is sufficient: both sides of each identity are
// finitely additive in the objective event, so atom indicators determine
// the statement for every objective event.

#include "aobs/principles.hpp"

#include <map>

#include "aobs/errors.hpp"
#include "aobs/feasibility.hpp"
#include "aobs/measures.hpp"
#include "aobs/occupancy.hpp"
#include "aobs/scenarios.hpp"

namespace aobs {

std::string principle_name(Principle p) {
    switch (p) {
    case Principle::PN: return "PN";
    case Principle::PI: return "PI";
    case Principle::PIst: return "PIst";
    case Principle::PEI: return "PEI";
    case Principle::PP: return "PP";
    case Principle::PNFI: return "PNFI";
    }
    return "?";
}

std::optional<Principle> principle_from_name(const std::string& name) {
    if (name == "PN") return Principle::PN;
    if (name == "PI") return Principle::PI;
    if (name == "PIst" || name == "PIST") return Principle::PIst;
    if (name == "PEI") return Principle::PEI;
    if (name == "PP") return Principle::PP;
    if (name == "PNFI") return Principle::PNFI;
    return std::nullopt;
}

namespace {

struct ReportBuilder {
    PrincipleReport report;
    std::size_t cap;

    ReportBuilder(Principle p, std::size_t violation_cap) : cap(violation_cap) {
        report.principle = p;
    }

    void violation(std::string witness, Rational lhs, Rational rhs) {
        report.holds = false;
        if (report.violations.size() < cap) {
            report.violations.push_back({std::move(witness), std::move(lhs), std::move(rhs)});
        } else {
            report.truncated = true;
        }
    }
};

/// m(S = cell), over all objective atoms.
Rational location_mass(const Measure& m, int cell) {
    const auto& space = m.space();
    Rational sum = 0;
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        sum += m.weight(space.index_of(a, cell));
    }
    return sum;
}

/// Total mass of one objective atom under m.
Rational atom_mass(const Measure& m, std::size_t atom) {
    const auto& space = m.space();
    Rational sum = 0;
    for (int loc = 0; loc < space.location_count(); ++loc) {
        sum += m.weight(space.index_of(atom, loc));
    }
    return sum;
}

} // namespace

PrincipleReport check_pn(const Measure& m, std::size_t violation_cap) {
    // Null objective atoms are pruned at construction, so part (a) of the
    // principle reduces to the empty event; part (b) is the atomwise
    // statement that mass sits only on pairs whose location is occupied.
    ReportBuilder builder(Principle::PN, violation_cap);
    const auto& space = m.space();
    for (std::size_t i = 0; i < space.atom_count(); ++i) {
        if (!space.location_occupied(i) && sgn(m.weight(i)) > 0) {
            builder.violation(space.atom_label(i) + ": mass on an unoccupied location",
                              m.weight(i), Rational(0));
        }
    }
    return builder.report;
}

PrincipleReport check_pi(const Measure& m, std::size_t violation_cap) {
    ReportBuilder builder(Principle::PI, violation_cap);
    const auto& space = m.space();
    const int cells = space.base().cell_count();

    // Group atoms by occupied set; only sets realized by some atom matter.
    std::map<CellSet, std::vector<std::size_t>> groups;
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        groups[space.base().atom(a).occupied].push_back(a);
    }

    for (const auto& [value, members] : groups) {
        if (value.empty()) continue;
        Rational group_mass = 0;
        for (std::size_t a : members) group_mass += atom_mass(m, a);
        if (sgn(group_mass) == 0) continue;

        Rational uniform = Rational(1) / Rational(value.count());
        for (int cell = 0; cell < cells; ++cell) {
            Rational here = 0;
            for (std::size_t a : members) here += m.weight(space.index_of(a, cell));
            Rational lhs = here / group_mass;
            Rational rhs = value.contains(cell) ? uniform : Rational(0);
            if (lhs != rhs) {
                builder.violation("m(S=" + space.base().cell_label(cell) +
                                      " | X=" + value.to_string(space.base().cell_labels()) + ")",
                                  lhs, rhs);
            }
        }
    }
    return builder.report;
}

PrincipleReport check_pi_strong(const Measure& m, std::size_t violation_cap) {
    // Refining by objective atoms: within each positive-mass atom the
    // location must be uniform on its occupied set.
    ReportBuilder builder(Principle::PIst, violation_cap);
    const auto& space = m.space();
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        const auto& atom = space.base().atom(a);
        if (atom.occupied.empty()) continue;
        Rational mass = atom_mass(m, a);
        if (sgn(mass) == 0) continue;
        Rational uniform = Rational(1) / Rational(atom.occupied.count());
        atom.occupied.for_each([&](int cell) {
            Rational lhs = m.weight(space.index_of(a, cell)) / mass;
            if (lhs != uniform) {
                builder.violation("m(S=" + space.base().cell_label(cell) + " | " +
                                      atom.label + ")",
                                  lhs, uniform);
            }
        });
    }
    return builder.report;
}

PrincipleReport check_pei(const Measure& m, std::size_t violation_cap) {
    ReportBuilder builder(Principle::PEI, violation_cap);
    const auto& space = m.space();
    OccupancyStats stats = occupancy_stats(space.base());

    for (int cell = 0; cell < space.base().cell_count(); ++cell) {
        Rational mass = location_mass(m, cell);
        if (sgn(mass) == 0) continue;
        const Rational& q = stats.cell_prob[static_cast<std::size_t>(cell)];
        if (sgn(q) == 0) {
            // The objective side P(. | cell in X) is undefined; such a
            // measure already puts mass where PN forbids it.
            builder.violation("m(S=" + space.base().cell_label(cell) +
                                  ") > 0 but P(cell in X) = 0",
                              mass, Rational(0));
            continue;
        }
        for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
            const auto& atom = space.base().atom(a);
            Rational lhs = m.weight(space.index_of(a, cell)) / mass;
            Rational rhs = atom.occupied.contains(cell) ? atom.weight / q : Rational(0);
            if (lhs != rhs) {
                builder.violation("m(" + atom.label + " | S=" +
                                      space.base().cell_label(cell) + ")",
                                  lhs, rhs);
            }
        }
    }
    return builder.report;
}

PrincipleReport check_pp(const Measure& m, std::size_t violation_cap) {
    ReportBuilder builder(Principle::PP, violation_cap);
    const auto& space = m.space();
    const Rational& nonempty = space.base().occupied_nonempty_prob();
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        const auto& atom = space.base().atom(a);
        Rational lhs = atom_mass(m, a);
        Rational rhs =
            atom.occupied.empty() ? Rational(0) : atom.weight / nonempty;
        if (lhs != rhs) {
            builder.violation("m(" + atom.label + ")", lhs, rhs);
        }
    }
    return builder.report;
}

PrincipleReport check_pnfi(const Measure& m, const SequentialModel& seq,
                           std::size_t violation_cap) {
    ReportBuilder builder(Principle::PNFI, violation_cap);
    const auto& space = seq.space();
    if (!m.space().same_space(space)) {
        throw SpaceMismatchError("measure is not defined on the sequential model's space");
    }
    for (int day = 1; day <= seq.horizon(); ++day) {
        int cell = day - 1;
        Rational mass = location_mass(m, cell);
        if (sgn(mass) == 0) continue; // vacuous day
        for (const auto& tail : seq.tail_patterns(day)) {
            Event g = seq.tail_event(day, tail);
            Rational lhs = 0;
            for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
                if (g.contains(space.index_of(a, 0))) {
                    lhs += m.weight(space.index_of(a, cell));
                }
            }
            lhs /= mass;
            Rational rhs = seq.tail_probability(day, tail);
            if (lhs != rhs) {
                std::string w = "m(V" + std::to_string(day) + "..,U pattern | S=" +
                                space.base().cell_label(cell) + ")";
                builder.violation(std::move(w), lhs, rhs);
            }
        }
    }
    return builder.report;
}

PrincipleReport check_principle(const Measure& m, Principle p,
                                const SequentialModel* seq,
                                std::size_t violation_cap) {
    switch (p) {
    case Principle::PN: return check_pn(m, violation_cap);
    case Principle::PI: return check_pi(m, violation_cap);
    case Principle::PIst: return check_pi_strong(m, violation_cap);
    case Principle::PEI: return check_pei(m, violation_cap);
    case Principle::PP: return check_pp(m, violation_cap);
    case Principle::PNFI:
        if (seq == nullptr) {
            throw SequentialStructureError(
                "PNFI can only be checked on a sequential model");
        }
        return check_pnfi(m, *seq, violation_cap);
    }
    throw InvalidParamsError("unknown principle");
}

UniquenessReport check_uniqueness(const ExtendedSpace& space) {
    UniquenessReport report;
    report.graph_connected = occupancy_graph(space.base()).connected;

    Measure formula = build_thirder(space);
    ConstraintSystem system =
        compile(space, {Principle::PN, Principle::PI, Principle::PEI});
    report.formula_is_solution = satisfies(system, formula);

    SolveResult result = solve(system);
    if (result.status == SolveStatus::infeasible) {
        report.solution_dimension = -1;
        return report;
    }
    report.solution_dimension = result.dimension;
    if (result.status == SolveStatus::unique) {
        report.matches_formula = *result.witness == formula;
        report.unique = report.matches_formula;
    }
    return report;
}

Corollary4PReport check_corollary_4p(const ExtendedSpace& space) {
    Corollary4PReport report;
    report.graph_connected = occupancy_graph(space.base()).connected;

    // Closed form: is |X| constant over the positive-weight atoms with a
    // nonempty occupied set? (At least one exists by the space invariant.)
    int k = -1;
    bool deterministic = true;
    for (const auto& atom : space.base().atoms()) {
        if (atom.occupied.empty()) continue;
        int count = atom.occupied.count();
        if (k == -1) {
            k = count;
        } else if (k != count) {
            deterministic = false;
            break;
        }
    }
    if (deterministic) report.deterministic_count = k;

    SolveResult result = solve(compile(
        space, {Principle::PN, Principle::PI, Principle::PEI, Principle::PP}));
    report.solver_feasible = result.status != SolveStatus::infeasible;

    // deterministic => feasible holds unconditionally (P_L = P_E then
    // satisfies all four); the converse needs a connected occupancy graph.
    if (report.graph_connected) {
        report.consistent = report.solver_feasible == deterministic;
    } else {
        report.consistent = !deterministic || report.solver_feasible;
    }
    return report;
}

} // namespace aobs
