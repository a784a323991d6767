// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#include "aobs/scenarios.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "aobs/errors.hpp"

namespace aobs {

const Event* Model::find_event(const std::string& name) const {
    for (const auto& [n, e] : events) {
        if (n == name) return &e;
    }
    return nullptr;
}

namespace {

/// Budget arithmetic in big integers: the requested sizes can overflow any
/// machine word long before they pass the cap.
void check_budget(const mpz_class& atoms, std::size_t budget, const char* what) {
    if (atoms > static_cast<unsigned long>(budget)) {
        throw SizeCapError(std::string(what) +
                           ": exact enumeration would need " + atoms.get_str() +
                           " objective atoms (budget " + std::to_string(budget) +
                           "); use the Monte Carlo estimators");
    }
}

mpz_class power_of_two(int exponent) {
    mpz_class out = 1;
    out <<= exponent;
    return out;
}

void check_open_unit(const Rational& p, const char* name) {
    if (sgn(p) <= 0 || p >= 1) {
        throw InvalidParamsError(std::string(name) + " must lie strictly between 0 and 1");
    }
}

std::string bits_string(std::uint64_t bits, int width) {
    std::string out(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((bits >> i) & 1u) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

} // namespace

Model sleeping_beauty() {
    std::vector<std::string> cells = {"1", "2"};
    std::vector<ObjectiveAtom> atoms;
    atoms.push_back({"H", Rational(1, 2), CellSet::single(0, 2), {0, 1}});
    atoms.push_back({"T", Rational(1, 2), CellSet::full_set(2), {0, 1}});
    ObjectiveSpace base(cells, cells, std::move(atoms));
    ExtendedSpace space = extend(base);

    Event heads = Event::objective_atom(space, 0);
    Event monday = Event::location_is(space, 0);
    Event tuesday = Event::location_is(space, 1);
    Model model{space, {}};
    model.events.emplace_back("Heads", heads);
    model.events.emplace_back("Tails", ~heads);
    model.events.emplace_back("Mon", monday);
    model.events.emplace_back("Tue", tuesday);
    return model;
}

Model four_beauties() {
    // Participant A's view: the waker is uniform on {A,B,C,D}; A's possible
    // partners are B, C, D. If A wakes with the waker being someone else,
    // the only awakening A sees is with that waker.
    std::vector<std::string> cells = {"B", "C", "D"};
    std::vector<ObjectiveAtom> atoms;
    atoms.push_back({"W=A", Rational(1, 4), CellSet::full_set(3), {0, 1, 2}});
    atoms.push_back({"W=B", Rational(1, 4), CellSet::single(0, 3), {0, 1, 2}});
    atoms.push_back({"W=C", Rational(1, 4), CellSet::single(1, 3), {0, 1, 2}});
    atoms.push_back({"W=D", Rational(1, 4), CellSet::single(2, 3), {0, 1, 2}});
    ObjectiveSpace base(cells, cells, std::move(atoms));
    ExtendedSpace space = extend(base);

    Model model{space, {}};
    const char* names[] = {"WA", "WB", "WC", "WD"};
    for (std::size_t i = 0; i < 4; ++i) {
        model.events.emplace_back(names[i], Event::objective_atom(space, i));
    }
    return model;
}

Model presumptuous_philosopher(int small, int total) {
    if (small < 1 || small > total || total > CellSet::max_cells) {
        throw InvalidParamsError("presumptuous_philosopher needs 1 <= N <= M <= 64");
    }
    std::vector<std::string> cells;
    for (int i = 1; i <= total; ++i) cells.push_back(std::to_string(i));

    std::vector<ObjectiveAtom> atoms;
    atoms.push_back({"W=0", Rational(1, 2), CellSet::range(0, small, total), {}});
    atoms.push_back({"W=1", Rational(1, 2), CellSet::full_set(total), {}});
    ObjectiveSpace base(std::move(cells), {}, std::move(atoms));
    ExtendedSpace space = extend(base);

    Model model{space, {}};
    model.events.emplace_back("W0", Event::objective_atom(space, 0));
    model.events.emplace_back("W1", Event::objective_atom(space, 1));
    return model;
}

Model hartle_srednicki(int cycles, int red_cycles, const Rational& p,
                       std::size_t atom_budget) {
    if (cycles < 2 || red_cycles < 1 || red_cycles > cycles - 1) {
        throw InvalidParamsError("hartle_srednicki needs 1 <= M <= N-1");
    }
    if (cycles > CellSet::max_cells) {
        throw InvalidParamsError("hartle_srednicki: too many cycles");
    }
    check_open_unit(p, "p");

    const int n = cycles;
    Rational arrangements = binomial_coefficient(static_cast<unsigned long>(n),
                                                 static_cast<unsigned long>(red_cycles));
    check_budget((arrangements.get_num() + 1) * power_of_two(n), atom_budget,
                 "hartle_srednicki");

    std::vector<std::string> cells;
    for (int i = 1; i <= n; ++i) cells.push_back(std::to_string(i));
    std::vector<std::string> colours = {"R", "B"};

    Rational q = Rational(1) - p;
    std::vector<ObjectiveAtom> atoms;

    auto add_occupancies = [&](const std::string& theory,
                               const std::vector<int>& colour_of_cycle,
                               const Rational& theory_weight) {
        std::string colour_tag;
        for (int c : colour_of_cycle) colour_tag += (c == 0 ? 'R' : 'B');
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            CellSet occupied(bits, n);
            int k = occupied.count();
            Rational w = theory_weight * pow_rational(p, static_cast<unsigned long>(k)) *
                         pow_rational(q, static_cast<unsigned long>(n - k));
            atoms.push_back({theory + ":" + colour_tag + ":" + bits_string(bits, n),
                             std::move(w), occupied, colour_of_cycle});
        }
    };

    // Theory AR: every cycle red.
    add_occupancies("AR", std::vector<int>(static_cast<std::size_t>(n), 0),
                    Rational(1, 2));

    // Theory SR: every arrangement of red_cycles reds equally likely.
    Rational per_arrangement = Rational(1, 2) / arrangements;
    std::vector<int> chosen(static_cast<std::size_t>(red_cycles));
    for (int i = 0; i < red_cycles; ++i) chosen[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<int> colouring(static_cast<std::size_t>(n), 1);
        for (int c : chosen) colouring[static_cast<std::size_t>(c)] = 0;
        add_occupancies("SR", colouring, per_arrangement);

        // next combination
        int i = red_cycles - 1;
        while (i >= 0 && chosen[static_cast<std::size_t>(i)] == n - red_cycles + i) --i;
        if (i < 0) break;
        ++chosen[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < red_cycles; ++j) {
            chosen[static_cast<std::size_t>(j)] = chosen[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    ObjectiveSpace base(std::move(cells), std::move(colours), std::move(atoms));
    ExtendedSpace space = extend(base);

    Model model{space, {}};
    model.events.emplace_back("AR", Event::of_objective(space, [](const ObjectiveAtom& a) {
                                  return a.label.compare(0, 2, "AR") == 0;
                              }));
    model.events.emplace_back("SR", Event::of_objective(space, [](const ObjectiveAtom& a) {
                                  return a.label.compare(0, 2, "SR") == 0;
                              }));
    return model;
}

Model probability_of_life(int sites,
                          const std::vector<std::pair<Rational, Rational>>& support,
                          std::size_t atom_budget) {
    if (sites < 1 || sites > CellSet::max_cells) {
        throw InvalidParamsError("probability_of_life needs 1 <= sites <= 64");
    }
    if (support.empty()) {
        throw InvalidParamsError("probability_of_life needs a nonempty support");
    }
    Rational total = 0;
    for (const auto& [v, w] : support) {
        check_open_unit(v, "support value");
        if (sgn(w) <= 0) {
            throw InvalidParamsError("support weights must be positive");
        }
        total += w;
    }
    if (total != 1) {
        throw InvalidParamsError("support weights must sum to 1");
    }
    check_budget(mpz_class(static_cast<unsigned long>(support.size())) *
                     power_of_two(sites),
                 atom_budget, "probability_of_life");

    std::vector<std::string> cells;
    for (int i = 1; i <= sites; ++i) cells.push_back(std::to_string(i));

    std::vector<ObjectiveAtom> atoms;
    for (std::size_t i = 0; i < support.size(); ++i) {
        const auto& [v, w] = support[i];
        Rational miss = Rational(1) - v;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << sites); ++bits) {
            CellSet occupied(bits, sites);
            int k = occupied.count();
            Rational weight = w * pow_rational(v, static_cast<unsigned long>(k)) *
                              pow_rational(miss, static_cast<unsigned long>(sites - k));
            atoms.push_back({"V" + std::to_string(i) + ":" + bits_string(bits, sites),
                             std::move(weight), occupied, {}});
        }
    }

    ObjectiveSpace base(std::move(cells), {}, std::move(atoms));
    ExtendedSpace space = extend(base);

    Model model{space, {}};
    for (std::size_t i = 0; i < support.size(); ++i) {
        std::string prefix = "V" + std::to_string(i) + ":";
        model.events.emplace_back(
            "V" + std::to_string(i),
            Event::of_objective(space, [prefix](const ObjectiveAtom& a) {
                return a.label.compare(0, prefix.size(), prefix) == 0;
            }));
    }
    model.events.emplace_back("Occ1", Event::cell_occupied(space, 0));
    return model;
}

Model two_zone(int half_width, const Rational& p0, const Rational& p1,
               const Rational& p2, std::size_t atom_budget) {
    if (half_width < 1 || 2 * half_width > CellSet::max_cells) {
        throw InvalidParamsError("two_zone needs 1 <= half_width <= 32");
    }
    check_open_unit(p0, "p0");
    check_open_unit(p1, "p1");
    check_open_unit(p2, "p2");
    const int m = half_width;
    const int width = 2 * m;
    check_budget(2 * power_of_two(width), atom_budget, "two_zone");

    // Cells -m..-1 (zone 0, colour "0") then 1..m (zone 1, colour "1").
    std::vector<std::string> cells;
    std::vector<int> zone;
    for (int i = -m; i <= -1; ++i) {
        cells.push_back(std::to_string(i));
        zone.push_back(0);
    }
    for (int i = 1; i <= m; ++i) {
        cells.push_back(std::to_string(i));
        zone.push_back(1);
    }

    std::vector<ObjectiveAtom> atoms;
    for (int w = 0; w <= 1; ++w) {
        const Rational& positive_rate = w == 0 ? p1 : p2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << width); ++bits) {
            CellSet occupied(bits, width);
            Rational weight(1, 2);
            for (int cell = 0; cell < width; ++cell) {
                const Rational& rate = zone[static_cast<std::size_t>(cell)] == 0
                                           ? p0
                                           : positive_rate;
                if (occupied.contains(cell)) {
                    weight *= rate;
                } else {
                    weight *= Rational(1) - rate;
                }
            }
            atoms.push_back({"W" + std::to_string(w) + ":" + bits_string(bits, width),
                             std::move(weight), occupied, zone});
        }
    }

    ObjectiveSpace base(std::move(cells), {"0", "1"}, std::move(atoms));
    ExtendedSpace space = extend(base);

    Model model{space, {}};
    model.events.emplace_back("W0", Event::of_objective(space, [](const ObjectiveAtom& a) {
                                  return a.label.compare(0, 2, "W0") == 0;
                              }));
    model.events.emplace_back("W1", Event::of_objective(space, [](const ObjectiveAtom& a) {
                                  return a.label.compare(0, 2, "W1") == 0;
                              }));
    return model;
}

Rational CosmoParams::mean_observers(int theta) const {
    const auto& pmf = observer_pmf[static_cast<std::size_t>(theta)];
    Rational mean = 0;
    for (std::size_t k = 0; k < pmf.size(); ++k) {
        mean += Rational(static_cast<unsigned long>(k)) * pmf[k];
    }
    return mean;
}

Rational CosmoParams::mean_density() const {
    Rational sum = 0;
    for (int theta = 0; theta < levels; ++theta) sum += mean_observers(theta);
    return sum / Rational(levels);
}

CosmoParams cosmo_from_means(int levels, const Rational& kappa, int max_observers,
                             const std::vector<Rational>& means) {
    if (static_cast<int>(means.size()) != levels) {
        throw InvalidParamsError("cosmo_from_means: one mean per level required");
    }
    CosmoParams params;
    params.levels = levels;
    params.kappa = kappa;
    params.max_observers = max_observers;
    for (const auto& mean : means) {
        if (mean < 1 || mean > max_observers) {
            throw InvalidParamsError("cosmo_from_means: means must lie in [1, n0]");
        }
        std::vector<Rational> pmf(static_cast<std::size_t>(max_observers) + 1,
                                  Rational(0));
        if (max_observers == 1) {
            pmf[1] = 1;
        } else {
            Rational high = (mean - 1) / Rational(max_observers - 1);
            pmf[static_cast<std::size_t>(max_observers)] = high;
            pmf[1] = Rational(1) - high;
        }
        params.observer_pmf.push_back(std::move(pmf));
    }
    return params;
}

Model cosmo_constant(const CosmoParams& params, std::size_t atom_budget) {
    const int n = params.levels;
    const int n0 = params.max_observers;
    if (n < 1 || n0 < 1) {
        throw InvalidParamsError("cosmo_constant needs n >= 1 and n0 >= 1");
    }
    if (sgn(params.kappa) <= 0 || params.kappa >= n) {
        throw InvalidParamsError("cosmo_constant needs 0 < kappa < n");
    }
    if (static_cast<int>(params.observer_pmf.size()) != n) {
        throw InvalidParamsError("cosmo_constant: one observer pmf per level required");
    }
    if (n * (n0 + 1) > CellSet::max_cells) {
        throw InvalidParamsError("cosmo_constant: cell universe too large");
    }
    std::vector<std::vector<int>> supports;
    std::size_t count = std::size_t{1} << n;
    for (const auto& pmf : params.observer_pmf) {
        if (static_cast<int>(pmf.size()) != n0 + 1) {
            throw InvalidParamsError("cosmo_constant: pmf must cover 0..n0");
        }
        Rational total = 0;
        std::vector<int> support;
        for (std::size_t k = 0; k < pmf.size(); ++k) {
            if (sgn(pmf[k]) < 0) {
                throw InvalidParamsError("cosmo_constant: negative pmf entry");
            }
            if (sgn(pmf[k]) > 0) support.push_back(static_cast<int>(k));
            total += pmf[k];
        }
        if (total != 1) {
            throw InvalidParamsError("cosmo_constant: pmf must sum to 1");
        }
        count *= support.size();
        check_budget(count, atom_budget, "cosmo_constant");
        supports.push_back(std::move(support));
    }

    // Cell (theta_i, k) at index i*(n0+1)+k; colour = theta label.
    std::vector<std::string> theta_labels;
    for (int i = 0; i < n; ++i) {
        theta_labels.push_back(n == 1 ? "0" : std::to_string(i) + "/" + std::to_string(n));
    }
    std::vector<std::string> cells;
    std::vector<int> cell_colour;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k <= n0; ++k) {
            cells.push_back(theta_labels[static_cast<std::size_t>(i)] + "#" +
                            std::to_string(k));
            cell_colour.push_back(i);
        }
    }

    Rational p_exist = params.kappa / Rational(n);
    Rational p_missing = Rational(1) - p_exist;

    std::vector<ObjectiveAtom> atoms;
    // Enumerate (existence bits, observer counts) over the pmf supports.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        Rational exist_weight = 1;
        for (int i = 0; i < n; ++i) {
            exist_weight *= ((bits >> i) & 1u) ? p_exist : p_missing;
        }
        std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
        while (true) {
            Rational weight = exist_weight;
            std::string label = "U";
            label += bits_string(bits, n);
            label += ":Y";
            CellSet occupied = CellSet::empty_set(n * (n0 + 1));
            for (int i = 0; i < n; ++i) {
                int yi = supports[static_cast<std::size_t>(i)]
                                 [idx[static_cast<std::size_t>(i)]];
                weight *= params.observer_pmf[static_cast<std::size_t>(i)]
                                             [static_cast<std::size_t>(yi)];
                label += std::to_string(yi);
                if ((bits >> i) & 1u) {
                    for (int k = 1; k <= yi; ++k) {
                        occupied = occupied.with(i * (n0 + 1) + k);
                    }
                }
            }
            atoms.push_back({std::move(label), std::move(weight), occupied, cell_colour});

            int pos = 0;
            while (pos < n) {
                auto& at = idx[static_cast<std::size_t>(pos)];
                if (at + 1 < supports[static_cast<std::size_t>(pos)].size()) {
                    ++at;
                    break;
                }
                at = 0;
                ++pos;
            }
            if (pos == n) break;
        }
    }

    ObjectiveSpace base(std::move(cells), std::move(theta_labels), std::move(atoms));
    return Model{extend(base), {}};
}

Rational cosmo_thirder_pi(const CosmoParams& params, int theta) {
    if (theta < 0 || theta >= params.levels) {
        throw InvalidParamsError("cosmo_thirder_pi: theta out of range");
    }
    // E(L_theta)/E(|X|) = m(theta) / (n M_n); kappa cancels.
    return params.mean_observers(theta) /
           (Rational(params.levels) * params.mean_density());
}

SequentialModel::SequentialModel(std::vector<Rational> hazards, int u_levels)
    : hazards_(std::move(hazards)),
      u_levels_(u_levels),
      space_(build(hazards_, u_levels_, tuples_, aux_, stop_)) {}

ExtendedSpace SequentialModel::build(const std::vector<Rational>& hazards,
                                     int u_levels,
                                     std::vector<std::vector<int>>& tuples,
                                     std::vector<int>& aux,
                                     std::vector<int>& stops) {
    if (hazards.size() < 2) {
        throw InvalidParamsError("sequential model needs hazards h_0..h_M with M >= 1");
    }
    if (u_levels < 1) {
        throw InvalidParamsError("sequential model needs at least one auxiliary level");
    }
    const int m = static_cast<int>(hazards.size()) - 1;
    if (hazards.back() != 1) {
        throw InvalidParamsError("the final hazard must equal 1");
    }
    for (int i = 0; i < m; ++i) {
        const auto& h = hazards[static_cast<std::size_t>(i)];
        if (sgn(h) < 0 || h >= 1) {
            throw InvalidParamsError(
                "hazards before the horizon must lie in [0, 1) so that P(X = M) > 0");
        }
    }
    check_budget(power_of_two(m) * u_levels, default_atom_budget, "sequential");

    std::vector<std::string> cells;
    for (int day = 1; day <= m; ++day) cells.push_back(std::to_string(day));

    std::vector<ObjectiveAtom> atoms;
    // Full tuples (V_0..V_M, U); V_M = 1 always. Tuples of weight zero
    // (hazards equal to 0) are skipped here so the bookkeeping vectors
    // stay aligned with the pruned atom order.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        std::vector<int> tuple(static_cast<std::size_t>(m) + 1, 0);
        Rational weight = 1;
        int stop = m;
        for (int i = 0; i < m; ++i) {
            int v = static_cast<int>((bits >> i) & 1u);
            tuple[static_cast<std::size_t>(i)] = v;
            const auto& h = hazards[static_cast<std::size_t>(i)];
            weight *= v ? h : Rational(1) - h;
            if (v && stop == m) stop = i;
        }
        tuple[static_cast<std::size_t>(m)] = 1;
        if (sgn(weight) == 0) continue;
        weight /= u_levels;

        // X = stop, so the occupied days are 1..stop (cells 0..stop-1).
        CellSet occupied = CellSet::range(0, stop, m);
        std::string tuple_tag;
        for (int v : tuple) tuple_tag += static_cast<char>('0' + v);
        for (int u = 0; u < u_levels; ++u) {
            atoms.push_back({"V" + tuple_tag + ",U" + std::to_string(u), weight,
                             occupied, {}});
            tuples.push_back(tuple);
            stops.push_back(stop);
            aux.push_back(u);
        }
    }

    return extend(ObjectiveSpace(std::move(cells), {}, std::move(atoms)));
}

std::vector<SequentialModel::TailPattern>
SequentialModel::tail_patterns(int day) const {
    const int m = horizon();
    if (day < 0 || day > m) {
        throw InvalidParamsError("tail_patterns: day out of range");
    }
    std::vector<TailPattern> out;
    std::map<std::pair<std::vector<int>, int>, bool> seen;
    for (std::size_t a = 0; a < tuples_.size(); ++a) {
        std::vector<int> tail(tuples_[a].begin() + day, tuples_[a].end());
        auto key = std::make_pair(tail, aux_[a]);
        if (seen.emplace(key, true).second) {
            out.push_back({std::move(tail), aux_[a]});
        }
    }
    return out;
}

Event SequentialModel::tail_event(int day, const TailPattern& tail) const {
    const int m = horizon();
    if (day < 0 || day > m ||
        static_cast<int>(tail.values.size()) != m - day + 1) {
        throw InvalidParamsError("tail_event: malformed tail pattern");
    }
    boost::dynamic_bitset<> bits(space_.atom_count());
    for (std::size_t a = 0; a < tuples_.size(); ++a) {
        if (aux_[a] != tail.aux) continue;
        bool match = true;
        for (int i = day; i <= m; ++i) {
            if (tuples_[a][static_cast<std::size_t>(i)] !=
                tail.values[static_cast<std::size_t>(i - day)]) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        for (int loc = 0; loc < space_.location_count(); ++loc) {
            bits.set(space_.index_of(a, loc));
        }
    }
    return Event(space_, std::move(bits));
}

Rational SequentialModel::tail_probability(int day, const TailPattern& tail) const {
    const int m = horizon();
    Rational prob = Rational(1) / Rational(u_levels_);
    for (int i = day; i <= m; ++i) {
        const auto& h = hazards_[static_cast<std::size_t>(i)];
        prob *= tail.values[static_cast<std::size_t>(i - day)] ? h : Rational(1) - h;
    }
    return prob;
}

SequentialModel sequential(std::vector<Rational> hazards, int u_levels) {
    return SequentialModel(std::move(hazards), u_levels);
}

Rational sequential_stop_prob(const std::vector<Rational>& hazards, int day) {
    Rational prob = hazards[static_cast<std::size_t>(day)];
    for (int i = 0; i < day; ++i) {
        prob *= Rational(1) - hazards[static_cast<std::size_t>(i)];
    }
    return prob;
}

Rational hs_improper_posterior(int cycles, int red_cycles, const Rational& p) {
    check_open_unit(p, "p");
    Rational q = Rational(1) - p;
    Rational f_red = Rational(1) - pow_rational(q, static_cast<unsigned long>(red_cycles));
    Rational f_all = Rational(1) - pow_rational(q, static_cast<unsigned long>(cycles));
    return f_red / (f_red + f_all);
}

} // namespace aobs
