// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0
//
// aobs: batch front-end for the observer-measure engine.
//
// Exit codes: 0 success / all checks hold; 1 expected negative result
// (a failed principle check or an infeasible system); 2 usage or parse
// error; 3 runtime error inside a computation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aobs/errors.hpp"
#include "aobs/event_expr.hpp"
#include "aobs/feasibility.hpp"
#include "aobs/measures.hpp"
#include "aobs/model_io.hpp"
#include "aobs/montecarlo.hpp"
#include "aobs/observation.hpp"
#include "aobs/occupancy.hpp"
#include "aobs/principles.hpp"
#include "aobs/scenarios.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Model selection shared by the subcommands.

struct ModelOptions {
    std::string model; // built-in name or model file path
    std::string small_n = "1";
    std::string total_m = "2";
    std::string p = "1/2";
    std::string p0 = "1/100", p1 = "1/100", p2 = "1/2";
    std::string sites = "3";
    std::string support = "1/4:1/2,1/2:1/4,3/4:1/4";
    std::string hazards = "0,1/2,1";
    int u_levels = 1;
    std::string levels_n = "4";
    std::string kappa = "1";
    int n0 = 3;
    std::string means; // comma list; defaults to a linear ramp
};

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
    cmd->add_option("model", opts.model,
                    "built-in scenario (see `aobs scenarios`) or model file path")
        ->required();
    cmd->add_option("--N", opts.small_n, "pp/hs: N parameter");
    cmd->add_option("--M", opts.total_m, "pp/hs/two-zone/sequential: M parameter");
    cmd->add_option("--p", opts.p, "hs: per-cycle observer probability (rational)");
    cmd->add_option("--p0", opts.p0, "two-zone: negative-zone rate");
    cmd->add_option("--p1", opts.p1, "two-zone: positive-zone rate when W=0");
    cmd->add_option("--p2", opts.p2, "two-zone: positive-zone rate when W=1");
    cmd->add_option("--sites", opts.sites, "life: number of sites");
    cmd->add_option("--support", opts.support, "life: v:w pairs, comma separated");
    cmd->add_option("--hazards", opts.hazards, "sequential: h_0..h_M, comma separated");
    cmd->add_option("--u-levels", opts.u_levels, "sequential: auxiliary levels");
    cmd->add_option("--n", opts.levels_n, "cosmo: number of constant levels");
    cmd->add_option("--kappa", opts.kappa, "cosmo: expected universe count (rational)");
    cmd->add_option("--n0", opts.n0, "cosmo: maximum observers per universe");
    cmd->add_option("--means", opts.means, "cosmo: observer means per level");
}

int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": expected an integer, got '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

std::vector<aobs::Rational> parse_rational_list(const std::string& text) {
    std::vector<aobs::Rational> out;
    for (const auto& item : split(text, ',')) out.push_back(aobs::parse_rational(item));
    return out;
}

aobs::CosmoParams cosmo_params_from(const ModelOptions& opts) {
    int n = parse_int(opts.levels_n, "--n");
    std::vector<aobs::Rational> means;
    if (opts.means.empty()) {
        // Default ramp: m(theta) = 1 + 2*theta*(n0-1)/... keep it within [1, n0].
        for (int i = 0; i < n; ++i) {
            aobs::Rational t = aobs::make_rational(i, n == 1 ? 1 : n);
            means.push_back(aobs::Rational(1) + t * aobs::Rational(opts.n0 - 1));
        }
    } else {
        means = parse_rational_list(opts.means);
    }
    return aobs::cosmo_from_means(n, aobs::parse_rational(opts.kappa), opts.n0, means);
}

struct LoadedModel {
    aobs::Model model;
    std::optional<aobs::SequentialModel> sequential;
    std::string name;
};

LoadedModel build_model(const ModelOptions& opts) {
    const std::string& name = opts.model;
    if (name == "sb") return {aobs::sleeping_beauty(), std::nullopt, name};
    if (name == "four-beauties") return {aobs::four_beauties(), std::nullopt, name};
    if (name == "pp") {
        return {aobs::presumptuous_philosopher(parse_int(opts.small_n, "--N"),
                                               parse_int(opts.total_m, "--M")),
                std::nullopt, name};
    }
    if (name == "hs") {
        return {aobs::hartle_srednicki(parse_int(opts.small_n, "--N"),
                                       parse_int(opts.total_m, "--M"),
                                       aobs::parse_rational(opts.p)),
                std::nullopt, name};
    }
    if (name == "life") {
        std::vector<std::pair<aobs::Rational, aobs::Rational>> support;
        for (const auto& pair : split(opts.support, ',')) {
            auto parts = split(pair, ':');
            if (parts.size() != 2) {
                throw UsageError("--support expects v:w pairs, got '" + pair + "'");
            }
            support.emplace_back(aobs::parse_rational(parts[0]),
                                 aobs::parse_rational(parts[1]));
        }
        return {aobs::probability_of_life(parse_int(opts.sites, "--sites"), support),
                std::nullopt, name};
    }
    if (name == "two-zone") {
        return {aobs::two_zone(parse_int(opts.total_m, "--M"),
                               aobs::parse_rational(opts.p0),
                               aobs::parse_rational(opts.p1),
                               aobs::parse_rational(opts.p2)),
                std::nullopt, name};
    }
    if (name == "cosmo") return {aobs::cosmo_constant(cosmo_params_from(opts)), std::nullopt, name};
    if (name == "sequential") {
        aobs::SequentialModel seq(parse_rational_list(opts.hazards), opts.u_levels);
        aobs::Model model{seq.space(), {}};
        return {std::move(model), std::move(seq), name};
    }
    return {aobs::load_model(name), std::nullopt, name};
}

// ---------------------------------------------------------------------------
// Output helpers.

std::string show(const aobs::Rational& value) {
    std::ostringstream out;
    out << aobs::to_string(value) << " (" << std::setprecision(6)
        << aobs::to_double(value) << ")";
    return out.str();
}

bool records_mode = false;

void emit_record(const nlohmann::json& record) { std::cout << record.dump() << "\n"; }

// ---------------------------------------------------------------------------
// query

struct QueryArgs {
    ModelOptions model;
    std::string measure = "thirder";
    std::string event;
    std::string given;
    std::string restrict_cells;
};

int run_query(const QueryArgs& args) {
    LoadedModel loaded = build_model(args.model);
    const auto& space = loaded.model.space;

    aobs::Event event = aobs::parse_event(loaded.model, args.event);
    std::optional<aobs::Event> given;
    if (!args.given.empty()) given = aobs::parse_event(loaded.model, args.given);

    aobs::Rational value;
    if (args.measure == "objective") {
        value = given ? aobs::objective_conditional(space, event, *given)
                      : aobs::objective_probability(space, event);
    } else {
        aobs::Measure measure = [&]() {
            if (args.measure == "thirder") return aobs::build_thirder(space);
            if (args.measure == "halfer") return aobs::build_halfer(space);
            if (args.measure == "restricted") {
                if (args.restrict_cells.empty()) {
                    throw UsageError("--restrict-cells is required for the restricted measure");
                }
                aobs::CellSet keep =
                    aobs::CellSet::empty_set(space.base().cell_count());
                for (const auto& label : split(args.restrict_cells, ',')) {
                    int cell = space.base().find_cell(label);
                    if (cell < 0) throw UsageError("unknown cell '" + label + "'");
                    keep = keep.with(cell);
                }
                std::vector<aobs::CellSet> restricted;
                for (const auto& atom : space.base().atoms()) {
                    restricted.push_back(atom.occupied.intersect(keep));
                }
                return aobs::build_restricted_thirder(space, restricted);
            }
            throw UsageError("unknown measure '" + args.measure + "'");
        }();
        value = given ? aobs::conditional(measure, event, *given)
                      : aobs::probability(measure, event);
    }

    if (records_mode) {
        emit_record({{"kind", "query"},
                     {"model", loaded.name},
                     {"measure", args.measure},
                     {"event", args.event},
                     {"given", args.given},
                     {"value", aobs::to_string(value)},
                     {"decimal", aobs::to_double(value)}});
    } else {
        std::cout << show(value) << "\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
    ModelOptions model;
    std::vector<std::string> principles;
    std::string measure = "thirder";
    std::string measure_file;
};

aobs::Measure measure_from_file(const aobs::ExtendedSpace& space,
                                const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open measure file '" + path + "'");
    nlohmann::json doc = nlohmann::json::parse(in);
    if (!doc.contains("weights") || !doc["weights"].is_array()) {
        throw UsageError("measure file needs a 'weights' list in extended-atom order");
    }
    std::vector<aobs::Rational> weights;
    for (const auto& w : doc["weights"]) {
        weights.push_back(aobs::parse_rational(w.get<std::string>()));
    }
    return aobs::Measure(space, std::move(weights));
}

int run_check(const CheckArgs& args) {
    LoadedModel loaded = build_model(args.model);
    const auto& space = loaded.model.space;

    aobs::Measure measure = [&]() {
        if (!args.measure_file.empty()) return measure_from_file(space, args.measure_file);
        if (args.measure == "thirder") return aobs::build_thirder(space);
        if (args.measure == "halfer") return aobs::build_halfer(space);
        throw UsageError("unknown measure '" + args.measure + "'");
    }();

    bool all_hold = true;
    for (const auto& name : args.principles) {
        auto principle = aobs::principle_from_name(name);
        if (!principle) throw UsageError("unknown principle '" + name + "'");
        aobs::PrincipleReport report = aobs::check_principle(
            measure, *principle,
            loaded.sequential ? &*loaded.sequential : nullptr);
        all_hold = all_hold && report.holds;

        if (records_mode) {
            nlohmann::json violations = nlohmann::json::array();
            for (const auto& v : report.violations) {
                violations.push_back({{"witness", v.witness},
                                      {"lhs", aobs::to_string(v.lhs)},
                                      {"rhs", aobs::to_string(v.rhs)}});
            }
            emit_record({{"kind", "check"},
                         {"model", loaded.name},
                         {"measure", args.measure},
                         {"principle", name},
                         {"holds", report.holds},
                         {"violations", violations}});
        } else {
            std::cout << std::left << std::setw(6) << name
                      << (report.holds ? "holds" : "FAILS") << "\n";
            for (const auto& v : report.violations) {
                std::cout << "      " << v.witness << ": " << show(v.lhs) << " vs "
                          << show(v.rhs) << "\n";
            }
            if (report.truncated) std::cout << "      ... (more violations)\n";
        }
    }
    return all_hold ? exit_ok : exit_negative;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
    ModelOptions model;
    std::vector<std::string> principles;
};

int run_solve(const SolveArgs& args) {
    LoadedModel loaded = build_model(args.model);
    const auto& space = loaded.model.space;

    std::set<aobs::Principle> principles;
    for (const auto& name : args.principles) {
        auto principle = aobs::principle_from_name(name);
        if (!principle) throw UsageError("unknown principle '" + name + "'");
        principles.insert(*principle);
    }
    aobs::ConstraintSystem system = aobs::compile(
        space, principles, loaded.sequential ? &*loaded.sequential : nullptr);
    aobs::SolveResult result = aobs::solve(system);

    if (records_mode) {
        nlohmann::json record = {{"kind", "solve"}, {"model", loaded.name}};
        record["status"] = result.status == aobs::SolveStatus::infeasible ? "infeasible"
                           : result.status == aobs::SolveStatus::unique   ? "unique"
                                                                          : "affine";
        record["dimension"] = result.dimension;
        if (result.witness) {
            nlohmann::json weights = nlohmann::json::object();
            for (std::size_t i = 0; i < space.atom_count(); ++i) {
                if (sgn(result.witness->weight(i)) != 0) {
                    weights[space.atom_label(i)] =
                        aobs::to_string(result.witness->weight(i));
                }
            }
            record["witness"] = weights;
        }
        emit_record(record);
        return result.status == aobs::SolveStatus::infeasible ? exit_negative : exit_ok;
    }

    switch (result.status) {
    case aobs::SolveStatus::infeasible:
        std::cout << "Infeasible: no measure satisfies the chosen principles.\n";
        return exit_negative;
    case aobs::SolveStatus::unique:
        std::cout << "Unique solution:\n";
        break;
    case aobs::SolveStatus::affine:
        std::cout << "Affine solution set of dimension " << result.dimension
                  << "; relative-interior witness:\n";
        break;
    }
    for (std::size_t i = 0; i < space.atom_count(); ++i) {
        if (sgn(result.witness->weight(i)) != 0) {
            std::cout << "  " << std::left << std::setw(28) << space.atom_label(i)
                      << show(result.witness->weight(i)) << "\n";
        }
    }
    const std::size_t basis_cap = 8;
    for (std::size_t b = 0; b < result.basis.size() && b < basis_cap; ++b) {
        std::cout << "  direction " << b << ":";
        for (std::size_t i = 0; i < space.atom_count(); ++i) {
            if (sgn(result.basis[b][i]) != 0) {
                std::cout << " " << space.atom_label(i) << "="
                          << aobs::to_string(result.basis[b][i]);
            }
        }
        std::cout << "\n";
    }
    if (result.basis.size() > basis_cap) {
        std::cout << "  ... (" << result.basis.size() - basis_cap
                  << " more directions)\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// estimate

struct EstimateArgs {
    ModelOptions model;
    std::string target;
    std::string estimator = "thirder";
    std::string event;
    std::string colour;
    std::string which = "L";
    int theta = 0;
    std::string samples = "100000";
    std::uint64_t seed = 0;
    int streams = 1;
};

std::int64_t parse_samples(const std::string& text) {
    try {
        std::size_t used = 0;
        double value = std::stod(text, &used);
        if (used != text.size() || value < 1 || value > 4e18) {
            throw std::invalid_argument(text);
        }
        return static_cast<std::int64_t>(value);
    } catch (const std::exception&) {
        throw UsageError("--samples: expected a count, got '" + text + "'");
    }
}

int run_estimate(const EstimateArgs& args) {
    aobs::EstimateOptions options;
    options.n_samples = parse_samples(args.samples);
    options.seed = args.seed;
    options.streams = args.streams;

    const std::string& name = args.model.model;
    aobs::Estimate est;
    std::string what;

    auto estimate_space_target = [&](const std::string& estimator,
                                     const std::string& event_name,
                                     const std::string& colour_label) {
        LoadedModel loaded = build_model(args.model);
        aobs::Event event = aobs::parse_event(loaded.model, event_name);
        std::optional<int> colour;
        if (!colour_label.empty()) {
            int c = loaded.model.space.base().find_colour(colour_label);
            if (c < 0) throw UsageError("unknown colour '" + colour_label + "'");
            colour = c;
        }
        aobs::Sampler sampler =
            aobs::make_space_sampler(loaded.model.space, event, colour);
        what = estimator + " P(" + event_name +
               (colour ? std::string(" | ZS=") + colour_label : std::string()) + ")";
        if (estimator == "thirder") {
            return aobs::estimate_thirder(sampler, colour.has_value(), options);
        }
        if (estimator == "halfer") {
            return aobs::estimate_halfer(sampler, colour.has_value(), options);
        }
        throw UsageError("unknown estimator '" + estimator + "'");
    };

    if (name == "cosmo") {
        aobs::CosmoParams params = cosmo_params_from(args.model);
        aobs::MeasureFamily which = args.which == "E" ? aobs::MeasureFamily::thirder
                                                      : aobs::MeasureFamily::halfer;
        est = aobs::estimate_cosmo_pi(params, which, args.theta, options);
        what = std::string("pi^(") + args.which + ") at theta index " +
               std::to_string(args.theta);
    } else if (name == "two-zone" && !args.target.empty()) {
        if (args.target != "halfer-given-colour0" &&
            args.target != "thirder-given-colour0") {
            throw UsageError("two-zone targets: halfer-given-colour0, thirder-given-colour0");
        }
        aobs::Sampler sampler = aobs::make_two_zone_sampler(
            parse_int(args.model.total_m, "--M"),
            aobs::to_double(aobs::parse_rational(args.model.p0)),
            aobs::to_double(aobs::parse_rational(args.model.p1)),
            aobs::to_double(aobs::parse_rational(args.model.p2)));
        bool thirder = args.target.rfind("thirder", 0) == 0;
        what = (thirder ? std::string("thirder") : std::string("halfer")) +
               " P(W0 | ZS=0)";
        est = thirder ? aobs::estimate_thirder(sampler, true, options)
                      : aobs::estimate_halfer(sampler, true, options);
    } else if (name == "hs" && !args.target.empty()) {
        if (args.target != "thirder-sr-given-red" && args.target != "halfer-sr-given-red") {
            throw UsageError("hs targets: thirder-sr-given-red, halfer-sr-given-red");
        }
        aobs::Sampler sampler = aobs::make_cycle_sampler(
            parse_int(args.model.small_n, "--N"), parse_int(args.model.total_m, "--M"),
            aobs::to_double(aobs::parse_rational(args.model.p)));
        bool thirder = args.target.rfind("thirder", 0) == 0;
        what = (thirder ? std::string("thirder") : std::string("halfer")) +
               " P(SR | ZS=R)";
        est = thirder ? aobs::estimate_thirder(sampler, true, options)
                      : aobs::estimate_halfer(sampler, true, options);
    } else if (!args.target.empty()) {
        // Compact targets of the form <estimator>-<event> over the exact
        // space, e.g. thirder-heads.
        auto dash = args.target.find('-');
        if (dash == std::string::npos) {
            throw UsageError("targets look like <estimator>-<event>");
        }
        std::string estimator = args.target.substr(0, dash);
        std::string event_name = args.target.substr(dash + 1);
        LoadedModel probe = build_model(args.model);
        for (const auto& [event, _] : probe.model.events) {
            std::string lowered = event;
            for (auto& c : lowered) c = static_cast<char>(std::tolower(c));
            if (lowered == event_name) {
                event_name = event;
                break;
            }
        }
        est = estimate_space_target(estimator, event_name, args.colour);
    } else {
        if (args.event.empty()) {
            throw UsageError("estimate needs --target or --event");
        }
        est = estimate_space_target(args.estimator, args.event, args.colour);
    }

    if (records_mode) {
        emit_record({{"kind", "estimate"},
                     {"model", name},
                     {"what", what},
                     {"value", est.value},
                     {"std_error", est.std_error},
                     {"samples", est.n_samples},
                     {"seed", est.seed}});
    } else {
        std::cout << what << " = " << std::setprecision(6) << est.value << " +/- "
                  << est.std_error << "  (samples " << est.n_samples << ", seed "
                  << est.seed << ")\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// scenarios, dump

int run_scenarios() {
    std::cout
        << "built-in scenarios:\n"
        << "  sb              Sleeping Beauty. Events: Heads Tails Mon Tue.\n"
        << "                  targets: thirder-heads, halfer-heads\n"
        << "  four-beauties   one waker among four sleepers. Events: WA WB WC WD.\n"
        << "  pp --N --M      presumptuous philosopher. Events: W0 W1.\n"
        << "  hs --N --M --p  N-cycle universe, two theories. Events: AR SR; colours R B.\n"
        << "                  targets: thirder-sr-given-red, halfer-sr-given-red\n"
        << "  life --sites --support\n"
        << "                  probability of life; support 'v:w,...'. Events: V0.. Occ1.\n"
        << "  two-zone --M --p0 --p1 --p2\n"
        << "                  two-zone universe. Events: W0 W1; colours 0 1.\n"
        << "                  targets: halfer-given-colour0, thirder-given-colour0\n"
        << "  cosmo --n --kappa --n0 [--means]\n"
        << "                  discretized-constant multiverse; estimate with --which E|L --theta.\n"
        << "  sequential --hazards --u-levels\n"
        << "                  day-structured model for PNFI checks and solves.\n"
        << "Any model argument may also be a JSON model file path.\n";
    return exit_ok;
}

struct DumpArgs {
    ModelOptions model;
    std::string out;
};

int run_dump(const DumpArgs& args) {
    LoadedModel loaded = build_model(args.model);
    if (args.out.empty()) {
        std::cout << aobs::model_to_text(loaded.model);
    } else {
        aobs::save_model(loaded.model, args.out);
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact inference for finite anthropic-observer models"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    QueryArgs query_args;
    auto* query_cmd = app.add_subcommand("query", "evaluate an exact credence");
    add_model_options(query_cmd, query_args.model);
    query_cmd->add_option("measure", query_args.measure,
                          "thirder | halfer | objective | restricted");
    query_cmd->add_option("event", query_args.event, "event expression")->required();
    query_cmd->add_option("--given", query_args.given, "conditioning event expression");
    query_cmd->add_option("--restrict-cells", query_args.restrict_cells,
                          "cells kept by the restricted measure (comma separated)");

    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand("check", "check principles against a measure");
    add_model_options(check_cmd, check_args.model);
    check_cmd->add_option("principles", check_args.principles,
                          "PN PI PIst PEI PP PNFI")->required();
    check_cmd->add_option("--measure", check_args.measure, "thirder | halfer");
    check_cmd->add_option("--measure-file", check_args.measure_file,
                          "JSON file with 'weights' in extended-atom order");

    SolveArgs solve_args;
    auto* solve_cmd =
        app.add_subcommand("solve", "solve a principle subset over the measure simplex");
    add_model_options(solve_cmd, solve_args.model);
    solve_cmd->add_option("principles", solve_args.principles,
                          "PN PI PIst PEI PP PNFI")->required();

    EstimateArgs estimate_args;
    auto* estimate_cmd = app.add_subcommand("estimate", "seeded Monte Carlo estimate");
    add_model_options(estimate_cmd, estimate_args.model);
    estimate_cmd->add_option("--target", estimate_args.target,
                             "registered target, e.g. thirder-heads");
    estimate_cmd->add_option("--estimator", estimate_args.estimator, "thirder | halfer");
    estimate_cmd->add_option("--event", estimate_args.event, "named objective event");
    estimate_cmd->add_option("--colour", estimate_args.colour, "condition on ZS=colour");
    estimate_cmd->add_option("--which", estimate_args.which, "cosmo: E or L");
    estimate_cmd->add_option("--theta", estimate_args.theta, "cosmo: level index");
    estimate_cmd->add_option("--samples", estimate_args.samples, "sample count (1e6 ok)");
    estimate_cmd->add_option("--seed", estimate_args.seed, "RNG seed");
    estimate_cmd->add_option("--streams", estimate_args.streams, "worker threads");

    auto* scenarios_cmd = app.add_subcommand("scenarios", "list built-in scenarios");

    DumpArgs dump_args;
    auto* dump_cmd = app.add_subcommand("dump", "serialize a model to the file format");
    add_model_options(dump_cmd, dump_args.model);
    dump_cmd->add_option("--out", dump_args.out, "output path (default stdout)");

    for (auto* cmd : {query_cmd, check_cmd, solve_cmd, estimate_cmd, dump_cmd}) {
        cmd->add_flag_callback(
            "--format-records", []() { records_mode = true; },
            "emit one JSON record per result line");
        cmd->add_option_function<std::string>(
            "--format",
            [](const std::string& v) {
                if (v == "records") {
                    records_mode = true;
                } else if (v != "table") {
                    throw CLI::ValidationError("--format", "expected 'table' or 'records'");
                }
            },
            "table (default) or records");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (query_cmd->parsed()) return run_query(query_args);
        if (check_cmd->parsed()) return run_check(check_args);
        if (solve_cmd->parsed()) return run_solve(solve_args);
        if (estimate_cmd->parsed()) return run_estimate(estimate_args);
        if (scenarios_cmd->parsed()) return run_scenarios();
        if (dump_cmd->parsed()) return run_dump(dump_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const aobs::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const aobs::InvalidParamsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const aobs::SizeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const aobs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}
