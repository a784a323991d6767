// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0
//
// Seeded estimators. Sample i always draws from its own counter stream i,
// and sums are accumulated per fixed-size block and merged in block order,
// so every estimate is a pure function of (seed, parameters) regardless of
// how many worker threads run the blocks.

#include "aobs/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <utility>
#include <vector>

#include "aobs/errors.hpp"
#include "aobs/observation.hpp"

namespace aobs {

namespace {

constexpr std::int64_t block_size = 8192;

struct SamplePoint {
    double a = 0.0;
    double b = 0.0;
    bool rejected = false;
};

struct BlockSums {
    double sa = 0.0, sb = 0.0, saa = 0.0, sab = 0.0, sbb = 0.0;
    std::int64_t rejected = 0;
};

struct RunTotals {
    BlockSums sums;
    std::int64_t n = 0;
};

template <typename PointFn>
RunTotals run_blocks(const PointFn& point_of_sample, const EstimateOptions& options) {
    if (options.n_samples < 1) {
        throw InvalidParamsError("n_samples must be at least 1");
    }
    const std::int64_t n = options.n_samples;
    const std::int64_t blocks = (n + block_size - 1) / block_size;
    std::vector<BlockSums> partials(static_cast<std::size_t>(blocks));

    auto run_block = [&](std::int64_t block) {
        BlockSums sums;
        const std::int64_t first = block * block_size;
        const std::int64_t last = std::min(n, first + block_size);
        for (std::int64_t i = first; i < last; ++i) {
            CounterRng rng(options.seed, static_cast<std::uint64_t>(i));
            SamplePoint p = point_of_sample(rng);
            if (p.rejected) ++sums.rejected;
            sums.sa += p.a;
            sums.sb += p.b;
            sums.saa += p.a * p.a;
            sums.sab += p.a * p.b;
            sums.sbb += p.b * p.b;
        }
        partials[static_cast<std::size_t>(block)] = sums;
    };

    const int workers = std::max(1, options.streams);
    if (workers == 1 || blocks == 1) {
        for (std::int64_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&, t]() {
                for (std::int64_t b = t; b < blocks; b += workers) run_block(b);
            });
        }
        for (auto& th : pool) th.join();
    }

    RunTotals totals;
    totals.n = n;
    for (const auto& sums : partials) {
        totals.sums.sa += sums.sa;
        totals.sums.sb += sums.sb;
        totals.sums.saa += sums.saa;
        totals.sums.sab += sums.sab;
        totals.sums.sbb += sums.sbb;
        totals.sums.rejected += sums.rejected;
    }
    return totals;
}

/// Ratio estimate sum(a)/sum(b) with the delta-method standard error.
Estimate finish_ratio(const RunTotals& totals, const EstimateOptions& options) {
    const auto& s = totals.sums;
    const double n = static_cast<double>(totals.n);
    Estimate est;
    est.n_samples = totals.n;
    est.seed = options.seed;
    est.value = s.sa / s.sb;
    if (totals.n > 1) {
        const double mean_b = s.sb / n;
        double spread = s.saa - 2.0 * est.value * s.sab + est.value * est.value * s.sbb;
        if (spread < 0.0) spread = 0.0; // rounding when a == R*b identically
        est.std_error = std::sqrt(spread / (n - 1.0)) / (mean_b * std::sqrt(n));
    }
    return est;
}

} // namespace

Estimate estimate_thirder(const Sampler& sampler, bool colour_query,
                          const EstimateOptions& options) {
    RunTotals totals = run_blocks(
        [&](CounterRng& rng) {
            DrawSummary draw = sampler(rng);
            double w = static_cast<double>(colour_query ? draw.colour_hits
                                                        : draw.occupied);
            SamplePoint p;
            p.a = draw.in_event ? w : 0.0;
            p.b = w;
            return p;
        },
        options);
    if (totals.sums.sb == 0.0) {
        throw ZeroDenominatorError("thirder estimator: total weight is zero");
    }
    return finish_ratio(totals, options);
}

Estimate estimate_halfer(const Sampler& sampler, bool colour_query,
                         const EstimateOptions& options) {
    RunTotals totals = run_blocks(
        [&](CounterRng& rng) {
            DrawSummary draw = sampler(rng);
            SamplePoint p;
            if (draw.occupied < 1) {
                p.rejected = true;
                return p;
            }
            if (colour_query) {
                double w = static_cast<double>(draw.colour_hits) /
                           static_cast<double>(draw.occupied);
                p.a = draw.in_event ? w : 0.0;
                p.b = w;
            } else {
                p.a = draw.in_event ? 1.0 : 0.0;
                p.b = 1.0;
            }
            return p;
        },
        options);
    if (totals.sums.rejected == totals.n) {
        throw AllRejectedError("halfer estimator: every draw had no observers");
    }
    if (totals.sums.sb == 0.0) {
        throw ZeroDenominatorError("halfer estimator: accepted weight is zero");
    }
    return finish_ratio(totals, options);
}

Sampler make_space_sampler(const ExtendedSpace& space, const Event& objective_f,
                           std::optional<int> colour) {
    if (!objective_f.is_objective()) {
        throw NotObjectiveError("samplers take objective query events");
    }
    if (colour && (*colour < 0 || *colour >= space.base().colour_count())) {
        throw UnknownColourError("colour index outside the alphabet");
    }
    struct AtomSummary {
        double cumulative;
        DrawSummary draw;
    };
    auto table = std::make_shared<std::vector<AtomSummary>>();
    double acc = 0.0;
    for (std::size_t a = 0; a < space.base().atom_count(); ++a) {
        const auto& atom = space.base().atom(a);
        acc += to_double(atom.weight);
        DrawSummary draw;
        draw.occupied = atom.occupied.count();
        draw.colour_hits = colour ? colour_count(atom, *colour) : 0;
        draw.in_event = objective_f.contains(space.index_of(a, 0));
        table->push_back({acc, draw});
    }
    table->back().cumulative = 1.0; // absorb rounding in the last atom

    return [table](CounterRng& rng) {
        double u = rng.next_uniform();
        std::size_t lo = 0, hi = table->size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if ((*table)[mid].cumulative > u) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        return (*table)[lo].draw;
    };
}

Sampler make_cycle_sampler(int cycles, int red_cycles, double p) {
    if (cycles < 2 || red_cycles < 1 || red_cycles > cycles - 1) {
        throw InvalidParamsError("make_cycle_sampler needs 1 <= M <= N-1");
    }
    return [cycles, red_cycles, p](CounterRng& rng) {
        bool special = rng.next_bernoulli(0.5); // theory SR
        int red = special ? red_cycles : cycles;
        std::int64_t red_hits = sample_binomial(rng, red, p);
        std::int64_t blue_hits = sample_binomial(rng, cycles - red, p);
        DrawSummary draw;
        draw.occupied = red_hits + blue_hits;
        draw.colour_hits = red_hits;
        draw.in_event = special;
        return draw;
    };
}

Sampler make_two_zone_sampler(int half_width, double p0, double p1, double p2) {
    if (half_width < 1) {
        throw InvalidParamsError("make_two_zone_sampler needs half_width >= 1");
    }
    return [half_width, p0, p1, p2](CounterRng& rng) {
        bool w1 = rng.next_bernoulli(0.5);
        std::int64_t negative = sample_binomial(rng, half_width, p0);
        std::int64_t positive = sample_binomial(rng, half_width, w1 ? p2 : p1);
        DrawSummary draw;
        draw.occupied = negative + positive;
        draw.colour_hits = negative; // colour "0" marks the negative zone
        draw.in_event = !w1;
        return draw;
    };
}

Estimate estimate_cosmo_pi(const CosmoParams& params, MeasureFamily which,
                           int theta, const EstimateOptions& options) {
    if (theta < 0 || theta >= params.levels) {
        throw InvalidParamsError("estimate_cosmo_pi: theta out of range");
    }
    if (which == MeasureFamily::thirder) {
        Estimate est;
        est.value = to_double(cosmo_thirder_pi(params, theta));
        est.std_error = 0.0;
        est.n_samples = options.n_samples;
        est.seed = options.seed;
        return est;
    }

    const int n = params.levels;
    const double p_exist = to_double(params.kappa) / static_cast<double>(n);
    // Per-level observer-count cdf over 0..n0.
    auto cdf = std::make_shared<std::vector<std::vector<double>>>();
    for (const auto& pmf : params.observer_pmf) {
        std::vector<double> row;
        double acc = 0.0;
        for (const auto& q : pmf) {
            acc += to_double(q);
            row.push_back(acc);
        }
        row.back() = 1.0;
        cdf->push_back(std::move(row));
    }

    auto draw_count = [cdf](CounterRng& rng, int level) {
        const auto& row = (*cdf)[static_cast<std::size_t>(level)];
        double u = rng.next_uniform();
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (u < row[k]) return static_cast<std::int64_t>(k);
        }
        return static_cast<std::int64_t>(row.size() - 1);
    };

    RunTotals totals = run_blocks(
        [&, n, p_exist, theta](CounterRng& rng) {
            // The existing-universe set is a uniform subset of a binomial
            // size, sampled with Floyd's algorithm; only the selected levels
            // draw observer counts.
            static thread_local std::vector<std::uint8_t> member;
            static thread_local std::vector<int> touched;
            if (member.size() != static_cast<std::size_t>(n)) {
                member.assign(static_cast<std::size_t>(n), 0);
            }
            touched.clear();

            std::int64_t existing = sample_binomial(rng, n, p_exist);
            for (std::int64_t j = static_cast<std::int64_t>(n) - existing;
                 j < static_cast<std::int64_t>(n); ++j) {
                auto t = static_cast<int>(
                    rng.next_below(static_cast<std::uint64_t>(j) + 1));
                int pick = member[static_cast<std::size_t>(t)] ? static_cast<int>(j) : t;
                member[static_cast<std::size_t>(pick)] = 1;
                touched.push_back(pick);
            }

            std::int64_t total = 0, at_theta = 0;
            for (int level : touched) {
                std::int64_t y = draw_count(rng, level);
                total += y;
                if (level == theta) at_theta = y;
            }
            for (int level : touched) member[static_cast<std::size_t>(level)] = 0;

            SamplePoint p;
            if (total < 1) {
                p.rejected = true;
                return p;
            }
            p.a = static_cast<double>(at_theta) / static_cast<double>(total);
            p.b = 1.0;
            return p;
        },
        options);

    if (totals.sums.rejected == totals.n) {
        throw AllRejectedError("estimate_cosmo_pi: no universe ever existed");
    }
    return finish_ratio(totals, options);
}

} // namespace aobs
