#include "sytstrip/enumerate.hpp"

#include "sytstrip/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <thread>
#include <vector>

namespace sytstrip {

namespace {

struct Backtracker {
    const CellPoset& poset;
    std::vector<int> missing_preds;
    std::vector<std::size_t> available;
    std::uint64_t leaves = 0;

    void run(std::size_t placed) {
        if (placed == poset.size()) {
            ++leaves;
            return;
        }
        // iterate over a snapshot; `available` is restored before the next choice
        const std::vector<std::size_t> choices = available;
        for (std::size_t idx = 0; idx < choices.size(); ++idx) {
            const std::size_t cell = choices[idx];
            available.erase(std::find(available.begin(), available.end(), cell));
            std::size_t opened = 0;
            for (auto succ : poset.successors(cell)) {
                if (--missing_preds[succ] == 0) {
                    available.push_back(succ);
                    ++opened;
                }
            }
            run(placed + 1);
            available.resize(available.size() - opened);
            for (auto succ : poset.successors(cell)) ++missing_preds[succ];
            available.insert(available.begin() + static_cast<std::ptrdiff_t>(idx), cell);
        }
    }
};

}  // namespace

BigCount count_backtrack(const CellPoset& poset, const CountLimits& limits) {
    if (poset.size() > limits.backtrack_max_cells) {
        throw BudgetExceeded("backtracking is capped at " + std::to_string(limits.backtrack_max_cells) +
                             " cells, shape has " + std::to_string(poset.size()));
    }
    Backtracker bt{poset, std::vector<int>(poset.size()), {}};
    for (std::size_t i = 0; i < poset.size(); ++i) {
        bt.missing_preds[i] = static_cast<int>(poset.predecessors(i).size());
        if (bt.missing_preds[i] == 0) bt.available.push_back(i);
    }
    bt.run(0);
    return BigCount(static_cast<unsigned long>(bt.leaves));
}

BigCount count_ideal_dp(const CellPoset& poset, const CountLimits& limits) {
    const int rows = poset.rows();
    std::map<Profile, BigCount> layer{{Profile(rows, 0), BigCount(1)}};
    for (std::size_t size = 0; size < poset.size(); ++size) {
        std::map<Profile, BigCount> next;
        for (const auto& [profile, paths] : layer) {
            for (int r = 1; r <= rows; ++r) {
                if (!can_extend(poset, profile, r)) continue;
                Profile grown = profile;
                ++grown[r - 1];
                next[std::move(grown)] += paths;
            }
        }
        if (next.size() > limits.dp_max_states) {
            throw BudgetExceeded("ideal DP layer grew to " + std::to_string(next.size()) +
                                 " profiles (cap " + std::to_string(limits.dp_max_states) + ")");
        }
        layer = std::move(next);
    }
    if (layer.size() != 1) throw ExactnessError("ideal DP did not end at the full ideal");
    return layer.begin()->second;
}

namespace {

struct MatrixFiller {
    int rows;
    int cols;
    std::vector<int> entry;  // 0 = empty, row-major
    std::uint64_t completions = 0;

    bool filled(int i, int j) const {
        if (i < 0 || j < 0 || i >= rows || j >= cols) return true;  // no neighbour, no constraint
        return entry[i * cols + j] != 0;
    }

    // Entry (i,j) may receive the next (largest so far) value once every
    // neighbour that must be smaller already holds a value.
    bool ready(int i, int j) const {
        return entry[i * cols + j] == 0 && filled(i, j - 1) && filled(i - 1, j) &&
               filled(i - 1, j - 1) && filled(i - 1, j + 1);
    }

    void run(int value) {
        if (value > rows * cols) {
            ++completions;
            return;
        }
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                if (!ready(i, j)) continue;
                entry[i * cols + j] = value;
                run(value + 1);
                entry[i * cols + j] = 0;
            }
        }
    }
};

}  // namespace

BigCount count_matrix_model(const StripSpec& spec, const CountLimits& limits) {
    spec.validate();
    if (static_cast<std::size_t>(spec.cells()) > limits.matrix_max_cells) {
        throw BudgetExceeded("matrix model is capped at " + std::to_string(limits.matrix_max_cells) +
                             " cells, shape has " + std::to_string(spec.cells()));
    }
    MatrixFiller filler{spec.rows, spec.width, std::vector<int>(spec.cells(), 0)};
    filler.run(1);
    return BigCount(static_cast<unsigned long>(filler.completions));
}

std::string to_string(VolumeEstimator estimator) {
    return estimator == VolumeEstimator::Sequential ? "sequential" : "hit-or-miss";
}

namespace {

constexpr unsigned kStreams = 16;

struct StreamMoments {
    long double sum = 0;
    long double sum_sq = 0;
};

double sample_sequential(const CellPoset& poset, std::mt19937_64& rng, std::vector<int>& missing,
                         std::vector<std::size_t>& available) {
    available.clear();
    for (std::size_t i = 0; i < poset.size(); ++i) {
        missing[i] = static_cast<int>(poset.predecessors(i).size());
        if (missing[i] == 0) available.push_back(i);
    }
    double weight = 1.0;
    for (std::size_t step = 0; step < poset.size(); ++step) {
        weight *= static_cast<double>(available.size());
        std::uniform_int_distribution<std::size_t> pick(0, available.size() - 1);
        const std::size_t at = pick(rng);
        const std::size_t cell = available[at];
        available[at] = available.back();
        available.pop_back();
        for (auto succ : poset.successors(cell)) {
            if (--missing[succ] == 0) available.push_back(succ);
        }
    }
    return weight;
}

double sample_hit_or_miss(const CellPoset& poset, std::mt19937_64& rng, std::vector<double>& x) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto& v : x) v = unit(rng);
    for (const auto& [a, b] : poset.covers()) {
        if (!(x[a] < x[b])) return 0.0;
    }
    return 1.0;
}

}  // namespace

VolumeEstimate estimate_volume_mc(const StripSpec& spec, std::uint64_t samples, std::uint64_t seed,
                                  VolumeEstimator estimator) {
    if (samples == 0) throw std::invalid_argument("Monte Carlo needs at least one sample");
    const CellPoset poset = build_strip(spec);
    std::vector<StreamMoments> moments(kStreams);

    auto run_stream = [&](unsigned stream) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
        std::mt19937_64 rng(seq);
        const std::uint64_t begin = samples * stream / kStreams;
        const std::uint64_t end = samples * (stream + 1) / kStreams;
        std::vector<int> missing(poset.size());
        std::vector<std::size_t> available;
        std::vector<double> x(poset.size());
        StreamMoments m;
        for (std::uint64_t s = begin; s < end; ++s) {
            // the sequential weight counts tableaux; hit-or-miss is an indicator of the volume
            const double w = estimator == VolumeEstimator::Sequential
                                 ? sample_sequential(poset, rng, missing, available)
                                 : sample_hit_or_miss(poset, rng, x);
            m.sum += w;
            m.sum_sq += static_cast<long double>(w) * w;
        }
        moments[stream] = m;
    };

    const unsigned workers = std::max(1u, std::min(kStreams, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (unsigned stream = w; stream < kStreams; stream += workers) run_stream(stream);
        });
    }
    for (auto& t : pool) t.join();

    StreamMoments total;
    for (const auto& m : moments) {  // fixed order keeps the sum reproducible
        total.sum += m.sum;
        total.sum_sq += m.sum_sq;
    }
    const long double n = static_cast<long double>(samples);
    const long double mean = total.sum / n;
    const long double var = samples > 1 ? std::max<long double>(0, (total.sum_sq - n * mean * mean) / (n - 1)) : 0;
    const long double se = std::sqrt(var / n);

    const double n_fact = factorial(static_cast<unsigned>(poset.size())).get_d();
    VolumeEstimate out;
    out.samples = samples;
    out.seed = seed;
    out.estimator = estimator;
    out.generator = "mt19937_64 (seed_seq{seed_lo, seed_hi, stream}, 16 streams)";
    if (estimator == VolumeEstimator::Sequential) {
        out.count_estimate = static_cast<double>(mean);
        out.count_stderr = static_cast<double>(se);
        out.mean = out.count_estimate / n_fact;
        out.std_error = out.count_stderr / n_fact;
    } else {
        out.mean = static_cast<double>(mean);
        out.std_error = static_cast<double>(se);
        out.count_estimate = out.mean * n_fact;
        out.count_stderr = out.std_error * n_fact;
    }
    return out;
}

}  // namespace sytstrip
