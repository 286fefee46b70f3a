#pragma once

// Counting standard Young tableaux (linear extensions of a CellPoset) by three
// independent routes, plus a sampling estimate of the order-polytope volume.

#include "sytstrip/arith.hpp"
#include "sytstrip/shapes.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace sytstrip {

struct CountLimits {
    std::size_t backtrack_max_cells = 25;
    std::size_t matrix_max_cells = 12;
    std::size_t dp_max_states = 20'000'000;  // profiles alive in one DP layer
};

/// Labels cells 1..N one at a time, always choosing a cell whose predecessors
/// are all labelled, and counts complete labelings. Exponential.
BigCount count_backtrack(const CellPoset& poset, const CountLimits& limits = {});

/// Counts maximal chains in the lattice of order ideals. Ideals are swept
/// forward by size, keyed by their row-prefix profile.
BigCount count_ideal_dp(const CellPoset& poset, const CountLimits& limits = {});

/// Counts rows x width matrices holding 1..rows*width that increase along
/// rows, columns, diagonals a(i,j) < a(i+1,j+1) and downward antidiagonals
/// a(i,j) < a(i+1,j-1). Works on the unshifted grid without a CellPoset.
BigCount count_matrix_model(const StripSpec& spec, const CountLimits& limits = {});

enum class VolumeEstimator {
    /// Weighted random linear extensions: at each step pick uniformly among
    /// the k available cells and weight the sample by the product of the k's.
    Sequential,
    /// Draw i.i.d. uniforms for all cells and test every inequality.
    HitOrMiss,
};

struct VolumeEstimate {
    double mean = 0.0;    // estimate of the volume J = g / N!
    double std_error = 0.0;  // standard error of `mean`
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    VolumeEstimator estimator = VolumeEstimator::Sequential;
    std::string generator;  // name of the pseudorandom engine

    /// mean * N! and its standard error, in units of tableaux.
    double count_estimate = 0.0;
    double count_stderr = 0.0;
};

std::string to_string(VolumeEstimator estimator);

/// Samples are split over a fixed number of independently seeded streams, so
/// the result depends only on (spec, samples, seed, estimator).
VolumeEstimate estimate_volume_mc(const StripSpec& spec, std::uint64_t samples, std::uint64_t seed,
                                  VolumeEstimator estimator = VolumeEstimator::Sequential);

}  // namespace sytstrip
