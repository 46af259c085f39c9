#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace contfit {

using Vec2 = std::array<double, 2>;
using ScalarField = std::function<double(double, double)>;

/// Sampling domain used throughout: the unit-rect experiment lives on [0,3]^2.
inline constexpr double kDomainLo = 0.0;
inline constexpr double kDomainHi = 3.0;

/// Rect(x - 3/2) * Rect(y - 3/2) with Rect(t) = 1 for |t| < 1/2 and 0 for
/// |t| > 1/2. On the boundary Rect(+-1/2) = 1/2 (symmetric convention);
/// boundary points have measure zero under random sampling, the convention
/// only pins down truth grids whose points can land exactly on an edge.
double rect2d(double x, double y);

/// Scattered samples with an optional train/validation index partition.
struct SampleSet {
    std::vector<Vec2> coords;
    std::vector<double> values;
    std::vector<std::size_t> train_idx; // empty <=> no split
    std::vector<std::size_t> val_idx;

    std::size_t size() const { return coords.size(); }
    bool has_split() const { return !train_idx.empty() || !val_idx.empty(); }

    /// Checks the structural invariants (sizes match, partition is disjoint,
    /// complete and nonempty on both sides). Throws std::invalid_argument.
    void validate() const;

    SampleSet subset(const std::vector<std::size_t>& idx) const;
    SampleSet train_subset() const;
    SampleSet val_subset() const;
};

/// Dense rectangular evaluation grid, row-major with y as the outer (row)
/// index: value index = iy * n_x + ix, grid point
/// (x_min + ix*(x_max-x_min)/(n_x-1), y_min + iy*(y_max-y_min)/(n_y-1)).
struct EvalGrid {
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    int n_x = 2, n_y = 2;
    std::vector<double> truth; // optional; size n_x*n_y when present

    void validate() const;
    std::size_t count() const { return static_cast<std::size_t>(n_x) * n_y; }
    double dx() const { return (x_max - x_min) / (n_x - 1); }
    double dy() const { return (y_max - y_min) / (n_y - 1); }
    Vec2 point(int iy, int ix) const { return {x_min + ix * dx(), y_min + iy * dy()}; }
    bool has_truth() const { return !truth.empty(); }

    /// Row-major coordinate list (y outer, x inner), endpoints included.
    std::vector<Vec2> coords() const;

    /// Fills `truth` by evaluating `target` at every grid point.
    void fill_truth(const ScalarField& target);

    /// Row index nearest to the requested y (cross-section helper).
    int nearest_row(double y) const;
};

/// Draws n i.i.d. uniform samples on [0,3]^2 and evaluates `target` exactly
/// at them (noise-free observations). Deterministic given the seed.
SampleSet gen_samples(std::size_t n, std::uint64_t seed, const ScalarField& target);

/// Partitions the samples into train/validation index sets by a seeded
/// uniformly random permutation; |train| = round(train_fraction * N).
/// Coordinates and values are preserved untouched. Throws if either side of
/// the partition would be empty.
SampleSet split_samples(const SampleSet& s, double train_fraction, std::uint64_t seed);

/// ||predicted - truth||_2 / ||truth||_2. Throws on length mismatch, empty
/// input, or zero-norm truth.
double nrmse(const std::vector<double>& predicted, const std::vector<double>& truth);

} // namespace contfit
