#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cracksim/image.hpp"
#include "cracksim/rng.hpp"

namespace cracksim {

// Hyperparameters of the PMI affinity estimator.
//   n_pairs              samples drawn for each kernel density fit
//   pair_distance_*      integer pixel distance interval for joint pairs
//   neighborhood_radius  Euclidean disk radius for the per-pixel affinity sum
//   tau                  exponent boosting common pairs in the PMI ratio
//   grid_bins            density evaluation grid resolution over [0, 1]
//   min_variance         sample variance below which the texture is degenerate
struct PmiParams {
    int n_pairs = 10000;
    int pair_distance_min = 1;
    int pair_distance_max = 8;
    int neighborhood_radius = 5;
    double tau = 2.25;
    int grid_bins = 64;
    double min_variance = 1e-8;

    void validate() const;
};

// Gaussian KDE evaluated on a uniform grid over [0, 1], renormalized so the
// trapezoidal integral is 1. Scott bandwidth h = sigma * n^(-1/5).
struct Density1D {
    int bins = 0;
    double bandwidth = 0.0;
    std::vector<double> values;

    // Bilinear (here: linear) interpolation of the grid, input clamped to [0, 1].
    double value_at(double x) const;
};

// Product-kernel 2-D Gaussian KDE on a grid over [0, 1]^2, symmetrized in its
// arguments and renormalized to unit integral. Per-dimension Scott bandwidth
// h_k = sigma_k * n^(-1/6). Row-major: values[a_index * bins + b_index].
struct Density2D {
    int bins = 0;
    double bandwidth_a = 0.0;
    double bandwidth_b = 0.0;
    std::vector<double> values;

    double value_at(double a, double b) const;
};

struct DensityEstimate {
    Density1D marginal;
    Density2D joint;
};

// Per-pixel affinity scores; strictly positive, finite.
struct AffinityMap {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    AffinityMap() = default;
    AffinityMap(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
};

// Rec. 709 luminance.
GrayImage to_luminance(const RgbImage& rgb);

// Fits the marginal and joint gray-level densities from random samples.
// Draw order contract: n_pairs single pixels (x then y each), then n_pairs
// pairs (x, y, integer distance, angle each). Returns nullopt for degenerate
// (near-constant) textures.
std::optional<DensityEstimate> estimate_densities(const GrayImage& gray, const PmiParams& params,
                                                  Rng& rng);

// log( P(a,b)^tau / (P(a) * P(b)) ), densities interpolated on their grids and
// floored at 1e-12 so the log stays finite.
double pmi_score(const Density2D& joint, const Density1D& marginal, double a, double b, double tau);

// Affinity(i) = sum over the neighborhood disk of exp(PMI(v_i, v_j)), border
// neighbors clipped. Degenerate textures get a uniform map equal to the
// interior disk size (exp(PMI) = 1 convention).
AffinityMap affinity_map(const GrayImage& gray, const PmiParams& params, Rng& rng);

// Integer lattice offsets with 0 < distance <= radius.
std::vector<std::pair<int, int>> disk_offsets(int radius);

}  // namespace cracksim
