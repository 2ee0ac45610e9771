#pragma once

#include <cstdint>
#include <vector>

#include "cracksim/geometry.hpp"
#include "cracksim/rng.hpp"

namespace cracksim {

// Parameters of the stochastic Koch-variant subdivision.
//   depth            number of subdivision iterations
//   p                maximum displacement magnitude, as a fraction of the
//                    middle-third segment length
//   angle_mu_deg     mean of the displacement-angle Gaussian, degrees
//   angle_sigma_deg  std of the displacement-angle Gaussian, degrees
struct FractalParams {
    int depth = 7;
    double p = 1.0;
    double angle_mu_deg = 0.0;
    double angle_sigma_deg = 30.0;

    void validate() const;
};

// Ordered crack centerline in a unit-normalized frame. After d subdivisions of
// a single segment the polyline holds exactly 4^d + 1 points.
struct CrackPolyline {
    std::vector<Vec2> points;
};

struct Displacement {
    double magnitude = 0.0;  // r, fraction of the middle-third length
    double angle_rad = 0.0;  // theta
};

// Draw order contract: theta first (one normal = two raw draws), then u for
// the magnitude. r has density 2r/p^2 on [0, p]; inverse CDF gives r = p*sqrt(u).
Displacement sample_displacement(Rng& rng, const FractalParams& params);

// Replaces every segment A-B with A-C-E-D-B, where C and D trisect AB and E is
// the displaced middle point: E = midpoint(C, D) + r*|CD| * rotate(left_normal, theta).
// Segments are processed in list order; one sample_displacement call each.
CrackPolyline subdivide_once(const CrackPolyline& polyline, Rng& rng, const FractalParams& params);

// Runs `depth` subdivision passes on the unit horizontal segment (0,0)-(1,0).
CrackPolyline generate_crack_polyline(const FractalParams& params, std::uint64_t seed);

}  // namespace cracksim
