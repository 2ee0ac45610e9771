#pragma once

#include <vector>

#include "cracksim/fractal.hpp"
#include "cracksim/image.hpp"
#include "cracksim/rng.hpp"

namespace cracksim {

// Placement and widening of a crack polyline on a pixel canvas.
//   rotation_min/max     uniform rotation interval (radians) about the centroid
//   span_min/max         major-axis span as a fraction of min(canvas w, h)
//   margin_frac          fraction of each canvas dimension kept clear around the crack
//   blur_kernel_choices  odd Gaussian kernel sizes, drawn uniformly (sigma = size/6)
//   mask_threshold       intensity cut turning the blurred layer into ground truth
struct PlacementParams {
    double rotation_min = 0.0;
    double rotation_max = 2.0 * kPi;
    double span_min = 0.4;
    double span_max = 0.9;
    double margin_frac = 0.05;
    std::vector<int> blur_kernel_choices = {3, 5};
    double mask_threshold = 0.5;

    void validate() const;
};

// Anti-aliased (Wu) path drawing with max-coverage blending, intensity 1.
void draw_polyline(GrayImage& canvas, const std::vector<Vec2>& points);

// Separable Gaussian blur, sigma = kernel_size / 6, clamp-to-edge borders.
// Kernel weights are normalized, so interior strokes conserve total intensity.
GrayImage gaussian_blur(const GrayImage& image, int kernel_size);

// Rotates the polyline about its centroid, scales its bounding box to a random
// span of the canvas, places it uniformly inside the margins, draws it, blurs it
// with a randomly chosen kernel and renormalizes to max intensity 1.
// Draw order contract: rotation, span fraction, offset x, offset y, kernel index.
GrayImage render_crack_layer(const CrackPolyline& polyline, int width, int height,
                             const PlacementParams& placement, Rng& rng);

// mask = 1 where intensity >= threshold. threshold must lie in (0, 1).
BinaryMask to_mask(const GrayImage& layer, double threshold);

}  // namespace cracksim
