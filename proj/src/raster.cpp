#include "cracksim/raster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cracksim {

void PlacementParams::validate() const {
    if (!(rotation_max >= rotation_min)) throw std::invalid_argument("rotation interval inverted");
    if (!(span_min > 0.0) || !(span_max >= span_min) || span_max > 1.0)
        throw std::invalid_argument("span fractions must satisfy 0 < min <= max <= 1");
    if (margin_frac < 0.0 || margin_frac >= 0.5)
        throw std::invalid_argument("margin_frac must lie in [0, 0.5)");
    if (blur_kernel_choices.empty()) throw std::invalid_argument("blur_kernel_choices empty");
    for (int k : blur_kernel_choices)
        if (k <= 0 || k % 2 == 0) throw std::invalid_argument("blur kernels must be odd positive");
    if (!(mask_threshold > 0.0 && mask_threshold < 1.0))
        throw std::invalid_argument("mask_threshold must lie in (0, 1)");
}

namespace {

// Deposits `amount` of coverage around continuous position (x, y) with bilinear
// weights. Accumulation is clamped to 1 by the caller after the full path.
void splat(GrayImage& canvas, double x, double y, double amount) {
    int x0 = static_cast<int>(std::floor(x));
    int y0 = static_cast<int>(std::floor(y));
    double fx = x - x0;
    double fy = y - y0;
    const double w[4] = {(1 - fx) * (1 - fy), fx * (1 - fy), (1 - fx) * fy, fx * fy};
    const int px[4] = {x0, x0 + 1, x0, x0 + 1};
    const int py[4] = {y0, y0, y0 + 1, y0 + 1};
    for (int i = 0; i < 4; ++i) {
        if (px[i] < 0 || px[i] >= canvas.width || py[i] < 0 || py[i] >= canvas.height) continue;
        canvas.at(px[i], py[i]) += static_cast<float>(amount * w[i]);
    }
}

}  // namespace

void draw_polyline(GrayImage& canvas, const std::vector<Vec2>& points) {
    // Line-integral coverage: march each segment in sub-pixel steps and deposit
    // step_length worth of coverage bilinearly. A straight unit-speed pass
    // through a pixel row deposits ~1, reproducing Wu's fractional profile,
    // and stays stable when polyline vertices are denser than the pixel grid.
    constexpr double kStep = 0.25;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        Vec2 a = points[i];
        Vec2 b = points[i + 1];
        double len = (b - a).norm();
        if (len == 0.0) continue;
        int steps = std::max(1, static_cast<int>(std::ceil(len / kStep)));
        double dl = len / steps;
        for (int s = 0; s < steps; ++s) {
            double t = (s + 0.5) / steps;
            splat(canvas, a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t, dl);
        }
    }
    for (auto& v : canvas.data) v = std::min(v, 1.0f);
}

GrayImage gaussian_blur(const GrayImage& image, int kernel_size) {
    if (kernel_size <= 0 || kernel_size % 2 == 0)
        throw std::invalid_argument("gaussian kernel size must be odd positive");
    int half = kernel_size / 2;
    double sigma = kernel_size / 6.0;
    std::vector<double> w(kernel_size);
    double sum = 0.0;
    for (int i = -half; i <= half; ++i) {
        w[i + half] = std::exp(-(i * i) / (2.0 * sigma * sigma));
        sum += w[i + half];
    }
    for (auto& v : w) v /= sum;

    GrayImage tmp(image.width, image.height);
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            double acc = 0.0;
            for (int i = -half; i <= half; ++i) {
                int xi = std::clamp(x + i, 0, image.width - 1);
                acc += w[i + half] * image.at(xi, y);
            }
            tmp.at(x, y) = static_cast<float>(acc);
        }
    }
    GrayImage out(image.width, image.height);
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            double acc = 0.0;
            for (int i = -half; i <= half; ++i) {
                int yi = std::clamp(y + i, 0, image.height - 1);
                acc += w[i + half] * tmp.at(x, yi);
            }
            out.at(x, y) = static_cast<float>(acc);
        }
    }
    return out;
}

GrayImage render_crack_layer(const CrackPolyline& polyline, int width, int height,
                             const PlacementParams& placement, Rng& rng) {
    placement.validate();
    if (width < 32 || height < 32) throw std::invalid_argument("canvas below minimum");
    if (polyline.points.size() < 2) throw std::invalid_argument("polyline needs at least 2 points");

    double rotation = rng.uniform(placement.rotation_min, placement.rotation_max);
    double span_frac = rng.uniform(placement.span_min, placement.span_max);
    double ux = rng.uniform();
    double uy = rng.uniform();
    int kernel = placement.blur_kernel_choices[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(placement.blur_kernel_choices.size()) - 1))];

    Vec2 centroid{0.0, 0.0};
    for (auto p : polyline.points) centroid = centroid + p;
    centroid = centroid * (1.0 / static_cast<double>(polyline.points.size()));

    std::vector<Vec2> pts(polyline.points.size());
    Vec2 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
    Vec2 hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        pts[i] = rotate(polyline.points[i] - centroid, rotation);
        lo = {std::min(lo.x, pts[i].x), std::min(lo.y, pts[i].y)};
        hi = {std::max(hi.x, pts[i].x), std::max(hi.y, pts[i].y)};
    }

    double extent = std::max(hi.x - lo.x, hi.y - lo.y);
    double target = span_frac * std::min(width, height);
    double scale = target / extent;

    double margin_x = placement.margin_frac * width;
    double margin_y = placement.margin_frac * height;
    double free_x = std::max(0.0, (width - 1.0) - 2.0 * margin_x - (hi.x - lo.x) * scale);
    double free_y = std::max(0.0, (height - 1.0) - 2.0 * margin_y - (hi.y - lo.y) * scale);
    double off_x = margin_x + ux * free_x;
    double off_y = margin_y + uy * free_y;

    GrayImage canvas(width, height);
    for (auto& p : pts) p = {(p.x - lo.x) * scale + off_x, (p.y - lo.y) * scale + off_y};
    draw_polyline(canvas, pts);

    GrayImage blurred = gaussian_blur(canvas, kernel);
    float maxv = 0.0f;
    for (float v : blurred.data) maxv = std::max(maxv, v);
    if (maxv > 0.0f)
        for (auto& v : blurred.data) v /= maxv;
    return blurred;
}

BinaryMask to_mask(const GrayImage& layer, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("mask threshold must lie in (0, 1)");
    BinaryMask mask(layer.width, layer.height);
    for (std::size_t i = 0; i < layer.data.size(); ++i)
        mask.data[i] = layer.data[i] >= threshold ? 1 : 0;
    return mask;
}

}  // namespace cracksim
