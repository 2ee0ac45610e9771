#include "cracksim/fractal.hpp"

#include <stdexcept>

namespace cracksim {

void FractalParams::validate() const {
    if (depth < 0) throw std::invalid_argument("fractal depth must be >= 0");
    if (!(p > 0.0)) throw std::invalid_argument("fractal p must be > 0");
    if (!(angle_sigma_deg > 0.0)) throw std::invalid_argument("fractal angle_sigma_deg must be > 0");
}

Displacement sample_displacement(Rng& rng, const FractalParams& params) {
    double theta_deg = rng.normal(params.angle_mu_deg, params.angle_sigma_deg);
    double u = rng.uniform();
    return {params.p * std::sqrt(u), theta_deg * kPi / 180.0};
}

CrackPolyline subdivide_once(const CrackPolyline& polyline, Rng& rng, const FractalParams& params) {
    if (polyline.points.size() < 2) throw std::invalid_argument("polyline needs at least 2 points");

    CrackPolyline out;
    out.points.reserve((polyline.points.size() - 1) * 4 + 1);
    out.points.push_back(polyline.points.front());

    for (std::size_t i = 0; i + 1 < polyline.points.size(); ++i) {
        Vec2 a = polyline.points[i];
        Vec2 b = polyline.points[i + 1];
        Vec2 ab = b - a;
        Vec2 c = a + ab * (1.0 / 3.0);
        Vec2 d = a + ab * (2.0 / 3.0);
        Vec2 mid = (c + d) * 0.5;

        Displacement disp = sample_displacement(rng, params);
        double third_len = (d - c).norm();
        Vec2 dir = ab.norm() > 0.0 ? Vec2{ab.x / ab.norm(), ab.y / ab.norm()} : Vec2{1.0, 0.0};
        Vec2 offset = rotate(left_normal(dir), disp.angle_rad) * (disp.magnitude * third_len);
        Vec2 e = mid + offset;

        out.points.push_back(c);
        out.points.push_back(e);
        out.points.push_back(d);
        out.points.push_back(b);
    }
    return out;
}

CrackPolyline generate_crack_polyline(const FractalParams& params, std::uint64_t seed) {
    params.validate();
    Rng rng(seed);
    CrackPolyline line;
    line.points = {{0.0, 0.0}, {1.0, 0.0}};
    for (int i = 0; i < params.depth; ++i) line = subdivide_once(line, rng, params);
    return line;
}

}  // namespace cracksim
