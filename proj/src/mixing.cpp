#include "parrondo/mixing.hpp"

#include <cmath>

namespace parrondo::mixing {

namespace {

struct Vec2 {
    double x;
    double y;
};

Vec2 as_vec(const ProbabilityPoint& p) { return {p.p2.value(), p.p3.value()}; }

double squared_distance(const Vec2& p, double q, int m) {
    const double dx = p.x - analysis::boundary_p2(Probability(q), m).value();
    const double dy = p.y - q;
    return dx * dx + dy * dy;
}

constexpr int kScanPoints = 1000;
constexpr double kSearchTolerance = 1e-10;

} // namespace

ProbabilityPoint linear_mix(const GameA& a, const CapitalGameB& b, double gamma) {
    check_gamma(gamma);
    return {mix(a.p1, b.p2, gamma), mix(a.p1, b.p3, gamma)};
}

MixPath make_path(const GameA& a, const CapitalGameB& b, PathKind kind) {
    return {{a.p1, a.p1}, {b.p2, b.p3}, kind};
}

ProbabilityPoint path_point(const MixPath& path, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw ArgumentError("path parameter must be in [0, 1]");
    }
    if (std::holds_alternative<Linear>(path.kind)) {
        return {mix(path.endpoint_a.p2, path.endpoint_b.p2, t), mix(path.endpoint_a.p3, path.endpoint_b.p3, t)};
    }
    const double kappa = std::get<Bent>(path.kind).kappa;
    const Vec2 p0 = as_vec(path.endpoint_b);
    const Vec2 p1 = as_vec(path.endpoint_a);
    const double dx = p1.x - p0.x;
    const double dy = p1.y - p0.y;
    const double len = std::hypot(dx, dy);
    Vec2 normal{0.0, 0.0};
    if (len > 0.0) {
        normal = {-dy / len, dx / len};
    }
    const Vec2 control{0.5 * (p0.x + p1.x) + kappa * normal.x, 0.5 * (p0.y + p1.y) + kappa * normal.y};

    const double u = 1.0 - t;
    const double w0 = u * u;
    const double w1 = 2.0 * u * t;
    const double w2 = t * t;
    const double x = w0 * p0.x + w1 * control.x + w2 * p1.x;
    const double y = w0 * p0.y + w1 * control.y + w2 * p1.y;
    if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
        throw PathRangeError("mixing path leaves the unit square at t = " + std::to_string(t));
    }
    return {Probability(x), Probability(y)};
}

CapitalGameB compound_from_point(const ProbabilityPoint& p, int m) { return {p.p2, p.p3, m}; }

double signed_boundary_distance(const ProbabilityPoint& p, int m) {
    const auto region = analysis::classify_point(p, m);
    if (region == analysis::Region::Boundary) {
        return 0.0;
    }
    const Vec2 v = as_vec(p);

    // Coarse scan, then golden-section refinement inside the best bracket.
    int best = 0;
    double best_d = squared_distance(v, 0.0, m);
    for (int i = 1; i <= kScanPoints; ++i) {
        const double d = squared_distance(v, static_cast<double>(i) / kScanPoints, m);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    double lo = static_cast<double>(std::max(best - 1, 0)) / kScanPoints;
    double hi = static_cast<double>(std::min(best + 1, kScanPoints)) / kScanPoints;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = squared_distance(v, c, m);
    double fd = squared_distance(v, d, m);
    while (hi - lo > kSearchTolerance) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = squared_distance(v, c, m);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = squared_distance(v, d, m);
        }
    }
    const double dist = std::sqrt(std::min({best_d, fc, fd}));
    return region == analysis::Region::Winning ? dist : -dist;
}

} // namespace parrondo::mixing
