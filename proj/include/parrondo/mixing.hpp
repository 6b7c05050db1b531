#pragma once

#include <variant>

#include "parrondo/analysis.hpp"

namespace parrondo::mixing {

using analysis::ProbabilityPoint;

/// Straight segment between the two games.
struct Linear {};

/// Quadratic Bezier whose control point is the segment midpoint moved by
/// `kappa` along the unit left normal of the direction from game B to game A.
struct Bent {
    double kappa = 0.0;
};

using PathKind = std::variant<Linear, Bent>;

struct MixPath {
    ProbabilityPoint endpoint_a; ///< game A on the diagonal, (p1, p1)
    ProbabilityPoint endpoint_b; ///< game B, (p2, p3)
    PathKind kind;
};

/// (gamma p1 + (1-gamma) p2, gamma p1 + (1-gamma) p3).
ProbabilityPoint linear_mix(const GameA& a, const CapitalGameB& b, double gamma);

MixPath make_path(const GameA& a, const CapitalGameB& b, PathKind kind);

/// path(0) is game B, path(1) is game A. Throws PathRangeError when the
/// point leaves the unit square and ArgumentError when t is outside [0, 1].
ProbabilityPoint path_point(const MixPath& path, double t);

/// Condition-based game that plays p.p2 on multiples of m and p.p3 otherwise.
CapitalGameB compound_from_point(const ProbabilityPoint& p, int m);

/// Euclidean distance from p to the fair curve {(boundary_p2(q, m), q)},
/// positive in the winning region, negative in the losing region and 0 on
/// the boundary band.
double signed_boundary_distance(const ProbabilityPoint& p, int m);

} // namespace parrondo::mixing
