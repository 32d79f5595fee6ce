#pragma once

// Euclidean arc length and curvature of sampled curves, reconstruction from a
// prescribed curvature, closedness of periodic curvature and the distance estimates.

#include <cstdint>
#include <optional>
#include <string>

#include "curvrec/curvespec.hpp"
#include "curvrec/geometry.hpp"
#include "curvrec/rational.hpp"
#include "curvrec/report.hpp"

namespace curvrec {

/// Starting point and tangent angle; the default is the origin with T = (1, 0).
struct Pose {
    Point2 origin{};
    double angle{0.0};
};

struct TangentialAngle {
    std::vector<double> grid;
    std::vector<double> theta;
};

struct ClosureReport {
    std::optional<Rational> ratio;  ///< turning / symmetry, empty when no capped rational is close enough
    bool predicted_closed{false};
    double period{0.0};
    double minimal_period{0.0};     ///< symmetry * period (0 when ratio is empty)
    std::int64_t turning_number{0};
    std::int64_t symmetry_index{0};
    double mean_turn{0.0};          ///< (1 / 2 pi) * integral of kappa over one period
    bool exact{false};              ///< ratio came from exact arithmetic, not quadrature
    std::string note;
};

/// Resample on a uniform arc-length grid of the same size, starting at s = 0.
/// Throws RegularityError at the first zero-speed node.
[[nodiscard]] SampledCurve arclength_reparametrize(const SampledCurve& curve);

/// Signed curvature det(g', g'') / |g'|^3 at every node (5-point stencils, one-sided
/// at the ends), returned against the curve's arc length.
[[nodiscard]] SampledFunction euclidean_curvature(const SampledCurve& curve);

/// Sample count actually used for [a, b]: at least `requested`, 1024 and
/// 4 (b - a) sup|kappa| / pi, rounded up to odd.
[[nodiscard]] std::size_t euclidean_sample_count(const CurvatureSpec& kappa, double a, double b, std::size_t requested);

/// theta(s) = angle + integral of kappa from a to s on the uniform grid.
[[nodiscard]] TangentialAngle tangential_angle(const CurvatureSpec& kappa, double a, double b, std::size_t n,
                                               double angle = 0.0);

/// Unit-speed curve with curvature kappa on [a, b], params are s in [a, b].
/// Throws std::invalid_argument unless b > a and n >= 16.
[[nodiscard]] SampledCurve reconstruct_euclidean(const CurvatureSpec& kappa, double a, double b, std::size_t n,
                                                 const Pose& pose = {});
[[nodiscard]] inline SampledCurve reconstruct_euclidean(const CurvatureSpec& kappa, double L, std::size_t n,
                                                        const Pose& pose = {}) {
    return reconstruct_euclidean(kappa, 0.0, L, n, pose);
}

/// Rational mean turn over one period. `period` defaults to the curvature's natural period;
/// throws curvrec::Error if neither is available.
[[nodiscard]] ClosureReport classify_closure(const CurvatureSpec& kappa, std::optional<double> period = std::nullopt);

/// Net tangent rotations of a closed polyline. Throws curvrec::Error when the endpoint
/// gap exceeds `tol` (default 1e-5 * max(1, bounding-box diagonal)).
[[nodiscard]] std::int64_t turning_number(const SampledCurve& curve, std::optional<double> tol = std::nullopt);

/// Reconstruct both curvatures on [a, b] from the default pose and compare against
/// delta L^2 / 2 (linf) or delta L (l1); certified against the sqrt(2)-scaled versions.
[[nodiscard]] BoundReport euclidean_bound_check(const CurvatureSpec& k1, const CurvatureSpec& k2, double a, double b,
                                                NormKind norm, std::size_t n = 8193);
[[nodiscard]] inline BoundReport euclidean_bound_check(const CurvatureSpec& k1, const CurvatureSpec& k2, double L,
                                                       NormKind norm, std::size_t n = 8193) {
    return euclidean_bound_check(k1, k2, 0.0, L, norm, n);
}

}  // namespace curvrec
