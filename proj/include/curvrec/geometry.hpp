#pragma once

// Planar vectors, the SE(2)/SA(2) groups acting on row vectors, sampled curves,
// norms and the Hausdorff distance.
//
// Points are row vectors. A group element (M, v) acts by p -> p * M^{-1} + v and
// composes as (M1, v1)(M2, v2) = (M1 M2, v2 M1^{-1} + v1).

#include <cmath>
#include <span>
#include <variant>
#include <vector>

namespace curvrec {

inline constexpr double kDefaultGroupTolerance = 1e-9;

struct Point2 {
    double x{0.0};
    double y{0.0};

    constexpr Point2& operator+=(const Point2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr Point2& operator-=(const Point2& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    friend constexpr Point2 operator+(Point2 a, const Point2& b) { return a += b; }
    friend constexpr Point2 operator-(Point2 a, const Point2& b) { return a -= b; }
    friend constexpr Point2 operator-(const Point2& a) { return {-a.x, -a.y}; }
    friend constexpr Point2 operator*(double s, const Point2& a) { return {s * a.x, s * a.y}; }
    friend constexpr Point2 operator*(const Point2& a, double s) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

[[nodiscard]] constexpr double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
/// det of the matrix with rows a, b.
[[nodiscard]] constexpr double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
[[nodiscard]] inline double norm(const Point2& a) { return std::hypot(a.x, a.y); }
/// Counterclockwise quarter turn.
[[nodiscard]] constexpr Point2 perp(const Point2& a) { return {-a.y, a.x}; }
[[nodiscard]] inline double max_component(const Point2& a) { return std::max(std::abs(a.x), std::abs(a.y)); }
[[nodiscard]] bool is_finite(const Point2& p);

struct Mat2 {
    double a11{1.0};
    double a12{0.0};
    double a21{0.0};
    double a22{1.0};

    [[nodiscard]] static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    [[nodiscard]] static constexpr Mat2 zero() { return {0.0, 0.0, 0.0, 0.0}; }
    /// Counterclockwise rotation matrix R_theta = [[cos, -sin], [sin, cos]].
    [[nodiscard]] static Mat2 rotation(double theta);
    [[nodiscard]] static constexpr Mat2 from_rows(const Point2& r1, const Point2& r2) {
        return {r1.x, r1.y, r2.x, r2.y};
    }

    [[nodiscard]] constexpr double det() const { return a11 * a22 - a12 * a21; }
    [[nodiscard]] constexpr Point2 row1() const { return {a11, a12}; }
    [[nodiscard]] constexpr Point2 row2() const { return {a21, a22}; }
    [[nodiscard]] constexpr Mat2 transpose() const { return {a11, a21, a12, a22}; }
    /// Throws std::domain_error when singular.
    [[nodiscard]] Mat2 inverse() const;

    friend constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
    friend constexpr Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
    }
    friend constexpr Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
    }
    friend constexpr Mat2 operator*(double s, const Mat2& a) {
        return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
    }
    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

/// Row vector times matrix.
[[nodiscard]] constexpr Point2 operator*(const Point2& p, const Mat2& m) {
    return {p.x * m.a11 + p.y * m.a21, p.x * m.a12 + p.y * m.a22};
}

/// Largest absolute entry.
[[nodiscard]] double max_norm(const Mat2& a);

/// Largest absolute value over a sampled function. This is a lower bound on the
/// continuum sup over the sampled interval. Throws std::invalid_argument when empty.
[[nodiscard]] double sup_norm(std::span<const double> values);

/// Orientation-preserving rigid motion (rotation, translation).
class RigidMotion {
public:
    RigidMotion() = default;
    /// Throws std::invalid_argument unless `rotation` is orthogonal with det +1 within `tol`.
    RigidMotion(const Mat2& rotation, const Point2& translation, double tol = kDefaultGroupTolerance);

    [[nodiscard]] static RigidMotion identity() { return {}; }
    [[nodiscard]] static RigidMotion from_angle(double theta, const Point2& translation = {});

    [[nodiscard]] const Mat2& rotation() const { return rotation_; }
    [[nodiscard]] const Point2& translation() const { return translation_; }
    [[nodiscard]] double angle() const { return std::atan2(rotation_.a21, rotation_.a11); }

    [[nodiscard]] Point2 apply(const Point2& p) const;
    [[nodiscard]] RigidMotion inverse() const;

private:
    Mat2 rotation_ = Mat2::identity();
    Point2 translation_{};
};

/// Equi-affine map (unimodular linear part, translation).
class EquiAffineMap {
public:
    EquiAffineMap() = default;
    /// Throws std::invalid_argument unless det(linear) = 1 within `tol`.
    EquiAffineMap(const Mat2& linear, const Point2& translation, double tol = kDefaultGroupTolerance);
    /// Every rigid motion is equi-affine.
    explicit EquiAffineMap(const RigidMotion& g);

    [[nodiscard]] static EquiAffineMap identity() { return {}; }

    [[nodiscard]] const Mat2& linear() const { return linear_; }
    [[nodiscard]] const Point2& translation() const { return translation_; }

    [[nodiscard]] Point2 apply(const Point2& p) const;
    [[nodiscard]] EquiAffineMap inverse() const;

private:
    Mat2 linear_ = Mat2::identity();
    Point2 translation_{};
};

[[nodiscard]] RigidMotion se2_compose(const RigidMotion& g1, const RigidMotion& g2);
[[nodiscard]] EquiAffineMap sa2_compose(const EquiAffineMap& g1, const EquiAffineMap& g2);
[[nodiscard]] inline Point2 apply_motion(const RigidMotion& g, const Point2& p) { return g.apply(p); }
[[nodiscard]] inline Point2 apply_motion(const EquiAffineMap& g, const Point2& p) { return g.apply(p); }

/// Strictly increasing parameter grid with one point per node (at least two).
class SampledCurve {
public:
    SampledCurve() = default;
    /// Throws std::invalid_argument on size mismatch, fewer than 2 nodes,
    /// non-finite data or a non-increasing grid.
    SampledCurve(std::vector<double> params, std::vector<Point2> points);

    [[nodiscard]] const std::vector<double>& params() const { return params_; }
    [[nodiscard]] const std::vector<Point2>& points() const { return points_; }
    [[nodiscard]] std::size_t size() const { return params_.size(); }
    [[nodiscard]] double length() const { return params_.back() - params_.front(); }
    [[nodiscard]] const Point2& front() const { return points_.front(); }
    [[nodiscard]] const Point2& back() const { return points_.back(); }
    [[nodiscard]] double endpoint_gap() const { return norm(points_.back() - points_.front()); }

private:
    std::vector<double> params_;
    std::vector<Point2> points_;
};

[[nodiscard]] SampledCurve transform(const SampledCurve& c, const RigidMotion& g);
[[nodiscard]] SampledCurve transform(const SampledCurve& c, const EquiAffineMap& g);

/// Scalar function on a strictly increasing grid.
struct SampledFunction {
    std::vector<double> grid;
    std::vector<double> values;
};

enum class FrameMode { euclidean, affine };

/// Moving frame with rows T and N.
struct FrameMatrix {
    Point2 T{1.0, 0.0};
    Point2 N{0.0, 1.0};

    [[nodiscard]] Mat2 matrix() const { return Mat2::from_rows(T, N); }
    [[nodiscard]] static FrameMatrix from(const Mat2& m) { return {m.row1(), m.row2()}; }
    [[nodiscard]] double det() const { return cross(T, N); }
    /// Euclidean: orthonormal rows, det +1. Affine: det 1.
    [[nodiscard]] bool is_valid(FrameMode mode, double tol = kDefaultGroupTolerance) const;
};

/// Hausdorff distance between two polylines, measured point-to-segment in both
/// directions. A single-point polyline is a point.
[[nodiscard]] double hausdorff_distance(std::span<const Point2> p, std::span<const Point2> q);
[[nodiscard]] double hausdorff_distance(const SampledCurve& p, const SampledCurve& q);
/// sup over p in P of the distance from p to the polyline Q.
[[nodiscard]] double directed_hausdorff(std::span<const Point2> p, std::span<const Point2> q);

[[nodiscard]] double point_segment_distance(const Point2& p, const Point2& a, const Point2& b);

/// Largest max-component difference between two curves on the same number of nodes.
[[nodiscard]] double sup_component_gap(std::span<const Point2> p, std::span<const Point2> q);

struct StandardFrameResult {
    SampledCurve curve;
    std::variant<RigidMotion, EquiAffineMap> element;
};

/// The unique group element g with g*gamma(0) = (0,0), g*T(0) = (1,0), g*N(0) = (0,1),
/// together with the transformed curve. Endpoint derivatives come from one-sided
/// second-order differences. Throws RegularityError for a degenerate start frame.
[[nodiscard]] std::pair<SampledCurve, RigidMotion> normalize_euclidean(const SampledCurve& curve,
                                                                       double tol = kDefaultGroupTolerance);
[[nodiscard]] std::pair<SampledCurve, EquiAffineMap> normalize_affine(const SampledCurve& curve,
                                                                      double tol = kDefaultGroupTolerance);
[[nodiscard]] StandardFrameResult normalize_to_standard_frame(const SampledCurve& curve, FrameMode mode,
                                                              double tol = kDefaultGroupTolerance);

}  // namespace curvrec
