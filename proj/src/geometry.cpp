#include "curvrec/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "curvrec/errors.hpp"
#include "curvrec/numerics.hpp"

namespace curvrec {

bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

Mat2 Mat2::rotation(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c, -s, s, c};
}

Mat2 Mat2::inverse() const {
    const double d = det();
    if (d == 0.0 || !std::isfinite(d)) {
        throw std::domain_error("Mat2::inverse: singular matrix");
    }
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

double max_norm(const Mat2& a) {
    return std::max({std::abs(a.a11), std::abs(a.a12), std::abs(a.a21), std::abs(a.a22)});
}

double sup_norm(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("sup_norm: empty grid");
    }
    double m = 0.0;
    for (double v : values) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

namespace {

bool is_rotation(const Mat2& r, double tol) {
    const Mat2 rrt = r * r.transpose();
    return std::abs(rrt.a11 - 1.0) <= tol && std::abs(rrt.a22 - 1.0) <= tol && std::abs(rrt.a12) <= tol &&
           std::abs(r.det() - 1.0) <= tol;
}

}  // namespace

RigidMotion::RigidMotion(const Mat2& rotation, const Point2& translation, double tol)
    : rotation_(rotation), translation_(translation) {
    if (!is_rotation(rotation, tol)) {
        throw std::invalid_argument("RigidMotion: rotation part is not in SO(2)");
    }
    if (!is_finite(translation)) {
        throw std::invalid_argument("RigidMotion: non-finite translation");
    }
}

RigidMotion RigidMotion::from_angle(double theta, const Point2& translation) {
    return RigidMotion(Mat2::rotation(theta), translation);
}

// R^{-1} = R^T for rotations; using the transpose keeps the result exactly orthogonal.
Point2 RigidMotion::apply(const Point2& p) const { return p * rotation_.transpose() + translation_; }

RigidMotion RigidMotion::inverse() const {
    // (R, v)^{-1} = (R^{-1}, -v R).
    RigidMotion g;
    g.rotation_ = rotation_.transpose();
    g.translation_ = -(translation_ * rotation_);
    return g;
}

EquiAffineMap::EquiAffineMap(const Mat2& linear, const Point2& translation, double tol)
    : linear_(linear), translation_(translation) {
    if (!(std::abs(linear.det() - 1.0) <= tol)) {
        throw std::invalid_argument("EquiAffineMap: linear part is not unimodular (det = " +
                                    std::to_string(linear.det()) + ")");
    }
    if (!is_finite(translation)) {
        throw std::invalid_argument("EquiAffineMap: non-finite translation");
    }
}

EquiAffineMap::EquiAffineMap(const RigidMotion& g) : linear_(g.rotation()), translation_(g.translation()) {}

Point2 EquiAffineMap::apply(const Point2& p) const { return p * linear_.inverse() + translation_; }

EquiAffineMap EquiAffineMap::inverse() const {
    EquiAffineMap g;
    g.linear_ = linear_.inverse();
    g.translation_ = -(translation_ * linear_);
    return g;
}

RigidMotion se2_compose(const RigidMotion& g1, const RigidMotion& g2) {
    const Mat2 r = g1.rotation() * g2.rotation();
    const Point2 v = g2.translation() * g1.rotation().transpose() + g1.translation();
    return RigidMotion(r, v, 1e-6);
}

EquiAffineMap sa2_compose(const EquiAffineMap& g1, const EquiAffineMap& g2) {
    const Mat2 m = g1.linear() * g2.linear();
    const Point2 v = g2.translation() * g1.linear().inverse() + g1.translation();
    return EquiAffineMap(m, v, 1e-6);
}

SampledCurve::SampledCurve(std::vector<double> params, std::vector<Point2> points)
    : params_(std::move(params)), points_(std::move(points)) {
    if (params_.size() != points_.size()) {
        throw std::invalid_argument("SampledCurve: params and points differ in length");
    }
    if (params_.size() < 2) {
        throw std::invalid_argument("SampledCurve: need at least two samples");
    }
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (!std::isfinite(params_[i]) || !is_finite(points_[i])) {
            throw std::invalid_argument("SampledCurve: non-finite sample at index " + std::to_string(i));
        }
        if (i > 0 && !(params_[i] > params_[i - 1])) {
            throw std::invalid_argument("SampledCurve: parameters not strictly increasing at index " +
                                        std::to_string(i));
        }
    }
}

namespace {

template <typename G>
SampledCurve transform_impl(const SampledCurve& c, const G& g) {
    std::vector<Point2> pts;
    pts.reserve(c.size());
    for (const auto& p : c.points()) {
        pts.push_back(g.apply(p));
    }
    return SampledCurve(c.params(), std::move(pts));
}

}  // namespace

SampledCurve transform(const SampledCurve& c, const RigidMotion& g) { return transform_impl(c, g); }
SampledCurve transform(const SampledCurve& c, const EquiAffineMap& g) { return transform_impl(c, g); }

bool FrameMatrix::is_valid(FrameMode mode, double tol) const {
    if (mode == FrameMode::affine) {
        return std::abs(det() - 1.0) <= tol;
    }
    return std::abs(dot(T, T) - 1.0) <= tol && std::abs(dot(N, N) - 1.0) <= tol && std::abs(dot(T, N)) <= tol &&
           std::abs(det() - 1.0) <= tol;
}

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) {
        return norm(p - a);
    }
    const double t = dot(p - a, ab) / len2;
    const double da = norm(p - a);
    const double db = norm(p - b);
    if (t <= 0.0 || t >= 1.0) {
        return std::min(da, db);
    }
    // The endpoint distances keep vertices at exactly zero despite rounding in t.
    return std::min({norm(p - (a + t * ab)), da, db});
}

namespace {

// Uniform bucket grid over the segments of a polyline for nearest-segment queries.
class SegmentGrid {
public:
    explicit SegmentGrid(std::span<const Point2> q) : q_(q) {
        lo_ = hi_ = q[0];
        for (const auto& p : q) {
            lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
            hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
        }
        const std::size_t segs = q.size() - 1;
        const double span = std::max({hi_.x - lo_.x, hi_.y - lo_.y, 1e-300});
        const auto side = static_cast<std::size_t>(std::clamp(std::sqrt(static_cast<double>(segs)), 1.0, 1024.0));
        cell_ = span / static_cast<double>(side);
        nx_ = static_cast<std::size_t>((hi_.x - lo_.x) / cell_) + 1;
        ny_ = static_cast<std::size_t>((hi_.y - lo_.y) / cell_) + 1;
        buckets_.resize(nx_ * ny_);
        for (std::size_t j = 0; j < segs; ++j) {
            const auto [x0, y0] = cell_of({std::min(q[j].x, q[j + 1].x), std::min(q[j].y, q[j + 1].y)});
            const auto [x1, y1] = cell_of({std::max(q[j].x, q[j + 1].x), std::max(q[j].y, q[j + 1].y)});
            for (std::size_t cy = y0; cy <= y1; ++cy) {
                for (std::size_t cx = x0; cx <= x1; ++cx) {
                    buckets_[cy * nx_ + cx].push_back(j);
                }
            }
        }
    }

    // Nearest distance from x to the polyline, stopping early once it is known to be <= floor.
    double nearest(const Point2& x, double start, double floor) const {
        double dmin = start;
        const auto [cx, cy] = cell_of(x);
        // Distance from x to the grid box; rings closer than that are empty of candidates.
        const double outside = std::hypot(std::max({lo_.x - x.x, 0.0, x.x - hi_.x}),
                                          std::max({lo_.y - x.y, 0.0, x.y - hi_.y}));
        const std::size_t max_ring = std::max(nx_, ny_);
        for (std::size_t r = 0; r <= max_ring; ++r) {
            // Every cell in ring r is at least (r - 1) cells away from x.
            if (r >= 1 && std::max(outside, static_cast<double>(r - 1) * cell_) > dmin) {
                break;
            }
            visit_ring(cx, cy, r, [&](std::size_t j) {
                dmin = std::min(dmin, point_segment_distance(x, q_[j], q_[j + 1]));
            });
            if (dmin <= floor) {
                break;
            }
        }
        return dmin;
    }

private:
    std::pair<std::size_t, std::size_t> cell_of(const Point2& p) const {
        const double fx = std::clamp((p.x - lo_.x) / cell_, 0.0, static_cast<double>(nx_ - 1));
        const double fy = std::clamp((p.y - lo_.y) / cell_, 0.0, static_cast<double>(ny_ - 1));
        return {static_cast<std::size_t>(fx), static_cast<std::size_t>(fy)};
    }

    template <typename F>
    void visit_ring(std::size_t cx, std::size_t cy, std::size_t r, F&& f) const {
        const auto ix = static_cast<std::ptrdiff_t>(cx);
        const auto iy = static_cast<std::ptrdiff_t>(cy);
        const auto ir = static_cast<std::ptrdiff_t>(r);
        for (std::ptrdiff_t y = iy - ir; y <= iy + ir; ++y) {
            if (y < 0 || y >= static_cast<std::ptrdiff_t>(ny_)) {
                continue;
            }
            const bool edge_row = y == iy - ir || y == iy + ir;
            for (std::ptrdiff_t x = ix - ir; x <= ix + ir; x += (edge_row || ir == 0) ? 1 : 2 * ir) {
                if (x < 0 || x >= static_cast<std::ptrdiff_t>(nx_)) {
                    continue;
                }
                for (std::size_t j : buckets_[static_cast<std::size_t>(y) * nx_ + static_cast<std::size_t>(x)]) {
                    f(j);
                }
            }
        }
    }

    std::span<const Point2> q_;
    Point2 lo_{};
    Point2 hi_{};
    double cell_{1.0};
    std::size_t nx_{1};
    std::size_t ny_{1};
    std::vector<std::vector<std::size_t>> buckets_;
};

}  // namespace

double directed_hausdorff(std::span<const Point2> p, std::span<const Point2> q) {
    if (p.empty() || q.empty()) {
        throw std::invalid_argument("hausdorff_distance: empty point set");
    }
    if (q.size() == 1) {
        double m = 0.0;
        for (const auto& x : p) {
            m = std::max(m, norm(x - q[0]));
        }
        return m;
    }
    const SegmentGrid grid(q);
    const std::size_t segments = q.size() - 1;

    // A point whose distance to some segment is already below the running maximum
    // cannot raise it. Trying the previous nearest segment first makes that test
    // succeed immediately along a curve; otherwise the bucket grid finds the minimum.
    double cmax = 0.0;
    std::size_t hint = 0;
    for (const auto& x : p) {
        double dmin = std::numeric_limits<double>::infinity();
        for (std::size_t j = hint > 0 ? hint - 1 : 0; j <= std::min(hint + 1, segments - 1); ++j) {
            const double d = point_segment_distance(x, q[j], q[j + 1]);
            if (d < dmin) {
                dmin = d;
                hint = j;
            }
        }
        if (dmin > cmax) {
            dmin = grid.nearest(x, dmin, cmax);
        }
        cmax = std::max(cmax, dmin);
    }
    return cmax;
}

double hausdorff_distance(std::span<const Point2> p, std::span<const Point2> q) {
    return std::max(directed_hausdorff(p, q), directed_hausdorff(q, p));
}

double hausdorff_distance(const SampledCurve& p, const SampledCurve& q) {
    return hausdorff_distance(std::span<const Point2>(p.points()), std::span<const Point2>(q.points()));
}

double sup_component_gap(std::span<const Point2> p, std::span<const Point2> q) {
    if (p.size() != q.size() || p.empty()) {
        throw std::invalid_argument("sup_component_gap: curves must share a non-empty grid");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        m = std::max(m, max_component(p[i] - q[i]));
    }
    return m;
}

namespace {

struct StartJet {
    Point2 d1;
    Point2 d2;
};

// One-sided second-order derivative estimates at the first node.
StartJet start_jet(const SampledCurve& curve) {
    const auto& t = curve.params();
    const auto& p = curve.points();
    const std::size_t n1 = std::min<std::size_t>(3, t.size());
    const std::size_t n2 = std::min<std::size_t>(4, t.size());
    StartJet jet{};
    const auto w1 = numerics::fd_weights(t[0], std::span<const double>(t.data(), n1), 1);
    for (std::size_t i = 0; i < n1; ++i) {
        jet.d1 += w1[1][i] * p[i];
    }
    if (t.size() >= 3) {
        const auto w2 = numerics::fd_weights(t[0], std::span<const double>(t.data(), n2), 2);
        for (std::size_t i = 0; i < n2; ++i) {
            jet.d2 += w2[2][i] * p[i];
        }
    }
    return jet;
}

}  // namespace

std::pair<SampledCurve, RigidMotion> normalize_euclidean(const SampledCurve& curve, double tol) {
    const StartJet jet = start_jet(curve);
    const double speed = norm(jet.d1);
    if (!(speed > tol)) {
        throw RegularityError("normalize_to_standard_frame: degenerate start frame (zero speed)",
                              curve.params().front());
    }
    const Point2 tangent = (1.0 / speed) * jet.d1;
    const Mat2 frame = Mat2::from_rows(tangent, perp(tangent));
    // g = (A(0), v) with gamma(0) A^{-1} + v = 0.
    const Point2 v = -(curve.front() * frame.transpose());
    RigidMotion g(frame, v);
    return {transform(curve, g), g};
}

std::pair<SampledCurve, EquiAffineMap> normalize_affine(const SampledCurve& curve, double tol) {
    if (curve.size() < 3) {
        throw RegularityError("normalize_to_standard_frame: affine frame needs three samples",
                              curve.params().front());
    }
    const StartJet jet = start_jet(curve);
    Mat2 frame = Mat2::from_rows(jet.d1, jet.d2);
    const double d = frame.det();
    if (!(d > tol)) {
        throw RegularityError("normalize_to_standard_frame: degenerate start frame (det(T, N) = " +
                                  std::to_string(d) + ")",
                              curve.params().front());
    }
    // Sampled derivatives only approximate det = 1; project onto SL(2).
    frame = (1.0 / std::sqrt(d)) * frame;
    const Point2 v = -(curve.front() * frame.inverse());
    EquiAffineMap g(frame, v, 1e-6);
    return {transform(curve, g), g};
}

StandardFrameResult normalize_to_standard_frame(const SampledCurve& curve, FrameMode mode, double tol) {
    if (mode == FrameMode::euclidean) {
        auto [c, g] = normalize_euclidean(curve, tol);
        return {std::move(c), g};
    }
    auto [c, g] = normalize_affine(curve, tol);
    return {std::move(c), g};
}

}  // namespace curvrec
