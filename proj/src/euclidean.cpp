#include "curvrec/euclidean.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "curvrec/errors.hpp"
#include "curvrec/numerics.hpp"

namespace curvrec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxSamples = 50'000'000;

double bbox_diagonal(const std::vector<Point2>& pts) {
    double xmin = pts.front().x;
    double xmax = xmin;
    double ymin = pts.front().y;
    double ymax = ymin;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

void check_speed(const SampledCurve& curve, const std::vector<Point2>& velocity) {
    double mean = 0.0;
    for (const auto& v : velocity) {
        mean += norm(v);
    }
    mean /= static_cast<double>(velocity.size());
    const double floor = 1e-10 * std::max(mean, 1e-300);
    for (std::size_t i = 0; i < velocity.size(); ++i) {
        if (!(norm(velocity[i]) > floor)) {
            throw RegularityError("zero-speed sample", curve.params()[i]);
        }
    }
}

double wrapped_difference(double a) { return std::remainder(a, kTwoPi); }

// (1 / 2 pi) * integral of kappa over [0, period], exactly when the kind allows it.
struct MeanTurn {
    double value;
    std::optional<Rational> exact;
};

MeanTurn mean_turn(const CurvatureSpec& kappa, double period) {
    const bool full_turn = std::abs(period - kTwoPi) <= 1e-6;
    const bool bumped = kappa.bump_amplitude() != 0.0;
    const auto& kind = kappa.kind();
    if (!bumped && full_turn) {
        if (const auto* k = std::get_if<CurvatureSpec::BumpKappa>(&kind)) {
            // sin integrates to 0 over a period and the bump to 1.
            const Rational r = Rational::make(k->r.den, k->r.num);
            return {r.value(), r};
        }
        if (const auto* s = std::get_if<CurvatureSpec::Sinusoid>(&kind); s && s->c.exact) {
            return {s->c.exact->value(), s->c.exact};
        }
    }
    double integral = 0.0;
    if (const auto* s = std::get_if<CurvatureSpec::Sinusoid>(&kind); s && !bumped) {
        integral = s->a.value * (1.0 - std::cos(period)) + s->b.value * std::sin(period) + s->c.value * period;
    } else if (const auto* c = std::get_if<CurvatureSpec::Constant>(&kind); c && !bumped) {
        integral = c->c.value * period;
    } else {
        auto f = [&kappa](double t) { return kappa(t); };
        integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, period, 20, 1e-13);
    }
    return {integral / kTwoPi, std::nullopt};
}

}  // namespace

SampledCurve arclength_reparametrize(const SampledCurve& curve) {
    const numerics::ArcLengthTable table = numerics::arclength_table(curve);
    check_speed(curve, table.velocity);
    const auto& s = table.arclength;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i] > s[i - 1])) {
            throw RegularityError("zero-length segment", curve.params()[i - 1]);
        }
    }
    const std::size_t n = curve.size();
    std::vector<double> slopes(n);
    for (std::size_t i = 0; i < n; ++i) {
        slopes[i] = 1.0 / norm(table.velocity[i]);
    }
    const std::vector<double> grid = numerics::linspace(0.0, s.back(), n);
    const std::vector<double> t = numerics::monotone_hermite(s, curve.params(), slopes, grid);
    std::vector<Point2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i] = numerics::hermite_curve_at(curve, table.velocity, t[i]);
    }
    pts.front() = curve.front();
    pts.back() = curve.back();
    return SampledCurve(grid, std::move(pts));
}

SampledFunction euclidean_curvature(const SampledCurve& curve) {
    if (curve.size() < 5) {
        throw std::invalid_argument("euclidean_curvature: need at least five samples");
    }
    const auto& t = curve.params();
    const auto& p = curve.points();
    const std::vector<Point2> d1 = numerics::derivative(t, p, 1, 5);
    const std::vector<Point2> d2 = numerics::derivative(t, p, 2, 5);
    check_speed(curve, d1);
    SampledFunction out;
    out.values.resize(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const double speed = norm(d1[i]);
        out.values[i] = cross(d1[i], d2[i]) / (speed * speed * speed);
    }
    out.grid = numerics::arclength_table(curve).arclength;
    return out;
}

std::size_t euclidean_sample_count(const CurvatureSpec& kappa, double a, double b, std::size_t requested) {
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("reconstruct_euclidean: need a finite interval with b > a");
    }
    std::size_t n = std::max<std::size_t>(requested, 1024);
    double sup = 0.0;
    for (double s : numerics::linspace(a, b, n)) {
        sup = std::max(sup, std::abs(kappa(s)));
    }
    const double need = std::ceil(4.0 * (b - a) * sup / std::numbers::pi);
    if (need > static_cast<double>(kMaxSamples)) {
        throw std::invalid_argument("reconstruct_euclidean: curvature too large for the interval (needs " +
                                    std::to_string(need) + " samples)");
    }
    n = std::max(n, static_cast<std::size_t>(need));
    if (n % 2 == 0) {
        ++n;
    }
    return n;
}

TangentialAngle tangential_angle(const CurvatureSpec& kappa, double a, double b, std::size_t n, double angle) {
    TangentialAngle out;
    out.grid = numerics::linspace(a, b, n);
    std::vector<double> k(n);
    for (std::size_t i = 0; i < n; ++i) {
        k[i] = kappa(out.grid[i]);
    }
    out.theta = numerics::cumulative_integral(out.grid, k);
    for (double& th : out.theta) {
        th += angle;
    }
    return out;
}

SampledCurve reconstruct_euclidean(const CurvatureSpec& kappa, double a, double b, std::size_t n, const Pose& pose) {
    if (n < 16) {
        throw std::invalid_argument("reconstruct_euclidean: need at least 16 samples");
    }
    if (!is_finite(pose.origin) || !std::isfinite(pose.angle)) {
        throw std::invalid_argument("reconstruct_euclidean: non-finite pose");
    }
    const std::size_t count = euclidean_sample_count(kappa, a, b, n);
    TangentialAngle angle = tangential_angle(kappa, a, b, count, pose.angle);
    std::vector<Point2> tangent(count);
    for (std::size_t i = 0; i < count; ++i) {
        tangent[i] = {std::cos(angle.theta[i]), std::sin(angle.theta[i])};
    }
    std::vector<Point2> pts = numerics::cumulative_integral(angle.grid, tangent);
    for (auto& p : pts) {
        p += pose.origin;
    }
    return SampledCurve(std::move(angle.grid), std::move(pts));
}

ClosureReport classify_closure(const CurvatureSpec& kappa, std::optional<double> period) {
    const std::optional<double> l = period ? period : kappa.period();
    if (!l) {
        throw Error("classify: curvature " + kappa.to_string() + " has no natural period; pass one explicitly");
    }
    if (!(*l > 0.0) || !std::isfinite(*l)) {
        throw std::invalid_argument("classify: period must be positive");
    }
    ClosureReport rep;
    rep.period = *l;
    const MeanTurn turn = mean_turn(kappa, *l);
    rep.mean_turn = turn.value;
    rep.exact = turn.exact.has_value();
    const std::optional<Rational> ratio = turn.exact ? turn.exact : rationalize(turn.value);
    if (!ratio) {
        rep.note = "irrational within tolerance";
        return rep;
    }
    rep.ratio = ratio;
    rep.turning_number = ratio->num;
    rep.symmetry_index = ratio->den;
    rep.minimal_period = static_cast<double>(ratio->den) * *l;
    rep.predicted_closed = ratio->den > 1;
    if (!rep.predicted_closed) {
        rep.note = "m = 1: closedness not implied";
    }
    return rep;
}

std::int64_t turning_number(const SampledCurve& curve, std::optional<double> tol) {
    const auto& p = curve.points();
    const double gap_tol = tol ? *tol : 1e-5 * std::max(1.0, bbox_diagonal(p));
    if (curve.endpoint_gap() > gap_tol) {
        throw Error("turning_number: curve is not closed (endpoint gap " + std::to_string(curve.endpoint_gap()) + ")");
    }
    std::vector<double> heading;
    heading.reserve(p.size());
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const Point2 d = p[i + 1] - p[i];
        if (d.x != 0.0 || d.y != 0.0) {
            heading.push_back(std::atan2(d.y, d.x));
        }
    }
    if (heading.size() < 2) {
        throw Error("turning_number: degenerate polyline");
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < heading.size(); ++i) {
        total += wrapped_difference(heading[i + 1] - heading[i]);
    }
    total += wrapped_difference(heading.front() - heading.back());
    return std::llround(total / kTwoPi);
}

BoundReport euclidean_bound_check(const CurvatureSpec& k1, const CurvatureSpec& k2, double a, double b, NormKind norm,
                                  std::size_t n) {
    const std::size_t count = std::max(euclidean_sample_count(k1, a, b, n), euclidean_sample_count(k2, a, b, n));
    const std::vector<double> grid = numerics::linspace(a, b, count);
    std::vector<double> diff(count);
    for (std::size_t i = 0; i < count; ++i) {
        diff[i] = std::abs(k1(grid[i]) - k2(grid[i]));
    }
    BoundReport rep;
    rep.mode = "euclid";
    rep.norm = norm;
    rep.L = b - a;
    rep.delta = norm == NormKind::linf ? sup_norm(diff) : numerics::integral(grid, diff);
    rep.bound_stated = norm == NormKind::linf ? rep.delta * rep.L * rep.L / 2.0 : rep.delta * rep.L;
    rep.bound = std::numbers::sqrt2 * rep.bound_stated;
    const SampledCurve c1 = reconstruct_euclidean(k1, a, b, count);
    const SampledCurve c2 = reconstruct_euclidean(k2, a, b, count);
    rep.measured = hausdorff_distance(c1, c2);
    rep.satisfied = rep.measured <= rep.bound;
    rep.stated_satisfied = rep.measured <= rep.bound_stated;
    return rep;
}

}  // namespace curvrec
