#include "curvrec/affine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "curvrec/errors.hpp"
#include "curvrec/euclidean.hpp"
#include "curvrec/numerics.hpp"

namespace curvrec {

namespace {

constexpr double kWindowReach = 8.0;
constexpr std::size_t kMinGrid = 257;
constexpr std::size_t kMaxGrid = 4'000'001;
constexpr std::size_t kCoefficientGrid = 4097;

double grid_sup_abs(const CurvatureSpec& mu, double a, double b, std::size_t n) {
    double sup = 0.0;
    for (double t : numerics::linspace(a, b, n)) {
        sup = std::max(sup, std::abs(mu(t)));
    }
    return sup;
}

// log of W |A0| e^{cL} (c l)^{n+1} / (n+1)!, the tail over W windows of length l = L / W.
double log_composite_tail(std::size_t windows, double a0_norm, double c, double L, int n) {
    const double reach = c * L / static_cast<double>(windows);
    if (reach == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return std::log(static_cast<double>(windows)) + std::log(a0_norm) + c * L +
           static_cast<double>(n + 1) * std::log(reach) - std::lgamma(static_cast<double>(n) + 2.0);
}

struct PicardPlan {
    std::size_t windows;
    std::size_t n_grid;
};

std::size_t auto_windows(double c, double L) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(c * L / kWindowReach)));
}

std::size_t auto_grid(double c, double L, double tol) {
    const double h = std::pow(0.01 * tol / (c * L), 0.25);
    const double n = std::ceil(L / h) + 1.0;
    if (!(n < static_cast<double>(kMaxGrid))) {
        return kMaxGrid;
    }
    return std::max(kMinGrid, static_cast<std::size_t>(n));
}

// (n - 1) must split into windows of an even number of steps.
std::size_t fit_grid(std::size_t n, std::size_t windows) {
    const std::size_t unit = 2 * windows;
    const std::size_t steps = std::max<std::size_t>(n, 2) - 1;
    return (steps + unit - 1) / unit * unit + 1;
}

}  // namespace

PicardSolver::PicardSolver(double start, double h, std::vector<double> mu, const Mat2& A0)
    : start_(start), h_(h), mu_(std::move(mu)), A0_(A0) {
    const std::size_t n = mu_.size();
    if (n < 2) {
        throw std::invalid_argument("PicardSolver: need at least two nodes");
    }
    if (!(h > 0.0)) {
        throw std::invalid_argument("PicardSolver: grid spacing must be positive");
    }
    a11_.assign(n, A0.a11);
    a12_.assign(n, A0.a12);
    a21_.assign(n, A0.a21);
    a22_.assign(n, A0.a22);
    f_.resize(n);
    g_.resize(n);
}

void PicardSolver::step() {
    const std::size_t n = mu_.size();
    double gap = 0.0;
    // C A = [[a21, a22], [-mu a11, -mu a12]]; the first row only needs the old second row,
    // so integrate the second row into scratch before overwriting anything.
    std::vector<double> n21(n);
    std::vector<double> n22(n);
    for (std::size_t i = 0; i < n; ++i) {
        f_[i] = -mu_[i] * a11_[i];
    }
    numerics::cumulative_simpson_uniform(h_, f_, n21);
    for (std::size_t i = 0; i < n; ++i) {
        f_[i] = -mu_[i] * a12_[i];
    }
    numerics::cumulative_simpson_uniform(h_, f_, n22);

    numerics::cumulative_simpson_uniform(h_, a21_, g_);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = A0_.a11 + g_[i];
        gap = std::max(gap, std::abs(v - a11_[i]));
        a11_[i] = v;
    }
    numerics::cumulative_simpson_uniform(h_, a22_, g_);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = A0_.a12 + g_[i];
        gap = std::max(gap, std::abs(v - a12_[i]));
        a12_[i] = v;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double v21 = A0_.a21 + n21[i];
        const double v22 = A0_.a22 + n22[i];
        gap = std::max({gap, std::abs(v21 - a21_[i]), std::abs(v22 - a22_[i])});
        a21_[i] = v21;
        a22_[i] = v22;
    }
    last_gap_ = gap;
    ++iterations_;
}

std::vector<FrameMatrix> PicardSolver::frames() const {
    std::vector<FrameMatrix> out(mu_.size());
    for (std::size_t i = 0; i < mu_.size(); ++i) {
        out[i] = FrameMatrix::from(frame(i));
    }
    return out;
}

PicardBounds picard_bounds(double c, double alpha, int n, double a0_norm) {
    if (!(c >= 1.0) || !(alpha >= 0.0) || n < 0 || !(a0_norm >= 0.0)) {
        throw std::invalid_argument("picard_bounds: need c >= 1, alpha >= 0, n >= 0, |A0| >= 0");
    }
    const double x = c * alpha;
    PicardBounds b{};
    double term = 1.0;
    double sum = 1.0;
    for (int i = 1; i <= n; ++i) {
        term *= x / static_cast<double>(i);
        sum += term;
    }
    b.bound_n = a0_norm * sum;
    b.bound_a = a0_norm * std::exp(x);
    if (x == 0.0) {
        b.bound_step = n == 0 ? a0_norm : 0.0;
        b.bound_tail = 0.0;
        return b;
    }
    const double lx = std::log(x);
    b.bound_step = a0_norm * std::exp(static_cast<double>(n) * lx - std::lgamma(static_cast<double>(n) + 1.0));
    b.bound_tail =
        a0_norm * std::exp(x + static_cast<double>(n + 1) * lx - std::lgamma(static_cast<double>(n) + 2.0));
    return b;
}

std::pair<SampledCurve, PicardResult> picard_reconstruct(const CurvatureSpec& mu, double a, double b,
                                                         const PicardOptions& options) {
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("picard_reconstruct: need a finite interval with b > a");
    }
    const Mat2 A0 = options.A0.matrix();
    if (!(std::abs(A0.det() - 1.0) <= 1e-9)) {
        throw std::invalid_argument("picard_reconstruct: initial frame must have det 1 (got " +
                                    std::to_string(A0.det()) + ")");
    }
    if (!is_finite(options.origin)) {
        throw std::invalid_argument("picard_reconstruct: non-finite origin");
    }
    if (options.iterations && *options.iterations < 0) {
        throw std::invalid_argument("picard_reconstruct: iteration count must be non-negative");
    }
    if (!options.iterations && !(options.tolerance > 0.0)) {
        throw std::invalid_argument("picard_reconstruct: tolerance must be positive");
    }
    const double L = b - a;
    const double c0 = std::max(1.0, grid_sup_abs(mu, a, b, kCoefficientGrid));
    const std::size_t windows = options.segments > 0 ? options.segments : auto_windows(c0, L);
    const double grid_tol = options.iterations ? kDefaultPicardTolerance : options.tolerance;
    const std::size_t n_grid =
        fit_grid(options.n_grid > 0 ? options.n_grid : auto_grid(c0, L, grid_tol), windows);

    PicardResult res;
    res.segments = windows;
    res.grid.resize(n_grid);
    const double h = L / static_cast<double>(n_grid - 1);
    std::vector<double> mu_values(n_grid);
    double sup = 0.0;
    for (std::size_t i = 0; i < n_grid; ++i) {
        res.grid[i] = i + 1 == n_grid ? b : a + static_cast<double>(i) * h;
        mu_values[i] = mu(res.grid[i]);
        if (!std::isfinite(mu_values[i])) {
            throw std::invalid_argument("picard_reconstruct: mu is not finite at " + std::to_string(res.grid[i]));
        }
        sup = std::max(sup, std::abs(mu_values[i]));
    }
    res.c = std::max({1.0, sup, c0});

    const double a0_norm = max_norm(A0);
    int sweeps = 0;
    if (options.iterations) {
        sweeps = *options.iterations;
    } else {
        const double log_tol = std::log(options.tolerance);
        while (log_composite_tail(windows, a0_norm, res.c, L, sweeps) > log_tol) {
            if (sweeps >= options.max_iterations) {
                throw SolverError("picard_reconstruct: tail tolerance " + std::to_string(options.tolerance) +
                                      " unreachable within " + std::to_string(options.max_iterations) +
                                      " iterations",
                                  std::exp(log_composite_tail(windows, a0_norm, res.c, L, sweeps)));
            }
            ++sweeps;
        }
    }
    res.iterations = sweeps;
    res.tail_bound = std::exp(log_composite_tail(windows, a0_norm, res.c, L, sweeps));

    const std::size_t per = (n_grid - 1) / windows;
    res.frames.resize(n_grid);
    Mat2 start = A0;
    for (std::size_t w = 0; w < windows; ++w) {
        const std::size_t first = w * per;
        std::vector<double> slice(mu_values.begin() + static_cast<std::ptrdiff_t>(first),
                                  mu_values.begin() + static_cast<std::ptrdiff_t>(first + per + 1));
        PicardSolver solver(res.grid[first], h, std::move(slice), start);
        for (int k = 0; k < sweeps; ++k) {
            solver.step();
        }
        for (std::size_t j = 0; j <= per; ++j) {
            res.frames[first + j] = FrameMatrix::from(solver.frame(j));
        }
        start = solver.frame(per);
    }

    std::vector<double> tx(n_grid);
    std::vector<double> ty(n_grid);
    for (std::size_t i = 0; i < n_grid; ++i) {
        tx[i] = res.frames[i].T.x;
        ty[i] = res.frames[i].T.y;
    }
    std::vector<double> x(n_grid);
    std::vector<double> y(n_grid);
    numerics::cumulative_simpson_uniform(h, tx, x);
    numerics::cumulative_simpson_uniform(h, ty, y);
    std::vector<Point2> pts(n_grid);
    for (std::size_t i = 0; i < n_grid; ++i) {
        pts[i] = options.origin + Point2{x[i], y[i]};
    }
    SampledCurve curve(res.grid, std::move(pts));
    return {std::move(curve), std::move(res)};
}

SampledCurve affine_arclength(const SampledCurve& curve) {
    if (curve.size() < 5) {
        throw std::invalid_argument("affine_arclength: need at least five samples");
    }
    const auto& t = curve.params();
    const auto& p = curve.points();
    const std::vector<Point2> d1 = numerics::derivative(t, p, 1, 5);
    const std::vector<Point2> d2 = numerics::derivative(t, p, 2, 5);
    const std::size_t n = curve.size();
    std::vector<double> rate(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = cross(d1[i], d2[i]);
        if (!(d > 0.0)) {
            throw RegularityError("affine_arclength: det(g', g'') = " + std::to_string(d) +
                                      " is not positive (inflection or clockwise orientation)",
                                  t[i]);
        }
        rate[i] = std::cbrt(d);
    }
    const std::vector<double> alpha = numerics::cumulative_integral(t, rate);
    for (std::size_t i = 1; i < n; ++i) {
        if (!(alpha[i] > alpha[i - 1])) {
            throw RegularityError("affine_arclength: affine arc length not increasing", t[i]);
        }
    }
    std::vector<double> slopes(n);
    for (std::size_t i = 0; i < n; ++i) {
        slopes[i] = 1.0 / rate[i];
    }
    const std::vector<double> grid = numerics::linspace(0.0, alpha.back(), n);
    const std::vector<double> tq = numerics::monotone_hermite(alpha, t, slopes, grid);
    std::vector<Point2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i] = numerics::hermite_curve_at(curve, d1, tq[i]);
    }
    pts.front() = curve.front();
    pts.back() = curve.back();
    return SampledCurve(grid, std::move(pts));
}

SampledFunction affine_curvature_from_euclidean(const SampledFunction& kappa) {
    const auto& s = kappa.grid;
    const auto& k = kappa.values;
    if (s.size() != k.size() || s.size() < 5) {
        throw std::invalid_argument("affine_curvature_from_euclidean: need at least five matching samples");
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (!(k[i] > 0.0)) {
            throw RegularityError("affine curvature needs kappa > 0 (got " + std::to_string(k[i]) + ")", s[i]);
        }
    }
    const std::vector<double> ks = numerics::derivative(s, k, 1, 5);
    const std::vector<double> kss = numerics::derivative(s, k, 2, 5);
    std::vector<double> root(k.size());
    SampledFunction out;
    out.values.resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        root[i] = std::cbrt(k[i]);
        const double k83 = std::pow(k[i], 8.0 / 3.0);
        out.values[i] = (3.0 * k[i] * (kss[i] + 3.0 * k[i] * k[i] * k[i]) - 5.0 * ks[i] * ks[i]) / (9.0 * k83);
    }
    out.grid = numerics::cumulative_integral(s, root);
    return out;
}

SampledFunction affine_curvature(const SampledCurve& curve) {
    return affine_curvature_from_euclidean(euclidean_curvature(curve));
}

FrameMatrix conic_frame(double mu, double alpha) {
    if (mu == 0.0) {
        return {{1.0, alpha}, {0.0, 1.0}};
    }
    const double w = std::sqrt(std::abs(mu));
    if (mu > 0.0) {
        const double c = std::cos(w * alpha);
        const double s = std::sin(w * alpha);
        return {{c, s / w}, {-w * s, c}};
    }
    const double c = std::cosh(w * alpha);
    const double s = std::sinh(w * alpha);
    return {{c, s / w}, {w * s, c}};
}

SampledCurve conic_closed_form(double mu, double L, std::size_t n) {
    if (n < 2 || !(L > 0.0) || !std::isfinite(mu)) {
        throw std::invalid_argument("conic_closed_form: need n >= 2, L > 0 and finite mu");
    }
    std::vector<double> grid = numerics::linspace(0.0, L, n);
    std::vector<Point2> pts(n);
    const double w = std::sqrt(std::abs(mu));
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid[i];
        if (mu == 0.0) {
            pts[i] = {t, t * t / 2.0};
        } else if (mu > 0.0) {
            pts[i] = {std::sin(w * t) / w, (1.0 - std::cos(w * t)) / mu};
        } else {
            // cosh - 1 = 2 sinh^2(x/2) avoids cancellation near the origin.
            const double sh = std::sinh(w * t / 2.0);
            pts[i] = {std::sinh(w * t) / w, 2.0 * sh * sh / (w * w)};
        }
    }
    return SampledCurve(std::move(grid), std::move(pts));
}

double frame_divergence_bound(const CurvatureSpec& mu1, const CurvatureSpec& mu2, double a, double b,
                              const FrameMatrix& A0, std::size_t n) {
    if (!(b > a)) {
        throw std::invalid_argument("frame_divergence_bound: need b > a");
    }
    double delta = 0.0;
    double sup = 1.0;
    for (double t : numerics::linspace(a, b, n)) {
        const double m1 = mu1(t);
        const double m2 = mu2(t);
        delta = std::max(delta, std::abs(m1 - m2));
        sup = std::max({sup, std::abs(m1), std::abs(m2)});
    }
    const double L = b - a;
    return max_norm(A0.matrix()) * delta * L * std::exp(sup * L);
}

BoundReport affine_bound_check(const CurvatureSpec& mu1, const CurvatureSpec& mu2, double a, double b,
                               std::size_t n_grid) {
    if (!(b > a)) {
        throw std::invalid_argument("affine_bound_check: need b > a");
    }
    BoundReport rep;
    rep.mode = "affine";
    rep.norm = NormKind::linf;
    rep.L = b - a;
    double delta = 0.0;
    double c_hat = 1.0;
    double c1 = 1.0;
    double c2 = 1.0;
    for (double t : numerics::linspace(a, b, kCoefficientGrid)) {
        const double m1 = mu1(t);
        const double m2 = mu2(t);
        delta = std::max(delta, std::abs(m1 - m2));
        c1 = std::max(c1, std::abs(m1));
        c2 = std::max(c2, std::abs(m2));
    }
    c_hat = std::max(c1, c2);
    rep.delta = delta;
    rep.c_hat = c_hat;
    rep.bound = std::numbers::sqrt2 * (delta * rep.L / c_hat) * std::expm1(c_hat * rep.L);
    rep.bound_stated = rep.bound;

    PicardOptions opt;
    opt.tolerance = rep.bound > 0.0 ? std::min(kDefaultPicardTolerance, 0.01 * rep.bound) : kDefaultPicardTolerance;
    // A shared grid and window layout keeps the two discretizations comparable.
    opt.segments = auto_windows(c_hat, rep.L);
    opt.n_grid = n_grid > 0 ? n_grid : auto_grid(c_hat, rep.L, opt.tolerance);
    const auto r1 = picard_reconstruct(mu1, a, b, opt);
    const auto r2 = picard_reconstruct(mu2, a, b, opt);
    rep.measured = hausdorff_distance(r1.first, r2.first);
    rep.satisfied = rep.measured <= rep.bound;
    rep.stated_satisfied = rep.satisfied;
    return rep;
}

}  // namespace curvrec
