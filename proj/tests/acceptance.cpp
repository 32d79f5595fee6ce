// Runs every acceptance criterion at its stated tolerance and prints one line each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "curvrec/affine.hpp"
#include "curvrec/curvespec.hpp"
#include "curvrec/euclidean.hpp"
#include "curvrec/figures.hpp"
#include "curvrec/series.hpp"
#include "curvrec/svg.hpp"

using namespace curvrec;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass{true};
    std::string detail;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
        }
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += (ok ? "" : "FAILED ") + what;
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Outcome circle_round_trip() {
    Outcome o;
    const SampledCurve c = reconstruct_euclidean(CurvatureSpec::constant(1.0), 2 * kPi, 4096);
    o.check(c.endpoint_gap() <= 1e-8, "gap " + num(c.endpoint_gap()) + " <= 1e-8");
    const SampledFunction k = euclidean_curvature(c);
    double kerr = 0.0;
    for (double v : k.values) {
        kerr = std::max(kerr, std::abs(v - 1.0));
    }
    o.check(kerr <= 1e-4, "curvature error " + num(kerr) + " <= 1e-4");
    double speed_err = 0.0;
    const auto& s = c.params();
    const auto& p = c.points();
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        speed_err = std::max(speed_err, std::abs(norm(p[i + 1] - p[i]) / (s[i + 1] - s[i]) - 1.0));
    }
    o.check(speed_err <= 1e-4, "speed deviation " + num(speed_err) + " <= 1e-4");
    return o;
}

Outcome closure_prediction() {
    Outcome o;
    const CurvatureSpec k1 = parse_spec("sinusoid:1,1,1/3");
    const SampledCurve c1 = reconstruct_euclidean(k1, 6 * kPi, 3 * 4096);
    const ClosureReport r1 = classify_closure(k1);
    o.check(c1.endpoint_gap() <= 1e-5, "kappa1 gap " + num(c1.endpoint_gap()) + " <= 1e-5");
    o.check(r1.predicted_closed && r1.symmetry_index == 3, "kappa1 symmetry " + std::to_string(r1.symmetry_index));
    const auto t1 = turning_number(c1);
    o.check(t1 == 1 && r1.turning_number == 1, "kappa1 turning " + std::to_string(t1));

    const CurvatureSpec k2 = parse_spec("sinusoid:1,1,1");
    const SampledCurve c2 = reconstruct_euclidean(k2, 6 * kPi, 3 * 4096);
    o.check(c2.endpoint_gap() > 0.1, "kappa2 gap " + num(c2.endpoint_gap()) + " > 0.1");
    o.check(!classify_closure(k2).predicted_closed, "kappa2 not predicted closed");

    const CurvatureSpec k53 = parse_spec("kn:5/3");
    const SampledCurve c53 = reconstruct_euclidean(k53, 10 * kPi, 5 * 4096);
    const ClosureReport r53 = classify_closure(k53);
    const auto t53 = turning_number(c53);
    o.check(t53 == 3 && r53.turning_number == 3, "kn:5/3 turning " + std::to_string(t53));
    o.check(r53.symmetry_index == 5, "kn:5/3 symmetry " + std::to_string(r53.symmetry_index));
    return o;
}

Outcome euclidean_estimate(NormKind norm) {
    Outcome o;
    const CurvatureSpec base = parse_spec("sin");
    const double L = 2 * kPi;
    double previous = std::numeric_limits<double>::infinity();
    for (int n : {10, 20, 40}) {
        const BoundReport r = euclidean_bound_check(base, parse_spec("kn:" + std::to_string(n)), L, norm);
        // Both norms of (2 pi / n) f equal 2 pi / n: sup f = 1 and f integrates to 1.
        const double delta = 2 * kPi / n;
        const double bound = norm == NormKind::linf ? std::numbers::sqrt2 * delta * L * L / 2.0
                                                    : std::numbers::sqrt2 * delta * L;
        o.check(r.measured <= bound && r.satisfied,
                "n=" + std::to_string(n) + " measured " + num(r.measured) + " <= " + num(bound));
        o.check(r.measured < previous, "decreasing");
        previous = r.measured;
    }
    return o;
}

Outcome conic_oracle() {
    Outcome o;
    for (double mu : {-3.0, 0.0, 2.0}) {
        PicardOptions opt;
        opt.tolerance = 1e-10;
        const auto [curve, res] = picard_reconstruct(CurvatureSpec::constant(mu), 2.0, opt);
        const SampledCurve exact = conic_closed_form(mu, 2.0, curve.size());
        const double d = hausdorff_distance(curve, exact);
        double det_err = 0.0;
        for (const auto& f : res.frames) {
            det_err = std::max(det_err, std::abs(f.det() - 1.0));
        }
        o.check(d <= 1e-8, "mu=" + num(mu) + " hausdorff " + num(d) + " <= 1e-8");
        o.check(det_err <= 1e-8, "det error " + num(det_err) + " <= 1e-8");
    }
    return o;
}

Outcome bound_ladder() {
    Outcome o;
    const std::size_t n_grid = 2001;
    const double h = 1.0 / static_cast<double>(n_grid - 1);
    PicardSolver solver(0.0, h, std::vector<double>(n_grid, 1.0), Mat2::identity());
    // mu = 1 attains the step bound with equality at alpha = 1, so the measured gap can only
    // be resolved to the rounding floor of frame entries of size up to e.
    const double rounding = 16.0 * std::numeric_limits<double>::epsilon() * std::numbers::e;
    double worst_tail = 0.0;
    double worst_step = 0.0;
    for (int n = 0; n <= 15; ++n) {
        if (n > 0) {
            solver.step();
            const double step_bound = picard_bounds(1.0, 1.0, n, 1.0).bound_step;
            worst_step = std::max(worst_step, solver.last_step_gap() - step_bound);
            o.pass = o.pass && solver.last_step_gap() <= step_bound + rounding;
        }
        double gap = 0.0;
        for (std::size_t i = 0; i < n_grid; ++i) {
            const Mat2 exact = conic_frame(1.0, static_cast<double>(i) * h).matrix();
            gap = std::max(gap, max_norm(solver.frame(i) - exact));
        }
        const double tail = std::numbers::e / std::tgamma(n + 2.0);
        worst_tail = std::max(worst_tail, gap / tail);
        o.pass = o.pass && gap <= tail + rounding;
    }
    o.detail = "max measured/tail ratio " + num(worst_tail) + ", max step gap minus bound " + num(worst_step) +
               " (rounding floor " + num(rounding) + ")" + (o.pass ? "" : " FAILED");
    return o;
}

Outcome affine_estimate() {
    Outcome o;
    const BoundReport r = affine_bound_check(CurvatureSpec::constant(2.0), CurvatureSpec::constant(2.05), 2.0);
    const double literal = std::numbers::sqrt2 * (0.05 * 2.0 / 2.0) * (std::exp(4.0) - 1.0);
    o.check(r.satisfied, "2 vs 2.05 measured " + num(r.measured) + " <= bound " + num(r.bound));
    o.check(r.measured <= literal, "and <= " + num(literal));
    const CurvatureSpec mu = parse_spec("mun:3/5");
    const BoundReport r2 = affine_bound_check(mu, mu.with_bump(0.01), 4.0);
    o.check(r2.satisfied, "mun:3/5 vs +0.01 bump measured " + num(r2.measured) + " <= " + num(r2.bound));
    return o;
}

Outcome monomial_series() {
    Outcome o;
    for (int k : {1, 2}) {
        const MonomialSeries ms(1.0, k, {1.0, 0.0}, {0.0, 1.0}, 3.0);
        PicardOptions opt;
        opt.tolerance = 1e-10;
        const auto [picard, res] = picard_reconstruct(CurvatureSpec::monomial(1.0, k), 3.0, opt);
        const SampledCurve series = series_curve(ms, 3.0, picard.size());
        const double d = hausdorff_distance(series, picard);
        o.check(d <= 1e-6, "k=" + std::to_string(k) + " hausdorff " + num(d) + " <= 1e-6");
    }
    double worst = 0.0;
    for (int K = 2; K <= 8; ++K) {
        for (int i = 1; i <= 20; ++i) {
            const GammaRatios g = gamma_ratio_check(K, i);
            worst = std::max({worst, std::abs(g.psi_minus - g.gamma_form_minus) / g.psi_minus,
                              std::abs(g.psi_plus - g.gamma_form_plus) / g.psi_plus});
        }
    }
    o.check(worst <= 1e-10, "psi relative gap " + num(worst) + " <= 1e-10");
    bool pattern = true;
    for (int k = 0; k <= 6; ++k) {
        const int K = k + 2;
        const auto b = recurrence_coefficients(1.5, k, 60);
        for (std::size_t n = 0; n < b.size(); ++n) {
            const bool zero = n % static_cast<std::size_t>(K) > 1;
            pattern = pattern && (zero ? b[n] == 0.0 : b[n] != 0.0);
        }
    }
    o.check(pattern, "zero pattern exact");
    return o;
}

Outcome equivariance() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> shift(-5.0, 5.0);
    std::uniform_real_distribution<double> logscale(-0.7, 0.7);
    std::uniform_real_distribution<double> shear(-1.0, 1.0);

    const CurvatureSpec kappa = parse_spec("sinusoid:1,1,1/3");
    const SampledCurve base = reconstruct_euclidean(kappa, 2 * kPi, 2049);
    double worst_e = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const RigidMotion g = RigidMotion::from_angle(angle(rng), {shift(rng), shift(rng)});
        const SampledCurve moved = transform(base, g);
        const SampledCurve direct = reconstruct_euclidean(kappa, 2 * kPi, 2049, Pose{g.apply({0.0, 0.0}), g.angle()});
        worst_e = std::max(worst_e, sup_component_gap(moved.points(), direct.points()));
    }
    o.check(worst_e <= 1e-8, "SE(2) worst gap " + num(worst_e) + " <= 1e-8");

    const CurvatureSpec mu = parse_spec("mun:2/5");
    PicardOptions opt;
    const auto [abase, ares] = picard_reconstruct(mu, 4.0, opt);
    double worst_ratio = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double s = std::exp(logscale(rng));
        const Mat2 m = Mat2::rotation(angle(rng)) * Mat2{s, 0.0, 0.0, 1.0 / s} * Mat2{1.0, shear(rng), 0.0, 1.0};
        const EquiAffineMap g(m, {shift(rng), shift(rng)});
        PicardOptions moved_opt;
        moved_opt.A0 = FrameMatrix::from(Mat2::identity() * m.inverse());
        moved_opt.origin = g.apply({0.0, 0.0});
        moved_opt.n_grid = ares.grid.size();
        const auto [direct, dres] = picard_reconstruct(mu, 4.0, moved_opt);
        const SampledCurve moved = transform(abase, g);
        const double gap = sup_component_gap(moved.points(), direct.points());
        const double tol = 10.0 * std::max(ares.tail_bound, dres.tail_bound);
        worst_ratio = std::max(worst_ratio, gap / tol);
    }
    o.check(worst_ratio <= 1.0, "SA(2) worst gap / (10 tail) " + num(worst_ratio) + " <= 1");
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome figure_regeneration() {
    Outcome o;
    const std::filesystem::path golden(CURVREC_GOLDEN_DIR);
    std::size_t panels = 0;
    std::size_t golden_hits = 0;
    bool repeat_equal = true;
    bool golden_equal = true;
    for (const auto& name : figure_names()) {
        const auto first = build_figure(name);
        const auto second = build_figure(name);
        for (std::size_t i = 0; i < first.size(); ++i) {
            const std::string a = render_svg(first[i].plot);
            const std::string b = render_svg(second[i].plot);
            repeat_equal = repeat_equal && a == b;
            ++panels;
            const auto gpath = golden / first[i].file;
            if (std::filesystem::exists(gpath)) {
                ++golden_hits;
                golden_equal = golden_equal && slurp(gpath) == a;
            }
        }
    }
    o.check(repeat_equal, std::to_string(panels) + " panels byte-identical on repeat");
    o.check(golden_hits == panels && golden_equal,
            std::to_string(golden_hits) + "/" + std::to_string(panels) + " match golden files");
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "circle round-trip", 1.0, circle_round_trip},
        {2, "closure prediction suite", 5.0, closure_prediction},
        {3, "Euclidean estimate (sup norm)", 5.0, [] { return euclidean_estimate(NormKind::linf); }},
        {4, "Euclidean estimate (L1 norm)", 5.0, [] { return euclidean_estimate(NormKind::l1); }},
        {5, "conic oracle", 10.0, conic_oracle},
        {6, "Picard bound ladder", 2.0, bound_ladder},
        {7, "affine estimate", 30.0, affine_estimate},
        {8, "monomial series", 5.0, monomial_series},
        {9, "equivariance", 0.0, equivariance},
        {10, "figure regeneration", 0.0, figure_regeneration},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0.0 && secs >= c.budget_s) {
            o.pass = false;
            o.detail += "; FAILED runtime budget " + num(c.budget_s) + " s";
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] %2d %-30s %7.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
