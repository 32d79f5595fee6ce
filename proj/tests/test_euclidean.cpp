#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "curvrec/errors.hpp"
#include "curvrec/euclidean.hpp"
#include "support.hpp"

using namespace curvrec;
using testing::kPi;

TEST_CASE("arc length reparametrization") {
    const auto line = testing::sample([](double t) { return Point2{t, 0}; }, 0.0, 5.0, 51);
    const auto l = arclength_reparametrize(line);
    CHECK(l.params().front() == 0.0);
    CHECK(l.params().back() == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(sup_component_gap(l.points(), line.points()) < 1e-12);

    const auto fast = testing::sample([](double t) { return Point2{2 * t, 0}; }, 0.0, 1.0, 33);
    const auto f = arclength_reparametrize(fast);
    CHECK(f.params().back() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(f.back().x == doctest::Approx(2.0));

    const auto ellipse =
        testing::sample([](double t) { return Point2{2 * std::cos(t), std::sin(t)}; }, 0.0, 2 * kPi, 4096);
    const double perimeter = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [](double t) { return std::hypot(2 * std::sin(t), std::cos(t)); }, 0.0, 2 * kPi, 15, 1e-14);
    const auto e = arclength_reparametrize(ellipse);
    CHECK(std::abs(e.params().back() - perimeter) <= 1e-6);
    // Uniform in s, so consecutive chords are close to the step.
    const double h = e.params()[1] - e.params()[0];
    for (std::size_t i = 0; i + 1 < e.size(); i += 13) {
        CHECK(std::abs(norm(e.points()[i + 1] - e.points()[i]) / h - 1.0) < 1e-5);
    }

    const auto stall = testing::sample([](double t) { return Point2{t < 0.5 ? t : 0.5, 0}; }, 0.0, 1.0, 11);
    CHECK_THROWS_AS(arclength_reparametrize(stall), RegularityError);
}

TEST_CASE("curvature of sampled curves") {
    const auto k2 = euclidean_curvature(testing::circle(2.0, 2048));
    for (double v : k2.values) CHECK(std::abs(v - 0.5) <= 1e-4);
    CHECK(k2.grid.back() == doctest::Approx(4 * kPi).epsilon(1e-6));

    const auto line = testing::sample([](double t) { return Point2{3 * t, -t}; }, 0.0, 1.0, 100);
    for (double v : euclidean_curvature(line).values) CHECK(std::abs(v) < 1e-10);

    const auto cw = euclidean_curvature(testing::circle(1.0, 2048, {}, true));
    for (double v : cw.values) CHECK(std::abs(v + 1.0) <= 1e-4);
}

TEST_CASE("reconstruction examples") {
    const auto seg = reconstruct_euclidean(CurvatureSpec::constant(0.0), 1.0, 16);
    CHECK(max_component(seg.front()) == 0.0);
    CHECK(max_component(seg.back() - Point2{1, 0}) < 1e-15);

    const auto circle = reconstruct_euclidean(CurvatureSpec::constant(1.0), 2 * kPi, 4096);
    CHECK(circle.endpoint_gap() <= 1e-8);
    for (const auto& p : circle.points()) CHECK(std::abs(norm(p - Point2{0, 1}) - 1.0) < 1e-9);

    const auto k1 = reconstruct_euclidean(parse_spec("sinusoid:1,1,1/3"), 6 * kPi, 3 * 4096);
    CHECK(k1.endpoint_gap() <= 1e-5);
    // 3-fold symmetry: the curve after one period is the start rotated by 2 pi / 3.
    const std::size_t third = (k1.size() - 1) / 3;
    const Point2 v1 = k1.points()[third] - k1.front();
    const Point2 v2 = k1.points()[2 * third] - k1.points()[third];
    CHECK(std::abs(norm(v1) - norm(v2)) < 1e-6);
    CHECK(std::abs(std::remainder(std::atan2(cross(v1, v2), dot(v1, v2)) - 2 * kPi / 3, 2 * kPi)) < 1e-6);
}

TEST_CASE("sample count rule") {
    CHECK(euclidean_sample_count(CurvatureSpec::constant(1), 0, 1, 16) == 1025);
    CHECK(euclidean_sample_count(CurvatureSpec::constant(1), 0, 1, 5000) == 5001);
    const std::size_t n = euclidean_sample_count(CurvatureSpec::constant(100), 0, 100, 16);
    CHECK(n >= static_cast<std::size_t>(4 * 100 * 100 / kPi));
    CHECK(n % 2 == 1);
    const auto th = tangential_angle(CurvatureSpec::constant(2.0), 0.0, 1.0, 17, 0.3);
    CHECK(th.theta.front() == 0.3);
    CHECK(th.theta.back() == doctest::Approx(2.3));
    CHECK_THROWS_AS(reconstruct_euclidean(CurvatureSpec::constant(1), 1.0, 0.5, 100), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_euclidean(CurvatureSpec::constant(1), 1.0, 15), std::invalid_argument);
}

TEST_CASE("curvature round trip and unit speed") {
    const CurvatureSpec k = parse_spec("sin");
    const auto c = reconstruct_euclidean(k, 2 * kPi, 4096);
    const auto est = euclidean_curvature(c);
    double err = 0.0;
    for (std::size_t i = 0; i < est.grid.size(); ++i) err = std::max(err, std::abs(est.values[i] - k(est.grid[i])));
    CHECK(err <= 1e-3);
    for (const char* text : {"sin", "kn:10", "sinusoid:1,1,1/3", "const:3"}) {
        const auto r = reconstruct_euclidean(parse_spec(text), 2 * kPi, 4096);
        const auto& s = r.params();
        for (std::size_t i = 1; i + 1 < r.size(); ++i) {
            const double speed = norm(r.points()[i + 1] - r.points()[i]) / (s[i + 1] - s[i]);
            CHECK((speed >= 1 - 1e-4 && speed <= 1 + 1e-4));
        }
    }
}

TEST_CASE("rigid motion equivariance") {
    testing::Gen gen(23);
    const CurvatureSpec k = parse_spec("kn:5/3");
    const auto base = reconstruct_euclidean(k, 0.0, 7.0, 2049);
    for (int trial = 0; trial < 50; ++trial) {
        const RigidMotion g = gen.rigid();
        const auto direct = reconstruct_euclidean(k, 0.0, 7.0, 2049, Pose{g.apply({0, 0}), g.angle()});
        CHECK(sup_component_gap(transform(base, g).points(), direct.points()) <= 1e-9);
    }
}

TEST_CASE("chord arc inequality") {
    testing::Gen gen(31);
    for (int i = 0; i < 1000; ++i) {
        const double a = gen.uniform(-10, 10), b = gen.uniform(-10, 10);
        CHECK(std::hypot(std::cos(a) - std::cos(b), std::sin(a) - std::sin(b)) <= std::abs(a - b) + 1e-15);
    }
}

TEST_CASE("closure classification") {
    const auto k1 = classify_closure(parse_spec("sinusoid:1,1,1/3"));
    CHECK(k1.ratio == Rational{1, 3});
    CHECK(k1.predicted_closed);
    CHECK(k1.symmetry_index == 3);
    CHECK(k1.turning_number == 1);
    CHECK(k1.exact);
    CHECK(k1.minimal_period == doctest::Approx(6 * kPi));

    const auto k2 = classify_closure(parse_spec("sinusoid:1,1,1"), 2 * kPi);
    CHECK(k2.ratio == Rational{1, 1});
    CHECK_FALSE(k2.predicted_closed);

    const auto f = classify_closure(parse_spec("kn:5/3"));
    CHECK(f.ratio == Rational{3, 5});
    CHECK(f.turning_number == 3);
    CHECK(f.symmetry_index == 5);

    const auto line = classify_closure(parse_spec("const:0"), 1.0);
    CHECK(line.ratio == Rational{0, 1});
    CHECK_FALSE(line.predicted_closed);

    // Quadrature route: same answer for a table sampled from kappa_1.
    std::vector<double> t, v;
    for (int i = 0; i <= 2000; ++i) {
        t.push_back(2 * kPi * i / 2000.0);
        v.push_back(std::sin(t.back()) + std::cos(t.back()) + 1.0 / 3.0);
    }
    const auto tab = classify_closure(CurvatureSpec::table(t, v, true, Interpolation::cubic));
    CHECK_FALSE(tab.exact);
    CHECK(tab.ratio == Rational{1, 3});

    // Mean turn pi * 1e-7: the first convergent within 1e-8 has a denominator above the cap.
    const auto irr = classify_closure(CurvatureSpec::constant(2 * kPi * kPi * 1e-7), 1.0);
    CHECK_FALSE(irr.ratio.has_value());
    CHECK_FALSE(irr.predicted_closed);
    CHECK_THROWS_AS(classify_closure(CurvatureSpec::constant(1.0)), Error);
}

TEST_CASE("closure prediction holds for bump families") {
    for (auto [p, q] : {std::pair{5, 3}, {3, 5}, {7, 2}, {4, 3}}) {
        const CurvatureSpec k = CurvatureSpec::bump_kappa(Rational::make(p, q));
        const auto rep = classify_closure(k);
        REQUIRE(rep.predicted_closed);
        const auto periods = static_cast<std::size_t>(rep.symmetry_index);
        const auto c = reconstruct_euclidean(k, rep.minimal_period, 4096 * periods);
        CHECK(c.endpoint_gap() <= 1e-5);
        CHECK(turning_number(c) == rep.turning_number);
    }
}

TEST_CASE("turning number") {
    CHECK(turning_number(testing::circle(1.0, 1000)) == 1);
    CHECK(turning_number(testing::circle(3.0, 1000, {}, true)) == -1);
    const auto k35 = reconstruct_euclidean(parse_spec("kn:3/5"), 6 * kPi, 3 * 4096);
    CHECK(turning_number(k35) == 5);
    const auto open = reconstruct_euclidean(parse_spec("sinusoid:1,1,1"), 6 * kPi, 3 * 4096);
    CHECK(open.endpoint_gap() > 0.1);
    CHECK_THROWS_AS((void)turning_number(open), Error);
}

TEST_CASE("distance estimate checks") {
    const CurvatureSpec s = parse_spec("sin");
    const auto same = euclidean_bound_check(s, s, 2 * kPi, NormKind::linf);
    CHECK(same.delta == 0.0);
    CHECK(same.measured <= 1e-9);
    CHECK(same.satisfied);

    const auto shift = euclidean_bound_check(s, parse_spec("sinusoid:1,0,0.01"), 2 * kPi, NormKind::linf);
    CHECK(shift.delta == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(shift.bound == doctest::Approx(std::sqrt(2.0) * 0.01 * 4 * kPi * kPi / 2));
    CHECK(shift.bound <= 0.2793);
    CHECK(shift.measured <= shift.bound);
    CHECK(shift.satisfied);

    const auto k40 = euclidean_bound_check(s, parse_spec("kn:40"), 2 * kPi, NormKind::linf);
    CHECK(k40.delta <= 2 * kPi / 40 + 1e-12);
    CHECK(k40.measured <= std::sqrt(2.0) * k40.delta * 2 * kPi * kPi);
    CHECK(k40.satisfied);

    const auto l1 = euclidean_bound_check(s, parse_spec("kn:40"), 2 * kPi, NormKind::l1);
    CHECK(l1.delta == doctest::Approx(2 * kPi / 40).epsilon(1e-8));
    CHECK(l1.bound == doctest::Approx(std::sqrt(2.0) * l1.delta * 2 * kPi));
    CHECK(l1.satisfied);
}
