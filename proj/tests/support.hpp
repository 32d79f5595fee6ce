#pragma once
// Shared fixtures for the unit tests: seeded generators and simple sampled curves.

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "curvrec/geometry.hpp"

namespace testing {

inline constexpr double kPi = std::numbers::pi;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
    curvrec::Point2 point(double r = 5.0) { return {uniform(-r, r), uniform(-r, r)}; }
    curvrec::RigidMotion rigid() { return curvrec::RigidMotion::from_angle(uniform(-kPi, kPi), point()); }
    curvrec::EquiAffineMap equi_affine() {
        const double s = std::exp(uniform(-0.7, 0.7));
        const curvrec::Mat2 m = curvrec::Mat2::rotation(uniform(-kPi, kPi)) * curvrec::Mat2{s, 0.0, 0.0, 1.0 / s} *
                                curvrec::Mat2{1.0, uniform(-1.0, 1.0), 0.0, 1.0};
        return {m, point()};
    }
    /// Random walk polyline with n points.
    std::vector<curvrec::Point2> polyline(std::size_t n) {
        std::vector<curvrec::Point2> out{point(2.0)};
        for (std::size_t i = 1; i < n; ++i) {
            out.push_back(out.back() + point(1.0));
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
};

/// Points of r (cos t, sin t) + center at n uniform t in [0, 2 pi], clockwise when r < 0 in angle.
inline curvrec::SampledCurve circle(double r, std::size_t n, curvrec::Point2 center = {}, bool clockwise = false) {
    std::vector<double> t(n);
    std::vector<curvrec::Point2> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n - 1);
        const double a = clockwise ? -t[i] : t[i];
        p[i] = center + curvrec::Point2{r * std::cos(a), r * std::sin(a)};
    }
    return {t, p};
}

template <class F>
curvrec::SampledCurve sample(F f, double a, double b, std::size_t n) {
    std::vector<double> t(n);
    std::vector<curvrec::Point2> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
        p[i] = f(t[i]);
    }
    return {t, p};
}

/// Dense point-to-point directed distance after subdividing every segment of q.
inline double brute_directed(const std::vector<curvrec::Point2>& p, const std::vector<curvrec::Point2>& q,
                             int subdivisions) {
    std::vector<curvrec::Point2> dense;
    for (std::size_t j = 0; j + 1 < q.size(); ++j) {
        for (int k = 0; k < subdivisions; ++k) {
            const double u = static_cast<double>(k) / subdivisions;
            dense.push_back(q[j] + u * (q[j + 1] - q[j]));
        }
    }
    dense.push_back(q.back());
    double worst = 0.0;
    for (const auto& x : p) {
        double best = INFINITY;
        for (const auto& y : dense) {
            best = std::min(best, curvrec::norm(x - y));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("curvrec-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace testing
