#include "curvrec/numerics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "curvrec/errors.hpp"

namespace curvrec::numerics {

std::vector<std::vector<double>> fd_weights(double x0, std::span<const double> nodes, int max_order) {
    const std::size_t n = nodes.size();
    if (n == 0 || max_order < 0) {
        throw std::invalid_argument("fd_weights: empty stencil");
    }
    const auto m = static_cast<std::size_t>(max_order);
    std::vector<std::vector<double>> c(m + 1, std::vector<double>(n, 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - x0;
    c[0][0] = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[i] - x0;
        for (std::size_t j = 0; j < i; ++j) {
            const double c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if (j == i - 1) {
                for (std::size_t k = mn; k >= 1; --k) {
                    c[k][i] = c1 * (static_cast<double>(k) * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (std::size_t k = mn; k >= 1; --k) {
                c[k][j] = (c4 * c[k][j] - static_cast<double>(k) * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c;
}

namespace {

template <typename T>
std::vector<T> derivative_impl(std::span<const double> grid, std::span<const T> values, int order, int stencil) {
    const std::size_t n = grid.size();
    if (values.size() != n) {
        throw std::invalid_argument("derivative: grid/value size mismatch");
    }
    const auto width = std::min<std::size_t>(static_cast<std::size_t>(stencil), n);
    if (width <= static_cast<std::size_t>(order)) {
        throw std::invalid_argument("derivative: stencil too small for requested order");
    }
    std::vector<T> out(n, T{});
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t half = width / 2;
        std::size_t start = i > half ? i - half : 0;
        start = std::min(start, n - width);
        const auto w = fd_weights(grid[i], grid.subspan(start, width), order);
        T acc{};
        for (std::size_t j = 0; j < width; ++j) {
            acc += w[static_cast<std::size_t>(order)][j] * values[start + j];
        }
        out[i] = acc;
    }
    return out;
}

// Exact integral over [p, q] of the quadratic interpolating f at a, b, c.
std::array<double, 3> quadratic_weights(double a, double b, double c, double p, double q) {
    // Shift to a for conditioning.
    b -= a;
    c -= a;
    p -= a;
    q -= a;
    auto antideriv = [](double x, double r1, double r2) {
        // integral of (x - r1)(x - r2)
        return x * x * x / 3.0 - (r1 + r2) * x * x / 2.0 + r1 * r2 * x;
    };
    const double ia = antideriv(q, b, c) - antideriv(p, b, c);
    const double ib = antideriv(q, 0.0, c) - antideriv(p, 0.0, c);
    const double ic = antideriv(q, 0.0, b) - antideriv(p, 0.0, b);
    return {ia / ((0.0 - b) * (0.0 - c)), ib / (b * (b - c)), ic / (c * (c - b))};
}

template <typename T>
std::vector<T> cumulative_impl(std::span<const double> x, std::span<const T> f) {
    const std::size_t n = x.size();
    if (f.size() != n) {
        throw std::invalid_argument("cumulative_integral: grid/value size mismatch");
    }
    std::vector<T> out(n, T{});
    if (n < 2) {
        return out;
    }
    if (n == 2) {
        out[1] = 0.5 * (x[1] - x[0]) * (f[0] + f[1]);
        return out;
    }
    // Compensated running sums per component.
    CompensatedSum sx;
    CompensatedSum sy;
    auto add = [&](const T& v) {
        if constexpr (std::is_same_v<T, double>) {
            sx.add(v);
        } else {
            sx.add(v.x);
            sy.add(v.y);
        }
    };
    auto current = [&]() {
        if constexpr (std::is_same_v<T, double>) {
            return sx.value();
        } else {
            return T{sx.value(), sy.value()};
        }
    };
    std::size_t k = 0;
    while (k + 2 < n) {
        const auto half = quadratic_weights(x[k], x[k + 1], x[k + 2], x[k], x[k + 1]);
        out[k + 1] = current() + (half[0] * f[k] + half[1] * f[k + 1] + half[2] * f[k + 2]);
        const auto full = quadratic_weights(x[k], x[k + 1], x[k + 2], x[k], x[k + 2]);
        add(full[0] * f[k] + full[1] * f[k + 1] + full[2] * f[k + 2]);
        out[k + 2] = current();
        k += 2;
    }
    if (k + 1 < n) {
        const auto w = quadratic_weights(x[k - 1], x[k], x[k + 1], x[k], x[k + 1]);
        out[k + 1] = current() + (w[0] * f[k - 1] + w[1] * f[k] + w[2] * f[k + 1]);
    }
    return out;
}

}  // namespace

std::vector<double> derivative(std::span<const double> grid, std::span<const double> values, int order, int stencil) {
    return derivative_impl(grid, values, order, stencil);
}

std::vector<Point2> derivative(std::span<const double> grid, std::span<const Point2> values, int order, int stencil) {
    return derivative_impl(grid, values, order, stencil);
}

std::vector<double> cumulative_integral(std::span<const double> grid, std::span<const double> values) {
    return cumulative_impl(grid, values);
}

std::vector<Point2> cumulative_integral(std::span<const double> grid, std::span<const Point2> values) {
    return cumulative_impl(grid, values);
}

void cumulative_simpson_uniform(double h, std::span<const double> f, std::span<double> out) {
    const std::size_t n = f.size();
    if (out.size() != n) {
        throw std::invalid_argument("cumulative_simpson_uniform: output size mismatch");
    }
    if (n == 0) {
        return;
    }
    out[0] = 0.0;
    if (n == 2) {
        out[1] = 0.5 * h * (f[0] + f[1]);
        return;
    }
    const double h3 = h / 3.0;
    const double h12 = h / 12.0;
    CompensatedSum acc;
    std::size_t k = 0;
    for (; k + 2 < n; k += 2) {
        out[k + 1] = acc.value() + h12 * (5.0 * f[k] + 8.0 * f[k + 1] - f[k + 2]);
        acc.add(h3 * (f[k] + 4.0 * f[k + 1] + f[k + 2]));
        out[k + 2] = acc.value();
    }
    if (k + 1 < n) {
        out[k + 1] = acc.value() + h12 * (-f[k - 1] + 8.0 * f[k] + 5.0 * f[k + 1]);
    }
}

double integral(std::span<const double> grid, std::span<const double> values) {
    if (grid.size() < 2) {
        return 0.0;
    }
    return cumulative_integral(grid, values).back();
}

double pairwise_sum(std::span<const double> values) {
    constexpr std::size_t kBlock = 16;
    if (values.size() <= kBlock) {
        double s = 0.0;
        for (double v : values) {
            s += v;
        }
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

void CompensatedSum::add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
        comp_ += (sum_ - t) + v;
    } else {
        comp_ += (v - t) + sum_;
    }
    sum_ = t;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("linspace: need at least two points");
    }
    std::vector<double> out(n);
    const double h = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a + h * static_cast<double>(i);
    }
    out.back() = b;
    return out;
}

Point2 HermiteSegment::value(double t) const {
    const double h = t1 - t0;
    const double u = (t - t0) / h;
    const double u2 = u * u;
    const double u3 = u2 * u;
    const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
    const double h10 = u3 - 2.0 * u2 + u;
    const double h01 = -2.0 * u3 + 3.0 * u2;
    const double h11 = u3 - u2;
    return h00 * p0 + (h10 * h) * d0 + h01 * p1 + (h11 * h) * d1;
}

Point2 HermiteSegment::tangent(double t) const {
    const double h = t1 - t0;
    const double u = (t - t0) / h;
    const double u2 = u * u;
    const double g00 = (6.0 * u2 - 6.0 * u) / h;
    const double g10 = 3.0 * u2 - 4.0 * u + 1.0;
    const double g01 = (-6.0 * u2 + 6.0 * u) / h;
    const double g11 = 3.0 * u2 - 2.0 * u;
    return g00 * p0 + g10 * d0 + g01 * p1 + g11 * d1;
}

ArcLengthTable arclength_table(const SampledCurve& curve) {
    const auto& t = curve.params();
    const auto& p = curve.points();
    ArcLengthTable table;
    table.velocity = derivative(t, p, 1, 5);
    table.arclength.assign(t.size(), 0.0);

    // 5-point Gauss-Legendre on [0, 1].
    static constexpr std::array<double, 5> kNodes = {0.04691007703066800, 0.23076534494715845, 0.5,
                                                     0.76923465505284155, 0.95308992296933200};
    static constexpr std::array<double, 5> kWeights = {0.11846344252809454, 0.23931433524968324, 0.28444444444444444,
                                                       0.23931433524968324, 0.11846344252809454};
    CompensatedSum acc;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const HermiteSegment seg{t[i], t[i + 1], p[i], p[i + 1], table.velocity[i], table.velocity[i + 1]};
        const double h = t[i + 1] - t[i];
        double len = 0.0;
        for (std::size_t q = 0; q < kNodes.size(); ++q) {
            len += kWeights[q] * norm(seg.tangent(t[i] + kNodes[q] * h));
        }
        acc.add(len * h);
        table.arclength[i + 1] = acc.value();
    }
    return table;
}

std::vector<double> monotone_hermite(std::span<const double> x, std::span<const double> y,
                                     std::span<const double> slopes, std::span<const double> queries) {
    const std::size_t n = x.size();
    if (y.size() != n || slopes.size() != n || n < 2) {
        throw std::invalid_argument("monotone_hermite: bad table");
    }
    std::vector<double> m(slopes.begin(), slopes.end());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double delta = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
        if (delta == 0.0) {
            m[i] = 0.0;
            m[i + 1] = 0.0;
            continue;
        }
        double a = m[i] / delta;
        double b = m[i + 1] / delta;
        if (a < 0.0) {
            m[i] = 0.0;
            a = 0.0;
        }
        if (b < 0.0) {
            m[i + 1] = 0.0;
            b = 0.0;
        }
        const double r = a * a + b * b;
        if (r > 9.0) {
            const double tau = 3.0 / std::sqrt(r);
            m[i] = tau * a * delta;
            m[i + 1] = tau * b * delta;
        }
    }
    std::vector<double> out;
    out.reserve(queries.size());
    for (double q : queries) {
        auto it = std::upper_bound(x.begin(), x.end(), q);
        std::size_t i = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
        i = std::min(i, n - 2);
        const double h = x[i + 1] - x[i];
        const double u = (q - x[i]) / h;
        const double u2 = u * u;
        const double u3 = u2 * u;
        out.push_back((2.0 * u3 - 3.0 * u2 + 1.0) * y[i] + (u3 - 2.0 * u2 + u) * h * m[i] +
                      (-2.0 * u3 + 3.0 * u2) * y[i + 1] + (u3 - u2) * h * m[i + 1]);
    }
    return out;
}

Point2 hermite_curve_at(const SampledCurve& curve, std::span<const Point2> velocity, double t) {
    const auto& params = curve.params();
    const auto& pts = curve.points();
    auto it = std::upper_bound(params.begin(), params.end(), t);
    std::size_t i = it == params.begin() ? 0 : static_cast<std::size_t>(it - params.begin()) - 1;
    i = std::min(i, params.size() - 2);
    const HermiteSegment seg{params[i], params[i + 1], pts[i], pts[i + 1], velocity[i], velocity[i + 1]};
    return seg.value(t);
}

}  // namespace curvrec::numerics
