#include "curvrec/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace curvrec {

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

bool Rational::is_reduced() const { return den > 0 && std::gcd(num, den) == 1; }

std::string Rational::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

std::optional<Rational> rationalize(double x, std::int64_t max_den, double tol) {
    if (!std::isfinite(x)) {
        return std::nullopt;
    }
    const long double ax = std::abs(static_cast<long double>(x));
    long double y = ax;
    std::int64_t p_prev = 0;
    std::int64_t q_prev = 1;
    std::int64_t p = 1;
    std::int64_t q = 0;
    for (int iter = 0; iter < 64; ++iter) {
        const long double a_ld = std::floor(y);
        if (a_ld > 9.0e15L) {
            break;
        }
        const auto a = static_cast<std::int64_t>(a_ld);
        const std::int64_t p_next = a * p + p_prev;
        const std::int64_t q_next = a * q + q_prev;
        if (q_next > max_den || q_next <= 0) {
            break;
        }
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        if (std::abs(ax - static_cast<long double>(p) / static_cast<long double>(q)) <= tol) {
            return Rational::make(x < 0 ? -p : p, q);
        }
        const long double frac = y - a_ld;
        if (frac == 0.0L) {
            break;
        }
        y = 1.0L / frac;
    }
    return std::nullopt;
}

}  // namespace curvrec
