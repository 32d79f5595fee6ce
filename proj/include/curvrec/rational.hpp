#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace curvrec {

/// Reduced fraction num/den with den > 0.
struct Rational {
    std::int64_t num{0};
    std::int64_t den{1};

    /// Throws std::invalid_argument for a zero denominator. Reduces and normalizes the sign.
    [[nodiscard]] static Rational make(std::int64_t num, std::int64_t den);

    [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    [[nodiscard]] bool is_reduced() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Best rational approximation of x by continued fractions: the first convergent with
/// |x - p/q| <= tol, provided q <= max_den. Returns nullopt when no convergent within
/// the denominator cap meets the tolerance.
[[nodiscard]] std::optional<Rational> rationalize(double x, std::int64_t max_den = 1'000'000, double tol = 1e-8);

}  // namespace curvrec
