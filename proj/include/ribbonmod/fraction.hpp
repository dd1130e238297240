#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ribbonmod {

using Int = std::int64_t;

namespace checked {
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);
} // namespace checked

/// Floor and ceiling of num/den for den > 0.
Int floor_div(Int num, Int den);
Int ceil_div(Int num, Int den);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Arithmetic throws OverflowError instead of wrapping.
class Fraction {
public:
    constexpr Fraction() = default;
    Fraction(Int value) : num_(value) {} // NOLINT(google-explicit-constructor)
    Fraction(Int numerator, Int denominator);

    Int numerator() const { return num_; }
    Int denominator() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);
    Fraction operator-() const;

    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

private:
    Int num_ = 0;
    Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

} // namespace ribbonmod
