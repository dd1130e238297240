#include "ribbonmod/fraction.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "ribbonmod/errors.hpp"

namespace ribbonmod {

namespace {

using Wide = __int128;

Int narrow(Wide v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw OverflowError("integer overflow in exact arithmetic");
    return static_cast<Int>(v);
}

Wide wgcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Fraction make(Wide num, Wide den) {
    if (den == 0) throw DomainError("division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide g = wgcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Fraction(narrow(num), narrow(den));
}

} // namespace

namespace checked {

Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

Int neg(Int a) { return sub(0, a); }

} // namespace checked

Int floor_div(Int num, Int den) {
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

Int ceil_div(Int num, Int den) {
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
    return q;
}

Fraction::Fraction(Int numerator, Int denominator) {
    if (denominator == 0) throw DomainError("fraction with zero denominator");
    Wide n = numerator;
    Wide d = denominator;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Wide g = wgcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    return make(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                static_cast<Wide>(a.den_) * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
    return make(static_cast<Wide>(a.num_) * b.den_ - static_cast<Wide>(b.num_) * a.den_,
                static_cast<Wide>(a.den_) * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    return make(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_ == 0) throw DomainError("division by zero");
    return make(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
}

Fraction Fraction::operator-() const { return Fraction(checked::neg(num_), den_); }

std::string Fraction::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

} // namespace ribbonmod
