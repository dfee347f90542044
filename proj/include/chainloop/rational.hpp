#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace chainloop {

// Exact rational number backed by GMP, always kept in lowest terms with a
// positive denominator. All arithmetic is exact; there is no floating point
// anywhere in the numeric core.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long numerator) : value_(numerator) {}  // NOLINT: implicit by design
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    // Parses "n", "-n" or "n/d" with a positive decimal denominator.
    static Rational from_string(const std::string& text);

    mpz_class numerator() const { return mpz_class(value_.get_num()); }
    mpz_class denominator() const { return mpz_class(value_.get_den()); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_positive() const { return sgn(value_) > 0; }
    bool is_negative() const { return sgn(value_) < 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    // Requires is_integer() and a value that fits in long.
    long to_long() const;

    double to_double() const { return value_.get_d(); }

    // "n" or "n/d".
    std::string str() const;

    // Floor-division remainder into [0, modulus); modulus must be positive.
    Rational mod_floor(const Rational& modulus) const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ + b.value_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ - b.value_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ * b.value_));
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) {
        return Rational(mpq_class(-a.value_));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& a,
                                            const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

}  // namespace chainloop
