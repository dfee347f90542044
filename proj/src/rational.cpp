#include "chainloop/rational.hpp"

#include <cctype>

#include "chainloop/errors.hpp"

namespace chainloop {

namespace {

bool all_digits(const std::string& s, size_t begin, size_t end) {
    if (begin >= end) return false;
    for (size_t i = begin; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw ValidationError("rational denominator must be nonzero");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    // Strict grammar: -?digits(/digits)?; the denominator, when present,
    // must be positive.
    size_t start = 0;
    if (!text.empty() && text[0] == '-') start = 1;
    const size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!all_digits(text, start, text.size())) {
            throw ValidationError("cannot parse rational '" + text + "'");
        }
    } else {
        if (!all_digits(text, start, slash) ||
            !all_digits(text, slash + 1, text.size())) {
            throw ValidationError("cannot parse rational '" + text + "'");
        }
    }
    mpq_class v;
    if (v.set_str(text, 10) != 0) {
        throw ValidationError("cannot parse rational '" + text + "'");
    }
    if (v.get_den() == 0) {
        throw ValidationError("rational denominator must be nonzero in '" +
                              text + "'");
    }
    v.canonicalize();
    return Rational(std::move(v));
}

long Rational::to_long() const {
    if (!is_integer()) {
        throw InvariantError("rational " + str() + " is not an integer");
    }
    const mpz_class n = numerator();
    if (!n.fits_slong_p()) {
        throw InvariantError("integer " + str() + " does not fit in long");
    }
    return n.get_si();
}

std::string Rational::str() const { return value_.get_str(); }

Rational Rational::mod_floor(const Rational& modulus) const {
    if (!modulus.is_positive()) {
        throw InvariantError("mod_floor needs a positive modulus, got " +
                             modulus.str());
    }
    const mpq_class q = value_ / modulus.value_;
    mpz_class floor_q;
    mpz_fdiv_q(floor_q.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    mpq_class result = value_ - mpq_class(floor_q) * modulus.value_;
    result.canonicalize();
    return Rational(std::move(result));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw InvariantError("rational division by zero");
    }
    return Rational(mpq_class(a.value_ / b.value_));
}

}  // namespace chainloop
