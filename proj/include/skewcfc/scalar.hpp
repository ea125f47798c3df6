#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace skewcfc {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every GMP operation.
using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q" with q >= 1, e.g. "2/1", "-3/4", "0/1".
std::string rational_to_fraction(const Rational& r);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_short(const Rational& r);

/// Exact complex number re + im*i with rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {} // NOLINT(google-explicit-constructor)
    /// Canonicalizes both parts, so mpq_class(4, 2) is accepted as 2.
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) // NOLINT
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational fraction(long num, long den);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    /// Throws DivisionByZero for zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Lexicographic on (re, im). Not a field order; used for normalization
    /// tie-breaks and deterministic sorting only.
    friend std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b);

    /// Compact literal accepted by parse_gaussian: "2", "-1/2", "3/4i",
    /// "1/2+3/4i", "1-1i".
    std::string to_literal() const;

private:
    Rational re_{0};
    Rational im_{0};
};

/// Parses a literal such as "2", "-1/2", "i", "-i", "3/4i", "1/2+3/4i",
/// "1-i". Throws ParseError with the offset into `text`.
GaussianRational parse_gaussian(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

} // namespace skewcfc
