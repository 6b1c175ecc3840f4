#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "crmap/errors.hpp"

namespace crmap {

using Int = mpz_class;
using Rational = mpq_class;
using FloatComplex = std::complex<double>;

Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& q);

/// Gaussian rational re + i*im, the coefficient of one radical tag.
struct GaussRat {
    Rational re{0}, im{0};

    bool is_zero() const { return re == 0 && im == 0; }
    GaussRat conj() const { return {re, -im}; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Exact element of Q(i)(sqrt(m1), sqrt(m2), ...): a finite sum
/// sum_m (re_m + i*im_m) * sqrt(m) over distinct square-free tags m >= 1.
/// Canonical form: tags square-free, no zero coefficient stored, map sorted by tag,
/// so operator== on the term list decides equality of values.
class Scalar {
public:
    using Terms = std::map<Int, GaussRat>;

    Scalar() = default;
    Scalar(int n) { add_term(1, Rational(n), Rational(0)); }
    Scalar(long n) { add_term(1, Rational(n), Rational(0)); }
    Scalar(const Rational& q) { add_term(1, q, Rational(0)); }
    Scalar(const Rational& re, const Rational& im) { add_term(1, re, im); }

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    /// (re + i*im) * sqrt(rad); rad must already be square-free and positive.
    static Scalar radical_term(const Rational& re, const Rational& im, const Int& rad);

    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;
    bool is_rational() const;
    /// true when no radical tag beyond 1 occurs (element of Q(i))
    bool is_gaussian() const;
    Rational to_rational() const;       // throws CrmapError unless is_rational()
    GaussRat to_gaussian() const;       // throws CrmapError unless is_gaussian()

    Scalar conj() const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// exact reciprocal via recursive conjugate rationalization over the radical tower
    Scalar inverse() const;

    /// exact sign of a real scalar (-1, 0, +1); throws CrmapError if not real
    int sign() const;

    FloatComplex to_complex() const;

    /// scalar literal grammar: terms `[+-] p[/q] [i] [* sqrt(m)]` joined by +/-
    std::string str() const;
    static Scalar parse(std::string_view text);

    void add_term(const Int& rad, const Rational& re, const Rational& im);

private:
    Terms terms_;
};

inline Scalar operator*(const Rational& q, const Scalar& s) { return Scalar(q) * s; }

/// sqrt of a nonnegative rational as r*sqrt(m), m square-free.
/// sqrt(p/q) is normalized to sqrt(p*q)/q so tags stay integral.
Scalar sqrt_rational(const Rational& q);

/// sqrt of a nonnegative real scalar; denests sqrt(x + y*sqrt(m)) when possible,
/// otherwise throws RadicalNotRepresentable.
Scalar sqrt_scalar(const Scalar& s);

/// |s|^2 = s * conj(s) (always a real scalar)
Scalar abs2(const Scalar& s);

/// n = s^2 * m with m square-free; throws RadicalNotRepresentable when the
/// square-free part cannot be certified by trial division. n > 0.
std::pair<Int, Int> extract_square(const Int& n);

}  // namespace crmap
