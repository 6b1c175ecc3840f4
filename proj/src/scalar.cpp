#include "crmap/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace crmap {

namespace {

constexpr unsigned long kTrialBound = 100000;

int sgn_rational(const Rational& q) { return sgn(q); }

// enclosure sqrt(m) in [lo, hi] with hi - lo = 2^-prec
void sqrt_enclosure(const Int& m, unsigned prec, Rational& lo, Rational& hi) {
    Int shifted = m << (2 * prec);
    Int s = sqrt(shifted);  // floor
    Int den = Int(1) << prec;
    lo = Rational(s, den);
    lo.canonicalize();
    hi = Rational(s + 1, den);
    hi.canonicalize();
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s(text);
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Scalar Scalar::radical_term(const Rational& re, const Rational& im, const Int& rad) {
    Scalar s;
    s.add_term(rad, re, im);
    return s;
}

void Scalar::add_term(const Int& rad, const Rational& re, const Rational& im) {
    if (re == 0 && im == 0) return;
    auto it = terms_.find(rad);
    if (it == terms_.end()) {
        terms_.emplace(rad, GaussRat{re, im});
    } else {
        it->second.re += re;
        it->second.im += im;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Scalar::is_real() const {
    for (const auto& [m, c] : terms_)
        if (c.im != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == 1 && terms_.begin()->second.im == 0;
}

bool Scalar::is_gaussian() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == 1;
}

Rational Scalar::to_rational() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw CrmapError("scalar is not rational: " + str());
    return terms_.begin()->second.re;
}

GaussRat Scalar::to_gaussian() const {
    if (terms_.empty()) return GaussRat{};
    if (!is_gaussian()) throw CrmapError("scalar is not Gaussian rational: " + str());
    return terms_.begin()->second;
}

Scalar Scalar::conj() const {
    Scalar out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, GaussRat{-c.re, -c.im});
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c.re, c.im);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c.re, -c.im);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (const auto& [m, c] : a.terms_) {
        for (const auto& [n, d] : b.terms_) {
            // sqrt(m)*sqrt(n) = g*sqrt((m/g)(n/g)) with g = gcd(m,n); m,n square-free
            Int g = gcd(m, n);
            Int tag = (m / g) * (n / g);
            Rational gq(g);
            Rational re = (c.re * d.re - c.im * d.im) * gq;
            Rational im = (c.re * d.im + c.im * d.re) * gq;
            out.add_term(tag, re, im);
        }
    }
    return out;
}

namespace {

// Smallest prime factor by trial division; for tags with no factor <= bound the
// tag itself acts as an atom, refined by gcd against the other tags.
Int pick_split_atom(const Scalar::Terms& terms) {
    Int best = 0;
    for (const auto& [m, c] : terms) {
        if (m == 1) continue;
        for (unsigned long p = 2; p <= kTrialBound && Int(p) * Int(p) <= m; p = (p == 2 ? 3 : p + 2)) {
            if (m % p == 0) return Int(p);
        }
        if (best == 0 || m < best) best = m;
    }
    // refine against shared factors with other tags
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [m, c] : terms) {
            if (m == 1 || m == best) continue;
            Int g = gcd(m, best);
            if (g > 1 && g < best) {
                best = g;
                changed = true;
            }
        }
    }
    return best;
}

}  // namespace

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_gaussian()) {
        GaussRat c = terms_.begin()->second;
        Rational n = c.re * c.re + c.im * c.im;
        return Scalar(c.re / n, -c.im / n);
    }
    Int p = pick_split_atom(terms_);
    // this = x + sqrt(p) * y with x, y free of the atom p
    Scalar x, y;
    for (const auto& [m, c] : terms_) {
        if (m % p == 0)
            y.add_term(m / p, c.re, c.im);
        else
            x.add_term(m, c.re, c.im);
    }
    Scalar ps = Scalar(Rational(p));
    Scalar norm = x * x - ps * (y * y);  // free of sqrt(p), nonzero by independence
    Scalar sqrtp = Scalar::radical_term(Rational(1), Rational(0), p);
    return (x - sqrtp * y) * norm.inverse();
}

int Scalar::sign() const {
    if (!is_real()) throw CrmapError("sign of non-real scalar: " + str());
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return sgn_rational(terms_.begin()->second.re);
    for (unsigned prec = 32; prec <= 4096; prec *= 2) {
        Rational lo(0), hi(0);
        for (const auto& [m, c] : terms_) {
            Rational l, h;
            sqrt_enclosure(m, prec, l, h);
            if (c.re >= 0) {
                lo += c.re * l;
                hi += c.re * h;
            } else {
                lo += c.re * h;
                hi += c.re * l;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    // unreachable for canonical nonzero values (sqrt(m) linearly independent over Q)
    throw CrmapError("sign undecided after refinement: " + str());
}

FloatComplex Scalar::to_complex() const {
    FloatComplex out(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        double r = std::sqrt(m.get_d());
        out += FloatComplex(c.re.get_d() * r, c.im.get_d() * r);
    }
    return out;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& q, bool imag, const Int& m) {
        if (q == 0) return;
        Rational a = q;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            if (a < 0) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
        }
        os << a.get_str();
        if (imag) os << " i";
        if (m != 1) os << " * sqrt(" << m.get_str() << ")";
    };
    for (const auto& [m, c] : terms_) {
        emit(c.re, false, m);
        emit(c.im, true, m);
    }
    return os.str();
}

Scalar Scalar::parse(std::string_view text) {
    Scalar out;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
    };
    skip_ws();
    if (pos == text.size()) throw ParseError("empty scalar literal");
    bool expect_term = true;
    int sign = 1;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        char ch = text[pos];
        if (ch == '+' || ch == '-') {
            if (expect_term && ch == '-')
                sign = -sign;
            else if (!expect_term)
                sign = (ch == '-') ? -1 : 1;
            expect_term = true;
            pos++;
            continue;
        }
        if (!expect_term) throw ParseError("unexpected '" + std::string(1, ch) + "' in scalar literal");
        // rational part p[/q] (optional when the term is just 'i')
        size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            pos++;
        Rational coeff(1);
        if (pos > start) coeff = parse_rational(text.substr(start, pos - start));
        skip_ws();
        bool imag = false;
        if (pos < text.size() && text[pos] == 'i') {
            imag = true;
            pos++;
        } else if (pos == start) {
            throw ParseError("expected rational or 'i' in scalar literal");
        }
        skip_ws();
        Int rad = 1;
        if (pos < text.size() && text[pos] == '*') {
            pos++;
            skip_ws();
            if (text.substr(pos, 5) != "sqrt(") throw ParseError("expected sqrt( after *");
            pos += 5;
            size_t close = text.find(')', pos);
            if (close == std::string_view::npos) throw ParseError("unterminated sqrt(");
            rad = Int(std::string(text.substr(pos, close - pos)));
            if (rad <= 0) throw ParseError("sqrt radicand must be positive");
            pos = close + 1;
        }
        Rational c = sign > 0 ? coeff : -coeff;
        // normalize possibly non-square-free tags from user input
        auto [s, m] = extract_square(rad);
        c *= Rational(s);
        if (imag)
            out.add_term(m, Rational(0), c);
        else
            out.add_term(m, c, Rational(0));
        sign = 1;
        expect_term = false;
    }
    if (expect_term) throw ParseError("dangling sign in scalar literal");
    return out;
}

std::pair<Int, Int> extract_square(const Int& n) {
    if (n <= 0) throw CrmapError("extract_square expects positive input");
    Int square(1), rest = n, free_part(1);
    for (unsigned long p = 2; p <= kTrialBound; p = (p == 2 ? 3 : p + 2)) {
        Int pp(p);
        if (pp * pp > rest) break;
        unsigned count = 0;
        while (rest % pp == 0) {
            rest /= pp;
            count++;
        }
        for (unsigned j = 0; j + 1 < count; j += 2) square *= pp;
        if (count % 2 == 1) free_part *= pp;
    }
    if (rest == 1) return {square, free_part};
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
        return {square * sqrt(rest), free_part};
    }
    Int bound2 = Int(kTrialBound) * Int(kTrialBound);
    if (rest < bound2)  // no factor <= bound and below bound^2: rest is prime
        return {square, free_part * rest};
    throw RadicalNotRepresentable("cannot certify square-free part of " + n.get_str());
}

Scalar sqrt_rational(const Rational& q) {
    if (q < 0) throw NegativeRadicand(rational_str(q));
    if (q == 0) return Scalar();
    Int n = q.get_num() * q.get_den();
    auto [s, m] = extract_square(n);
    Rational coeff(s, q.get_den());
    coeff.canonicalize();
    return Scalar::radical_term(coeff, Rational(0), m);
}

Scalar abs2(const Scalar& s) { return s * s.conj(); }

Scalar sqrt_scalar(const Scalar& s) {
    if (!s.is_real()) throw RadicalNotRepresentable("sqrt of non-real scalar " + s.str());
    int sg = s.sign();
    if (sg < 0) throw NegativeRadicand(s.str());
    if (sg == 0) return Scalar();
    if (s.is_rational()) return sqrt_rational(s.to_rational());
    // single-radical case x + y*sqrt(m): denest via sqrt(x^2 - m y^2)
    Rational x(0), y(0);
    Int m(0);
    for (const auto& [tag, c] : s.terms()) {
        if (tag == 1) {
            x = c.re;
        } else if (m == 0) {
            m = tag;
            y = c.re;
        } else {
            throw RadicalNotRepresentable("sqrt of multi-radical scalar " + s.str());
        }
    }
    Rational d2 = x * x - Rational(m) * y * y;
    if (d2 >= 0) {
        Scalar d = sqrt_rational(d2);
        if (d.is_rational()) {
            Rational dr = d.to_rational();
            Rational cand_a((x + dr) / 2), cand_b((x - dr) / 2);
            for (const Rational& u2 : {cand_a, cand_b}) {
                if (u2 <= 0) continue;
                Scalar u = sqrt_rational(u2);
                Scalar v = Scalar(y) / (Scalar(2) * u);
                Scalar sqm = Scalar::radical_term(Rational(1), Rational(0), m);
                Scalar cand = u + v * sqm;
                if (cand.sign() < 0) cand = -cand;
                if (cand * cand == s) return cand;
            }
        }
    }
    throw RadicalNotRepresentable("sqrt(" + s.str() + ") does not denest");
}

}  // namespace crmap
