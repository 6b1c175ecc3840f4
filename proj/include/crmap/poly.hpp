#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "crmap/errors.hpp"
#include "crmap/scalar.hpp"

namespace crmap {

/// The four complexified source variables. chi is the formal conjugate of z, tau of w.
enum class Var : int { z = 0, w = 1, chi = 2, tau = 3 };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::z: return "z";
        case Var::w: return "w";
        case Var::chi: return "chi";
        default: return "tau";
    }
}

struct Expo {
    std::array<int, 4> e{0, 0, 0, 0};

    int total() const { return e[0] + e[1] + e[2] + e[3]; }
    int operator[](Var v) const { return e[static_cast<int>(v)]; }
    int& operator[](Var v) { return e[static_cast<int>(v)]; }
    friend bool operator==(const Expo& a, const Expo& b) { return a.e == b.e; }
};

/// graded lexicographic with z < w < chi < tau (fixed term order for canonical printing)
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        return a.e < b.e;
    }
};

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Scalar> {
    static bool is_zero(const Scalar& c) { return c.is_zero(); }
    static Scalar conj(const Scalar& c) { return c.conj(); }
    static Scalar one() { return Scalar(1); }
    static std::string str(const Scalar& c) { return c.str(); }
};

template <>
struct CoeffOps<FloatComplex> {
    static bool is_zero(const FloatComplex& c) { return c.real() == 0.0 && c.imag() == 0.0; }
    static FloatComplex conj(const FloatComplex& c) { return std::conj(c); }
    static FloatComplex one() { return {1.0, 0.0}; }
    static std::string str(const FloatComplex& c) {
        std::ostringstream os;
        os.precision(17);
        os << "(" << c.real() << "," << c.imag() << ")";
        return os.str();
    }
};

/// Sparse multivariate polynomial in (z, w, chi, tau) over C.
/// Invariant: no zero coefficient stored; exponents non-negative.
template <class C>
class Poly {
public:
    using Ops = CoeffOps<C>;
    using TermMap = std::map<Expo, C, GrlexLess>;

    Poly() = default;
    explicit Poly(const C& c) { add_term(Expo{}, c); }
    Poly(int n) { add_term(Expo{}, C(n)); }

    static Poly variable(Var v) {
        Expo ex;
        ex[v] = 1;
        Poly p;
        p.add_term(ex, Ops::one());
        return p;
    }
    static Poly monomial(const Expo& ex, const C& c) {
        Poly p;
        p.add_term(ex, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    int degree() const {  // total degree; -1 for the zero polynomial
        int d = -1;
        for (const auto& [ex, c] : terms_) d = std::max(d, ex.total());
        return d;
    }
    int degree(Var v) const {
        int d = 0;
        for (const auto& [ex, c] : terms_) d = std::max(d, ex[v]);
        return d;
    }

    void add_term(const Expo& ex, const C& c) {
        if (Ops::is_zero(c)) return;
        auto it = terms_.find(ex);
        if (it == terms_.end()) {
            terms_.emplace(ex, c);
        } else {
            it->second = it->second + c;
            if (Ops::is_zero(it->second)) terms_.erase(it);
        }
    }

    C coeff(const Expo& ex) const {
        auto it = terms_.find(ex);
        return it == terms_.end() ? C(0) : it->second;
    }
    C constant_term() const { return coeff(Expo{}); }

    Poly operator-() const {
        Poly out;
        for (const auto& [ex, c] : terms_) out.terms_.emplace(ex, -c);
        return out;
    }
    Poly& operator+=(const Poly& o) {
        for (const auto& [ex, c] : o.terms_) add_term(ex, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [ex, c] : o.terms_) add_term(ex, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Expo ex;
                for (int k = 0; k < 4; k++) ex.e[k] = ea.e[k] + eb.e[k];
                out.add_term(ex, ca * cb);
            }
        }
        return out;
    }
    friend Poly operator*(const C& c, const Poly& p) { return Poly(c) * p; }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        for (const auto& [ex, c] : b.terms_) {
            if (!(ia->first == ex)) return false;
            C d = ia->second - c;
            if (!Ops::is_zero(d)) return false;
            ++ia;
        }
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// k-th partial derivative
    Poly diff(Var v, int k = 1) const {
        Poly cur = *this;
        for (int j = 0; j < k; j++) {
            Poly next;
            for (const auto& [ex, c] : cur.terms_) {
                int n = ex[v];
                if (n == 0) continue;
                Expo ey = ex;
                ey[v] = n - 1;
                next.add_term(ey, C(n) * c);
            }
            cur = std::move(next);
        }
        return cur;
    }

    /// exact composition: substitute `replacement` for variable v
    Poly subst(Var v, const Poly& replacement) const {
        // group terms by the v-exponent, then accumulate powers of the replacement
        std::map<int, Poly> slices;
        for (const auto& [ex, c] : terms_) {
            Expo ey = ex;
            int k = ey[v];
            ey[v] = 0;
            slices[k].add_term(ey, c);
        }
        Poly out, power(Ops::one());
        int cur = 0;
        for (const auto& [k, slice] : slices) {
            while (cur < k) {
                power = power * replacement;
                cur++;
            }
            out += slice * power;
        }
        return out;
    }

    /// formal conjugation: swap z<->chi, w<->tau and conjugate coefficients (ring involution)
    Poly conjugate() const {
        Poly out;
        for (const auto& [ex, c] : terms_) {
            Expo ey;
            ey.e = {ex.e[2], ex.e[3], ex.e[0], ex.e[1]};
            out.add_term(ey, Ops::conj(c));
        }
        return out;
    }

    template <class T>
    T eval(const std::array<T, 4>& pt) const {
        T out(0);
        for (const auto& [ex, c] : terms_) {
            T t = convert_coeff<T>(c);
            for (int k = 0; k < 4; k++)
                for (int j = 0; j < ex.e[k]; j++) t = t * pt[k];
            out = out + t;
        }
        return out;
    }

    Poly<FloatComplex> to_float() const {
        Poly<FloatComplex> out;
        for (const auto& [ex, c] : terms_) out.add_term(ex, to_float_coeff(c));
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [ex, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << Ops::str(c) << ")";
            for (int k = 0; k < 4; k++)
                if (ex.e[k] > 0) {
                    os << "*" << var_name(static_cast<Var>(k));
                    if (ex.e[k] > 1) os << "^" << ex.e[k];
                }
        }
        return os.str();
    }

private:
    template <class T>
    static T convert_coeff(const C& c) {
        if constexpr (std::is_same_v<C, T>)
            return c;
        else if constexpr (std::is_same_v<C, Scalar> && std::is_same_v<T, FloatComplex>)
            return c.to_complex();
        else
            return T(c);
    }
    static FloatComplex to_float_coeff(const Scalar& c) { return c.to_complex(); }
    static FloatComplex to_float_coeff(const FloatComplex& c) { return c; }

    TermMap terms_;
};

using PolyS = Poly<Scalar>;
using PolyC = Poly<FloatComplex>;

/// exact quotient a / b when the division is exact; nullopt otherwise (field coefficients)
inline std::optional<PolyS> divide_exact(const PolyS& a, const PolyS& b) {
    if (b.is_zero()) return std::nullopt;
    PolyS rem = a, quot;
    const auto& lead = *b.terms().rbegin();  // grlex-leading term of divisor
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms().rbegin();
        Expo q;
        for (int k = 0; k < 4; k++) {
            q.e[k] = rl.first.e[k] - lead.first.e[k];
            if (q.e[k] < 0) return std::nullopt;
        }
        Scalar c = rl.second / lead.second;
        PolyS t = PolyS::monomial(q, c);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

/// Rational tuple: numerators sharing one denominator with nonzero constant term.
template <class C>
struct RatTuple {
    std::vector<Poly<C>> nums;
    Poly<C> den{1};

    int degree() const {  // as-presented degree: no gcd reduction attempted
        int d = den.degree();
        for (const auto& n : nums) d = std::max(d, n.degree());
        return d;
    }

    template <class T>
    std::vector<T> eval(const std::array<T, 4>& pt) const {
        T dv = den.template eval<T>(pt);
        if (dv == T(0)) throw PoleAtPoint("denominator vanishes at evaluation point");
        std::vector<T> out;
        out.reserve(nums.size());
        for (const auto& n : nums) out.push_back(n.template eval<T>(pt) / dv);
        return out;
    }

    RatTuple<FloatComplex> to_float() const {
        RatTuple<FloatComplex> out;
        out.den = den.to_float();
        for (const auto& n : nums) out.nums.push_back(n.to_float());
        return out;
    }
};

/// map equality by cross-multiplication: a_i * den_b == b_i * den_a for all i
template <class C>
bool cross_mult_equal(const RatTuple<C>& a, const RatTuple<C>& b) {
    if (a.nums.size() != b.nums.size()) return false;
    for (size_t i = 0; i < a.nums.size(); i++)
        if (a.nums[i] * b.den != b.nums[i] * a.den) return false;
    return true;
}

}  // namespace crmap
