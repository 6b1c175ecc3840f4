#pragma once

#include <vector>

#include "crmap/poly.hpp"

namespace crmap {

/// power-series quotient A/B up to order K (inclusive); B[0] must be a unit
template <class T>
std::vector<T> series_div(const std::vector<T>& A, const std::vector<T>& B, int K) {
    std::vector<T> out(K + 1, T(0));
    T inv0;
    if constexpr (std::is_same_v<T, Scalar>)
        inv0 = B[0].inverse();
    else {
        if (B[0] == T(0)) throw PoleAtPoint("series division by zero constant term");
        inv0 = T(1.0) / B[0];
    }
    for (int k = 0; k <= K; k++) {
        T s = k < static_cast<int>(A.size()) ? A[k] : T(0);
        for (int j = 1; j <= k; j++) {
            T b = j < static_cast<int>(B.size()) ? B[j] : T(0);
            s = s - b * out[k - j];
        }
        out[k] = s * inv0;
    }
    return out;
}

namespace detail {
template <class T>
T coeff_as(const Scalar& c) {
    if constexpr (std::is_same_v<T, Scalar>)
        return c;
    else
        return c.to_complex();
}
}  // namespace detail

/// Expand p(z0, w0, chi0 + u, tau0 - 2i z0 u) as a polynomial in u, truncated at u^K.
/// This is the curve whose u-derivatives realize the complexified CR field
/// L = d/dchi - 2i z d/dtau at the point (z0, w0, chi0, tau0).
template <class T>
std::vector<T> segre_direction_series(const PolyS& p, const T& z0, const T& w0, const T& chi0,
                                      const T& tau0, int K) {
    std::vector<T> out(K + 1, T(0));
    const T m2iz = T(0) - detail::coeff_as<T>(Scalar::i() * Scalar(2)) * z0;  // -2i z0
    for (const auto& [ex, c] : p.terms()) {
        T base = detail::coeff_as<T>(c);
        for (int j = 0; j < ex[Var::z]; j++) base = base * z0;
        for (int j = 0; j < ex[Var::w]; j++) base = base * w0;
        // (chi0 + u)^a * (tau0 - 2i z0 u)^b truncated
        std::vector<T> acc(1, base);
        for (int j = 0; j < ex[Var::chi]; j++) {
            std::vector<T> next(std::min<int>(acc.size() + 1, K + 1), T(0));
            for (size_t t = 0; t < acc.size(); t++) {
                if (static_cast<int>(t) <= K) next[t] = next[t] + acc[t] * chi0;
                if (static_cast<int>(t + 1) <= K) next[t + 1] = next[t + 1] + acc[t];
            }
            acc = std::move(next);
        }
        for (int j = 0; j < ex[Var::tau]; j++) {
            std::vector<T> next(std::min<int>(acc.size() + 1, K + 1), T(0));
            for (size_t t = 0; t < acc.size(); t++) {
                if (static_cast<int>(t) <= K) next[t] = next[t] + acc[t] * tau0;
                if (static_cast<int>(t + 1) <= K) next[t + 1] = next[t + 1] + acc[t] * m2iz;
            }
            acc = std::move(next);
        }
        for (size_t t = 0; t < acc.size() && static_cast<int>(t) <= K; t++) out[t] = out[t] + acc[t];
    }
    return out;
}

/// Truncated bivariate power series in (x, y), coefficients c[k][l] of x^k y^l, k+l <= K.
template <class T>
struct Series2 {
    int K = 0;
    std::vector<std::vector<T>> c;  // (K+1) x (K+1)

    explicit Series2(int order = 0) : K(order), c(order + 1, std::vector<T>(order + 1, T(0))) {}

    static Series2 from_poly(const PolyS& p, Var x, Var y, int K) {
        Series2 out(K);
        for (const auto& [ex, cc] : p.terms()) {
            int a = ex[x], b = ex[y];
            if (a + b <= K) out.c[a][b] = out.c[a][b] + detail::coeff_as<T>(cc);
        }
        return out;
    }

    Series2 mul(const Series2& o) const {
        Series2 out(K);
        for (int a = 0; a <= K; a++)
            for (int b = 0; a + b <= K; b++) {
                if (CoeffOps<T>::is_zero(c[a][b])) continue;
                for (int p = 0; a + p <= K; p++)
                    for (int q = 0; a + b + p + q <= K; q++)
                        out.c[a + p][b + q] = out.c[a + p][b + q] + c[a][b] * o.c[p][q];
            }
        return out;
    }

    /// reciprocal by geometric series: 1/d = (1/d00) sum (1 - d/d00)^j
    Series2 inverse() const {
        T inv0;
        if constexpr (std::is_same_v<T, Scalar>) {
            if (c[0][0].is_zero()) throw PoleAtPoint("series inverse with zero constant term");
            inv0 = c[0][0].inverse();
        } else {
            if (c[0][0] == T(0)) throw PoleAtPoint("series inverse with zero constant term");
            inv0 = T(1.0) / c[0][0];
        }
        Series2 eps(K);  // 1 - d/d00
        for (int a = 0; a <= K; a++)
            for (int b = 0; a + b <= K; b++) eps.c[a][b] = T(0) - c[a][b] * inv0;
        eps.c[0][0] = eps.c[0][0] + T(1);
        Series2 out(K), pw(K);
        pw.c[0][0] = T(1);
        out.c[0][0] = T(1);
        for (int j = 1; j <= K; j++) {
            pw = pw.mul(eps);
            for (int a = 0; a <= K; a++)
                for (int b = 0; a + b <= K; b++) out.c[a][b] = out.c[a][b] + pw.c[a][b];
        }
        for (int a = 0; a <= K; a++)
            for (int b = 0; a + b <= K; b++) out.c[a][b] = out.c[a][b] * inv0;
        return out;
    }
};

/// Exact Taylor table of num/den at 0 in the variables (x, y), entries t[k][l] = series coeff.
template <class T>
Series2<T> series_quotient(const PolyS& num, const PolyS& den, Var x, Var y, int K) {
    auto n = Series2<T>::from_poly(num, x, y, K);
    auto d = Series2<T>::from_poly(den, x, y, K);
    return n.mul(d.inverse());
}

/// jet h^{(k,l)} = d^{k+l}(num/den)/dz^k dw^l at 0, exactly (paper's h^{(k,l)} convention)
inline Scalar jet(const PolyS& num, const PolyS& den, int k, int l) {
    auto q = series_quotient<Scalar>(num, den, Var::z, Var::w, k + l);
    Scalar fact(1);
    for (int j = 2; j <= k; j++) fact = fact * Scalar(j);
    for (int j = 2; j <= l; j++) fact = fact * Scalar(j);
    return q.c[k][l] * fact;
}

}  // namespace crmap
