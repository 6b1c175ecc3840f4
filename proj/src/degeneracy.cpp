#include "crmap/degeneracy.hpp"

#include <algorithm>

#include "crmap/jets.hpp"

namespace crmap {

namespace {

const Scalar kI = Scalar::i();

int iteration_cap(int N) { return std::max(2 * N, 8); }

void require_heisenberg(const CRMapS& H) {
    if (H.source.kind != ModelKind::Heisenberg || H.target.kind != ModelKind::Heisenberg)
        throw CrmapError("degeneracy analysis expects a Heisenberg-model map (apply cayley first)");
    check_dimensions(H);
}

// L^m conj(f_j) evaluated at (p, conj p) for m = 0..K, one series per component
std::vector<std::vector<Scalar>> L_series_at(const CRMapS& H, const Scalar& z0, const Scalar& w0,
                                             const Scalar& chi0, const Scalar& tau0, int K) {
    const int m = H.N() - 1;
    PolyS dbar = H.body.den.conjugate();
    auto B = segre_direction_series<Scalar>(dbar, z0, w0, chi0, tau0, K);
    if (B[0].is_zero()) throw PoleAtPoint("conjugated denominator vanishes");
    std::vector<std::vector<Scalar>> out;
    out.reserve(m);
    for (int j = 0; j < m; j++) {
        auto A = segre_direction_series<Scalar>(H.body.nums[j].conjugate(), z0, w0, chi0, tau0, K);
        out.push_back(series_div(A, B, K));
    }
    return out;
}

std::string point_str(const Scalar& z0, const Scalar& w0) {
    return "(" + z0.str() + ", " + w0.str() + ")";
}

}  // namespace

PolyS L_apply(const PolyS& a, int times) {
    PolyS cur = a;
    PolyS zv = PolyS::variable(Var::z);
    for (int j = 0; j < times; j++)
        cur = cur.diff(Var::chi) - PolyS(Scalar(2) * kI) * zv * cur.diff(Var::tau);
    return cur;
}

MatS Ek_matrix(const CRMapS& H, const Scalar& z0, const Scalar& w0, int k) {
    require_heisenberg(H);
    if (!on_heisenberg(z0, w0)) throw CrmapError("point not on H^3: " + point_str(z0, w0));
    const int m = H.N() - 1;
    auto series = L_series_at(H, z0, w0, z0.conj(), w0.conj(), k);
    MatS M(k + 1, m + 1);
    Scalar fact(1);
    for (int row = 0; row <= k; row++) {
        if (row > 1) fact = fact * Scalar(row);
        for (int j = 0; j < m; j++) M(row, j) = (row == 0) ? series[j][0] : fact * series[j][row];
        M(row, m) = (row == 0) ? Rational(1, 2) * kI : Scalar(0);
    }
    return M;
}

int Ek_rank(const CRMapS& H, const Scalar& z0, const Scalar& w0, int k) {
    return bareiss_rank(Ek_matrix(H, z0, w0, k));
}

DegeneracyReport degeneracy_at(const CRMapS& H, const Scalar& z0, const Scalar& w0) {
    require_heisenberg(H);
    if (!on_heisenberg(z0, w0)) throw CrmapError("point not on H^3: " + point_str(z0, w0));
    const int N = H.N();
    const int K = iteration_cap(N);
    MatS M = Ek_matrix(H, z0, w0, K);
    DegeneracyReport rep;
    rep.point = point_str(z0, w0);
    rep.exact_mode = true;
    for (int k = 0; k <= K; k++) {
        rep.ranks.push_back(bareiss_rank(M.topRows(k + 1)));
        if (rep.ranks.back() == N) break;
    }
    int mx = *std::max_element(rep.ranks.begin(), rep.ranks.end());
    rep.s = N - mx;
    rep.k0 = static_cast<int>(std::find(rep.ranks.begin(), rep.ranks.end(), mx) - rep.ranks.begin());
    return rep;
}

DegeneracyReport degeneracy_at_float(const CRMapC& H, FloatComplex z0, FloatComplex w0,
                                     double rank_tol, double membership_tol) {
    check_dimensions(H);
    if (std::abs(std::imag(w0) - std::norm(z0)) > membership_tol)
        throw CrmapError("point not within tolerance of H^3");
    const int N = H.N();
    const int m = N - 1;
    const int K = iteration_cap(N);
    FloatComplex chi0 = std::conj(z0), tau0 = std::conj(w0);

    // float maps do not keep exact Scalar coefficients; expand their own polynomials
    auto direction_series = [&](const PolyC& p) {
        std::vector<FloatComplex> out(K + 1, FloatComplex(0));
        const FloatComplex m2iz = FloatComplex(0, -2.0) * z0;
        for (const auto& [ex, c] : p.terms()) {
            FloatComplex base = c;
            for (int j = 0; j < ex[Var::z]; j++) base *= z0;
            for (int j = 0; j < ex[Var::w]; j++) base *= w0;
            std::vector<FloatComplex> acc(1, base);
            for (int j = 0; j < ex[Var::chi]; j++) {
                std::vector<FloatComplex> next(std::min<int>(acc.size() + 1, K + 1),
                                               FloatComplex(0));
                for (size_t t = 0; t < acc.size(); t++) {
                    if (static_cast<int>(t) <= K) next[t] += acc[t] * chi0;
                    if (static_cast<int>(t + 1) <= K) next[t + 1] += acc[t];
                }
                acc = std::move(next);
            }
            for (int j = 0; j < ex[Var::tau]; j++) {
                std::vector<FloatComplex> next(std::min<int>(acc.size() + 1, K + 1),
                                               FloatComplex(0));
                for (size_t t = 0; t < acc.size(); t++) {
                    if (static_cast<int>(t) <= K) next[t] += acc[t] * tau0;
                    if (static_cast<int>(t + 1) <= K) next[t + 1] += acc[t] * m2iz;
                }
                acc = std::move(next);
            }
            for (size_t t = 0; t < acc.size() && static_cast<int>(t) <= K; t++) out[t] += acc[t];
        }
        return out;
    };

    auto B = direction_series(H.body.den.conjugate());
    if (std::abs(B[0]) < 1e-14) throw PoleAtPoint("conjugated denominator vanishes (float)");
    std::vector<std::vector<FloatComplex>> series;
    for (int j = 0; j < m; j++)
        series.push_back(series_div(direction_series(H.body.nums[j].conjugate()), B, K));

    MatC M(K + 1, m + 1);
    double fact = 1.0;
    for (int row = 0; row <= K; row++) {
        if (row > 1) fact *= row;
        for (int j = 0; j < m; j++)
            M(row, j) = (row == 0) ? series[j][0] : fact * series[j][row];
        M(row, m) = (row == 0) ? FloatComplex(0, 0.5) : FloatComplex(0);
    }
    DegeneracyReport rep;
    rep.exact_mode = false;
    {
        std::ostringstream os;
        os.precision(17);
        os << "(" << z0 << ", " << w0 << ")";
        rep.point = os.str();
    }
    FloatRank last;
    for (int k = 0; k <= K; k++) {
        last = svd_rank(M.topRows(k + 1), rank_tol);
        rep.ranks.push_back(last.rank);
        if (last.rank == N) break;
    }
    int mx = *std::max_element(rep.ranks.begin(), rep.ranks.end());
    rep.s = N - mx;
    rep.k0 = static_cast<int>(std::find(rep.ranks.begin(), rep.ranks.end(), mx) - rep.ranks.begin());
    rep.min_kept_rel = last.min_kept_rel;
    rep.max_dropped_rel = last.max_dropped_rel;
    return rep;
}

namespace {

// univariate polynomials in the Segre parameter, coefficients Scalar
using UniPoly = std::vector<Scalar>;

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    UniPoly out(a.size() + b.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); j++) out[i + j] += a[i] * b[j];
    }
    return out;
}

void uni_addmul(UniPoly& acc, const UniPoly& x, int sign) {
    if (acc.size() < x.size()) acc.resize(x.size(), Scalar(0));
    for (size_t i = 0; i < x.size(); i++) acc[i] += (sign > 0) ? x[i] : -x[i];
}

bool uni_zero(const UniPoly& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

Scalar uni_eval(const UniPoly& p, const Scalar& x) {
    Scalar out(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) out = out * x + *it;
    return out;
}

// determinant of a square UniPoly matrix by cofactor expansion (sizes <= 6)
UniPoly uni_det(const std::vector<std::vector<UniPoly>>& M) {
    size_t n = M.size();
    if (n == 1) return M[0][0];
    UniPoly out(1, Scalar(0));
    for (size_t j = 0; j < n; j++) {
        if (uni_zero(M[0][j])) continue;
        std::vector<std::vector<UniPoly>> sub(n - 1);
        for (size_t i = 1; i < n; i++)
            for (size_t jj = 0; jj < n; jj++)
                if (jj != j) sub[i - 1].push_back(M[i][jj]);
        uni_addmul(out, uni_mul(M[0][j], uni_det(sub)), (j % 2 == 0) ? 1 : -1);
    }
    return out;
}

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; i++) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) i--;
        if (i < 0) break;
        idx[i]++;
        for (int j = i + 1; j < k; j++) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

TangentialReport tangential_degeneracy(const CRMapS& H, const Scalar& z0, const Scalar& w0,
                                       uint64_t seed) {
    require_heisenberg(H);
    if (!on_heisenberg(z0, w0)) throw CrmapError("point not on H^3: " + point_str(z0, w0));
    const int N = H.N();
    const int m = N - 1;
    const int K = iteration_cap(N);
    Scalar chi0 = z0.conj(), tau0 = w0.conj();

    // 2D jets of conj f_j at (chi0, tau0): shift then expand num/den as a series
    PolyS chi_sh = PolyS::variable(Var::chi) + PolyS(chi0);
    PolyS tau_sh = PolyS::variable(Var::tau) + PolyS(tau0);
    PolyS dbar = H.body.den.conjugate().subst(Var::chi, chi_sh).subst(Var::tau, tau_sh);
    if (dbar.constant_term().is_zero()) throw PoleAtPoint("pole of H at q");
    std::vector<Series2<Scalar>> tables;
    for (int j = 0; j < m; j++) {
        PolyS nbar = H.body.nums[j].conjugate().subst(Var::chi, chi_sh).subst(Var::tau, tau_sh);
        tables.push_back(series_quotient<Scalar>(nbar, dbar, Var::chi, Var::tau, K));
    }

    // entry (k, j): L^k conj f_j along S_q as a polynomial in the parameter z:
    //   sum_t C(k,t) (-2i z)^t (k-t)! t! * jet[k-t][t]
    std::vector<std::vector<UniPoly>> rows(K + 1, std::vector<UniPoly>(m));
    std::vector<std::vector<Rational>> binom(K + 1, std::vector<Rational>(K + 1, Rational(0)));
    for (int k = 0; k <= K; k++) {
        binom[k][0] = 1;
        for (int t = 1; t <= k; t++)
            binom[k][t] = binom[k - 1][t - 1] + (t <= k - 1 ? binom[k - 1][t] : Rational(0));
    }
    std::vector<Rational> fact(K + 1, Rational(1));
    for (int k = 1; k <= K; k++) fact[k] = fact[k - 1] * k;
    Scalar m2i = Scalar(-2) * kI;
    for (int k = 0; k <= K; k++) {
        for (int j = 0; j < m; j++) {
            UniPoly p(k + 1, Scalar(0));
            Scalar pw(1);
            for (int t = 0; t <= k; t++) {
                p[t] = Scalar(binom[k][t] * fact[k - t] * fact[t]) * pw * tables[j].c[k - t][t];
                pw = pw * m2i;
            }
            rows[k][j] = p;
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num_d(-97, 97);
    std::uniform_int_distribution<int> den_d(1, 97);
    for (int attempt = 0; attempt < 8; attempt++) {
        Rational zr(num_d(rng), den_d(rng));
        zr.canonicalize();
        Scalar zeval{zr};
        MatS M(K + 1, m);
        for (int k = 0; k <= K; k++)
            for (int j = 0; j < m; j++) M(k, j) = uni_eval(rows[k][j], zeval);
        std::vector<int> prefix;
        for (int k = 0; k <= K; k++) prefix.push_back(bareiss_rank(M.topRows(k + 1)));
        int r = *std::max_element(prefix.begin(), prefix.end());
        // certify: rank r is generic iff all (r+1)x(r+1) minors vanish identically
        bool certified = true;
        if (r < std::min(K + 1, m)) {
            std::vector<std::vector<int>> rsel, csel;
            subsets(K + 1, r + 1, rsel);
            subsets(m, r + 1, csel);
            for (const auto& rs : rsel) {
                for (const auto& cs : csel) {
                    std::vector<std::vector<UniPoly>> sub(r + 1, std::vector<UniPoly>(r + 1));
                    for (int i = 0; i <= r; i++)
                        for (int j = 0; j <= r; j++) sub[i][j] = rows[rs[i]][cs[j]];
                    if (!uni_zero(uni_det(sub))) {
                        certified = false;
                        break;
                    }
                }
                if (!certified) break;
            }
        }
        if (!certified) continue;  // evaluation point was special; redraw
        TangentialReport rep;
        rep.generic_ranks = prefix;
        rep.certified_rank = r;
        rep.tdeg = (N - 1) - r;
        rep.k = static_cast<int>(std::find(prefix.begin(), prefix.end(), r) - prefix.begin());
        return rep;
    }
    throw PoleOnSegre("could not certify the generic rank after 8 parameter draws");
}

LocusReport degeneracy_locus_sample(const CRMapS& H,
                                    const std::vector<std::pair<Scalar, Scalar>>& points) {
    require_heisenberg(H);
    LocusReport rep;
    for (const auto& [z0, w0] : points) {
        LocusEntry e;
        e.point = point_str(z0, w0);
        try {
            auto d = degeneracy_at(H, z0, w0);
            e.s = d.s;
            e.k0 = d.k0;
        } catch (const PoleAtPoint&) {
            e.pole = true;
        }
        rep.entries.push_back(e);
    }
    for (const auto& e : rep.entries)
        if (!e.pole && (rep.generic_s < 0 || e.s < rep.generic_s)) rep.generic_s = e.s;
    for (size_t i = 0; i < rep.entries.size(); i++)
        if (!rep.entries[i].pole && rep.entries[i].s > rep.generic_s) rep.exceptional.push_back(i);
    return rep;
}

int image_dimension(const CRMapS& H) {
    check_dimensions(H);
    std::map<Expo, int, GrlexLess> cols;
    for (const auto& n : H.body.nums)
        for (const auto& [ex, c] : n.terms())
            if (!cols.count(ex)) cols.emplace(ex, static_cast<int>(cols.size()));
    MatS M(H.body.nums.size(), std::max<size_t>(cols.size(), 1));
    for (Eigen::Index i = 0; i < M.rows(); i++)
        for (Eigen::Index j = 0; j < M.cols(); j++) M(i, j) = Scalar(0);
    for (size_t i = 0; i < H.body.nums.size(); i++)
        for (const auto& [ex, c] : H.body.nums[i].terms()) M(i, cols.at(ex)) = c;
    return bareiss_rank(M);
}

std::pair<Scalar, Scalar> random_h3_point(const CRMapS& H, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num_d(-97, 97);
    std::uniform_int_distribution<int> den_d(1, 97);
    for (int attempt = 0; attempt < 256; attempt++) {
        Rational x(num_d(rng), den_d(rng)), y(num_d(rng), den_d(rng)), u(num_d(rng), den_d(rng));
        x.canonicalize();
        y.canonicalize();
        u.canonicalize();
        Scalar z0(x, y);
        Scalar w0(u, x * x + y * y);
        std::array<Scalar, 4> pt{z0, w0, z0.conj(), w0.conj()};
        if (H.body.den.eval<Scalar>(pt).is_zero()) continue;
        return {z0, w0};
    }
    throw PoleAtPoint("could not sample an H^3 point away from the poles");
}

}  // namespace crmap
