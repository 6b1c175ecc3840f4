#include "crmap/autgroup.hpp"

#include "crmap/degeneracy.hpp"
#include "crmap/jets.hpp"

namespace crmap {

namespace {
const Scalar kI = Scalar::i();

MatS identity_mat(int m) {
    MatS U(m, m);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) U(i, j) = (i == j) ? Scalar(1) : Scalar(0);
    return U;
}

VecS zero_vec(int m) {
    VecS v(m);
    for (int i = 0; i < m; i++) v(i) = Scalar(0);
    return v;
}

Scalar jet_num(const CRMapS& H, int comp, int k, int l) {
    return jet(H.body.nums[comp], H.body.den, k, l);
}

Scalar re_part(const Scalar& s) {
    Rational half(1, 2);
    return Scalar(half) * (s + s.conj());
}

Scalar im_part(const Scalar& s) {
    Rational half(1, 2);
    return Scalar(half) * (s - s.conj()) * (-kI);
}

}  // namespace

StabilityAut StabilityAut::identity(int n) {
    return StabilityAut{Scalar(1), identity_mat(n - 1), zero_vec(n - 1), Scalar(0)};
}

StabilityAut StabilityAut::scaling(const Scalar& lambda, int n) {
    return StabilityAut{lambda, identity_mat(n - 1), zero_vec(n - 1), Scalar(0)};
}

StabilityAut StabilityAut::inverse() const {
    Scalar li = lambda.inverse();
    StabilityAut out;
    out.lambda = li;
    out.U = conj_transpose(U);
    out.c = -(U * c) * li;
    out.r = -r * li * li;
    return out;
}

bool StabilityAut::is_identity() const {
    if (!(lambda == Scalar(1)) || !(r == Scalar(0))) return false;
    for (Eigen::Index i = 0; i < c.size(); i++)
        if (!c(i).is_zero()) return false;
    for (Eigen::Index i = 0; i < U.rows(); i++)
        for (Eigen::Index j = 0; j < U.cols(); j++)
            if (!(U(i, j) == ((i == j) ? Scalar(1) : Scalar(0)))) return false;
    return true;
}

void StabilityAut::validate() const {
    if (!lambda.is_real() || lambda.sign() <= 0) throw CrmapError("stability aut needs lambda > 0");
    if (!r.is_real()) throw CrmapError("stability aut needs real r");
    if (U.rows() != U.cols() || U.rows() + 1 != c.size() + 1 || c.size() != U.rows())
        throw DimensionMismatch("stability aut U/c sizes");
    if (!is_unitary(U)) throw NonUnitaryU("U U* != I");
}

Translation Translation::inverse() const { return Translation{-z0, -u0}; }

bool Translation::is_identity() const {
    if (!(u0 == Scalar(0))) return false;
    for (Eigen::Index i = 0; i < z0.size(); i++)
        if (!z0(i).is_zero()) return false;
    return true;
}

void Translation::validate() const {
    if (!u0.is_real()) throw CrmapError("translation needs real u0");
}

int aut_dim(const Aut& a) {
    return std::visit([](const auto& x) { return x.n(); }, a);
}

Aut aut_inverse(const Aut& a) {
    return std::visit([](const auto& x) -> Aut { return x.inverse(); }, a);
}

bool aut_is_identity(const Aut& a) {
    return std::visit([](const auto& x) { return x.is_identity(); }, a);
}

CRMapS aut_as_map(const StabilityAut& a) {
    a.validate();
    if (a.n() != 2) throw DimensionMismatch("aut_as_map supports the H^3 group (n = 2)");
    PolyS zv = PolyS::variable(Var::z), wv = PolyS::variable(Var::w);
    CRMapS out;
    out.source = {ModelKind::Heisenberg, 2};
    out.target = {ModelKind::Heisenberg, 2};
    out.body.nums.push_back(PolyS(a.lambda * a.U(0, 0)) * (zv + PolyS(a.c(0)) * wv));
    out.body.nums.push_back(PolyS(a.lambda * a.lambda) * wv);
    out.body.den = PolyS(1) - PolyS(Scalar(2) * kI * a.c(0).conj()) * zv +
                   PolyS(a.r - kI * abs2(a.c(0))) * wv;
    return out;
}

CRMapS aut_as_map(const Translation& t) {
    t.validate();
    if (t.n() != 2) throw DimensionMismatch("aut_as_map supports the H^3 group (n = 2)");
    PolyS zv = PolyS::variable(Var::z), wv = PolyS::variable(Var::w);
    CRMapS out;
    out.source = {ModelKind::Heisenberg, 2};
    out.target = {ModelKind::Heisenberg, 2};
    out.body.nums.push_back(zv + PolyS(t.z0(0)));
    out.body.nums.push_back(wv + PolyS(t.u0 + kI * abs2(t.z0(0))) +
                            PolyS(Scalar(2) * kI * t.z0(0).conj()) * zv);
    out.body.den = PolyS(1);
    return out;
}

CRMapS aut_as_map(const Aut& a) {
    return std::visit([](const auto& x) { return aut_as_map(x); }, a);
}

namespace {

// target-side action of a stability aut on the cleared components
RatTuple<Scalar> act_target(const StabilityAut& a, const RatTuple<Scalar>& body) {
    int m = static_cast<int>(body.nums.size()) - 1;  // number of f components
    const PolyS& g = body.nums.back();
    RatTuple<Scalar> out;
    out.nums.resize(body.nums.size());
    for (int i = 0; i < m; i++) {
        PolyS acc;
        for (int j = 0; j < m; j++) {
            Scalar uij = a.U(i, j);
            if (uij.is_zero()) continue;
            acc += PolyS(a.lambda * uij) * (body.nums[j] + PolyS(a.c(j)) * g);
        }
        out.nums[i] = acc;
    }
    out.nums[m] = PolyS(a.lambda * a.lambda) * g;
    PolyS den = body.den;
    for (int j = 0; j < m; j++)
        den -= PolyS(Scalar(2) * kI * a.c(j).conj()) * body.nums[j];
    den += PolyS(a.r - kI * norm2(a.c)) * g;
    out.den = den;
    return out;
}

RatTuple<Scalar> act_target(const Translation& t, const RatTuple<Scalar>& body) {
    int m = static_cast<int>(body.nums.size()) - 1;
    const PolyS& g = body.nums.back();
    RatTuple<Scalar> out;
    out.nums.resize(body.nums.size());
    for (int i = 0; i < m; i++) out.nums[i] = body.nums[i] + PolyS(t.z0(i)) * body.den;
    PolyS gn = g + PolyS(t.u0 + kI * norm2(t.z0)) * body.den;
    for (int j = 0; j < m; j++) gn += PolyS(Scalar(2) * kI * t.z0(j).conj()) * body.nums[j];
    out.nums[m] = gn;
    out.den = body.den;
    return out;
}

// source-side precomposition: substitute the aut's components, clearing its denominator
RatTuple<Scalar> act_source(const CRMapS& aut_map, const RatTuple<Scalar>& body) {
    const PolyS& nz = aut_map.body.nums[0];
    const PolyS& nw = aut_map.body.nums[1];
    const PolyS& e = aut_map.body.den;
    int D = body.degree();
    auto lift = [&](const PolyS& p) {
        PolyS out;
        for (const auto& [ex, c] : p.terms()) {
            PolyS t(c);
            for (int j = 0; j < ex[Var::z]; j++) t = t * nz;
            for (int j = 0; j < ex[Var::w]; j++) t = t * nw;
            for (int j = 0; j < D - ex[Var::z] - ex[Var::w]; j++) t = t * e;
            out += t;
        }
        return out;
    };
    RatTuple<Scalar> out;
    out.den = lift(body.den);
    for (const auto& n : body.nums) out.nums.push_back(lift(n));
    return out;
}

}  // namespace

CRMapS compose(const CRMapS& H, const std::optional<Aut>& left, const std::optional<Aut>& right) {
    check_dimensions(H);
    if (H.source.kind != ModelKind::Heisenberg || H.target.kind != ModelKind::Heisenberg)
        throw CrmapError("compose expects a Heisenberg-model map");
    CRMapS out = H;
    if (right) {
        if (aut_dim(*right) != 2) throw DimensionMismatch("source automorphism must have n = 2");
        out.body = act_source(aut_as_map(*right), out.body);
    }
    if (left) {
        if (aut_dim(*left) != H.target.dim)
            throw DimensionMismatch("target automorphism dimension mismatch");
        std::visit([&](const auto& a) { a.validate(); }, *left);
        out.body = std::visit([&](const auto& a) { return act_target(a, out.body); }, *left);
    }
    if (out.body.den.eval<Scalar>(out.base4()).is_zero())
        throw PoleAtBasePoint("composition produced a pole at the base point");
    return out;
}

MatS unitary_completion(const VecS& v) {
    const int m = static_cast<int>(v.size());
    if (m == 0) throw DimensionMismatch("unitary_completion of empty vector");
    bool all_zero = true;
    for (int i = 0; i < m; i++)
        if (!v(i).is_zero()) all_zero = false;
    if (all_zero) throw CrmapError("unitary_completion of zero vector");

    // pivot to the largest-modulus entry (ties to the lowest index)
    int piv = 0;
    Scalar best = abs2(v(0));
    for (int i = 1; i < m; i++) {
        Scalar cand = abs2(v(i));
        if ((cand - best).sign() > 0) {
            best = cand;
            piv = i;
        }
    }
    MatS P = identity_mat(m);
    if (piv != 0) {
        P(0, 0) = Scalar(0);
        P(piv, piv) = Scalar(0);
        P(0, piv) = Scalar(1);
        P(piv, 0) = Scalar(1);
    }
    VecS v2 = P * v;

    MatS D = identity_mat(m);
    if (!v2(0).is_zero() && !(v2(0).conj() == v2(0) && v2(0).sign() > 0)) {
        Scalar mod = sqrt_scalar(abs2(v2(0)));  // RadicalNotRepresentable may propagate
        D(0, 0) = v2(0).conj() * mod.inverse();
    }
    VecS v3 = D * v2;

    Scalar nrm = sqrt_scalar(norm2(v));
    VecS u = v3;
    u(0) = u(0) - nrm;
    Scalar uu = norm2(u);
    MatS H = identity_mat(m);
    if (!uu.is_zero()) {
        Scalar two_over = Scalar(2) * uu.inverse();
        for (int i = 0; i < m; i++)
            for (int j = 0; j < m; j++) H(i, j) = H(i, j) - two_over * u(i) * u(j).conj();
    }
    return H * D * P;
}

namespace {

StabilityAut target_unitary(const MatS& U) {
    StabilityAut a;
    a.lambda = Scalar(1);
    a.U = U;
    a.c = zero_vec(static_cast<int>(U.rows()));
    a.r = Scalar(0);
    return a;
}

void push_left(std::vector<Aut>& trail, CRMapS& cur, const StabilityAut& a) {
    if (a.is_identity()) return;
    cur = compose(cur, Aut(a), std::nullopt);
    trail.push_back(a);
}

void push_right(std::vector<Aut>& trail, CRMapS& cur, const StabilityAut& a) {
    if (a.is_identity()) return;
    cur = compose(cur, std::nullopt, Aut(a));
    trail.push_back(a);
}

}  // namespace

std::array<bool, 12> normal_form_conditions(const CRMapS& H) {
    std::array<bool, 12> ok{};
    const int N = H.N();
    const int m = N - 1;
    auto j = [&](int comp, int k, int l) { return jet_num(H, comp, k, l); };

    bool c1 = j(0, 1, 0) == Scalar(1) && j(m, 1, 0).is_zero();
    for (int k = 1; k < m; k++) c1 = c1 && j(k, 1, 0).is_zero();
    ok[0] = c1;

    bool c2 = j(m, 0, 1) == Scalar(1);
    for (int k = 0; k < m; k++) c2 = c2 && j(k, 0, 1).is_zero();
    ok[1] = c2;

    bool c3 = j(1, 2, 0) == Scalar(2) && j(0, 2, 0).is_zero() && j(m, 2, 0).is_zero();
    for (int k = 2; k < m; k++) c3 = c3 && j(k, 2, 0).is_zero();
    ok[2] = c3;

    ok[3] = j(1, 1, 1).is_zero();
    ok[4] = re_part(j(m, 0, 2)).is_zero();
    ok[5] = re_part(j(1, 2, 1)).is_zero();
    Scalar f102 = j(0, 0, 2);
    ok[6] = f102.is_real() && f102.sign() >= 0;

    // (viii) f_1(z,0) = z and (ix) g_w(z,0) = 1, as polynomial identities
    PolyS zero;
    PolyS d0 = H.body.den.subst(Var::w, zero);
    PolyS n0 = H.body.nums[0].subst(Var::w, zero);
    ok[7] = n0 == PolyS::variable(Var::z) * d0;
    PolyS gw = H.body.nums[m].diff(Var::w) * H.body.den - H.body.nums[m] * H.body.den.diff(Var::w);
    ok[8] = gw.subst(Var::w, zero) == d0 * d0;

    ok[9] = im_part(j(m, 0, 2)).is_zero();
    ok[10] = j(0, 1, 1) == Rational(1, 2) * kI;

    // (xii) f_k(z,0) = 0 for k >= 3, exact for rational maps
    bool c12 = true;
    for (int k = 2; k < m; k++) c12 = c12 && H.body.nums[k].subst(Var::w, zero).is_zero();
    ok[11] = c12;
    return ok;
}

NormalFormCertificate normalize(const CRMapS& H) {
    check_dimensions(H);
    if (H.source.kind != ModelKind::Heisenberg || H.target.kind != ModelKind::Heisenberg)
        throw CrmapError("normalize expects a Heisenberg-model map");
    const int N = H.N();
    const int m = N - 1;
    if (m < 2) throw DimensionMismatch("normalize needs target dimension N >= 3");
    std::array<Scalar, 4> origin{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    for (const auto& n : H.body.nums)
        if (!n.eval<Scalar>(origin).is_zero())
            throw CrmapError("normalize expects a germ fixing 0; re-base with translations first");

    NormalFormCertificate cert;
    CRMapS cur = H;
    auto jets10 = [&](const CRMapS& M) {
        VecS v(m);
        for (int k = 0; k < m; k++) v(k) = jet_num(M, k, 1, 0);
        return v;
    };
    auto jets20 = [&](const CRMapS& M) {
        VecS v(m);
        for (int k = 0; k < m; k++) v(k) = jet_num(M, k, 2, 0);
        return v;
    };

    // hypothesis: transversality and L H(0), L^2 H(0) independent
    if (jet_num(cur, m, 0, 1).is_zero()) throw DegenerateJet("g^{(0,1)} = 0 (non-transversal)");
    {
        MatS J(2, m);
        VecS a = jets10(cur), b = jets20(cur);
        for (int k = 0; k < m; k++) {
            J(0, k) = a(k);
            J(1, k) = b(k);
        }
        if (bareiss_rank(J) < 2)
            throw DegenerateJet("L H(0) and L^2 H(0) are linearly dependent");
    }

    // [1] normalize the (1,0)-coefficients of f
    push_left(cert.left_auts, cur, target_unitary(unitary_completion(jets10(cur))));

    // [2] normalize the (2,0)-coefficients below the first slot
    {
        VecS f20 = jets20(cur);
        VecS sub(m - 1);
        for (int k = 1; k < m; k++) sub(k - 1) = f20(k);
        MatS U2 = identity_mat(m);
        MatS Usub = unitary_completion(sub);
        for (int i = 0; i < m - 1; i++)
            for (int j2 = 0; j2 < m - 1; j2++) U2(i + 1, j2 + 1) = Usub(i, j2);
        push_left(cert.left_auts, cur, target_unitary(U2));
    }

    // [3] scale f_1^{(1,0)} to 1 and f_2^{(2,0)} to 2
    {
        Scalar v1 = jet_num(cur, 0, 1, 0);
        Scalar v2 = jet_num(cur, 1, 2, 0);
        Scalar lam = Scalar(2) * v1 * v2.inverse();
        Scalar lamp = v2 * (Scalar(2) * v1 * v1).inverse();
        push_right(cert.right_auts, cur, StabilityAut::scaling(lam, 2));
        push_left(cert.left_auts, cur, StabilityAut::scaling(lamp, N));
    }

    // [4] normalize the (0,1)-coefficients of f
    {
        StabilityAut a = StabilityAut::identity(N);
        for (int k = 0; k < m; k++) a.c(k) = -jet_num(cur, k, 0, 1);
        push_left(cert.left_auts, cur, a);
    }

    // [5] normalize f_2^{(1,1)}
    {
        Scalar d = -jet_num(cur, 1, 1, 1) * Rational(1, 2);
        StabilityAut src = StabilityAut::identity(2);
        src.c(0) = d;
        push_right(cert.right_auts, cur, src);
        StabilityAut tgt = StabilityAut::identity(N);
        tgt.c(0) = -d;
        push_left(cert.left_auts, cur, tgt);
    }

    // [6] normalize f_1^{(0,2)} to |f_1^{(0,2)}|; skipped entirely when the pivot vanishes
    {
        Scalar x = jet_num(cur, 0, 0, 2);
        if (x.is_zero()) {
            cert.phase_step_skipped = true;
        } else {
            Scalar mod = sqrt_scalar(abs2(x));
            Scalar up = x.conj() * mod.inverse();
            if (!(up == Scalar(1))) {
                MatS U6 = identity_mat(m);
                U6(0, 0) = up;
                U6(1, 1) = up * up;
                push_left(cert.left_auts, cur, target_unitary(U6));
                StabilityAut src = StabilityAut::identity(2);
                src.U(0, 0) = up.conj();  // u = u'^{-1}, |u'| = 1
                push_right(cert.right_auts, cur, src);
            }
        }
    }

    // [7] normalize Re(f_2^{(2,1)}) and Re(g^{(0,2)})
    {
        Scalar f221 = jet_num(cur, 1, 2, 1);
        Scalar g02 = jet_num(cur, m, 0, 2);
        if (!g02.is_real())
            throw CrmapError("g^{(0,2)} not real before step [7]; pipeline invariant broken");
        Rational half(1, 2);
        Scalar r = (re_part(f221) - g02) * half;
        Scalar rp = (-re_part(f221) + Scalar(2) * g02) * half;
        StabilityAut src = StabilityAut::identity(2);
        src.r = r;
        push_right(cert.right_auts, cur, src);
        StabilityAut tgt = StabilityAut::identity(N);
        tgt.r = rp;
        push_left(cert.left_auts, cur, tgt);
    }

    cert.normalized = cur;
    cert.conditions = normal_form_conditions(cur);
    auto tang = tangential_degeneracy(cur, Scalar(0), Scalar(0), 0);
    cert.tangentially_2_n3 = (tang.k == 2 && tang.tdeg == N - 3);
    return cert;
}

bool replay_trail(const CRMapS& input, const NormalFormCertificate& cert) {
    CRMapS cur = input;
    size_t li = 0, ri = 0;
    // the pipeline interleaves sides; replay is order-insensitive because left and
    // right actions commute, so apply all right auts then all left auts
    for (ri = 0; ri < cert.right_auts.size(); ri++)
        cur = compose(cur, std::nullopt, cert.right_auts[ri]);
    for (li = 0; li < cert.left_auts.size(); li++)
        cur = compose(cur, cert.left_auts[li], std::nullopt);
    return cross_mult_equal(cur.body, cert.normalized.body);
}

}  // namespace crmap
