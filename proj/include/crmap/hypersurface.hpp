#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "crmap/jets.hpp"
#include "crmap/poly.hpp"

namespace crmap {

enum class ModelKind { Heisenberg, Sphere };

struct Model {
    ModelKind kind = ModelKind::Heisenberg;
    int dim = 2;  // complex dimension n of the ambient C^n
    friend bool operator==(const Model& a, const Model& b) = default;
};

/// Rational CR map germ between hypersurface models.
/// Heisenberg targets: components (f_1, ..., f_{N-1}, g) over a shared denominator.
/// Sphere targets: N components over a shared denominator.
/// Heisenberg-source germs are based at 0; sphere sources carry an explicit base point.
template <class C>
struct CRMap {
    Model source{ModelKind::Heisenberg, 2};
    Model target{ModelKind::Heisenberg, 2};
    RatTuple<C> body;
    std::vector<C> base_point;  // sphere-model source only; size 2

    int N() const { return target.dim; }

    std::array<C, 4> base4() const {
        if (source.kind == ModelKind::Heisenberg) return {C(0), C(0), C(0), C(0)};
        if (base_point.size() != 2) {
            // default sphere base point (0, 1), the Cayley preimage of 0
            return {C(0), C(1), C(0), C(1)};
        }
        C z0 = base_point[0], w0 = base_point[1];
        if constexpr (std::is_same_v<C, Scalar>)
            return {z0, w0, z0.conj(), w0.conj()};
        else
            return {z0, w0, std::conj(z0), std::conj(w0)};
    }

    CRMap<FloatComplex> to_float() const {
        CRMap<FloatComplex> out;
        out.source = source;
        out.target = target;
        out.body = body.to_float();
        for (const auto& b : base_point)
            if constexpr (std::is_same_v<C, Scalar>)
                out.base_point.push_back(b.to_complex());
            else
                out.base_point.push_back(b);
        return out;
    }
};

using CRMapS = CRMap<Scalar>;
using CRMapC = CRMap<FloatComplex>;

struct Residual {
    PolyS poly;  // in (z, w, chi) after the Segre substitution
    bool is_zero = false;
};

struct FloatResidual {
    double sup_norm = 0.0;
    bool is_zero = false;
};

namespace detail {

/// target-model relation before the source substitution, denominators cleared
template <class C>
Poly<C> relation_poly(const CRMap<C>& H) {
    const auto& n = H.body.nums;
    const auto& d = H.body.den;
    Poly<C> dbar = d.conjugate();
    Poly<C> R;
    if (H.target.kind == ModelKind::Heisenberg) {
        const Poly<C>& g = n.back();
        R = g * dbar - g.conjugate() * d;
        Poly<C> s;
        for (size_t j = 0; j + 1 < n.size(); j++) s += n[j] * n[j].conjugate();
        Poly<C> twoi;
        if constexpr (std::is_same_v<C, Scalar>)
            twoi = Poly<C>(Scalar(2) * Scalar::i());
        else
            twoi = Poly<C>(C(0.0, 2.0));
        R -= twoi * s;
    } else {
        for (const auto& comp : n) R += comp * comp.conjugate();
        R -= d * dbar;
    }
    return R;
}

/// restrict to the source's complexified hypersurface, clearing denominators
template <class C>
Poly<C> segre_restrict(const CRMap<C>& H, const Poly<C>& R) {
    if (H.source.kind == ModelKind::Heisenberg) {
        // tau -> w - 2 i z chi
        Poly<C> repl = Poly<C>::variable(Var::w);
        Poly<C> m2i;
        if constexpr (std::is_same_v<C, Scalar>)
            m2i = Poly<C>(Scalar(-2) * Scalar::i());
        else
            m2i = Poly<C>(C(0.0, -2.0));
        repl += m2i * Poly<C>::variable(Var::z) * Poly<C>::variable(Var::chi);
        return R.subst(Var::tau, repl);
    }
    // sphere source: z chi + w tau = 1, solved for tau and cleared with w^deg
    int D = R.degree(Var::tau);
    Poly<C> one(1);
    Poly<C> core = one - Poly<C>::variable(Var::z) * Poly<C>::variable(Var::chi);
    Poly<C> out;
    for (const auto& [ex, c] : R.terms()) {
        int k = ex[Var::tau];
        Expo ey = ex;
        ey[Var::tau] = 0;
        Poly<C> t = Poly<C>::monomial(ey, c);
        for (int j = 0; j < k; j++) t = t * core;
        Expo wshift;
        wshift[Var::w] = D - k;
        out += t * Poly<C>::monomial(wshift, CoeffOps<C>::one());
    }
    return out;
}

}  // namespace detail

template <class C>
void check_dimensions(const CRMap<C>& H) {
    size_t want = static_cast<size_t>(H.target.dim);
    if (H.body.nums.size() != want)
        throw DimensionMismatch("map has " + std::to_string(H.body.nums.size()) +
                                " components, target dimension is " + std::to_string(H.target.dim));
    if (H.source.dim != 2) throw DimensionMismatch("source must have complex dimension 2");
}

/// The mapping (basic) equation verifier. H carries its hypersurface into the
/// target model iff the returned residual vanishes identically.
inline Residual mapping_residual(const CRMapS& H) {
    check_dimensions(H);
    if (H.body.den.eval<Scalar>(H.base4()).is_zero())
        throw PoleAtBasePoint("denominator vanishes at the base point");
    PolyS R = detail::segre_restrict(H, detail::relation_poly(H));
    return Residual{R, R.is_zero()};
}

/// float backend: residual sup-norm on a seeded polydisc sample
inline FloatResidual mapping_residual_float(const CRMapC& H, uint64_t seed = 0, double tol = 1e-10,
                                            int samples = 100) {
    check_dimensions(H);
    PolyC R = detail::segre_restrict(H, detail::relation_poly(H));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-0.5, 0.5);
    double sup = 0.0;
    for (int s = 0; s < samples; s++) {
        std::array<FloatComplex, 4> pt;
        for (auto& x : pt) x = FloatComplex(unif(rng), unif(rng));
        sup = std::max(sup, std::abs(R.eval<FloatComplex>(pt)));
    }
    return FloatResidual{sup, sup < tol};
}

enum class CayleyDirection { SphereToHeisenberg, HeisenbergToSphere };
enum class CayleySide { Source, Target, Both };

/// Compose H with the Cayley transform / its inverse on the requested side(s),
/// clearing denominators. Follows the displayed formulas:
///   sphere -> Heisenberg: (z_1..z_{N-1}, z_N) -> (z_j/(1+z_N), i(1-z_N)/(1+z_N))
///   Heisenberg -> sphere: (z, w) -> (2i z_j/(i+w), (i-w)/(i+w))
CRMapS cayley(const CRMapS& H, CayleyDirection dir, CayleySide side);

/// g^{(0,1)} of a verified Heisenberg-model map; equals ||f^{(1,0)}||^2 for
/// nonconstant verified maps and 0 exactly when the map is non-transversal.
Scalar transversality_data(const CRMapS& H);

/// per-component constants c_j with A_j * den_B = c_j * B_j * den_A; nullopt when some
/// component pair is not proportional. Used for equality up to diagonal unitaries.
std::optional<std::vector<Scalar>> component_ratios(const RatTuple<Scalar>& A,
                                                    const RatTuple<Scalar>& B);

/// equality up to a diagonal target unitary: all ratios unimodular, last component ratio 1
bool equal_up_to_diag_unitary(const CRMapS& A, const CRMapS& B);

inline bool on_heisenberg(const Scalar& z0, const Scalar& w0) {
    return (w0 - w0.conj()) == Scalar(2) * Scalar::i() * z0 * z0.conj();
}

inline bool on_sphere(const Scalar& z0, const Scalar& w0) {
    return (abs2(z0) + abs2(w0)) == Scalar(1);
}

}  // namespace crmap
