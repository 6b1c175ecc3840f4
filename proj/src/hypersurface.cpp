#include "crmap/hypersurface.hpp"

namespace crmap {

namespace {

const Scalar kI = Scalar::i();

// substitute z -> nz/dz, w -> nw/dw with common denominator e, clearing e^D over all
// components; used for precomposition with a linear fractional source map
RatTuple<Scalar> precompose(const RatTuple<Scalar>& body, const PolyS& nz, const PolyS& nw,
                            const PolyS& e) {
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

CRMapS cayley(const CRMapS& H, CayleyDirection dir, CayleySide side) {
    check_dimensions(H);
    CRMapS out = H;
    bool do_target = side == CayleySide::Target || side == CayleySide::Both;
    bool do_source = side == CayleySide::Source || side == CayleySide::Both;

    if (do_target) {
        ModelKind want =
            dir == CayleyDirection::SphereToHeisenberg ? ModelKind::Sphere : ModelKind::Heisenberg;
        if (H.target.kind != want)
            throw CrmapError("cayley: target side is not in the expected source model");
        const auto& n = out.body.nums;
        const PolyS& d = out.body.den;
        RatTuple<Scalar> nb;
        if (dir == CayleyDirection::SphereToHeisenberg) {
            // forward transform on target values: y_j/(1+y_N), i(1-y_N)/(1+y_N)
            nb.den = d + n.back();
            for (size_t j = 0; j + 1 < n.size(); j++) nb.nums.push_back(n[j]);
            nb.nums.push_back(PolyS(kI) * (d - n.back()));
            out.target.kind = ModelKind::Heisenberg;
        } else {
            // inverse transform: 2i f_j/(i delta + g), (i delta - g)/(i delta + g)
            const PolyS& g = n.back();
            nb.den = PolyS(kI) * d + g;
            for (size_t j = 0; j + 1 < n.size(); j++)
                nb.nums.push_back(PolyS(Scalar(2) * kI) * n[j]);
            nb.nums.push_back(PolyS(kI) * d - g);
            out.target.kind = ModelKind::Sphere;
        }
        out.body = nb;
    }

    if (do_source) {
        ModelKind want =
            dir == CayleyDirection::SphereToHeisenberg ? ModelKind::Sphere : ModelKind::Heisenberg;
        if (H.source.kind != want)
            throw CrmapError("cayley: source side is not in the expected source model");
        PolyS zv = PolyS::variable(Var::z), wv = PolyS::variable(Var::w), one(1);
        if (dir == CayleyDirection::SphereToHeisenberg) {
            // new source is H^3; precompose with the inverse transform
            // (z, w) -> (2i z/(i+w), (i-w)/(i+w))
            out.body = precompose(out.body, PolyS(Scalar(2) * kI) * zv, PolyS(kI) * one - wv,
                                  PolyS(kI) * one + wv);
            out.source.kind = ModelKind::Heisenberg;
            out.base_point.clear();
        } else {
            // new source is S^3; precompose with the forward transform
            // (z1, z2) -> (z1/(1+z2), i(1-z2)/(1+z2))
            out.body = precompose(out.body, zv, PolyS(kI) * (one - wv), one + wv);
            out.source.kind = ModelKind::Sphere;
            out.base_point = {Scalar(0), Scalar(1)};
        }
    }

    if (out.body.den.eval<Scalar>(out.base4()).is_zero())
        throw PoleAtBasePoint("cayley composition hits the transform pole at the base point");
    return out;
}

Scalar transversality_data(const CRMapS& H) {
    if (H.source.kind != ModelKind::Heisenberg || H.target.kind != ModelKind::Heisenberg)
        throw CrmapError("transversality_data expects a Heisenberg-model map");
    if (!mapping_residual(H).is_zero) throw NotVerified("mapping residual is nonzero");
    return jet(H.body.nums.back(), H.body.den, 0, 1);
}

std::optional<std::vector<Scalar>> component_ratios(const RatTuple<Scalar>& A,
                                                    const RatTuple<Scalar>& B) {
    if (A.nums.size() != B.nums.size()) return std::nullopt;
    std::vector<Scalar> out;
    for (size_t j = 0; j < A.nums.size(); j++) {
        PolyS pa = A.nums[j] * B.den;
        PolyS pb = B.nums[j] * A.den;
        if (pa.is_zero() && pb.is_zero()) {
            out.push_back(Scalar(1));
            continue;
        }
        if (pa.is_zero() || pb.is_zero()) return std::nullopt;
        // candidate from the leading terms, then verified as an identity
        Scalar c = pa.terms().rbegin()->second / pb.terms().rbegin()->second;
        if (pa != PolyS(c) * pb) return std::nullopt;
        out.push_back(c);
    }
    return out;
}

bool equal_up_to_diag_unitary(const CRMapS& A, const CRMapS& B) {
    auto ratios = component_ratios(A.body, B.body);
    if (!ratios) return false;
    for (size_t j = 0; j < ratios->size(); j++) {
        if (!(abs2((*ratios)[j]) == Scalar(1))) return false;
    }
    if (A.target.kind == ModelKind::Heisenberg && !(ratios->back() == Scalar(1))) return false;
    return true;
}

}  // namespace crmap
