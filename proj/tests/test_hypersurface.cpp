#include <doctest.h>

#include "crmap/families.hpp"
#include "crmap/hypersurface.hpp"

using namespace crmap;

namespace {
const PolyS Z = PolyS::variable(Var::z);
const PolyS W = PolyS::variable(Var::w);
const Scalar I = Scalar::i();
}  // namespace

TEST_CASE("mapping residual: linear embedding and a broken map") {
    CRMapS lin = catalog_linear(4);
    CHECK(mapping_residual(lin).is_zero);

    // (z, z^2, 0, w) is not a CR map; residual is exactly -2i z^2 chi^2
    CRMapS broken = lin;
    broken.body.nums[1] = Z * Z;
    Residual r = mapping_residual(broken);
    CHECK(!r.is_zero);
    Expo ex;
    ex[Var::z] = 2;
    ex[Var::chi] = 2;
    CHECK(r.poly.coeff(ex) == Scalar(-2) * I);
    CHECK(r.poly.size() == 1);
}

TEST_CASE("mapping residual: explicit catalog maps") {
    CHECK(mapping_residual(catalog_h14()).is_zero);
    CHECK(mapping_residual(catalog_h24()).is_zero);
    CHECK(mapping_residual(catalog_h1n(5)).is_zero);
    CHECK(mapping_residual(catalog_h2n(6)).is_zero);
    CHECK(mapping_residual(catalog_f14()).is_zero);
    CHECK(mapping_residual(catalog_f24()).is_zero);
    CHECK(mapping_residual(catalog_f1n(5)).is_zero);
    CHECK(mapping_residual(catalog_f2n(5)).is_zero);
}

TEST_CASE("dimension and pole preconditions") {
    CRMapS bad = catalog_linear(4);
    bad.body.nums.pop_back();
    CHECK_THROWS_AS(mapping_residual(bad), DimensionMismatch);

    CRMapS pole = catalog_linear(4);
    pole.body.den = W;  // vanishes at the base point 0
    CHECK_THROWS_AS(mapping_residual(pole), PoleAtBasePoint);
}

TEST_CASE("cayley point image and round trip") {
    // sphere point (1, 0) maps to the Heisenberg point (1, i)
    CRMapS id_sphere;
    id_sphere.source = {ModelKind::Sphere, 2};
    id_sphere.target = {ModelKind::Sphere, 2};
    id_sphere.body.nums = {Z, W};
    id_sphere.body.den = PolyS(1);
    id_sphere.base_point = {Scalar(0), Scalar(1)};
    CRMapS heis_target = cayley(id_sphere, CayleyDirection::SphereToHeisenberg, CayleySide::Target);
    auto img = heis_target.body.eval<Scalar>({Scalar(1), Scalar(0), Scalar(1), Scalar(0)});
    CHECK(img[0] == Scalar(1));
    CHECK(img[1] == I);
    CHECK(on_heisenberg(img[0], img[1]));

    for (const char* name : {"h14", "h24"}) {
        CRMapS H = name == std::string("h14") ? catalog_h14() : catalog_h24();
        CRMapS S = cayley(H, CayleyDirection::HeisenbergToSphere, CayleySide::Both);
        CHECK(mapping_residual(S).is_zero);
        CRMapS back = cayley(S, CayleyDirection::SphereToHeisenberg, CayleySide::Both);
        CHECK(cross_mult_equal(back.body, H.body));
    }
}

TEST_CASE("sphere-side and Heisenberg-side verification agree") {
    CRMapS H = family_thm_i(Rational(1, 3), Scalar(Rational(1, 3)), 4);
    CHECK(mapping_residual(H).is_zero);
    CRMapS S = cayley(H, CayleyDirection::HeisenbergToSphere, CayleySide::Both);
    CHECK(mapping_residual(S).is_zero);

    CRMapS broken = catalog_linear(4);
    broken.body.nums[1] = Z * Z;
    CRMapS broken_s = cayley(broken, CayleyDirection::HeisenbergToSphere, CayleySide::Both);
    CHECK(!mapping_residual(broken_s).is_zero);
}

TEST_CASE("F-maps transport to the H-maps") {
    // f24 transported equals h24 on the nose; f14 and f1n match up to a
    // documented diagonal unitary on the f-components
    CRMapS t24 = cayley(catalog_f24(), CayleyDirection::SphereToHeisenberg, CayleySide::Both);
    CHECK(cross_mult_equal(t24.body, catalog_h24().body));
    CRMapS t14 = cayley(catalog_f14(), CayleyDirection::SphereToHeisenberg, CayleySide::Both);
    CHECK(cross_mult_equal(t14.body, catalog_h14().body));
    CRMapS t1n = cayley(catalog_f1n(5), CayleyDirection::SphereToHeisenberg, CayleySide::Both);
    CHECK(equal_up_to_diag_unitary(t1n, catalog_h1n(5)));
    auto ratios = component_ratios(t1n.body, catalog_h1n(5).body);
    REQUIRE(ratios.has_value());
    CHECK((*ratios)[0] == I);
    CHECK((*ratios)[1] == I);
    CHECK((*ratios)[2] == Scalar(-1));
    CHECK((*ratios)[3] == Scalar(1));
    CHECK((*ratios)[4] == Scalar(1));
    CRMapS t2n = cayley(catalog_f2n(5), CayleyDirection::SphereToHeisenberg, CayleySide::Both);
    CHECK(cross_mult_equal(t2n.body, catalog_h2n(5).body));
}

TEST_CASE("transversality data") {
    CHECK(transversality_data(catalog_h1n(5)) == Scalar(1));
    CHECK(transversality_data(catalog_linear(5)) == Scalar(1));
    CRMapS constant;
    constant.source = {ModelKind::Heisenberg, 2};
    constant.target = {ModelKind::Heisenberg, 4};
    constant.body.nums = {PolyS(), PolyS(), PolyS(), PolyS()};
    constant.body.den = PolyS(1);
    CHECK(transversality_data(constant) == Scalar(0));  // flags non-transversality

    CRMapS broken = catalog_linear(4);
    broken.body.nums[1] = Z * Z;
    CHECK_THROWS_AS(transversality_data(broken), NotVerified);

    // g^{(0,1)} = ||f^{(1,0)}||^2 on verified maps
    CRMapS H = family_thm_i(Rational(1), Scalar(1), 5);
    Scalar g01 = transversality_data(H);
    Scalar norm = Scalar(0);
    for (int k = 0; k + 1 < H.N(); k++) {
        Scalar fk = jet(H.body.nums[k], H.body.den, 1, 0);
        norm += abs2(fk);
    }
    CHECK(g01 == norm);
}
