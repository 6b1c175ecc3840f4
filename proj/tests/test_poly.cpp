#include <doctest.h>

#include <random>

#include "crmap/jets.hpp"
#include "crmap/poly.hpp"

using namespace crmap;

namespace {

const PolyS Z = PolyS::variable(Var::z);
const PolyS W = PolyS::variable(Var::w);
const PolyS X = PolyS::variable(Var::chi);
const PolyS T = PolyS::variable(Var::tau);

PolyS random_poly(std::mt19937_64& rng, int max_terms = 5, int max_deg = 3) {
    std::uniform_int_distribution<int> coeff(-6, 6), expo(0, max_deg);
    PolyS out;
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; t++) {
        Expo ex;
        for (int k = 0; k < 4; k++) ex.e[k] = expo(rng) % 2 ? expo(rng) : 0;
        Rational re(coeff(rng)), im(coeff(rng));
        out.add_term(ex, Scalar(re, im));
    }
    return out;
}

PolyS segre_subst(const PolyS& p) {
    return p.subst(Var::tau, W - PolyS(Scalar(2) * Scalar::i()) * Z * X);
}

}  // namespace

TEST_CASE("arithmetic basics") {
    CHECK((Z + W) * (Z - W) == Z * Z - W * W);
    PolyS a = Z + W;
    CHECK((a - a).is_zero());
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; it++) {
        PolyS p = random_poly(rng), q = random_poly(rng);
        CHECK((p * q).size() <= p.size() * q.size());  // sparse size bound
        if (!p.is_zero() && !q.is_zero())
            CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("differentiation") {
    CHECK((Z * Z * W).diff(Var::z) == PolyS(2) * Z * W);
    // d_w of g = w(1 - i mu w) at 0 is 1, mu = 1/3
    PolyS g = W * (PolyS(1) - PolyS(Scalar(Rational(0), Rational(1, 3))) * W);
    CHECK(g.diff(Var::w).subst(Var::w, PolyS()).subst(Var::z, PolyS()) == PolyS(1));
    // dd_z of f2 = z^2 phi at 0 equals 2 phi(0)
    PolyS phi = PolyS(1) + PolyS(Rational(2) * Scalar(Rational(1, 3))) * Z;
    PolyS f2 = Z * Z * phi;
    CHECK(jet(f2, PolyS(1), 2, 0) == Scalar(2));
}

TEST_CASE("substitution") {
    // defining function vanishes on its own complexification
    PolyS rho = (W - T) * PolyS(Scalar(1) / (Scalar(2) * Scalar::i())) - Z * X;
    CHECK(segre_subst(rho).is_zero());
    CHECK(Z.subst(Var::w, PolyS(Scalar(2) * Scalar::i()) * Z * X) == Z);
    // conjugate of g = w then tau -> w - 2 i z chi
    CHECK(segre_subst(W.conjugate()) == W - PolyS(Scalar(2) * Scalar::i()) * Z * X);
}

TEST_CASE("formal conjugation is a ring involution") {
    CHECK((PolyS(Scalar::i()) * Z).conjugate() == PolyS(-Scalar::i()) * X);
    PolyS g = W * (PolyS(1) - PolyS(Scalar(Rational(0), Rational(1, 3))) * W);
    PolyS gc = T * (PolyS(1) + PolyS(Scalar(Rational(0), Rational(1, 3))) * T);
    CHECK(g.conjugate() == gc);
    CHECK((Z * Z + Z).conjugate() == X * X + X);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; it++) {
        PolyS p = random_poly(rng), q = random_poly(rng);
        CHECK(p.conjugate().conjugate() == p);
        CHECK((p + q).conjugate() == p.conjugate() + q.conjugate());
        CHECK((p * q).conjugate() == p.conjugate() * q.conjugate());
    }
}

TEST_CASE("chain rule for the Segre substitution") {
    // d_chi (a|_{tau -> w-2iz chi}) = (L a)|_{tau -> w-2iz chi}
    std::mt19937_64 rng(9);
    for (int it = 0; it < 40; it++) {
        PolyS a = random_poly(rng);
        PolyS lhs = segre_subst(a).diff(Var::chi);
        PolyS La = a.diff(Var::chi) - PolyS(Scalar(2) * Scalar::i()) * Z * a.diff(Var::tau);
        CHECK(lhs == segre_subst(La));
    }
}

TEST_CASE("rational tuple evaluation and degree") {
    // linear embedding at (1, 2i) -> (1, 0, ..., 0, 2i)
    RatTuple<Scalar> lin;
    lin.nums = {Z, PolyS(), PolyS(), W};
    lin.den = PolyS(1);
    auto vals = lin.eval<Scalar>({Scalar(1), Scalar(Rational(0), Rational(2)), Scalar(0), Scalar(0)});
    CHECK(vals[0] == Scalar(1));
    CHECK(vals[1] == Scalar(0));
    CHECK(vals[3] == Scalar(Rational(0), Rational(2)));
    CHECK(lin.degree() == 1);

    RatTuple<Scalar> pole;
    pole.nums = {Z};
    pole.den = PolyS(1) - W;
    std::array<Scalar, 4> at_pole{Scalar(0), Scalar(1), Scalar(0), Scalar(1)};
    CHECK_THROWS_AS(pole.eval<Scalar>(at_pole), PoleAtPoint);
}

TEST_CASE("exact division") {
    PolyS p = (Z * Z + PolyS(Scalar(Rational(-1))) * W * W) * (PolyS(1) + Z + W);
    auto q = divide_exact(p, Z * Z - W * W);
    REQUIRE(q.has_value());
    CHECK(*q == PolyS(1) + Z + W);
    CHECK(!divide_exact(p + PolyS(1), Z * Z - W * W).has_value());
}

TEST_CASE("series quotients invert multiplication") {
    PolyS num = Z + PolyS(Scalar(Rational(1, 2))) * W * W + Z * Z * W;
    PolyS den = PolyS(1) + Z - PolyS(Scalar(Rational(1, 3))) * W;
    auto q = series_quotient<Scalar>(num, den, Var::z, Var::w, 4);
    auto d = Series2<Scalar>::from_poly(den, Var::z, Var::w, 4);
    auto back = q.mul(d);
    auto n = Series2<Scalar>::from_poly(num, Var::z, Var::w, 4);
    for (int a = 0; a <= 4; a++)
        for (int b = 0; a + b <= 4; b++) CHECK(back.c[a][b] == n.c[a][b]);
}
