#include <doctest.h>

#include <random>

#include "crmap/scalar.hpp"

using namespace crmap;

namespace {

Scalar sq5() { return Scalar::radical_term(Rational(1), Rational(0), 5); }

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9), tag_pick(0, 3);
    static const int tags[4] = {1, 2, 5, 15};
    Scalar out;
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; t++) {
        Rational re(num(rng), den(rng)), im(num(rng), den(rng));
        re.canonicalize();
        im.canonicalize();
        out += Scalar::radical_term(re, im, tags[tag_pick(rng)]);
    }
    return out;
}

}  // namespace

TEST_CASE("basic arithmetic and radical combination") {
    // (1/2)*sqrt(5) times i*sqrt(5) = (5/2) i
    Scalar a = Scalar::radical_term(Rational(1, 2), Rational(0), 5);
    Scalar b = Scalar::radical_term(Rational(0), Rational(1), 5);
    CHECK(a * b == Scalar(Rational(0), Rational(5, 2)));

    // 1 / i = -i
    CHECK(Scalar(1) / Scalar::i() == -Scalar::i());

    // a3 * conj(b3) at mu = lambda = 1:  (sqrt5/2) * conj(i/(2 sqrt5)) = -i/4
    Scalar a3 = sq5() * Scalar(Rational(1, 2));
    Scalar b3 = Scalar::i() / (Scalar(2) * sq5());
    CHECK(a3 * b3.conj() == Scalar(Rational(0), Rational(-1, 4)));
}

TEST_CASE("sqrt of rationals") {
    CHECK(sqrt_rational(Rational(1)) == Scalar(1));
    // sqrt(15/4) = (1/2) sqrt(15)
    CHECK(sqrt_rational(Rational(15, 4)) == Scalar::radical_term(Rational(1, 2), Rational(0), 15));
    // lambda bound sqrt(mu(6mu-1)/3) at mu = 1/3 equals 1/3
    Rational mu(1, 3);
    CHECK(sqrt_rational(mu * (Rational(6) * mu - 1) / 3) == Scalar(Rational(1, 3)));
    CHECK_THROWS_AS(sqrt_rational(Rational(-1)), NegativeRadicand);
    // square part extraction
    CHECK(sqrt_rational(Rational(2016)) == Scalar::radical_term(Rational(12), Rational(0), 14));
}

TEST_CASE("conjugation") {
    CHECK(Scalar::i().conj() == -Scalar::i());
    Scalar half_sq5 = Scalar::radical_term(Rational(1, 2), Rational(0), 5);
    CHECK(half_sq5.conj() == half_sq5);
    // i/(2 sqrt5) = (1/10) i sqrt5 rationalized; conj negates it
    Scalar b3 = Scalar::i() / (Scalar(2) * sq5());
    CHECK(b3 == Scalar::radical_term(Rational(0), Rational(1, 10), 5));
    CHECK(b3.conj() == -b3);
}

TEST_CASE("float conversion") {
    CHECK(Scalar(Rational(1, 3)).to_complex().real() == doctest::Approx(1.0 / 3).epsilon(1e-15));
    Scalar v = Scalar::radical_term(Rational(1, 2), Rational(0), 15);
    CHECK(v.to_complex().real() == doctest::Approx(1.9364916731037085).epsilon(1e-15));
    CHECK(Scalar::i().to_complex() == FloatComplex(0.0, 1.0));
}

TEST_CASE("canonical form round trips (random)") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; it++) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}

TEST_CASE("radical closure under products") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; it++) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        Scalar p = a * b;
        // every tag of p divides 2*5*15 products: stays within {1,2,3,5,6,10,15,30}
        for (const auto& [tag, c] : p.terms()) CHECK(Int(30) % gcd(tag, Int(30)) == 0);
    }
}

TEST_CASE("division by zero and multi-radical inverses") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
    std::mt19937_64 rng(13);
    for (int it = 0; it < 60; it++) {
        Scalar a = random_scalar(rng);
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == Scalar(1));
    }
    // the classic two-radical denominator
    Scalar d = Scalar(1) + sqrt_rational(Rational(2)) + sqrt_rational(Rational(3));
    CHECK(d * d.inverse() == Scalar(1));
}

TEST_CASE("sign determination") {
    CHECK(Scalar(0).sign() == 0);
    CHECK(Scalar(Rational(-3, 7)).sign() == -1);
    // sqrt(2) + sqrt(3) - 3 > 0 (= 0.146...)
    Scalar s = sqrt_rational(Rational(2)) + sqrt_rational(Rational(3)) - Scalar(3);
    CHECK(s.sign() == 1);
    Scalar t = sqrt_rational(Rational(2)) - Scalar(Rational(3, 2));
    CHECK(t.sign() == -1);
    CHECK_THROWS_AS(Scalar::i().sign(), CrmapError);
}

TEST_CASE("sqrt denesting") {
    // sqrt(6 + 2 sqrt5) = 1 + sqrt5
    Scalar s = Scalar(6) + Scalar(2) * sq5();
    CHECK(sqrt_scalar(s) == Scalar(1) + sq5());
    // sqrt of squares of mixed elements
    Scalar x = Scalar(Rational(1, 4)) + Scalar(Rational(-1, 8)) * Scalar::i();
    CHECK(sqrt_scalar(abs2(x)) == sqrt_rational(Rational(5, 64)));
    CHECK_THROWS_AS(sqrt_scalar(Scalar(2) * sqrt_rational(Rational(2))), RadicalNotRepresentable);
}

TEST_CASE("scalar literal grammar") {
    Scalar v = Scalar(Rational(1, 2)) + Scalar::radical_term(Rational(0), Rational(1, 10), 5);
    CHECK(v.str() == "1/2 + 1/10 i * sqrt(5)");
    CHECK(Scalar::parse("1/2 + 1/10 i * sqrt(5)") == v);
    CHECK(Scalar::parse("-3 i") == Scalar(Rational(0), Rational(-3)));
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("0") == Scalar(0));
    CHECK(Scalar::parse("2 * sqrt(8)") == Scalar::radical_term(Rational(4), Rational(0), 2));
    CHECK_THROWS_AS(Scalar::parse("1 +"), ParseError);
    std::mt19937_64 rng(17);
    for (int it = 0; it < 100; it++) {
        Scalar a = random_scalar(rng);
        CHECK(Scalar::parse(a.str()) == a);
    }
}
