#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rtk/gaussian.hpp"
#include "rtk/rational.hpp"
#include "rtk/truncated_poly.hpp"

using namespace rtk;

namespace {

Rational rand_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

GaussianRational rand_gaussian(std::mt19937& rng) {
    return {rand_rational(rng), rand_rational(rng)};
}

} // namespace

TEST_CASE("rational inverse") {
    CHECK(Rational(2, 3).inv() == Rational(3, 2));
    CHECK(Rational(-5).inv() == Rational(-1, 5));
    CHECK(Rational(1).inv() == Rational(1));
    CHECK_THROWS_AS(Rational(0).inv(), division_by_zero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), division_by_zero);
    CHECK_THROWS_AS(Rational(1, 0), division_by_zero);
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(0, 7).to_string() == "0");
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> d(1, 50);
    for (int t = 0; t < 200; ++t) {
        long p = d(rng), q = d(rng);
        CHECK(Rational(p, q) * Rational(q, p) == Rational(1));
    }
}

TEST_CASE("rational parse and print round trip") {
    for (const char* s : {"-7", "3/4", "0", "911835460", "-1/2"}) {
        CHECK(Rational::parse(s).to_string() == s);
    }
    // explicit leading '+' appears when splitting gaussian texts
    CHECK(Rational::parse("+1") == Rational(1));
    CHECK(Rational::parse("+3/4") == Rational(3, 4));
    CHECK_THROWS_AS(Rational::parse("abc"), parse_error);
}

TEST_CASE("rational order and pow") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-2).abs() == Rational(2));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(6) == Rational(720));
    CHECK(binomial(6, 3) == Rational(20));
    CHECK(binomial(4, 7) == Rational(0));
    CHECK(binomial(4, -1) == Rational(0));
}

TEST_CASE("gaussian inverse") {
    CHECK(GaussianRational::i().inv() == -GaussianRational::i());
    CHECK(GaussianRational(Rational(1), Rational(1)).inv() ==
          GaussianRational(Rational(1, 2), Rational(-1, 2)));
    CHECK(GaussianRational(2).inv() == GaussianRational(Rational(1, 2)));
    CHECK_THROWS_AS(GaussianRational().inv(), division_by_zero);
}

TEST_CASE("gaussian arithmetic") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(2), Rational(-3));
    CHECK(z * z.conj() == GaussianRational(z.norm()));
    CHECK(z.norm() == Rational(13));
}

TEST_CASE("gaussian embeds rational homomorphically") {
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        Rational a = rand_rational(rng), b = rand_rational(rng);
        CHECK(GaussianRational(a) + GaussianRational(b) == GaussianRational(a + b));
        CHECK(GaussianRational(a) * GaussianRational(b) == GaussianRational(a * b));
        CHECK(GaussianRational(a).is_real());
        CHECK(GaussianRational(a).to_string() == a.to_string());
    }
}

TEST_CASE("gaussian parse and print round trip") {
    for (const char* s : {"1/2-1/2i", "2+1i", "-3i", "i", "-i", "5", "-7/3+2/5i"}) {
        GaussianRational g = GaussianRational::parse(s);
        CHECK(GaussianRational::parse(g.to_string()) == g);
    }
    CHECK(GaussianRational::parse("2+1i") == GaussianRational(Rational(2), Rational(1)));
    CHECK(GaussianRational::parse("1/2-1/2i") ==
          GaussianRational(Rational(1, 2), Rational(-1, 2)));
    CHECK(GaussianRational::parse("i") == GaussianRational::i());
    CHECK_THROWS_AS(GaussianRational::parse(""), parse_error);
}

TEST_CASE("truncated polynomial inverse") {
    using P = TruncatedPolynomial<Rational>;
    P p(4);
    p[0] = Rational(1);
    p[1] = Rational(-1);
    P inv = p.inv();
    for (std::size_t k = 0; k < 4; ++k) CHECK(inv[k] == Rational(1));

    CHECK(P::constant(3, Rational(2)).inv() == P::constant(3, Rational(1, 2)));

    P q(3);
    q[1] = Rational(1);
    q[2] = Rational(1);
    CHECK_THROWS_AS(q.inv(), non_unit_constant_term);
}

TEST_CASE("truncated polynomial agrees with exact polynomial arithmetic") {
    using P = TruncatedPolynomial<Rational>;
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-5, 5);
    const std::size_t M = 7;
    for (int t = 0; t < 100; ++t) {
        std::vector<Rational> a(M), b(M);
        for (std::size_t k = 0; k <= 6; ++k) {
            a[k] = Rational(coef(rng));
            b[k] = Rational(coef(rng));
        }
        // schoolbook product, then discard degrees >= M
        std::vector<Rational> full(2 * M, Rational(0));
        for (std::size_t i = 0; i < M; ++i)
            for (std::size_t j = 0; j < M; ++j) full[i + j] += a[i] * b[j];
        P pa(M, a), pb(M, b);
        P prod = pa * pb;
        for (std::size_t k = 0; k < M; ++k) CHECK(prod[k] == full[k]);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(3);
    auto axioms = [](auto a, auto b, auto c) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == decltype(a)(0));
    };
    for (int t = 0; t < 100; ++t)
        axioms(rand_rational(rng), rand_rational(rng), rand_rational(rng));
    for (int t = 0; t < 100; ++t)
        axioms(rand_gaussian(rng), rand_gaussian(rng), rand_gaussian(rng));
    using P = TruncatedPolynomial<Rational>;
    auto rand_poly = [&rng] {
        std::vector<Rational> c(5);
        std::uniform_int_distribution<long> d(-5, 5);
        for (auto& x : c) x = Rational(d(rng));
        return P(5, c);
    };
    for (int t = 0; t < 50; ++t) {
        P a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == P(5));
    }
}

TEST_CASE("ring shape helpers carry truncation order") {
    using P = TruncatedPolynomial<Rational>;
    P sample(6);
    CHECK(ring_one_like(sample).order() == 6);
    CHECK(ring_zero_like(sample).is_zero());
    CHECK(ring_int_like(3, sample) == P::constant(6, Rational(3)));
    CHECK(ring_one_like(Rational(0)) == Rational(1));
    P a(3), b(4);
    CHECK_THROWS_AS(a + b, insufficient_order);
}
