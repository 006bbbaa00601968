#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rtk/contfrac.hpp"
#include "rtk/matrix.hpp"

using namespace rtk;

namespace {

using QS = Series<Rational>;

QS qgf(const std::string& text, std::size_t order) {
    return parse_gf<Rational>(text).expand(order);
}

std::vector<Rational> qlist(const std::string& text) {
    return parse_scalar_list<Rational>(text);
}

std::string join(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].to_string();
    }
    return s;
}

} // namespace

TEST_CASE("j-fraction of the heptagon generating function") {
    JFraction<Rational> jf = jfraction_extract(qgf("1,-1 ; 1,-2,-1,1", 16));
    CHECK(jf.mu0 == Rational(1));
    CHECK(join(jf.alphas) == "1,1/2,1/2");
    CHECK(join(jf.betas) == "2,1/4");
    CHECK(jf.terminated);
    CHECK(jfraction_to_series(jf, 12) == qgf("1,-1 ; 1,-2,-1,1", 12));
}

TEST_CASE("j-fraction of the centered polygon generating function") {
    // under the minus convention a "+" display corresponds to negated betas;
    // only the alpha signs asserted here round-trip back to the series
    JFraction<Rational> jf = jfraction_extract(qgf("1,1,1 ; 1,-3,3,-1", 16));
    CHECK(jf.mu0 == Rational(1));
    CHECK(join(jf.alphas) == "4,-1/2,-1/2");
    CHECK(join(jf.betas) == "-6,-3/4");
    CHECK(jf.terminated);
    CHECK(jfraction_to_series(jf, 12) == qgf("1,1,1 ; 1,-3,3,-1", 12));
}

TEST_CASE("j-fraction trivial cases") {
    JFraction<Rational> jf = jfraction_extract(qgf("1 ; 1,-1", 10));
    CHECK(jf.mu0 == Rational(1));
    CHECK(join(jf.alphas) == "1");
    CHECK(jf.betas.empty());
    CHECK(jf.terminated);

    JFraction<Rational> depth0;
    depth0.mu0 = Rational(1);
    CHECK(jfraction_to_series(depth0, 5).to_string() == "1,0,0,0,0");
}

TEST_CASE("j-fraction with zero alphas matches the aerated Catalan tail") {
    JFraction<Rational> jf;
    jf.mu0 = Rational(1);
    jf.alphas.assign(6, Rational(0));
    jf.betas.assign(5, Rational(-1));
    QS built = jfraction_to_series(jf, 12);
    // c(-x^2) where c is the Catalan generating function
    std::vector<Rational> cat{Rational(1),  Rational(1),   Rational(2),   Rational(5),
                              Rational(14), Rational(42),  Rational(132), Rational(429),
                              Rational(1430), Rational(4862), Rational(16796), Rational(58786)};
    std::vector<Rational> inner(12, Rational(0));
    inner[2] = Rational(-1);
    CHECK(built == compose(QS(cat), QS(inner)));
}

TEST_CASE("j-fraction breakdown and termination detection") {
    // 1/(1-x^3) has a vanishing x^2 coefficient with nonzero remainder
    CHECK_THROWS_AS(jfraction_extract(qgf("1 ; 1,0,0,-1", 12)), cf_breakdown);
    CHECK_THROWS_AS(jfraction_extract(QS(qlist("0,1,1,1,1"))), cf_breakdown);
    // too little order to even read one level: no levels, not terminated
    JFraction<Rational> shallow = jfraction_extract(QS(qlist("1,2")));
    CHECK(shallow.alphas.empty());
    CHECK_FALSE(shallow.terminated);
}

TEST_CASE("j-fraction round trips on the table generating functions") {
    for (const char* text :
         {"1,-1 ; 1,-2,-1,1", "1,1,1 ; 1,-3,3,-1", "1 ; 1,-1,3,-1", "4,-11,9,-3 ; 1,-3,3,-1",
          "1,-2,2 ; 1,-3,3,-1", "1 ; 1,-3,3,-1", "1,0,-1 ; 1,-3,1,1", "1,-1 ; 1,-3,1,1",
          "1,-2,1 ; 1,-2,-1,1"}) {
        QS g = qgf(text, 20);
        JFraction<Rational> jf = jfraction_extract(g);
        CHECK(jfraction_to_series(jf, 14) == g.take(14));
    }
}

TEST_CASE("heilermann formula against direct Hankel determinants") {
    SUBCASE("beta tail 2, 1/4, 0") {
        JFraction<Rational> jf;
        jf.mu0 = Rational(1);
        jf.alphas = qlist("1,1/2,1/2");
        jf.betas = qlist("2,1/4");
        jf.terminated = true;
        std::vector<Rational> h = heilermann_hankel(jf, 4);
        CHECK(join(h) == "1,2,1,0");
        CHECK(h == hankel_transform(qlist("1,1,3,6,14,31,70")));
    }
    SUBCASE("all betas one") {
        JFraction<Rational> jf;
        jf.mu0 = Rational(1);
        jf.alphas.assign(6, Rational(0));
        jf.betas.assign(6, Rational(1));
        for (const Rational& h : heilermann_hankel(jf, 6)) CHECK(h == Rational(1));
    }
    SUBCASE("n = 0 returns mu0") {
        JFraction<Rational> jf;
        jf.mu0 = Rational(5, 3);
        jf.terminated = true;
        CHECK(heilermann_hankel(jf, 1)[0] == Rational(5, 3));
    }
    SUBCASE("depth guard") {
        JFraction<Rational> jf;
        jf.mu0 = Rational(1);
        jf.alphas = qlist("1");
        jf.betas = qlist("2");
        CHECK_THROWS_AS(heilermann_hankel(jf, 4), insufficient_terms);
    }
}

TEST_CASE("heilermann agrees with Hankel on extracted fixtures") {
    for (const char* text : {"1,-1 ; 1,-2,-1,1", "1,1,1 ; 1,-3,3,-1", "1 ; 1,-1,3,-1",
                             "1,-2,1 ; 1,-2,-1,1", "1 ; 1,-3,3,-1"}) {
        QS g = qgf(text, 24);
        JFraction<Rational> jf = jfraction_extract(g);
        REQUIRE(jf.terminated);
        std::vector<Rational> direct = hankel_transform(g.take(13));
        std::vector<Rational> formula = heilermann_hankel(jf, direct.size());
        CHECK(formula == direct);
    }
}

TEST_CASE("gamma fraction of the Catalan generating function") {
    std::vector<Rational> cat{Rational(1),  Rational(1),  Rational(2),   Rational(5),
                              Rational(14), Rational(42), Rational(132), Rational(429),
                              Rational(1430), Rational(4862)};
    GammaFraction<Rational> gf = gamma_extract(QS(cat));
    for (const Rational& g : gf.gammas) CHECK(g == Rational(-1));
    CHECK(gf.gammas.size() == 9);
    CHECK_FALSE(gf.terminated);
    CHECK(gamma_to_series(gf, 9) == QS(cat).take(9));

    std::vector<Rational> h = heilermann_hankel(gf, 5);
    for (const Rational& v : h) CHECK(v == Rational(1));
    CHECK(h == hankel_transform(QS(cat).take(9)));
}

TEST_CASE("gamma fraction trivial cases") {
    GammaFraction<Rational> a = gamma_extract(qgf("1 ; 1,1", 10));
    CHECK(join(a.gammas) == "1");
    CHECK(a.terminated);
    GammaFraction<Rational> b = gamma_extract(qgf("1 ; 1,-1", 10));
    CHECK(join(b.gammas) == "-1");
    CHECK(b.terminated);
}

TEST_CASE("gamma heilermann pairs against a brute-force determinant") {
    GammaFraction<Rational> gf;
    gf.mu0 = Rational(1);
    gf.gammas = qlist("-1,-2,-1,-1");
    QS s = gamma_to_series(gf, 5);
    Rational h1 = hankel_matrix(std::vector<Rational>(s.coeffs().begin(), s.coeffs().begin() + 3), 2)
                      .determinant();
    CHECK(h1 == Rational(2)); // gamma1 * gamma2
    CHECK(heilermann_hankel(gf, 2)[1] == h1);
    CHECK_THROWS_AS(heilermann_hankel(gf, 4), insufficient_terms);
}

TEST_CASE("extraction round trips on random series") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<long> coef(1, 5);
    for (int t = 0; t < 25; ++t) {
        // positive coefficients keep the leading minors nonzero in practice;
        // breakdown cases are covered separately
        std::vector<Rational> c(15);
        for (auto& v : c) v = Rational(coef(rng), coef(rng));
        QS g(c);
        try {
            JFraction<Rational> jf = jfraction_extract(g);
            CHECK(jfraction_to_series(jf, 9) == g.take(9));
        } catch (const cf_breakdown&) {
            // acceptable: a vanishing Hankel minor
        }
        try {
            GammaFraction<Rational> gf = gamma_extract(g);
            CHECK(gamma_to_series(gf, 9) == g.take(9));
        } catch (const cf_breakdown&) {
        }
    }
}

TEST_CASE("shifted fraction family shares one Hankel transform") {
    // alpha0 = 4+s, alpha1 = alpha2 = 1/2+t with fixed betas: the revert
    // transform's Hankel transform does not depend on (s,t)
    auto family = [](long s, long t) {
        JFraction<Rational> jf;
        jf.mu0 = Rational(1);
        jf.alphas = {Rational(4 + s), Rational(1, 2) + Rational(t), Rational(1, 2) + Rational(t)};
        jf.betas = {Rational(-6), Rational(-3, 4)};
        jf.terminated = true;
        return hankel_transform(revert_transform(jfraction_to_series(jf, 15)));
    };
    std::vector<Rational> base = family(0, 0);
    CHECK(base.size() == 8); // through n = 7
    CHECK(family(1, -1) == base);
    CHECK(family(2, 1) == base);
}
