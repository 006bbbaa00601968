// Acceptance gate: one timed pass/fail line per criterion, nonzero exit on
// any failure.  Everything runs offline from the bundled fixtures.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "rtk/contfrac.hpp"
#include "rtk/experiments.hpp"
#include "rtk/fixtures.hpp"
#include "rtk/matrix.hpp"
#include "rtk/riordan.hpp"
#include "rtk/robbins.hpp"

using namespace rtk;

namespace {

using QS = Series<Rational>;
using QM = ExactMatrix<Rational>;

QS qgf(const std::string& text, std::size_t order) {
    return parse_gf<Rational>(text).expand(order);
}

std::vector<Rational> qlist(const std::string& text) {
    return parse_scalar_list<Rational>(text);
}

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

QS rand_series(std::mt19937& rng, std::size_t order, bool unit_constant) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> c(order);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    if (unit_constant && c[0].is_zero()) c[0] = Rational(1);
    return QS(std::move(c));
}

// --- criteria ----------------------------------------------------------------

void criterion_robbins() {
    const std::vector<Rational>& want = fixture("A005130");
    for (long n = 0; n <= 12; ++n)
        require(robbins(n) == want[n], "robbins(" + std::to_string(n) + ")");
}

void criterion_binomial_minor_matrix() {
    // C(n+k,k) minus the shifted identity, 13x13
    QM m(13, 13);
    for (std::size_t n = 0; n < 13; ++n)
        for (std::size_t k = 0; k < 13; ++k) {
            m(n, k) = binomial(long(n + k), long(k));
            if (k == n + 1) m(n, k) -= Rational(1);
        }
    std::vector<Rational> minors = m.principal_minors(13);
    for (std::size_t n = 0; n < 13; ++n)
        require(minors[n] == robbins(long(n) + 1), "minor " + std::to_string(n));
}

void criterion_table_rows() {
    // the four table experiments check every row's Hankel column; three rows
    // are re-derived here directly
    for (const char* name : {"sec6-table", "sec7-table", "sec8-table", "sec9-table"}) {
        ExperimentReport rep = run_experiment(name);
        require(rep.status == ExperimentStatus::PASS, std::string(name) + " not PASS");
    }
    auto hankel_of_revert = [](const std::string& text, std::size_t order) {
        return hankel_transform(revert_transform(qgf(text, order)));
    };
    require(hankel_of_revert("1,-1 ; 1,-2,-1,1", 11) == qlist("1,-2,-7,42,429,-7436"),
            "A077998 row");
    require(hankel_of_revert("1,-2,1 ; 1", 9) == qlist("1,3,26,646,45885"), "(1-x)^2 row");
    require(hankel_of_revert("1,0,-1 ; 1", 11) == qlist("1,1,2,6,33,286"), "1-x^2 row");
}

void criterion_centered_polygon_table() {
    ExperimentReport rep = run_experiment("sec3-centered-polygon");
    require(rep.status == ExperimentStatus::PASS, "sec3-centered-polygon not PASS");
    for (long r : {3L, 4L}) {
        std::string gftext = "1," + std::to_string(r - 2) + ",1 ; 1,-3,3,-1";
        std::vector<Rational> h = hankel_transform(revert_transform(qgf(gftext, 11)));
        std::vector<Rational> want =
            r == 3 ? qlist("1,2,7,42,429,7436") : qlist("1,3,26,646,45885,9304650");
        Rational scale(1);
        for (std::size_t n = 0; n < 6; ++n) {
            require(h[n] == want[n] * scale, "r=" + std::to_string(r) + " n=" + std::to_string(n));
            scale *= Rational(r).pow(long(n) + 1); // r^C(n+1,2)
        }
    }
}

void criterion_jfractions() {
    struct Case {
        const char* gf;
        const char* alphas;
        const char* betas;
    };
    // coefficients under the minus convention in front of each beta x^2
    // term (displays written with "+" carry negated betas)
    for (const Case& c : {Case{"1,1,1 ; 1,-3,3,-1", "4,-1/2,-1/2", "-6,-3/4"},
                          Case{"1,-1 ; 1,-2,-1,1", "1,1/2,1/2", "2,1/4"}}) {
        QS g = qgf(c.gf, 24);
        JFraction<Rational> jf = jfraction_extract(g);
        require(jf.mu0 == Rational(1), "mu0");
        require(jf.alphas == qlist(c.alphas), std::string("alphas of ") + c.gf);
        require(jf.betas == qlist(c.betas), std::string("betas of ") + c.gf);
        require(jf.terminated, "termination");
        require(jfraction_to_series(jf, 16) == g.take(16), "round trip");
        std::vector<Rational> direct = hankel_transform(g.take(13));
        require(heilermann_hankel(jf, direct.size()) == direct, "heilermann");
    }
}

void criterion_gessel_xin() {
    for (const char* text : {"1,1,1 ; 1,-3,3,-1", "1,0,-1 ; 1", "1 ; 1,3,3,1"}) {
        QS g = qgf(text, 16);
        std::vector<Rational> direct = hankel_transform(revert_transform(g.take(13)));
        require(hankel_gf_matrix(g, 7).principal_minors(7) == direct,
                std::string("gessel-xin for ") + text);
    }
}

void criterion_riordan_suite() {
    using Spec = RiordanSpec<Rational>;
    std::size_t n = 16;
    Spec inv = riordan_inverse(Spec(qgf("1,-1,1 ; 1,-1", n), qgf("0,1 ; 1,-1", n)));
    require(inv.g.take(10) == qgf("1,1 ; 1,1,1", 10), "inverse g");
    require(inv.f.take(10) == qgf("0,1 ; 1,1", 10), "inverse f");

    Spec pascal(qgf("1 ; 1,-1", n), qgf("0,1 ; 1,-1", n));
    Spec v = vertical_half(pascal);
    QM half = riordan_matrix(Spec(v.g.take(7), v.f.take(7)), 7);
    for (std::size_t r = 0; r < 7; ++r)
        for (std::size_t k = 0; k <= r; ++k)
            require(half(r, k) == binomial(2 * long(r) - long(k), long(r)), "vertical half");

    QM s = symmetrize(half);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
            require(s(i, j) == binomial(long(i + j), long(j)), "symmetrization");

    ExperimentReport rep = run_experiment("sec7-embedded-triangle");
    require(rep.status == ExperimentStatus::PASS, "production matrix display");
}

void criterion_conjectures() {
    struct Probe {
        const char* name;
        long depth;
    };
    for (const Probe& p : {Probe{"sec10-robbins-conjecture", 9}, Probe{"sec11-amalgamation", 9},
                           Probe{"sec1-two-factorial", 8}, Probe{"sec5-qn-hankel", 6}}) {
        ExperimentReport rep = run_experiment(p.name, p.depth);
        require(rep.status == ExperimentStatus::CONJECTURE_HOLDS_TO_DEPTH,
                std::string(p.name) + " status " + status_name(rep.status));
        require(rep.depth == p.depth, std::string(p.name) + " depth");
        require(rep.status != ExperimentStatus::PASS, "conjectures must never PASS");
    }
    // spot values behind two of the probes
    std::vector<Rational> robbins10 = robbins_sequence(10);
    require(robbins10 == qlist("1,1,2,7,42,429,7436,218348,10850216,911835460"),
            "robbins reference");
    require(fixture("A005157").size() >= 7 &&
                std::vector<Rational>(fixture("A005157").begin(), fixture("A005157").begin() + 7) ==
                    qlist("1,2,5,16,66,352,2431"),
            "A005157 reference");
}

void criterion_property_suites() {
    std::mt19937 rng(12345);

    // revert transform involution, order 12
    for (int t = 0; t < 200; ++t) {
        QS g = rand_series(rng, 12, true);
        require(revert_transform(revert_transform(g)) == g, "revert involution");
    }

    // Hankel invariance under the transforms, order 10
    for (int t = 0; t < 20; ++t) {
        QS g = rand_series(rng, 10, true);
        std::vector<Rational> base = hankel_transform(g);
        require(hankel_transform(alternate(g)) == base, "hankel under alternate");
        for (long r : {-2L, -1L, 1L, 2L}) {
            require(hankel_transform(binomial_transform(g, Rational(r))) == base,
                    "hankel under binomial");
            require(hankel_transform(invert_transform(g, Rational(r))) == base,
                    "hankel under invert");
        }
    }

    // Riordan group laws, order 8
    using Spec = RiordanSpec<Rational>;
    auto rand_spec = [&rng] {
        std::uniform_int_distribution<long> d(-3, 3);
        std::vector<Rational> g(8), f(8);
        for (auto& c : g) c = Rational(d(rng));
        for (auto& c : f) c = Rational(d(rng));
        g[0] = Rational(1);
        f[0] = Rational(0);
        f[1] = Rational(1);
        return Spec(QS(g), QS(f));
    };
    for (int t = 0; t < 10; ++t) {
        Spec a = rand_spec(), b = rand_spec(), c = rand_spec();
        Spec ab_c = riordan_mul(riordan_mul(a, b), c);
        Spec a_bc = riordan_mul(a, riordan_mul(b, c));
        require(ab_c.g.take(8) == a_bc.g.take(8) && ab_c.f.take(8) == a_bc.f.take(8),
                "riordan associativity");
        Spec inv = riordan_inverse(a);
        Spec prod = riordan_mul(a, inv);
        Spec id = riordan_identity<Rational>(8);
        require(prod.g.take(8) == id.g && prod.f.take(8) == id.f, "riordan inverse");
        require(riordan_matrix(riordan_mul(a, b), 8) ==
                    riordan_matrix(a, 8) * riordan_matrix(b, 8),
                "riordan homomorphism");
    }

    // ring axioms
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    for (int t = 0; t < 200; ++t) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        require((a + b) + c == a + (b + c), "rational associativity");
        require(a * (b + c) == a * b + a * c, "rational distributivity");
        require(a * b == b * a, "rational commutativity");
        GaussianRational x(a, b), y(b, c), z(c, a);
        require((x * y) * z == x * (y * z), "gaussian associativity");
        require(x * (y + z) == x * y + x * z, "gaussian distributivity");
    }

    // truncated polynomial arithmetic vs schoolbook product
    using P = TruncatedPolynomial<Rational>;
    for (int t = 0; t < 100; ++t) {
        const std::size_t M = 7;
        std::vector<Rational> a(M), b(M);
        for (auto& v : a) v = Rational(num(rng), den(rng));
        for (auto& v : b) v = Rational(num(rng), den(rng));
        std::vector<Rational> full(2 * M, Rational(0));
        for (std::size_t i = 0; i < M; ++i)
            for (std::size_t j = 0; j < M; ++j) full[i + j] += a[i] * b[j];
        P prod = P(M, a) * P(M, b);
        for (std::size_t k = 0; k < M; ++k)
            require(prod[k] == full[k], "truncated polynomial product");
    }
}

void criterion_cli_paper_all() {
    std::string cmd = std::string(RTK_CLI_PATH) + " paper all --format json > /dev/null";
    int rc = std::system(cmd.c_str());
    require(rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0,
            "paper all exited " + std::to_string(WIFEXITED(rc) ? WEXITSTATUS(rc) : -1));
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* summary;
        double limit_seconds;
        std::function<void()> run;
    };
    std::vector<Criterion> criteria{
        {1, "robbins(0..12) matches the bundled A005130 terms", 0.1, criterion_robbins},
        {2, "principal minors of the 13x13 binomial-shift matrix", 1.0,
         criterion_binomial_minor_matrix},
        {3, "Hankel columns of all four revert-transform tables", 5.0, criterion_table_rows},
        {4, "scaled Hankel table of the centered polygon family", 30.0,
         criterion_centered_polygon_table},
        {5, "continued fraction extraction, round trip, Heilermann", 30.0, criterion_jfractions},
        {6, "Gessel-Xin minors equal revert-transform Hankels", 30.0, criterion_gessel_xin},
        {7, "Riordan inverse, vertical half, symmetrization, production", 30.0,
         criterion_riordan_suite},
        {8, "conjecture probes at depth report CONJECTURE_HOLDS_TO_DEPTH", 30.0,
         criterion_conjectures},
        {9, "property suites (involution, invariance, group laws, rings)", 60.0,
         criterion_property_suites},
        {10, "rtkcli paper all --format json exits 0 offline", 60.0, criterion_cli_paper_all},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.run();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (verdict == "PASS" && secs > c.limit_seconds) {
            verdict = "FAIL";
            detail = "exceeded " + std::to_string(c.limit_seconds) + "s budget";
            ++failures;
        }
        std::printf("criterion %2d: %s (%.3fs) %s%s%s\n", c.number, verdict.c_str(), secs,
                    c.summary, detail.empty() ? "" : " -- ", detail.c_str());
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
