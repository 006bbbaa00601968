#ifndef RTK_CONTFRAC_HPP
#define RTK_CONTFRAC_HPP

#include <optional>
#include <string>
#include <vector>

#include "series.hpp"

namespace rtk {

// Jacobi-type continued fraction in the "minus" convention
//
//   g(x) = mu0 / (1 - a0 x - b1 x^2 / (1 - a1 x - b2 x^2 / (1 - ...)))
//
// Sources that display the nested quadratic terms with a plus sign are
// storing the negated b values relative to this convention.
template <typename R>
struct JFraction {
    R mu0;
    std::vector<R> alphas; // a0, a1, ...
    std::vector<R> betas;  // b1, b2, ... (betas[k] belongs to level k+1)
    bool terminated = false; // remainder became identically zero

    std::string to_string() const {
        auto join = [](const std::vector<R>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ",";
                s += v[i].to_string();
            }
            return s;
        };
        return mu0.to_string() + " | " + join(alphas) + " | " + join(betas);
    }
};

// Stieltjes/gamma-type fraction mu0 / (1 + g1 x / (1 + g2 x / (1 + ...))).
template <typename R>
struct GammaFraction {
    R mu0;
    std::vector<R> gammas; // g1, g2, ...
    bool terminated = false;

    std::string to_string() const {
        std::string s = mu0.to_string() + " | ";
        for (std::size_t i = 0; i < gammas.size(); ++i) {
            if (i) s += ",";
            s += gammas[i].to_string();
        }
        return s;
    }
};

// Peels coefficients off level by level: if r(x) is the current tail with
// r(0) = c a unit, then  1/(r/c) = 1 - a x - b x^2 * (next tail),  so with
// v = 1/(r/c):  a = -[x] v  and  next = (1 - a x - v) / (b x^2).
// Each level costs two orders of known coefficients.  A zero x^2 coefficient
// with a nonzero remainder is a genuine breakdown; an identically zero
// remainder terminates the fraction.
template <typename R>
JFraction<R> jfraction_extract(const Series<R>& g) {
    JFraction<R> jf;
    if (!g[0].is_unit()) throw cf_breakdown(0);
    jf.mu0 = g[0];
    Series<R> r = g;
    int level = 0;
    while (r.order() >= 3) {
        // work with v = 1 / (r / r0), which equals 1 - a x - b x^2 * (next tail)
        Series<R> v = series_inv(r[0].inv() * r);
        R a = -v[1];
        jf.alphas.push_back(a);
        // w = 1 - a x - v; should start at x^2
        std::vector<R> lin(v.order(), v.sample());
        lin[0] = v.one();
        lin[1] = -a;
        Series<R> w = Series<R>(std::move(lin)) - v;
        if (!w[0].is_zero() || !w[1].is_zero()) throw cf_breakdown(level + 1);
        bool allzero = true;
        for (std::size_t k = 2; k < w.order(); ++k)
            if (!w[k].is_zero()) { allzero = false; break; }
        if (allzero) {
            jf.terminated = true;
            return jf;
        }
        R b = w[2];
        if (b.is_zero()) throw cf_breakdown(level + 1);
        jf.betas.push_back(b);
        // next tail = w / (b x^2)
        std::vector<R> nt;
        nt.reserve(w.order() - 2);
        R binv = b.inv();
        for (std::size_t k = 2; k < w.order(); ++k) nt.push_back(w[k] * binv);
        r = Series<R>(std::move(nt));
        ++level;
    }
    return jf;
}

// Rebuilds the series from the fraction, bottom up, to the requested order.
// With T_k = 1/(1 - a_k x - b_{k+1} x^2 T_{k+1}) and T_L = 1 (L = number of
// alphas; missing betas are treated as zero), g = mu0 * T_0.
template <typename R>
Series<R> jfraction_to_series(const JFraction<R>& jf, std::size_t order) {
    R zero = ring_zero_like(jf.mu0);
    R one = ring_one_like(jf.mu0);
    Series<R> tail = Series<R>::constant(one, order);
    for (std::size_t k = jf.alphas.size(); k-- > 0;) {
        std::vector<R> den(order, zero);
        den[0] = one;
        if (order > 1) den[1] = -jf.alphas[k];
        if (k < jf.betas.size())
            for (std::size_t m = 2; m < order; ++m) den[m] -= jf.betas[k] * tail[m - 2];
        tail = series_inv(Series<R>(std::move(den)));
    }
    return jf.mu0 * tail;
}

// Gamma fraction extraction: with v = r / r0,  v = 1 / (1 + g x * tail),
// so 1/v - 1 = g x * tail; tail has constant term 1 by construction.
template <typename R>
GammaFraction<R> gamma_extract(const Series<R>& g) {
    GammaFraction<R> gf;
    if (!g[0].is_unit()) throw cf_breakdown(0);
    gf.mu0 = g[0];
    Series<R> r = g[0].inv() * g;
    int level = 0;
    while (r.order() >= 2) {
        Series<R> w = series_inv(r);
        std::vector<R> c(w.coeffs());
        c[0] -= w.one();
        Series<R> num(std::move(c)); // 1/r - 1, starts at x^1
        if (!num[0].is_zero()) throw cf_breakdown(level + 1);
        bool allzero = true;
        for (std::size_t k = 1; k < num.order(); ++k)
            if (!num[k].is_zero()) { allzero = false; break; }
        if (allzero) {
            gf.terminated = true;
            return gf;
        }
        R gk = num[1];
        if (gk.is_zero()) throw cf_breakdown(level + 1);
        gf.gammas.push_back(gk);
        std::vector<R> nt;
        nt.reserve(num.order() - 1);
        R ginv = gk.inv();
        for (std::size_t k = 1; k < num.order(); ++k) nt.push_back(num[k] * ginv);
        r = Series<R>(std::move(nt));
        ++level;
    }
    return gf;
}

template <typename R>
Series<R> gamma_to_series(const GammaFraction<R>& gf, std::size_t order) {
    R zero = ring_zero_like(gf.mu0);
    R one = ring_one_like(gf.mu0);
    Series<R> tail = Series<R>::constant(one, order);
    for (std::size_t lev = gf.gammas.size(); lev-- > 0;) {
        std::vector<R> den(order, zero);
        den[0] = one;
        for (std::size_t k = 1; k < order; ++k) den[k] = gf.gammas[lev] * tail[k - 1];
        tail = series_inv(Series<R>(std::move(den)));
    }
    return Series<R>::constant(gf.mu0, order) * tail;
}

// Heilermann: the Hankel determinant h_n of the sequence expanded by the
// fraction is  mu0^{n+1} * prod_{k=1..n} b_k^{n+1-k}.
template <typename R>
std::vector<R> heilermann_hankel(const JFraction<R>& jf, std::size_t count) {
    std::vector<R> h;
    h.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n > jf.betas.size() && !jf.terminated) throw insufficient_terms();
        R acc = ring_one_like(jf.mu0);
        for (std::size_t j = 0; j < n + 1; ++j) acc = acc * jf.mu0;
        for (std::size_t k = 1; k <= n; ++k) {
            R b = k <= jf.betas.size() ? jf.betas[k - 1] : ring_zero_like(jf.mu0);
            for (std::size_t j = 0; j < n + 1 - k; ++j) acc = acc * b;
        }
        h.push_back(acc);
    }
    return h;
}

// Gamma-fraction analogue: pairs combine, h_n = mu0^{n+1} *
// prod_{k=1..n} (g_{2k-1} g_{2k})^{n+1-k}.
template <typename R>
std::vector<R> heilermann_hankel(const GammaFraction<R>& gf, std::size_t count) {
    std::vector<R> h;
    h.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (2 * n > gf.gammas.size() && !gf.terminated) throw insufficient_terms();
        R acc = ring_one_like(gf.mu0);
        for (std::size_t j = 0; j < n + 1; ++j) acc = acc * gf.mu0;
        for (std::size_t k = 1; k <= n; ++k) {
            R p = ring_zero_like(gf.mu0);
            if (2 * k <= gf.gammas.size()) p = gf.gammas[2 * k - 2] * gf.gammas[2 * k - 1];
            for (std::size_t j = 0; j < n + 1 - k; ++j) acc = acc * p;
        }
        h.push_back(acc);
    }
    return h;
}

} // namespace rtk

#endif
