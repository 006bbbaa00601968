#ifndef RTK_SERIES_HPP
#define RTK_SERIES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gaussian.hpp"
#include "rational.hpp"
#include "truncated_poly.hpp"

namespace rtk {

// Truncated formal power series: the first order() coefficients are known
// exactly, nothing beyond them is ever fabricated.  Operations return the
// order they can actually guarantee (the min of their inputs' orders unless
// stated otherwise); asking for a coefficient past the known order throws
// insufficient_order rather than silently producing zeros.
template <typename R>
class Series {
  public:
    Series() = default;
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw insufficient_order("series needs at least one coefficient");
    }

    static Series constant(R value, std::size_t order) {
        std::vector<R> c(order, ring_zero_like(value));
        c[0] = std::move(value);
        return Series(std::move(c));
    }

    std::size_t order() const { return c_.size(); }
    const std::vector<R>& coeffs() const { return c_; }

    const R& operator[](std::size_t n) const {
        if (n >= c_.size()) throw insufficient_order("coefficient index beyond known order");
        return c_[n];
    }
    R& operator[](std::size_t n) {
        if (n >= c_.size()) throw insufficient_order("coefficient index beyond known order");
        return c_[n];
    }

    R sample() const { return ring_zero_like(c_[0]); }
    R zero() const { return ring_zero_like(c_[0]); }
    R one() const { return ring_one_like(c_[0]); }

    Series take(std::size_t n) const {
        if (n > c_.size()) throw insufficient_order("cannot extend a series' known order");
        if (n == 0) throw insufficient_order("series needs at least one coefficient");
        return Series(std::vector<R>(c_.begin(), c_.begin() + n));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    std::string to_string() const {
        std::string s;
        for (std::size_t n = 0; n < c_.size(); ++n) {
            if (n) s += ",";
            s += c_[n].to_string();
        }
        return s;
    }

  private:
    std::vector<R> c_;
};

template <typename R>
std::size_t common_order(const Series<R>& a, const Series<R>& b) {
    return a.order() < b.order() ? a.order() : b.order();
}

template <typename R>
Series<R> operator-(const Series<R>& a) {
    std::vector<R> c(a.coeffs());
    for (auto& x : c) x = -x;
    return Series<R>(std::move(c));
}

template <typename R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) {
    std::size_t n = common_order(a, b);
    std::vector<R> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(a[i] + b[i]);
    return Series<R>(std::move(c));
}

template <typename R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) {
    return a + (-b);
}

template <typename R>
Series<R> operator*(const R& c, const Series<R>& a) {
    std::vector<R> out(a.coeffs());
    for (auto& x : out) x = c * x;
    return Series<R>(std::move(out));
}

template <typename R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) {
    std::size_t n = common_order(a, b);
    std::vector<R> c(n, a.sample());
    for (std::size_t i = 0; i < a.order() && i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n && j < b.order(); ++j) c[i + j] += a[i] * b[j];
    }
    return Series<R>(std::move(c));
}

// 1/a to a's order; a must have a unit constant term.
template <typename R>
Series<R> series_inv(const Series<R>& a) {
    if (!a[0].is_unit()) throw non_unit_constant_term();
    std::size_t n = a.order();
    std::vector<R> r(n, a.sample());
    R c0inv = a[0].inv();
    r[0] = c0inv;
    for (std::size_t m = 1; m < n; ++m) {
        R s = a.sample();
        for (std::size_t k = 1; k <= m; ++k) s += a[k] * r[m - k];
        r[m] = -(s * c0inv);
    }
    return Series<R>(std::move(r));
}

template <typename R>
Series<R> operator/(const Series<R>& a, const Series<R>& b) {
    std::size_t n = common_order(a, b);
    return a.take(n) * series_inv(b.take(n));
}

// a^e for integer e (negative exponents via the inverse).
template <typename R>
Series<R> series_pow(const Series<R>& a, long e) {
    if (e < 0) return series_pow(series_inv(a), -e);
    Series<R> r = Series<R>::constant(a.one(), a.order());
    Series<R> b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// outer(inner(x)); inner must vanish at 0 (use compose_scale for x -> c*x).
template <typename R>
Series<R> compose(const Series<R>& outer, const Series<R>& inner) {
    if (!inner[0].is_zero()) throw nonzero_inner_constant();
    std::size_t n = common_order(outer, inner);
    // Horner evaluation of outer at inner.
    Series<R> acc = Series<R>::constant(outer.sample(), n);
    Series<R> in = inner.take(n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * in;
        std::vector<R> c(acc.coeffs());
        c[0] += (k < outer.order() ? outer[k] : outer.sample());
        acc = Series<R>(std::move(c));
    }
    return acc;
}

// Substitution x -> c*x for a scalar c (allowed even for complex c).
template <typename R>
Series<R> compose_scale(const Series<R>& g, const R& c) {
    std::vector<R> out;
    out.reserve(g.order());
    R p = ring_one_like(c);
    for (std::size_t n = 0; n < g.order(); ++n) {
        out.push_back(g[n] * p);
        p = p * c;
    }
    return Series<R>(std::move(out));
}

// d/dx; the derivative of an order-n series is known to order n-1.
template <typename R>
Series<R> derivative(const Series<R>& a) {
    if (a.order() < 2) throw insufficient_order("cannot differentiate below order 2");
    std::vector<R> c;
    c.reserve(a.order() - 1);
    for (std::size_t n = 1; n < a.order(); ++n) c.push_back(a[n] * ring_int_like(long(n), a[n]));
    return Series<R>(std::move(c));
}

// Compositional inverse: the u with f(u) = x, u(0) = 0.  Solves the
// triangular system coefficient by coefficient; consumes no order.
template <typename R>
Series<R> reversion(const Series<R>& f) {
    if (f.order() < 2 || !f[0].is_zero() || !f[1].is_unit()) throw bad_low_order();
    std::size_t n = f.order();
    R f1inv = f[1].inv();
    std::vector<R> u(n, f.sample());
    u[1] = f1inv;
    for (std::size_t m = 2; m < n; ++m) {
        // [x^m] f(u_partial) with u[m] still zero; the full equation is
        // f1*u[m] + c = 0 where c is the coefficient computed here.
        Series<R> up(std::vector<R>(u.begin(), u.begin() + m + 1));
        Series<R> acc = Series<R>::constant(f.sample(), m + 1);
        Series<R> p = Series<R>::constant(f.one(), m + 1);
        for (std::size_t k = 0; k <= m && k < f.order(); ++k) {
            if (k > 0) p = p * up;
            if (!f[k].is_zero()) acc = acc + f[k] * p;
        }
        u[m] = -(acc[m] * f1inv);
    }
    return Series<R>(std::move(u));
}

// The revert transform (1/x) Rev(x g(x)); involutory, needs g(0) a unit.
template <typename R>
Series<R> revert_transform(const Series<R>& g) {
    if (!g[0].is_unit()) throw non_unit_constant_term();
    std::vector<R> f(g.order() + 1, g.sample());
    for (std::size_t n = 0; n < g.order(); ++n) f[n + 1] = g[n];
    Series<R> u = reversion(Series<R>(std::move(f)));
    std::vector<R> out(u.coeffs().begin() + 1, u.coeffs().end());
    return Series<R>(std::move(out));
}

// The log revert transform b_n = [x^n] g(x)^{-n}; each b_n is computed from
// an independent power so no order is lost along the way.
template <typename R>
Series<R> log_revert_transform(const Series<R>& g) {
    if (!g[0].is_unit()) throw non_unit_constant_term();
    std::vector<R> out;
    out.reserve(g.order());
    out.push_back(g.one());
    for (std::size_t n = 1; n < g.order(); ++n) {
        Series<R> p = series_pow(series_inv(g.take(n + 1)), long(n));
        out.push_back(p[n]);
    }
    return Series<R>(std::move(out));
}

// Lift an arbitrary-precision integer into the ring (shape taken from sample).
inline Rational make_ring_integer(const mpz_class& z, const Rational&) { return Rational(z); }
inline GaussianRational make_ring_integer(const mpz_class& z, const GaussianRational&) {
    return GaussianRational(Rational(z));
}
template <typename R>
TruncatedPolynomial<R> make_ring_integer(const mpz_class& z, const TruncatedPolynomial<R>& sample) {
    return TruncatedPolynomial<R>::constant(sample.order(), make_ring_integer(z, R(0)));
}

// r-th binomial transform: b_n = sum_k C(n,k) r^{n-k} a_k, generating
// function (1/(1-rx)) g(x/(1-rx)).
template <typename R>
Series<R> binomial_transform(const Series<R>& g, const R& r) {
    std::vector<R> out;
    out.reserve(g.order());
    for (std::size_t n = 0; n < g.order(); ++n) {
        R s = g.sample();
        R rp = ring_one_like(r); // r^{n-k} as k descends
        for (std::size_t k = n + 1; k-- > 0;) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            s += make_ring_integer(b, r) * rp * g[k];
            rp = rp * r;
        }
        out.push_back(s);
    }
    return Series<R>(std::move(out));
}

// INVERT(r): g / (1 - r x g).
template <typename R>
Series<R> invert_transform(const Series<R>& g, const R& r) {
    std::size_t n = g.order();
    std::vector<R> den(n, g.sample());
    den[0] = g.one();
    for (std::size_t k = 1; k < n; ++k) den[k] = -(r * g[k - 1]);
    return g / Series<R>(std::move(den));
}

// a_n -> (-1)^n a_n, i.e. g(x) -> g(-x).
template <typename R>
Series<R> alternate(const Series<R>& g) {
    std::vector<R> c(g.coeffs());
    for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
    return Series<R>(std::move(c));
}

// Square root with result(0) = 1; direct coefficient recurrence
// s_m = (a_m - sum_{k=1}^{m-1} s_k s_{m-k}) / 2.
template <typename R>
Series<R> series_sqrt(const Series<R>& g) {
    if (!g[0].is_one()) throw constant_term_not_one();
    std::size_t n = g.order();
    std::vector<R> s(n, g.sample());
    s[0] = g.one();
    R half = ring_int_like(2, g[0]).inv();
    for (std::size_t m = 1; m < n; ++m) {
        R acc = g[m];
        for (std::size_t k = 1; k < m; ++k) acc -= s[k] * s[m - k];
        s[m] = acc * half;
    }
    return Series<R>(std::move(s));
}

// --- rational generating functions ------------------------------------------

// num(x)/den(x) with den(0) a unit; expands exactly to any requested order.
template <typename R>
class RationalGF {
  public:
    RationalGF(std::vector<R> num, std::vector<R> den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.empty() || !den_[0].is_unit()) throw non_unit_constant_term();
        if (num_.empty()) num_.push_back(ring_zero_like(den_[0]));
    }

    const std::vector<R>& num() const { return num_; }
    const std::vector<R>& den() const { return den_; }

    Series<R> expand(std::size_t n) const {
        if (n == 0) throw insufficient_order("expansion order must be positive");
        std::vector<R> a;
        a.reserve(n);
        R d0inv = den_[0].inv();
        for (std::size_t i = 0; i < n; ++i) {
            R s = i < num_.size() ? num_[i] : ring_zero_like(den_[0]);
            for (std::size_t k = 1; k < den_.size() && k <= i; ++k) s -= den_[k] * a[i - k];
            a.push_back(s * d0inv);
        }
        return Series<R>(std::move(a));
    }

    std::string to_string() const {
        auto join = [](const std::vector<R>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ",";
                s += v[i].to_string();
            }
            return s;
        };
        return join(num_) + " ; " + join(den_);
    }

  private:
    std::vector<R> num_, den_;
};

// --- parsing ----------------------------------------------------------------

inline Rational scalar_parse(const std::string& text, const Rational&) {
    return Rational::parse(text);
}
inline GaussianRational scalar_parse(const std::string& text, const GaussianRational&) {
    return GaussianRational::parse(text);
}

template <typename R>
std::vector<R> parse_scalar_list(const std::string& text) {
    std::vector<R> out;
    std::string cur;
    auto flush = [&] {
        // trim spaces
        std::size_t b = cur.find_first_not_of(" \t");
        std::size_t e = cur.find_last_not_of(" \t");
        if (b == std::string::npos) throw parse_error("empty scalar in list");
        out.push_back(scalar_parse(cur.substr(b, e - b + 1), R(0)));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else
            cur += ch;
    }
    flush();
    return out;
}

// "num_coeffs ; den_coeffs", ascending degree, e.g. "1,-1 ; 1,-2,-1,1".
template <typename R>
RationalGF<R> parse_gf(const std::string& text) {
    std::size_t semi = text.find(';');
    if (semi == std::string::npos) throw parse_error("expected 'num ; den' in '" + text + "'");
    return RationalGF<R>(parse_scalar_list<R>(text.substr(0, semi)),
                         parse_scalar_list<R>(text.substr(semi + 1)));
}

} // namespace rtk

#endif
