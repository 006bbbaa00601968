#ifndef RTK_RIORDAN_HPP
#define RTK_RIORDAN_HPP

#include <string>
#include <vector>

#include "matrix.hpp"
#include "series.hpp"

namespace rtk {

enum class RiordanKind { ordinary, exponential };

// A Riordan array (g, f): g with unit constant term, f with f(0) = 0 and a
// unit linear coefficient.  The exponential kind applies factorial weights
// n!/k! when the matrix is materialized; the series machinery is shared.
template <typename R>
struct RiordanSpec {
    Series<R> g;
    Series<R> f;
    RiordanKind kind = RiordanKind::ordinary;

    RiordanSpec(Series<R> g_, Series<R> f_, RiordanKind k = RiordanKind::ordinary)
        : g(std::move(g_)), f(std::move(f_)), kind(k) {
        if (!g[0].is_unit()) throw non_unit_constant_term();
        if (f.order() < 2 || !f[0].is_zero() || !f[1].is_unit()) throw bad_low_order();
    }

    std::size_t order() const { return common_order(g, f); }
};

template <typename R>
RiordanSpec<R> riordan_identity(std::size_t order, RiordanKind kind = RiordanKind::ordinary) {
    std::vector<R> g(order, R(0)), f(order, R(0));
    g[0] = R(1);
    f[1] = R(1);
    return RiordanSpec<R>(Series<R>(std::move(g)), Series<R>(std::move(f)), kind);
}

// t_{n,k} = [x^n] g f^k  (times n!/k! for the exponential kind); rows x rows
// lower-triangular matrix.
template <typename R>
ExactMatrix<R> riordan_matrix(const RiordanSpec<R>& spec, std::size_t rows) {
    if (spec.order() < rows) throw insufficient_order("series order too small for requested rows");
    ExactMatrix<R> m(rows, rows);
    Series<R> col = spec.g.take(rows);
    Series<R> f = spec.f.take(rows);
    for (std::size_t k = 0; k < rows; ++k) {
        for (std::size_t n = k; n < rows; ++n) {
            R t = col[n];
            if (spec.kind == RiordanKind::exponential) {
                mpz_class w;
                mpz_fac_ui(w.get_mpz_t(), static_cast<unsigned long>(n));
                mpz_class kf;
                mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned long>(k));
                w /= kf; // n!/k! is always an integer for n >= k
                t = t * make_ring_integer(w, t);
            }
            m(n, k) = t;
        }
        if (k + 1 < rows) col = col * f;
    }
    return m;
}

template <typename R>
RiordanSpec<R> riordan_mul(const RiordanSpec<R>& a, const RiordanSpec<R>& b) {
    if (a.kind != b.kind) throw kind_mismatch();
    std::size_t n = a.order() < b.order() ? a.order() : b.order();
    Series<R> f = a.f.take(n);
    return RiordanSpec<R>(a.g.take(n) * compose(b.g.take(n), f), compose(b.f.take(n), f), a.kind);
}

template <typename R>
RiordanSpec<R> riordan_inverse(const RiordanSpec<R>& a) {
    Series<R> fbar = reversion(a.f.take(a.order()));
    return RiordanSpec<R>(series_inv(compose(a.g.take(a.order()), fbar)), fbar, a.kind);
}

// Vertical half: V = (x phi'(x) g(phi(x)) / phi(x), phi) with phi the
// compositional inverse of x^2/f.  Entries satisfy V_{n,k} = t_{2n-k,n}.
// Costs one order (the derivative).
template <typename R>
RiordanSpec<R> vertical_half(const RiordanSpec<R>& a) {
    std::size_t n = a.order();
    Series<R> f = a.f.take(n);
    // x^2/f = x / (f/x)
    std::vector<R> fx(f.coeffs().begin() + 1, f.coeffs().end());
    Series<R> finv = series_inv(Series<R>(std::move(fx))); // order n-1
    std::vector<R> q(n, f.sample());
    for (std::size_t k = 1; k < n; ++k) q[k] = finv[k - 1];
    Series<R> phi = reversion(Series<R>(std::move(q)));
    // x phi'/phi = phi' / (phi/x)
    Series<R> dphi = derivative(phi); // order n-1
    std::vector<R> px(phi.coeffs().begin() + 1, phi.coeffs().end());
    Series<R> ratio = dphi / Series<R>(std::move(px));
    Series<R> newg = ratio * compose(a.g.take(n), phi).take(n - 1);
    return RiordanSpec<R>(newg, phi.take(n - 1), a.kind);
}

namespace detail {
template <typename R>
void require_lower_triangular(const ExactMatrix<R>& t) {
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = i + 1; j < t.cols(); ++j)
            if (!t(i, j).is_zero()) throw not_lower_triangular();
}
} // namespace detail

// Row reversal: each row reversed within its length-(n+1) prefix.
template <typename R>
ExactMatrix<R> triangle_reversal(const ExactMatrix<R>& t) {
    detail::require_lower_triangular(t);
    ExactMatrix<R> m(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j <= i && j < t.cols(); ++j) m(i, j) = t(i, i - j);
    return m;
}

// Symmetrization M_{n,k} = T_{n,n-k} for k <= n, T_{k,k-n} otherwise.
template <typename R>
ExactMatrix<R> symmetrize(const ExactMatrix<R>& t) {
    detail::require_lower_triangular(t);
    std::size_t n = t.rows() < t.cols() ? t.rows() : t.cols();
    ExactMatrix<R> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = j <= i ? t(i, i - j) : t(j, j - i);
    return m;
}

// Amalgamation A ⨿ B: A's reversed rows below the diagonal, B's above;
// A ⨿ A recovers the symmetrization.
template <typename R>
ExactMatrix<R> amalgamate(const ExactMatrix<R>& a, const ExactMatrix<R>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw dimension_mismatch();
    detail::require_lower_triangular(a);
    detail::require_lower_triangular(b);
    std::size_t n = a.rows() < a.cols() ? a.rows() : a.cols();
    ExactMatrix<R> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = j <= i ? a(i, i - j) : b(j, j - i);
    return m;
}

// Inversion of the Bell matrix (g, xg): the closed form is the exponential
// array [h_e, -x] with h the revert transform of g, i.e.
// t_{n,k} = (-1)^k C(n,k) h_{n-k}.  The generic route computes
// Rev_x( x g / (1 - y x g) ) over R[y]/(y^rows) and reads off
// t_{n,k} = [x^{n+1} y^k]; both are evaluated and cross-checked.
template <typename R>
ExactMatrix<R> bell_inversion(const Series<R>& g, std::size_t rows) {
    if (g.order() < rows) throw insufficient_order("series order too small for requested rows");
    Series<R> h = revert_transform(g.take(rows));
    ExactMatrix<R> m(rows, rows);
    for (std::size_t n = 0; n < rows; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            R v = make_ring_integer(c, h[0]) * h[n - k];
            m(n, k) = (k % 2) ? -v : v;
        }

    // independent computation from the definition
    using P = TruncatedPolynomial<R>;
    std::vector<P> num(rows + 1, P(rows)), den(rows + 1, P(rows));
    den[0] = P::constant(rows, R(1));
    for (std::size_t i = 0; i < rows; ++i) {
        num[i + 1] = P::constant(rows, g[i]);
        // -y * x * g: coefficient of x^{i+1} is -g_i * y
        P t(rows);
        if (rows > 1) t[1] = -g[i];
        den[i + 1] = t;
    }
    Series<P> rev = reversion(Series<P>(num) / Series<P>(den));
    for (std::size_t n = 0; n < rows; ++n)
        for (std::size_t k = 0; k < rows; ++k) {
            R want = k <= n ? m(n, k) : R(0);
            if (rev[n + 1][k] != want) throw rtk_error("bell inversion routes disagree");
        }
    return m;
}

} // namespace rtk

#endif
