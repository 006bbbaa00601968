#ifndef RTK_MATRIX_HPP
#define RTK_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "series.hpp"

namespace rtk {

// Dense matrix over an exact field.  Everything here goes through plain
// Gaussian elimination with pivot search; no fraction-free tricks needed
// since the entries divide exactly.
template <typename R>
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), d_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<R> data)
        : rows_(rows), cols_(cols), d_(std::move(data)) {
        if (d_.size() != rows * cols) throw dimension_mismatch();
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    R& operator()(std::size_t i, std::size_t j) {
        if (i >= rows_ || j >= cols_) throw index_out_of_range();
        return d_[i * cols_ + j];
    }
    const R& operator()(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw index_out_of_range();
        return d_[i * cols_ + j];
    }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    ExactMatrix leading(std::size_t n) const {
        if (n > rows_ || n > cols_) throw index_out_of_range();
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw dimension_mismatch();
        ExactMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_mismatch();
        ExactMatrix c = a;
        for (std::size_t k = 0; k < c.d_.size(); ++k) c.d_[k] += b.d_[k];
        return c;
    }
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    // Determinant by elimination with row pivoting.  A vanishing pivot
    // column just means the determinant is zero.
    R determinant() const {
        if (rows_ != cols_) throw not_square();
        std::size_t n = rows_;
        if (n == 0) return R(1);
        ExactMatrix a = *this;
        R det(1);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && a(p, c).is_zero()) ++p;
            if (p == n) return R(0);
            if (p != c) {
                for (std::size_t j = c; j < n; ++j) std::swap(a(c, j), a(p, j));
                det = -det;
            }
            det *= a(c, c);
            R inv = a(c, c).inv();
            for (std::size_t r = c + 1; r < n; ++r) {
                if (a(r, c).is_zero()) continue;
                R f = a(r, c) * inv;
                for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
            }
        }
        return det;
    }

    // Determinants of the leading k x k blocks for k = 1..count, each one
    // computed independently (a singular small block does not poison the
    // larger ones).
    std::vector<R> principal_minors(std::size_t count) const {
        if (count > rows_ || count > cols_) throw index_out_of_range();
        std::vector<R> out;
        out.reserve(count);
        for (std::size_t k = 1; k <= count; ++k) out.push_back(leading(k).determinant());
        return out;
    }

    ExactMatrix inverse() const {
        if (rows_ != cols_) throw not_square();
        std::size_t n = rows_;
        ExactMatrix a = *this;
        ExactMatrix b = identity(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && a(p, c).is_zero()) ++p;
            if (p == n) throw division_by_zero();
            if (p != c)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(c, j), a(p, j));
                    std::swap(b(c, j), b(p, j));
                }
            R inv = a(c, c).inv();
            for (std::size_t j = 0; j < n; ++j) {
                a(c, j) *= inv;
                b(c, j) *= inv;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || a(r, c).is_zero()) continue;
                R f = a(r, c);
                for (std::size_t j = 0; j < n; ++j) {
                    a(r, j) -= f * a(c, j);
                    b(r, j) -= f * b(c, j);
                }
            }
        }
        return b;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ",";
                s += (*this)(i, j).to_string();
            }
            s += "\n";
        }
        return s;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<R> d_;
};

// H[i][j] = a_{i+j}, size n x n; needs 2n-1 terms.
template <typename R>
ExactMatrix<R> hankel_matrix(const std::vector<R>& a, std::size_t n) {
    if (a.size() < 2 * n - 1 || n == 0) throw insufficient_terms();
    ExactMatrix<R> h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = a[i + j];
    return h;
}

// Hankel transform h_n = det[a_{i+j}]_{0<=i,j<=n}; returns h_0..h_{d-1}
// where d is the largest depth the terms support.
template <typename R>
std::vector<R> hankel_transform(const std::vector<R>& a) {
    if (a.empty()) throw insufficient_terms();
    std::size_t depth = (a.size() + 1) / 2;
    std::vector<R> out;
    out.reserve(depth);
    for (std::size_t n = 1; n <= depth; ++n) out.push_back(hankel_matrix(a, n).determinant());
    return out;
}

template <typename R>
std::vector<R> hankel_transform(const Series<R>& g) {
    return hankel_transform(g.coeffs());
}

// --- bivariate expansion ------------------------------------------------------
//
// A bivariate rational function N(x,y)/D(x,y) is expanded by treating it as
// a power series in x whose coefficients live in R[y]/(y^cols); a single
// series division does all the work.

template <typename R>
using BivariatePoly = std::vector<std::vector<R>>; // [i][j] = coeff of x^i y^j

template <typename R>
ExactMatrix<R> expand_bivariate(const BivariatePoly<R>& num, const BivariatePoly<R>& den,
                                std::size_t rows, std::size_t cols) {
    using P = TruncatedPolynomial<R>;
    auto lift = [&](const BivariatePoly<R>& poly) {
        std::vector<P> c(rows, P(cols));
        for (std::size_t i = 0; i < poly.size() && i < rows; ++i)
            for (std::size_t j = 0; j < poly[i].size() && j < cols; ++j) c[i][j] = poly[i][j];
        return Series<P>(std::move(c));
    };
    Series<P> q = lift(num) / lift(den);
    ExactMatrix<R> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = q[i][j];
    return m;
}

// Inverse of the Hankel matrix grid in generating function form: the
// expansion of (x - y)/(x G(x) - y G(y)), which equals
// 1 / sum_n G_n (x^n + x^{n-1} y + ... + y^n).  Row 0 of the result is the
// expansion of 1/G(y).
template <typename R>
ExactMatrix<R> hankel_gf_matrix(const Series<R>& g, std::size_t n) {
    if (g.order() < n) throw insufficient_order("need the first n coefficients");
    BivariatePoly<R> den(n, std::vector<R>(n, g.sample()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < g.order()) den[i][j] = g[i + j];
    BivariatePoly<R> num(1, std::vector<R>(1, g.one()));
    return expand_bivariate(num, den, n, n);
}

// Production matrix of a lower-triangular array with unit pivots:
// P = B0^{-1} B1 where B0 is the leading n x n block and B1 the same block
// shifted up one row.
template <typename R>
ExactMatrix<R> production_matrix(const ExactMatrix<R>& m, std::size_t n) {
    if (m.rows() < n + 1 || m.cols() < n) throw index_out_of_range();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!m(i, j).is_zero()) throw not_lower_triangular();
    ExactMatrix<R> b1(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b1(i, j) = m(i + 1, j);
    return m.leading(n).inverse() * b1;
}

// (i,j) entry of A^p for p = 0..count-1.
template <typename R>
std::vector<R> matrix_power_entries(const ExactMatrix<R>& a, std::size_t i, std::size_t j,
                                    std::size_t count) {
    if (a.rows() != a.cols()) throw not_square();
    if (i >= a.rows() || j >= a.cols()) throw index_out_of_range();
    std::vector<R> out;
    out.reserve(count);
    ExactMatrix<R> p = ExactMatrix<R>::identity(a.rows());
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(p(i, j));
        p = p * a;
    }
    return out;
}

// Coefficients (ascending) of the unique polynomial of degree < #nodes
// through the given points.
template <typename R>
std::vector<R> lagrange_interpolate(const std::vector<R>& nodes, const std::vector<R>& values) {
    if (nodes.size() != values.size() || nodes.empty()) throw dimension_mismatch();
    std::size_t n = nodes.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (nodes[i] == nodes[j]) throw duplicate_nodes();
    // Newton's divided differences, then expand to monomial coefficients.
    std::vector<R> dd = values;
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n; i-- > k;)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - k]);
    std::vector<R> coeffs(n, R(0));
    std::vector<R> basis(n, R(0)); // prod (x - nodes[0..k-1]), ascending coeffs
    basis[0] = R(1);
    std::size_t deg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t t = 0; t <= deg; ++t) coeffs[t] += dd[k] * basis[t];
        if (k + 1 < n) {
            // basis *= (x - nodes[k])
            basis[deg + 1] = basis[deg];
            for (std::size_t t = deg + 1; t-- > 0;) {
                R lo = t > 0 ? basis[t - 1] : R(0);
                basis[t] = lo - nodes[k] * basis[t];
            }
            ++deg;
        }
    }
    return coeffs;
}

template <typename R>
R poly_eval(const std::vector<R>& coeffs, const R& x) {
    R v(0);
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
    return v;
}

} // namespace rtk

#endif
