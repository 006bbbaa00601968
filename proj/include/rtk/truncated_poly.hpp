#ifndef RTK_TRUNCATED_POLY_HPP
#define RTK_TRUNCATED_POLY_HPP

#include <string>
#include <vector>

#include "errors.hpp"

namespace rtk {

// Polynomial in an auxiliary variable, truncated at a fixed degree M
// ("order"): arithmetic in R[y]/(y^M).  Used as the coefficient ring for
// bivariate generating function work, where series in x carry truncated
// polynomials in y.
template <typename R>
class TruncatedPolynomial {
  public:
    TruncatedPolynomial() : c_(1) {}
    explicit TruncatedPolynomial(std::size_t order) : c_(order) {
        if (order == 0) throw insufficient_order("truncation order must be positive");
    }
    TruncatedPolynomial(std::size_t order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (order == 0) throw insufficient_order("truncation order must be positive");
        c_.resize(order);
    }

    static TruncatedPolynomial constant(std::size_t order, R value) {
        TruncatedPolynomial p(order);
        p.c_[0] = std::move(value);
        return p;
    }
    static TruncatedPolynomial variable(std::size_t order) {
        TruncatedPolynomial p(order);
        if (order > 1) p.c_[1] = R(1);
        return p;
    }

    std::size_t order() const { return c_.size(); }
    const R& operator[](std::size_t k) const { return c_.at(k); }
    R& operator[](std::size_t k) { return c_.at(k); }
    const std::vector<R>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (!c_[0].is_one()) return false;
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (!c_[k].is_zero()) return false;
        return true;
    }
    bool is_unit() const { return c_[0].is_unit(); }

    TruncatedPolynomial operator-() const {
        TruncatedPolynomial r(order());
        for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
        return r;
    }
    TruncatedPolynomial& operator+=(const TruncatedPolynomial& o) {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    TruncatedPolynomial& operator-=(const TruncatedPolynomial& o) {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    TruncatedPolynomial& operator*=(const TruncatedPolynomial& o) { return *this = *this * o; }

    friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a += b; }
    friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a -= b; }
    friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
        a.check(b);
        TruncatedPolynomial r(a.order());
        for (std::size_t i = 0; i < a.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < a.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend TruncatedPolynomial operator/(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
        return a * b.inv();
    }
    friend bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
        return !(a == b);
    }

    // Multiplicative inverse modulo y^M; the constant term must be a unit.
    TruncatedPolynomial inv() const {
        if (!c_[0].is_unit()) throw non_unit_constant_term();
        TruncatedPolynomial r(order());
        R c0inv = c_[0].inv();
        r.c_[0] = c0inv;
        for (std::size_t m = 1; m < order(); ++m) {
            R s = R(0);
            for (std::size_t k = 1; k <= m; ++k) s += c_[k] * r.c_[m - k];
            r.c_[m] = -(s * c0inv);
        }
        return r;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k) s += ",";
            s += c_[k].to_string();
        }
        return s + "]";
    }

  private:
    void check(const TruncatedPolynomial& o) const {
        if (order() != o.order())
            throw insufficient_order("mixed truncation orders in polynomial arithmetic");
    }

    std::vector<R> c_;
};

// --- ring shape helpers -----------------------------------------------------
//
// Series code needs 0/1 constants "of the same shape" as an existing element;
// for scalar rings that's just R(n), for truncated polynomials the truncation
// order has to be carried over.

template <typename R>
inline R ring_zero_like(const R&) { return R(0); }

template <typename R>
inline R ring_one_like(const R&) { return R(1); }

template <typename R>
inline R ring_int_like(long n, const R&) { return R(n); }

template <typename R>
inline TruncatedPolynomial<R> ring_zero_like(const TruncatedPolynomial<R>& sample) {
    return TruncatedPolynomial<R>(sample.order());
}

template <typename R>
inline TruncatedPolynomial<R> ring_one_like(const TruncatedPolynomial<R>& sample) {
    return TruncatedPolynomial<R>::constant(sample.order(), R(1));
}

template <typename R>
inline TruncatedPolynomial<R> ring_int_like(long n, const TruncatedPolynomial<R>& sample) {
    return TruncatedPolynomial<R>::constant(sample.order(), R(n));
}

} // namespace rtk

#endif
