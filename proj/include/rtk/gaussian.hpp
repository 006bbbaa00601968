#ifndef RTK_GAUSSIAN_HPP
#define RTK_GAUSSIAN_HPP

#include <string>

#include "rational.hpp"

namespace rtk {

// Gaussian rational a + b*i with exact rational components.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_unit() const { return !is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inv() const {
        if (is_zero()) throw division_by_zero();
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = r;
        im_ = m;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inv(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // "a", "bi", "a+bi", "a-bi"; components always written explicitly
    // (e.g. "1/2-1/2i"), so the form round-trips through parse().
    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        std::string im_part = im_.to_string() + "i";
        if (re_.is_zero()) return im_part;
        if (!(im_ < Rational(0))) return re_.to_string() + "+" + im_part;
        return re_.to_string() + im_part; // im's own minus sign separates the parts
    }

    static GaussianRational parse(const std::string& text);

  private:
    Rational re_, im_;
};

inline GaussianRational GaussianRational::parse(const std::string& text) {
    if (text.empty()) throw parse_error("empty gaussian rational");
    if (text.back() != 'i') return GaussianRational(Rational::parse(text));
    std::string body = text.substr(0, text.size() - 1);
    // find the sign splitting re and im (skip position 0 and signs inside "/")
    for (size_t p = body.size(); p-- > 1;) {
        if (body[p] == '+' || body[p] == '-') {
            if (body[p - 1] == '/' ) continue;
            std::string re = body.substr(0, p);
            std::string im = body.substr(p);
            if (im == "+" || im == "-") im += "1";
            return {Rational::parse(re), Rational::parse(im)};
        }
    }
    if (body.empty() || body == "+") return GaussianRational::i();
    if (body == "-") return -GaussianRational::i();
    return {Rational(0), Rational::parse(body)};
}

} // namespace rtk

#endif
