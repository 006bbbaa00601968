#ifndef RTK_RATIONAL_HPP
#define RTK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace rtk {

// Arbitrary-precision rational number, always kept in canonical form
// (positive denominator, gcd(|num|, den) = 1).  Thin wrapper over GMP's
// mpq_class; exists so the rest of the library has a uniform ring interface
// (is_zero / is_unit / inv / to_string) shared with the other scalar types.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw division_by_zero();
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p", "p/q", optional leading sign.
    static Rational parse(const std::string& text);

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_unit() const { return !is_zero(); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational inv() const {
        if (is_zero()) throw division_by_zero();
        return Rational(mpq_class(1 / v_));
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational abs() const { return sgn(v_) < 0 ? -*this : *this; }

    Rational pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Rational r(1), b(*this);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // "p/q", the q omitted when it is 1.
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    mpq_class v_;
};

inline Rational Rational::parse(const std::string& text) {
    try {
        // mpq_class rejects a leading '+'
        mpq_class q(!text.empty() && text[0] == '+' ? text.substr(1) : text);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational '" + text + "'");
    }
}

inline Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

} // namespace rtk

#endif
