#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace enr {

using Integer = mpz_class;

struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact rational number in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& n, const Integer& d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    /// Accepts "n", "-n", "n/d".
    static Rational parse(const std::string& s);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inv() const;
    Rational abs() const { return Rational(::abs(v_)); }
    Integer floor() const;
    Integer ceil() const;
    double to_double() const { return v_.get_d(); }
    std::string str() const;

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(long n) const { return Rational(n); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Extended gcd: returns g and sets s,t with s*a + t*b = g >= 0.
Integer xgcd(const Integer& a, const Integer& b, Integer& s, Integer& t);
/// Exact integer k-th root if it exists.
bool exact_root(const Integer& n, unsigned k, Integer& root);
/// Floor of a/b for b > 0 (also for negative a).
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);
std::int64_t to_i64(const Integer& n);

}  // namespace enr

template <>
struct std::hash<enr::Rational> {
    size_t operator()(const enr::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
