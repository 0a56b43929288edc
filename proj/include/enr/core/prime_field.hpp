#pragma once

#include "enr/core/rational.hpp"

#include <cstdint>
#include <ostream>
#include <string>

namespace enr {

/// Deterministic Miller-Rabin, valid for n < 3.3e14.
bool is_prime(std::uint64_t n);

/// Residue class modulo an odd or even prime p < 2^31. The modulus travels
/// with the value so generic code can build zero()/one() from any element.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t p, std::int64_t v) : p_(p), v_(reduce(v, p)) {}

    static Fp from_rational(std::uint64_t p, const Rational& r);

    std::uint64_t modulus() const { return p_; }
    std::uint64_t value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    Fp zero() const { return Fp(p_, 0); }
    Fp one() const { return Fp(p_, 1); }
    Fp from_int(long n) const { return Fp(p_, n); }

    Fp inv() const;
    Fp pow(std::uint64_t e) const;
    /// Euler criterion; zero counts as a square.
    bool is_square() const;
    std::string str() const { return std::to_string(v_); }

    Fp& operator+=(const Fp& o) { check(o); v_ += o.v_; if (v_ >= p_) v_ -= p_; return *this; }
    Fp& operator-=(const Fp& o) { check(o); v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_; return *this; }
    Fp& operator*=(const Fp& o) { check(o); v_ = v_ * o.v_ % p_; return *this; }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    Fp operator-() const { return Fp(p_, v_ == 0 ? 0 : static_cast<std::int64_t>(p_ - v_)); }
    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
    friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

private:
    static std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }
    void check(const Fp& o) const {
        if (p_ != o.p_) throw ArithmeticError("mixed prime field moduli");
    }

    std::uint64_t p_ = 2;
    std::uint64_t v_ = 0;
};

inline Fp zero_like(const Fp& a) { return a.zero(); }
inline Fp one_like(const Fp& a) { return a.one(); }

}  // namespace enr
