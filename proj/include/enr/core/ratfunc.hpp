#pragma once

#include "enr/core/upoly.hpp"

#include <string>
#include <utility>

namespace enr {

/// Element of F(t) in canonical form: denominator monic, gcd(num, den) = 1.
/// Itself a field element type, so towers like UniPoly<RatFunc<F>> work.
template <class F>
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(const F& ctx) : num_(ctx), den_(UniPoly<F>::constant(ctx.one())) {}
    RatFunc(UniPoly<F> num) : num_(std::move(num)), den_(UniPoly<F>::constant(num_.zero_elem().one())) {}
    RatFunc(UniPoly<F> num, UniPoly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc constant(const F& c) { return RatFunc(UniPoly<F>::constant(c)); }
    static RatFunc variable(const F& ctx) { return RatFunc(UniPoly<F>::variable(ctx)); }

    const UniPoly<F>& num() const { return num_; }
    const UniPoly<F>& den() const { return den_; }
    const F& base_zero() const { return num_.zero_elem(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_one() const { return is_polynomial() && num_ == den_; }

    RatFunc zero() const { return RatFunc(base_zero()); }
    RatFunc one() const { return constant(base_zero().one()); }
    RatFunc from_int(long n) const { return constant(base_zero().from_int(n)); }

    RatFunc inv() const {
        if (is_zero()) throw ArithmeticError("inverse of zero rational function");
        return RatFunc(den_, num_);
    }
    RatFunc pow(long e) const {
        if (e < 0) return inv().pow(-e);
        RatFunc r = one(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// Value at a point where the denominator does not vanish.
    F operator()(const F& x) const {
        F d = den_(x);
        if (d.is_zero()) throw ArithmeticError("pole of rational function");
        return num_(x) / d;
    }

    /// Degree-valuation at infinity: deg den - deg num.
    int valuation_at_infinity() const { return den_.degree() - num_.degree(); }

    /// Substitute t -> g for a rational function g.
    RatFunc compose(const RatFunc& g) const {
        RatFunc n = horner(num_, g), d = horner(den_, g);
        return n / d;
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, true); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return a.zero();
        // cross-cancel before multiplying
        UniPoly<F> g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
        return RatFunc(a.num_.exact_div(g1) * b.num_.exact_div(g2), a.den_.exact_div(g2) * b.den_.exact_div(g1),
                       true);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string str(const std::string& var = "t") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    RatFunc(UniPoly<F> n, UniPoly<F> d, bool /*already reduced up to scaling*/) : num_(std::move(n)), den_(std::move(d)) {
        fix_leading();
    }

    static RatFunc horner(const UniPoly<F>& p, const RatFunc& g) {
        RatFunc r = g.zero();
        for (int i = p.degree(); i >= 0; --i) r = r * g + constant(p.coeff(i));
        return r;
    }

    void fix_leading() {
        if (num_.is_zero()) {
            den_ = UniPoly<F>::constant(num_.zero_elem().one());
            return;
        }
        F l = den_.leading();
        if (!(l == l.one())) {
            F li = l.inv();
            num_ = num_.scaled(li);
            den_ = den_.scaled(li);
        }
    }

    void normalize() {
        if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly<F>::constant(num_.zero_elem().one());
            return;
        }
        if (den_.degree() > 0) {
            UniPoly<F> g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_.exact_div(g);
                den_ = den_.exact_div(g);
            }
        }
        fix_leading();
    }

    UniPoly<F> num_;
    UniPoly<F> den_;
};

}  // namespace enr
