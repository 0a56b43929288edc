#pragma once

#include "enr/core/rational.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace enr {

/// Dense univariate polynomial over a field element type F, ascending
/// coefficients, no trailing zeros. F must provide zero()/one()/is_zero()/inv()
/// and the arithmetic operators; the zero element is kept as context so the
/// zero polynomial still knows its coefficient field.
template <class F>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(F ctx) : zero_(ctx.zero()) {}
    UniPoly(F ctx, std::vector<F> coeffs) : zero_(ctx.zero()), c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const F& c) { return UniPoly(c, {c}); }
    static UniPoly monomial(const F& c, int deg) {
        std::vector<F> v(deg + 1, c.zero());
        v[deg] = c;
        return UniPoly(c, std::move(v));
    }
    /// The polynomial t.
    static UniPoly variable(const F& ctx) { return monomial(ctx.one(), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const F& zero_elem() const { return zero_; }
    F coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : zero_; }
    const std::vector<F>& coeffs() const { return c_; }
    F leading() const { return c_.empty() ? zero_ : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == zero_.one(); }

    UniPoly monic() const {
        if (c_.empty()) return *this;
        F li = c_.back().inv();
        UniPoly r = *this;
        for (auto& x : r.c_) x = x * li;
        return r;
    }

    F operator()(const F& x) const {
        F r = zero_;
        for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
        return r;
    }

    /// Evaluate at an element of an algebra over F (matrix, polynomial, ...),
    /// given the algebra's one.
    template <class R, class Embed>
    R eval_in(const R& x, const R& one, Embed embed) const {
        R r = one * embed(zero_);
        for (int i = degree(); i >= 0; --i) r = r * x + one * embed(c_[i]);
        return r;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly(zero_);
        std::vector<F> d;
        d.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * zero_.from_int(static_cast<long>(i)));
        return UniPoly(zero_, std::move(d));
    }

    /// f(g(t)).
    UniPoly compose(const UniPoly& g) const {
        UniPoly r(zero_);
        for (int i = degree(); i >= 0; --i) r = r * g + constant(c_[i]);
        return r;
    }

    UniPoly scaled(const F& s) const {
        UniPoly r = *this;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    /// f(s*t).
    UniPoly scale_variable(const F& s) const {
        UniPoly r = *this;
        F pw = zero_.one();
        for (auto& x : r.c_) {
            x = x * pw;
            pw = pw * s;
        }
        r.trim();
        return r;
    }

    /// t^d f(1/t); requires d >= degree.
    UniPoly reversed(int d) const {
        std::vector<F> v(d + 1, zero_);
        for (int i = 0; i <= degree(); ++i) v[d - i] = c_[i];
        return UniPoly(zero_, std::move(v));
    }

    UniPoly pow(unsigned e) const {
        UniPoly r = constant(zero_.one()), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// Lowest index with a nonzero coefficient (valuation at t = 0).
    int low_degree() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return UniPoly(a.zero_);
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(a.zero_, std::move(v));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    /// Euclidean division over a field.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
        UniPoly r = *this;
        if (r.degree() < d.degree()) return {UniPoly(zero_), r};
        std::vector<F> q(r.degree() - d.degree() + 1, zero_);
        F li = d.leading().inv();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            F f = r.leading() * li;
            q[k] = f;
            for (int i = 0; i <= d.degree(); ++i) r.c_[i + k] = r.c_[i + k] - f * d.c_[i];
            r.c_.pop_back();
            r.trim();
        }
        return {UniPoly(zero_, std::move(q)), r};
    }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return a.divmod(b).first; }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return a.divmod(b).second; }
    /// Exact quotient; throws if the division leaves a remainder.
    UniPoly exact_div(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
        return q;
    }
    bool divisible_by(const UniPoly& d) const { return (*this % d).is_zero(); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    template <class Fmt>
    std::string str(const std::string& var, Fmt fmt) const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            std::string cs = fmt(c_[i]);
            if (i == 0) os << cs;
            else {
                if (!(c_[i] == zero_.one())) os << "(" << cs << ")*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }
    std::string str(const std::string& var = "t") const {
        return str(var, [](const F& x) { return x.str(); });
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    F zero_{};
    std::vector<F> c_;
};

template <class F>
UniPoly<F> zero_like(const UniPoly<F>& p) { return UniPoly<F>(p.zero_elem()); }

/// Monic gcd over a field.
template <class F>
UniPoly<F> poly_gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        UniPoly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd: returns monic g with s*a + t*b = g.
template <class F>
UniPoly<F> poly_xgcd(const UniPoly<F>& a, const UniPoly<F>& b, UniPoly<F>& s, UniPoly<F>& t) {
    F z = a.zero_elem();
    UniPoly<F> r0 = a, r1 = b;
    UniPoly<F> s0 = UniPoly<F>::constant(z.one()), s1(z);
    UniPoly<F> t0(z), t1 = UniPoly<F>::constant(z.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = s0;
        t = t0;
        return r0;
    }
    F li = r0.leading().inv();
    s = s0.scaled(li);
    t = t0.scaled(li);
    return r0.scaled(li);
}

/// Valuation of f at the irreducible pi (number of times pi divides f).
template <class F>
int poly_valuation(UniPoly<F> f, const UniPoly<F>& pi) {
    if (f.is_zero()) return 1 << 28;
    int v = 0;
    while (true) {
        auto [q, r] = f.divmod(pi);
        if (!r.is_zero()) return v;
        f = std::move(q);
        ++v;
    }
}

}  // namespace enr
