#pragma once

#include "enr/core/mpoly.hpp"
#include "enr/core/ratfunc.hpp"

#include <memory>
#include <stdexcept>

namespace enr {

struct DivisionByZeroElement : std::domain_error {
    using std::domain_error::domain_error;
};

/// Element (a + b y) / d of the function field of y^2 = R(x, t) over F(t),
/// with a, b, d in F[x, t] (variable 0 is x, variable 1 is t). Fractions are
/// not reduced; equality is decided by cross-multiplication, which is exact
/// because {1, y} is a basis over F(x, t).
template <class F>
class FunctionFieldElem {
public:
    using P = MultiPoly<F>;

    FunctionFieldElem() = default;
    FunctionFieldElem(std::shared_ptr<const P> rhs, P a, P b, P d)
        : rhs_(std::move(rhs)), a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_.is_zero()) throw DivisionByZeroElement("zero denominator");
        tidy();
    }

    const P& a() const { return a_; }
    const P& b() const { return b_; }
    const P& d() const { return d_; }
    const std::shared_ptr<const P>& rhs() const { return rhs_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    FunctionFieldElem constant(const F& c) const { return make(P::constant(c, 2), zero_poly(), one_poly()); }
    FunctionFieldElem zero() const { return constant(a_.zero_elem()); }
    FunctionFieldElem one() const { return constant(a_.zero_elem().one()); }

    FunctionFieldElem operator-() const { return make(-a_, -b_, d_); }
    friend FunctionFieldElem operator+(const FunctionFieldElem& u, const FunctionFieldElem& v) {
        if (u.d_ == v.d_) return u.make(u.a_ + v.a_, u.b_ + v.b_, u.d_);
        if (u.d_.terms().size() == 1 && v.d_.terms().size() == 1) {
            // monomial denominators: use their lcm
            const auto& [eu, cu] = *u.d_.terms().begin();
            const auto& [ev, cv] = *v.d_.terms().begin();
            typename P::Exponent l(2), fu(2), fv(2);
            for (int i = 0; i < 2; ++i) {
                l[i] = std::max(eu[i], ev[i]);
                fu[i] = l[i] - eu[i];
                fv[i] = l[i] - ev[i];
            }
            P mu = P::monomial(cu.inv(), fu), mv = P::monomial(cv.inv(), fv);
            return u.make(u.a_ * mu + v.a_ * mv, u.b_ * mu + v.b_ * mv, P::monomial(u.a_.zero_elem().one(), l));
        }
        return u.make(u.a_ * v.d_ + v.a_ * u.d_, u.b_ * v.d_ + v.b_ * u.d_, u.d_ * v.d_);
    }
    friend FunctionFieldElem operator-(const FunctionFieldElem& u, const FunctionFieldElem& v) { return u + (-v); }
    friend FunctionFieldElem operator*(const FunctionFieldElem& u, const FunctionFieldElem& v) {
        P a = u.a_ * v.a_;
        if (!u.b_.is_zero() && !v.b_.is_zero()) a += u.b_ * v.b_ * *u.rhs_;
        return u.make(std::move(a), u.a_ * v.b_ + u.b_ * v.a_, u.d_ * v.d_);
    }
    FunctionFieldElem inv() const {
        if (is_zero()) throw DivisionByZeroElement("inverse of the zero function");
        P norm = a_ * a_;
        if (!b_.is_zero()) norm -= b_ * b_ * *rhs_;
        if (norm.is_zero()) throw DivisionByZeroElement("norm vanishes");
        return make(a_ * d_, -(b_ * d_), norm);
    }
    friend FunctionFieldElem operator/(const FunctionFieldElem& u, const FunctionFieldElem& v) { return u * v.inv(); }
    FunctionFieldElem pow(unsigned e) const {
        FunctionFieldElem r = one(), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const FunctionFieldElem& u, const FunctionFieldElem& v) {
        return u.a_ * v.d_ == v.a_ * u.d_ && u.b_ * v.d_ == v.b_ * u.d_;
    }

    /// Replace (x, y, t) by elements of another function field.
    FunctionFieldElem substitute(const FunctionFieldElem& x, const FunctionFieldElem& y,
                                 const FunctionFieldElem& t) const {
        // homogenize: with x = nx/dx and t = nt/dt, every part shares the
        // denominator dx^m dt^n, so only integral elements are added
        int m = 0, n = 0;
        for (const P* p : {&a_, &b_, &d_}) {
            m = std::max(m, p->degree_in(0));
            n = std::max(n, p->degree_in(1));
        }
        const auto numer = [](const FunctionFieldElem& e) { return e.make(e.a_, e.b_, e.one_poly()); };
        const auto denom = [](const FunctionFieldElem& e) { return e.make(e.d_, e.zero_poly(), e.one_poly()); };
        const auto powers = [](const FunctionFieldElem& e, int k) {
            std::vector<FunctionFieldElem> v{e.one()};
            for (int i = 1; i <= k; ++i) v.push_back(v.back() * e);
            return v;
        };
        const auto nx = powers(numer(x), m), dx = powers(denom(x), m);
        const auto nt = powers(numer(t), n), dt = powers(denom(t), n);
        auto ev = [&](const P& p) {
            FunctionFieldElem r = x.zero();
            for (const auto& [e, c] : p.terms()) {
                FunctionFieldElem term = nx[e[0]] * dx[m - e[0]] * nt[e[1]] * dt[n - e[1]];
                r = r + term.make(term.a_.scaled(c), term.b_.scaled(c), term.d_);
            }
            return r;
        };
        FunctionFieldElem r = ev(a_);
        if (!b_.is_zero()) r = r + ev(b_) * y;
        return r / ev(d_);
    }

private:
    P zero_poly() const { return P(a_.zero_elem(), 2); }
    P one_poly() const { return P::constant(a_.zero_elem().one(), 2); }
    FunctionFieldElem make(P a, P b, P d) const { return FunctionFieldElem(rhs_, std::move(a), std::move(b), std::move(d)); }

    /// Strip monomial factors common to a, b, d and make a constant d one.
    void tidy() {
        typename P::Exponent m{1 << 28, 1 << 28};
        for (const P* p : {&a_, &b_, &d_})
            for (const auto& [e, c] : p->terms())
                for (int i = 0; i < 2; ++i) m[i] = std::min(m[i], e[i]);
        if (m[0] > 0 || m[1] > 0) {
            for (P* p : {&a_, &b_, &d_}) {
                P q(p->zero_elem(), 2);
                for (const auto& [e, c] : p->terms()) q.add_term({e[0] - m[0], e[1] - m[1]}, c);
                *p = std::move(q);
            }
        }
        if (d_.terms().size() == 1 && d_.total_degree() == 0 && !d_.constant_term().is_one()) {
            F s = d_.constant_term().inv();
            a_ = a_.scaled(s);
            b_ = b_.scaled(s);
            d_ = one_poly();
        }
    }

    std::shared_ptr<const P> rhs_;
    P a_, b_, d_;
};

/// The function field F(t)(x)[y] / (y^2 - R(x, t)).
template <class F>
class CurveFunctionField {
public:
    using P = MultiPoly<F>;
    using Elem = FunctionFieldElem<F>;

    explicit CurveFunctionField(P rhs) : rhs_(std::make_shared<const P>(std::move(rhs))) {
        if (rhs_->nvars() != 2) throw std::invalid_argument("right-hand side must be a polynomial in (x, t)");
    }
    /// y^2 = x^3 + A(t) x + B(t).
    static CurveFunctionField short_weierstrass(const UniPoly<F>& A, const UniPoly<F>& B) {
        const F z = A.zero_elem();
        P r = P::variable(z, 2, 0).pow(3) + P::variable(z, 2, 0) * P::from_univariate(A, 2, 1) +
              P::from_univariate(B, 2, 1);
        return CurveFunctionField(std::move(r));
    }

    const P& rhs() const { return *rhs_; }
    const F& zero_scalar() const { return rhs_->zero_elem(); }

    Elem make(P a, P b, P d) const { return Elem(rhs_, std::move(a), std::move(b), std::move(d)); }
    Elem constant(const F& c) const { return make(P::constant(c, 2), P(c, 2), one_poly()); }
    Elem x() const { return make(P::variable(zero_scalar(), 2, 0), zero_poly(), one_poly()); }
    Elem y() const { return make(zero_poly(), one_poly(), one_poly()); }
    Elem t() const { return make(P::variable(zero_scalar(), 2, 1), zero_poly(), one_poly()); }
    Elem from_ratfunc(const RatFunc<F>& f) const {
        return make(P::from_univariate(f.num(), 2, 1), zero_poly(), P::from_univariate(f.den(), 2, 1));
    }
    /// Element given by a polynomial in (x, y, t).
    Elem from_poly(const P& p) const {
        if (p.nvars() != 3) throw std::invalid_argument("expected a polynomial in (x, y, t)");
        return p.template evaluate<Elem>({x(), y(), t()}, constant(zero_scalar().one()),
                                         [this](const F& c) { return constant(c); });
    }
    /// Value of a polynomial in (x, y, t) at a triple of elements.
    static Elem evaluate(const P& p, const Elem& x, const Elem& y, const Elem& t) {
        if (p.nvars() != 3) throw std::invalid_argument("expected a polynomial in (x, y, t)");
        return p.template evaluate<Elem>({x, y, t}, x.one(), [&](const F& c) { return x.constant(c); });
    }

private:
    P zero_poly() const { return P(zero_scalar(), 2); }
    P one_poly() const { return P::constant(zero_scalar().one(), 2); }

    std::shared_ptr<const P> rhs_;
};

/// Does `identity` vanish identically after substituting the given elements
/// for (x, y, t)? Exact.
template <class F>
bool function_field_identity(const MultiPoly<F>& identity, const FunctionFieldElem<F>& x,
                             const FunctionFieldElem<F>& y, const FunctionFieldElem<F>& t) {
    return CurveFunctionField<F>::evaluate(identity, x, y, t).is_zero();
}

}  // namespace enr
