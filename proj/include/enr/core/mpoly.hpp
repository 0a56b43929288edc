#pragma once

#include "enr/core/rational.hpp"
#include "enr/core/upoly.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace enr {

/// Sparse multivariate polynomial over a field element type F with a fixed
/// number of variables. Zero coefficients are never stored.
template <class F>
class MultiPoly {
public:
    using Exponent = std::vector<int>;

    MultiPoly() = default;
    MultiPoly(F ctx, size_t nvars) : zero_(ctx.zero()), n_(nvars) {}

    static MultiPoly constant(const F& c, size_t nvars) {
        MultiPoly p(c, nvars);
        p.add_term(Exponent(nvars, 0), c);
        return p;
    }
    static MultiPoly variable(const F& ctx, size_t nvars, size_t i) {
        MultiPoly p(ctx, nvars);
        Exponent e(nvars, 0);
        e.at(i) = 1;
        p.add_term(e, ctx.one());
        return p;
    }
    static MultiPoly monomial(const F& c, Exponent e) {
        MultiPoly p(c, e.size());
        p.add_term(e, c);
        return p;
    }

    size_t nvars() const { return n_; }
    const F& zero_elem() const { return zero_; }
    const std::map<Exponent, F>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && total_degree() == 0); }
    F constant_term() const {
        auto it = t_.find(Exponent(n_, 0));
        return it == t_.end() ? zero_ : it->second;
    }
    F coeff(const Exponent& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? zero_ : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }
    int degree_in(size_t var) const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e[var]);
        return d;
    }
    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int x : e) s += x;
            if (d >= 0 && s != d) return false;
            d = s;
        }
        return true;
    }

    void add_term(const Exponent& e, const F& c) {
        if (e.size() != n_) throw std::invalid_argument("exponent arity mismatch");
        if (c.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) t_.emplace(e, c);
        else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check(o);
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check(o);
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r(a.zero_, a.n_);
        Exponent e(a.n_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                for (size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const F& s) const {
        MultiPoly r(zero_, n_);
        for (const auto& [e, c] : t_) r.add_term(e, c * s);
        return r;
    }
    MultiPoly pow(unsigned k) const {
        MultiPoly r = constant(zero_.one(), n_), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

    /// Evaluate with values in an F-algebra R; embed maps F -> R.
    template <class R, class Embed>
    R evaluate(const std::vector<R>& vals, const R& one, Embed embed) const {
        if (vals.size() != n_) throw std::invalid_argument("evaluation arity mismatch");
        R acc = one * embed(zero_);
        std::vector<std::vector<R>> powers(n_);
        for (const auto& [e, c] : t_) {
            R term = one * embed(c);
            for (size_t i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(one);
                while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * vals[i]);
                term = term * pw[e[i]];
            }
            acc = acc + term;
        }
        return acc;
    }
    F evaluate(const std::vector<F>& vals) const {
        return evaluate<F>(vals, zero_.one(), [](const F& c) { return c; });
    }
    /// Substitute polynomials (in possibly different arity) for each variable.
    MultiPoly substitute(const std::vector<MultiPoly>& vals) const {
        if (vals.empty()) throw std::invalid_argument("substitute needs at least one value");
        const size_t m = vals[0].nvars();
        return evaluate<MultiPoly>(vals, constant(zero_.one(), m), [m](const F& c) { return constant(c, m); });
    }

    /// Coefficients as a univariate polynomial in variable var, with
    /// coefficients that are polynomials in the remaining variables.
    std::vector<MultiPoly> coefficients_in(size_t var) const {
        std::vector<MultiPoly> out(std::max(0, degree_in(var) + 1), MultiPoly(zero_, n_));
        for (const auto& [e, c] : t_) {
            Exponent f = e;
            f[var] = 0;
            out[e[var]].add_term(f, c);
        }
        return out;
    }

    /// Univariate view when only var occurs.
    UniPoly<F> to_univariate(size_t var) const {
        std::vector<F> c(std::max(0, degree_in(var) + 1), zero_);
        for (const auto& [e, v] : t_) {
            for (size_t i = 0; i < n_; ++i)
                if (i != var && e[i] != 0) throw std::invalid_argument("polynomial is not univariate");
            c[e[var]] = v;
        }
        return UniPoly<F>(zero_, std::move(c));
    }
    static MultiPoly from_univariate(const UniPoly<F>& u, size_t nvars, size_t var) {
        MultiPoly p(u.zero_elem(), nvars);
        for (int i = 0; i <= u.degree(); ++i) {
            Exponent e(nvars, 0);
            e[var] = i;
            p.add_term(e, u.coeff(i));
        }
        return p;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << it->second.str() << ")";
            for (size_t i = 0; i < n_; ++i) {
                if (it->first[i] == 0) continue;
                os << "*" << (i < names.size() ? names[i] : "x" + std::to_string(i));
                if (it->first[i] > 1) os << "^" << it->first[i];
            }
        }
        return os.str();
    }

private:
    void check(const MultiPoly& o) const {
        if (o.n_ != n_) throw std::invalid_argument("multivariate arity mismatch");
    }

    F zero_{};
    size_t n_ = 0;
    std::map<Exponent, F> t_;
};

}  // namespace enr
