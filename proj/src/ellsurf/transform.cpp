#include "enr/ellsurf/transform.hpp"
#include "enr/core/poly_algorithms.hpp"

#include <algorithm>

namespace enr {

namespace {

template <class F>
using RF = RatFunc<F>;

constexpr std::array<int, 5> kWeights{1, 2, 3, 4, 6};

template <class F>
std::optional<RF<F>> rf_kth_root(const RF<F>& f, int k, const FieldHints<F>& hints) {
    if (f.is_zero()) return f;
    auto lead = [&](const F& c, int kk) { return kth_root(c, kk, hints); };
    auto n = poly_perfect_power(f.num(), k, lead);
    if (!n) return std::nullopt;
    auto d = poly_perfect_power(f.den(), k, lead);
    if (!d) return std::nullopt;
    return RF<F>(*n, *d);
}

/// Scaling iso between short models (0,0,0,A1,B1) and (0,0,0,A2,B2).
template <class F>
std::optional<WeierstrassIso<F>> short_scaling(const RatModel<F>& s1, const RatModel<F>& s2,
                                               const FieldHints<F>& hints) {
    const RF<F>&A1 = s1[3], &B1 = s1[4], &A2 = s2[3], &B2 = s2[4];
    if (A1.is_zero() != A2.is_zero() || B1.is_zero() != B2.is_zero()) return std::nullopt;
    std::optional<RF<F>> u;
    if (A1.is_zero() && B1.is_zero()) return std::nullopt;
    if (B1.is_zero()) {
        u = rf_kth_root(A1 / A2, 4, hints);
    } else if (A1.is_zero()) {
        u = rf_kth_root(B1 / B2, 6, hints);
    } else {
        u = rf_kth_root((B1 * A2) / (B2 * A1), 2, hints);
    }
    if (!u) return std::nullopt;
    return WeierstrassIso<F>::scaling(*u);
}

template <class F>
MultiPoly<F> in_vars(const UniPoly<F>& p, size_t nvars, size_t var) {
    return MultiPoly<F>::from_univariate(p, nvars, var);
}

/// Polynomial in (x, t) for a polynomial in u over F[t].
template <class F>
MultiPoly<F> quartic_rhs(const UniPoly<RF<F>>& q, const F& ctx) {
    MultiPoly<F> r(ctx, 2);
    const MultiPoly<F> u = MultiPoly<F>::variable(ctx, 2, 0);
    for (int i = 0; i <= q.degree(); ++i) {
        if (!q.coeff(i).is_polynomial())
            throw UnsupportedForm("quartic coefficients must be polynomials in t for the function field maps");
        r += in_vars(q.coeff(i).num(), 2, 1) * u.pow(static_cast<unsigned>(i));
    }
    return r;
}

}  // namespace

template <class F>
RatModel<F> rat_model(const WeierstrassModel<F>& w) {
    return {RF<F>(w.a[0]), RF<F>(w.a[1]), RF<F>(w.a[2]), RF<F>(w.a[3]), RF<F>(w.a[4])};
}

template <class F>
std::optional<WeierstrassModel<F>> poly_model(const RatModel<F>& m) {
    WeierstrassModel<F> w;
    for (size_t i = 0; i < 5; ++i) {
        if (!m[i].is_polynomial()) return std::nullopt;
        w.a[i] = m[i].num();
    }
    return w;
}

template <class F>
WeierstrassIso<F> WeierstrassIso<F>::identity(const F& ctx) {
    const RF<F> z(ctx);
    return {z.one(), z, z, z};
}

template <class F>
WeierstrassIso<F> WeierstrassIso<F>::scaling(const RF<F>& u) {
    return {u, u.zero(), u.zero(), u.zero()};
}

template <class F>
WeierstrassIso<F> WeierstrassIso<F>::then(const WeierstrassIso& n) const {
    return {u * n.u, r + u * u * n.r, s + u * n.s, w + u * u * s * n.r + u * u * u * n.w};
}

template <class F>
WeierstrassIso<F> WeierstrassIso<F>::inverse() const {
    const RF<F> ui = u.inv();
    return {ui, -r * ui * ui, -s * ui, (r * s - w) * ui * ui * ui};
}

template <class F>
RatModel<F> apply_iso(const RatModel<F>& m, const WeierstrassIso<F>& iso) {
    const auto& [a1, a2, a3, a4, a6] = m;
    const RF<F>&u = iso.u, &r = iso.r, &s = iso.s, &t = iso.w;
    const auto k = [&](long n) { return u.from_int(n); };
    const RF<F> ui = u.inv();
    RatModel<F> o;
    o[0] = (a1 + k(2) * s) * ui;
    o[1] = (a2 - s * a1 + k(3) * r - s * s) * ui.pow(2);
    o[2] = (a3 + r * a1 + k(2) * t) * ui.pow(3);
    o[3] = (a4 - s * a3 + k(2) * r * a2 - (t + r * s) * a1 + k(3) * r * r - k(2) * s * t) * ui.pow(4);
    o[4] = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) * ui.pow(6);
    return o;
}

template <class F>
WeierstrassIso<F> iso_to_short(const RatModel<F>& m) {
    const auto inv = invariants_from(m[0], m[1], m[2], m[3], m[4]);
    const RF<F>& a1 = m[0];
    const RF<F> half = a1.from_int(2).inv();
    const RF<F> r = -inv.b2 / a1.from_int(12);
    const RF<F> s = -a1 * half;
    const RF<F> w = -(m[2] + r * a1) * half;
    return {a1.from_int(6).inv(), r, s, w};
}

template <class F>
std::optional<WeierstrassIso<F>> weierstrass_isomorphism(const RatModel<F>& m1, const RatModel<F>& m2,
                                                         const FieldHints<F>& hints) {
    const WeierstrassIso<F> t1 = iso_to_short(m1), t2 = iso_to_short(m2);
    auto sc = short_scaling(apply_iso(m1, t1), apply_iso(m2, t2), hints);
    if (!sc) return std::nullopt;
    WeierstrassIso<F> iso = t1.then(*sc).then(t2.inverse());
    if (!(apply_iso(m1, iso) == m2)) return std::nullopt;
    return iso;
}

template <class F>
MultiPoly<F> weierstrass_equation(const WeierstrassModel<F>& w) {
    const F z = w.zero();
    using P = MultiPoly<F>;
    const P x = P::variable(z, 3, 0), y = P::variable(z, 3, 1);
    const auto c = [&](const UniPoly<F>& p) { return in_vars(p, 3, 2); };
    return y * y + c(w.a1()) * x * y + c(w.a3()) * y - x.pow(3) - c(w.a2()) * x * x - c(w.a4()) * x - c(w.a6());
}

template <class F>
MoebiusMap<F> MoebiusMap<F>::through(const std::array<std::optional<F>, 3>& p,
                                     const std::array<std::optional<F>, 3>& q) {
    // matrix sending (x0, x1, x2) to (0, oo, 1)
    auto standard = [](const std::array<std::optional<F>, 3>& x) -> MoebiusMap {
        const F z = (x[0] ? *x[0] : x[1] ? *x[1] : *x[2]).zero(), o = z.one();
        if (!x[0]) return {z, *x[2] - *x[1], o, -*x[1]};
        if (!x[1]) return {o, -*x[0], z, *x[2] - *x[0]};
        if (!x[2]) return {o, -*x[0], o, -*x[1]};
        const F d1 = *x[2] - *x[1], d0 = *x[2] - *x[0];
        return {d1, -*x[0] * d1, d0, -*x[1] * d0};
    };
    MoebiusMap m = standard(q).inverse().compose(standard(p));
    if (m.det().is_zero()) throw std::invalid_argument("points must be distinct");
    return m.normalized();
}

template <class F>
std::optional<F> MoebiusMap<F>::operator()(const std::optional<F>& t) const {
    if (!t) {
        if (c.is_zero()) return std::nullopt;
        return a / c;
    }
    const F den = c * *t + d;
    if (den.is_zero()) return std::nullopt;
    return (a * *t + b) / den;
}

template <class F>
MoebiusMap<F> MoebiusMap<F>::compose(const MoebiusMap& in) const {
    return {a * in.a + b * in.c, a * in.b + b * in.d, c * in.a + d * in.c, c * in.b + d * in.d};
}

template <class F>
MoebiusMap<F> MoebiusMap<F>::normalized() const {
    for (const F* e : {&a, &b, &c, &d})
        if (!e->is_zero()) {
            const F li = e->inv();
            return {a * li, b * li, c * li, d * li};
        }
    throw std::invalid_argument("zero Moebius matrix");
}

template <class F>
RF<F> MoebiusMap<F>::as_ratfunc() const {
    return RF<F>(UniPoly<F>(a, {b, a}), UniPoly<F>(a, {d, c}));
}

template <class F>
std::string MoebiusMap<F>::str() const {
    return "[" + a.str() + ", " + b.str() + "; " + c.str() + ", " + d.str() + "]";
}

template <class F>
WeierstrassModel<F> base_change(const WeierstrassModel<F>& w, const MoebiusMap<F>& mu) {
    if (mu.det().is_zero()) throw std::invalid_argument("singular Moebius map");
    const UniPoly<F> num(mu.a, {mu.b, mu.a}), den(mu.a, {mu.d, mu.c});
    WeierstrassModel<F> out;
    for (size_t i = 0; i < 5; ++i) {
        const int deg = 2 * kWeights[i];
        const UniPoly<F>& p = w.a[i];
        if (p.degree() > deg) throw UnsupportedForm("coefficient degree exceeds the K3 bound");
        UniPoly<F> r = zero_like(p);
        for (int j = 0; j <= p.degree(); ++j)
            if (!p.coeff(j).is_zero())
                r += (num.pow(static_cast<unsigned>(j)) * den.pow(static_cast<unsigned>(deg - j))).scaled(p.coeff(j));
        out.a[i] = r;
    }
    return out;
}

template <class F>
std::vector<std::optional<F>> critical_values(const WeierstrassModel<F>& w, const FieldHints<F>& hints) {
    std::vector<std::optional<F>> out;
    for (const auto& f : fiber_configuration(w, hints, true).fibers) {
        if (f.type == Kodaira::I0) continue;
        if (f.place.infinity) out.push_back(std::nullopt);
        else if (f.place.degree() == 1) out.push_back(f.place.point());
    }
    return out;
}

template <class F>
std::vector<AdmissibleMoebius<F>> admissible_moebius(const WeierstrassModel<F>& w1, const WeierstrassModel<F>& w2,
                                                     const FieldHints<F>& hints) {
    const auto c1 = critical_values(w1, hints), c2 = critical_values(w2, hints);
    if (c1.size() < 3 || c2.size() < 3) throw TooFewCriticalValues("need at least three critical values");
    std::vector<AdmissibleMoebius<F>> out;
    if (c1.size() != c2.size()) return out;
    const auto contains = [&](const std::optional<F>& p) { return std::find(c2.begin(), c2.end(), p) != c2.end(); };
    const std::array<std::optional<F>, 3> src{c1[0], c1[1], c1[2]};
    const size_t n = c2.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                const MoebiusMap<F> mu = MoebiusMap<F>::through(src, {c2[i], c2[j], c2[k]});
                if (!std::all_of(c1.begin(), c1.end(), [&](const auto& p) { return contains(mu(p)); })) continue;
                if (std::any_of(out.begin(), out.end(), [&](const auto& e) { return e.map == mu; })) continue;
                out.push_back({mu, weierstrass_isomorphism(w1, base_change(w2, mu), hints)});
            }
    return out;
}

template <class F>
std::vector<F> generic_fiber_automorphisms(const WeierstrassModel<F>& w, const FieldHints<F>& hints) {
    if (!w.is_short()) throw UnsupportedForm("generic fiber automorphisms need a short model");
    if (w.a4().is_zero() && w.a6().is_zero()) throw ZeroDiscriminant("singular model");
    const int k = w.a6().is_zero() ? 4 : w.a4().is_zero() ? 6 : 2;
    return roots_of_unity(w.zero(), k, hints);
}

template <class F>
RF<F> quartic_j(const UniPoly<RF<F>>& q) {
    const RF<F> a = q.coeff(4), b = q.coeff(3), c = q.coeff(2), d = q.coeff(1), e = q.coeff(0);
    const auto k = [&](long n) { return a.from_int(n); };
    const RF<F> I = k(12) * a * e - k(3) * b * d + c * c;
    const RF<F> J = k(72) * a * c * e + k(9) * b * c * d - k(27) * a * d * d - k(27) * e * b * b - k(2) * c * c * c;
    const RF<F> D = k(4) * I * I * I - J * J;
    if (D.is_zero()) throw SingularQuartic("quartic has a repeated root");
    return k(6912) * I * I * I / D;
}

template <class F>
QuarticTransform<F> quartic_to_weierstrass(const UniPoly<RF<F>>& q, const RF<F>& u0, const RF<F>& v0) {
    if (q.degree() < 3 || q.degree() > 4) throw SingularQuartic("need a polynomial of degree 3 or 4");
    if (!(v0 * v0 == q(u0))) throw PointNotOnCurve("point does not satisfy v^2 = q(u)");
    const RF<F> jq = quartic_j(q);
    if (v0.is_zero()) throw UnsupportedForm("the point must not be a branch point (v0 = 0)");

    // move the point to u = 0
    const UniPoly<RF<F>> sh = q.compose(UniPoly<RF<F>>(u0, {u0, u0.one()}));
    const RF<F> a = sh.coeff(4), b = sh.coeff(3), c = sh.coeff(2), d = sh.coeff(1), e = v0;
    const auto k = [&](long n) { return u0.from_int(n); };
    const RF<F> a2 = c - d * d / (k(4) * e * e), a4 = -k(4) * e * e * a;
    const RatModel<F> lng{d / e, a2, k(2) * e * b, a4, a2 * a4};

    // short form, then clear denominators by a polynomial scaling
    WeierstrassIso<F> iso = iso_to_short(lng);
    const RatModel<F> sm = apply_iso(lng, iso);
    UniPoly<F> lambda = UniPoly<F>::constant(u0.base_zero().one());
    while (true) {
        const RF<F> l(lambda);
        const UniPoly<F> g = (sm[3] * l.pow(4)).den() * (sm[4] * l.pow(6)).den();
        if (g.degree() <= 0) break;
        lambda = lambda * squarefree_part(g).monic();
    }
    iso = iso.then(WeierstrassIso<F>::scaling(RF<F>(lambda).inv()));
    const auto model = poly_model(apply_iso(lng, iso));
    if (!model) throw std::logic_error("cleared model is not polynomial");

    QuarticTransform<F> out{*model, CurveFunctionField<F>(quartic_rhs(q, u0.base_zero())),
                            CurveFunctionField<F>::short_weierstrass(model->a4(), model->a6()),
                            {}, {}, {}, {}};
    if (!(model_invariants(*model).j == jq)) throw std::logic_error("j-invariant changed");

    using E = FunctionFieldElem<F>;
    {
        const auto& Q = out.quartic_field;
        const auto f = [&](const RF<F>& r) { return Q.from_ratfunc(r); };
        const E up = Q.x() - f(u0), V = Q.y(), ee = f(e), two = f(k(2));
        const E xl = (two * ee * (V + ee) + f(d) * up) / up.pow(2);
        const E yl = (f(k(4)) * ee * ee * (V + ee) + two * ee * (f(d) * up + f(c) * up.pow(2)) -
                      f(d * d / (k(2) * e)) * up.pow(2)) /
                     up.pow(3);
        const E U = f(iso.u);
        out.x = (xl - f(iso.r)) / U.pow(2);
        out.y = (yl - f(iso.s) * U.pow(2) * out.x - f(iso.w)) / U.pow(3);
    }
    {
        const auto& M = out.model_field;
        const auto f = [&](const RF<F>& r) { return M.from_ratfunc(r); };
        const E U = f(iso.u), X = M.x(), Y = M.y();
        const E xl = U.pow(2) * X + f(iso.r);
        const E yl = U.pow(3) * Y + f(iso.s) * U.pow(2) * X + f(iso.w);
        const E up = (f(k(2) * e) * (xl + f(c)) - f(d * d / (k(2) * e))) / yl;
        out.v = -f(e) + up * (up * xl - f(d)) / f(k(2) * e);
        out.u = up + f(u0);
    }

    const auto& Q = out.quartic_field;
    const auto& M = out.model_field;
    if (!function_field_identity(weierstrass_equation(*model), out.x, out.y, Q.t()))
        throw std::logic_error("forward map does not land on the model");
    if (!(out.x.substitute(out.u, out.v, M.t()) == M.x()) || !(out.y.substitute(out.u, out.v, M.t()) == M.y()))
        throw std::logic_error("forward after backward is not the identity");
    if (!(out.u.substitute(out.x, out.y, Q.t()) == Q.x()) || !(out.v.substitute(out.x, out.y, Q.t()) == Q.y()))
        throw std::logic_error("backward after forward is not the identity");
    return out;
}

#define ENR_INSTANTIATE(F)                                                                                   \
    template RatModel<F> rat_model(const WeierstrassModel<F>&);                                              \
    template std::optional<WeierstrassModel<F>> poly_model(const RatModel<F>&);                              \
    template struct WeierstrassIso<F>;                                                                       \
    template RatModel<F> apply_iso(const RatModel<F>&, const WeierstrassIso<F>&);                            \
    template WeierstrassIso<F> iso_to_short(const RatModel<F>&);                                             \
    template std::optional<WeierstrassIso<F>> weierstrass_isomorphism(const RatModel<F>&, const RatModel<F>&, \
                                                                      const FieldHints<F>&);                 \
    template MultiPoly<F> weierstrass_equation(const WeierstrassModel<F>&);                                  \
    template struct MoebiusMap<F>;                                                                           \
    template WeierstrassModel<F> base_change(const WeierstrassModel<F>&, const MoebiusMap<F>&);              \
    template std::vector<std::optional<F>> critical_values(const WeierstrassModel<F>&, const FieldHints<F>&); \
    template std::vector<AdmissibleMoebius<F>> admissible_moebius(const WeierstrassModel<F>&,                \
                                                                  const WeierstrassModel<F>&,                \
                                                                  const FieldHints<F>&);                     \
    template std::vector<F> generic_fiber_automorphisms(const WeierstrassModel<F>&, const FieldHints<F>&);   \
    template RF<F> quartic_j(const UniPoly<RF<F>>&);                                                         \
    template QuarticTransform<F> quartic_to_weierstrass(const UniPoly<RF<F>>&, const RF<F>&, const RF<F>&);

ENR_INSTANTIATE(Fp)
ENR_INSTANTIATE(NFElem)

}  // namespace enr
