#pragma once

#include "enr/ellsurf/function_field.hpp"
#include "enr/ellsurf/weierstrass.hpp"

#include <array>
#include <optional>
#include <vector>

namespace enr {

struct SingularQuartic : std::domain_error {
    using std::domain_error::domain_error;
};
struct PointNotOnCurve : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TooFewCriticalValues : std::domain_error {
    using std::domain_error::domain_error;
};

/// Weierstrass coefficients (a1, a2, a3, a4, a6) in F(t).
template <class F>
using RatModel = std::array<RatFunc<F>, 5>;

template <class F>
RatModel<F> rat_model(const WeierstrassModel<F>& w);
/// The polynomial model when every coefficient is a polynomial.
template <class F>
std::optional<WeierstrassModel<F>> poly_model(const RatModel<F>& m);

/// Change of coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + w.
template <class F>
struct WeierstrassIso {
    RatFunc<F> u, r, s, w;

    static WeierstrassIso identity(const F& ctx);
    static WeierstrassIso scaling(const RatFunc<F>& u);
    /// First this, then `next`.
    WeierstrassIso then(const WeierstrassIso& next) const;
    WeierstrassIso inverse() const;
    friend bool operator==(const WeierstrassIso&, const WeierstrassIso&) = default;
};

/// Coefficients of the model in the new coordinates.
template <class F>
RatModel<F> apply_iso(const RatModel<F>& m, const WeierstrassIso<F>& iso);

/// Isomorphism onto y^2 = x^3 + A x + B with A = -27 c4, B = -54 c6.
template <class F>
WeierstrassIso<F> iso_to_short(const RatModel<F>& m);

/// Some iso with apply_iso(m1, iso) == m2, if one exists over F(t). Goes
/// through the short forms; the scaling is a k-th root in F(t) (k = 2, 4, 6).
template <class F>
std::optional<WeierstrassIso<F>> weierstrass_isomorphism(const RatModel<F>& m1, const RatModel<F>& m2,
                                                         const FieldHints<F>& hints = {});
template <class F>
std::optional<WeierstrassIso<F>> weierstrass_isomorphism(const WeierstrassModel<F>& w1, const WeierstrassModel<F>& w2,
                                                         const FieldHints<F>& hints = {}) {
    return weierstrass_isomorphism(rat_model(w1), rat_model(w2), hints);
}

/// y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6 as a polynomial in (x, y, t).
template <class F>
MultiPoly<F> weierstrass_equation(const WeierstrassModel<F>& w);

/// t -> (a t + b) / (c t + d); points of P^1 are optional<F>, nullopt = infinity.
template <class F>
struct MoebiusMap {
    F a, b, c, d;

    static MoebiusMap identity(const F& ctx) { return {ctx.one(), ctx.zero(), ctx.zero(), ctx.one()}; }
    /// The map sending p[i] to q[i], i = 0, 1, 2 (distinct points).
    static MoebiusMap through(const std::array<std::optional<F>, 3>& p, const std::array<std::optional<F>, 3>& q);

    F det() const { return a * d - b * c; }
    std::optional<F> operator()(const std::optional<F>& t) const;
    MoebiusMap compose(const MoebiusMap& inner) const;  ///< this after inner
    MoebiusMap inverse() const { return {d, -b, -c, a}; }
    /// Scaled so the first nonzero entry is one.
    MoebiusMap normalized() const;
    RatFunc<F> as_ratfunc() const;
    std::string str() const;
    friend bool operator==(const MoebiusMap& x, const MoebiusMap& y) {
        const MoebiusMap p = x.normalized(), q = y.normalized();
        return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
    }
};

/// Pullback along mu: a_i(mu(t)) (c t + d)^(2 i), again a polynomial model.
template <class F>
WeierstrassModel<F> base_change(const WeierstrassModel<F>& w, const MoebiusMap<F>& mu);

/// Points of P^1 under singular fibers; higher-degree places are skipped.
template <class F>
std::vector<std::optional<F>> critical_values(const WeierstrassModel<F>& w, const FieldHints<F>& hints = {});

template <class F>
struct AdmissibleMoebius {
    MoebiusMap<F> map;
    /// Iso from w1 onto base_change(w2, map), when the map lifts.
    std::optional<WeierstrassIso<F>> lift;
};

/// All Moebius maps sending the critical values of w1 onto those of w2,
/// each with its lift test.
template <class F>
std::vector<AdmissibleMoebius<F>> admissible_moebius(const WeierstrassModel<F>& w1, const WeierstrassModel<F>& w2,
                                                     const FieldHints<F>& hints = {});

/// Scalars u giving (x, y) -> (u^2 x, u^3 y) on a short model: u^4 = 1 for
/// B = 0, u^6 = 1 for A = 0, u^2 = 1 otherwise.
template <class F>
std::vector<F> generic_fiber_automorphisms(const WeierstrassModel<F>& w, const FieldHints<F>& hints = {});

/// Result of moving a rational point of v^2 = q(u) to infinity.
template <class F>
struct QuarticTransform {
    WeierstrassModel<F> model;  ///< short, polynomial coefficients
    CurveFunctionField<F> quartic_field;  ///< x = u, y = v
    CurveFunctionField<F> model_field;
    FunctionFieldElem<F> x, y;  ///< model coordinates on the quartic
    FunctionFieldElem<F> u, v;  ///< quartic coordinates on the model
};

/// j-invariant 6912 I^3 / (4 I^3 - J^2) of v^2 = q(u).
template <class F>
RatFunc<F> quartic_j(const UniPoly<RatFunc<F>>& q);

/// q of degree 3 or 4 in u with coefficients in F[t], (u0, v0) a point with
/// v0 != 0. Checks both compositions are the identity and the j-invariants agree.
template <class F>
QuarticTransform<F> quartic_to_weierstrass(const UniPoly<RatFunc<F>>& q, const RatFunc<F>& u0, const RatFunc<F>& v0);

}  // namespace enr
