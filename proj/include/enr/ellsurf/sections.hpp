#pragma once

#include "enr/ellsurf/function_field.hpp"
#include "enr/ellsurf/weierstrass.hpp"

#include <utility>

namespace enr {

struct NotOnCurve : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedSectionShape : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IdenticalSections : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedFiberType : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct PoleAtPlace : std::domain_error {
    using std::domain_error::domain_error;
};

/// Section of the elliptic surface, i.e. a K(t)-point of the generic fiber.
/// The zero section is symbolic.
template <class F>
struct SurfaceSection {
    bool zero = false;
    RatFunc<F> x, y;

    static SurfaceSection zero_section(const F& ctx) { return {true, RatFunc<F>(ctx), RatFunc<F>(ctx)}; }
    static SurfaceSection point(RatFunc<F> x, RatFunc<F> y) { return {false, std::move(x), std::move(y)}; }
    friend bool operator==(const SurfaceSection& a, const SurfaceSection& b) {
        return a.zero == b.zero && (a.zero || (a.x == b.x && a.y == b.y));
    }
};

template <class F>
bool on_curve(const WeierstrassModel<F>& w, const SurfaceSection<F>& p);

template <class F>
SurfaceSection<F> negate(const WeierstrassModel<F>& w, const SurfaceSection<F>& p);

/// Chord-tangent addition; P + (-P) is the zero section.
template <class F>
SurfaceSection<F> add(const WeierstrassModel<F>& w, const SurfaceSection<F>& p, const SurfaceSection<F>& q);

template <class F>
SurfaceSection<F> multiply(const WeierstrassModel<F>& w, const SurfaceSection<F>& p, long n);

/// Image of a section under (x, y, t) -> (x, y, mu(t)) for a base map mu
/// with w invariant: the section t -> P(mu^-1(t)). Pass mu^-1 as `inverse`.
template <class F>
SurfaceSection<F> base_transport(const SurfaceSection<F>& p, const RatFunc<F>& inverse);

/// The base involution t -> -t applied to a section.
template <class F>
SurfaceSection<F> epsilon(const SurfaceSection<F>& p);

/// Nontrivial 2-torsion sections of y^2 = x^3 + A x (x = 0, and x = +-sqrt(-A)
/// when -A is a square in F[t]).
template <class F>
std::vector<SurfaceSection<F>> two_torsion(const WeierstrassModel<F>& w, const FieldHints<F>& hints = {});

/// Translation by q on the generic point, as (x', y') in the function field.
template <class F>
std::pair<FunctionFieldElem<F>, FunctionFieldElem<F>> translation_formula(const WeierstrassModel<F>& w,
                                                                          const SurfaceSection<F>& q);

enum class Component { Identity, NonIdentity };

/// Which component of the fiber at fd.place the section meets (types I1,
/// I2 and III on short models).
template <class F>
Component component_of_section_at(const WeierstrassModel<F>& w, const SurfaceSection<F>& p,
                                  const LocalFiberData<F>& fd);

/// P.O: for each place where x has a pole of order 2m, add m deg(place).
template <class F>
Integer section_zero_intersection(const WeierstrassModel<F>& w, const SurfaceSection<F>& p);

/// P.Q for distinct sections: local lengths of the coincidence of (x, y)
/// at every place (via x/y near the zero section and the chart at infinity),
/// minus deg(place) at A1 fibers where both pass through the singular point
/// of the Weierstrass fiber.
template <class F>
Integer section_intersection(const WeierstrassModel<F>& w, const FiberConfiguration<F>& cfg,
                             const SurfaceSection<F>& p, const SurfaceSection<F>& q);

/// Section coordinates in the chart at infinity: X = s^4 x(1/s), Y = s^6 y(1/s).
template <class F>
SurfaceSection<F> section_at_infinity(const SurfaceSection<F>& p);

}  // namespace enr
