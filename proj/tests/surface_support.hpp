#pragma once

#include "enr/ellsurf/neron_severi.hpp"
#include "enr/ellsurf/transform.hpp"
#include "support.hpp"

namespace testsupport {

inline Fp f113(long v = 0) { return Fp(113, v); }

/// Fiber points t_1..t_8 reduced at the degree-one prime whose root matches
/// the published F_113 sections.
inline const std::vector<long>& fiber_roots_113() {
    static const std::vector<long> r{112, 18, 44, 15, 98, 69, 95, 1};
    return r;
}

inline WeierstrassModel<Fp> e1_fp() { return WeierstrassModel<Fp>::short_form(fp_poly("1 - t^8"), fp_poly("0")); }
inline WeierstrassModel<NFElem> e1_k() {
    return WeierstrassModel<NFElem>::short_form(k_poly("1 - t^8"), k_poly("0"));
}

inline SurfaceSection<Fp> fp_section(const json& s) {
    return SurfaceSection<Fp>::point(RatFunc<Fp>(fp_poly(s["x"])), RatFunc<Fp>(fp_poly(s["y"])));
}
inline SurfaceSection<NFElem> k_section(const json& s) {
    return SurfaceSection<NFElem>::point(RatFunc<NFElem>(k_poly(s["x"])), RatFunc<NFElem>(k_poly(s["y"])));
}

template <class F>
SurfaceSection<F> origin_section(const F& z) {
    return SurfaceSection<F>::point(RatFunc<F>(z), RatFunc<F>(z));
}

template <class F>
Place<F> point_place(const F& r) {
    return Place<F>::finite(UniPoly<F>(r, {-r, r.one()}));
}

inline std::vector<SurfaceSection<Fp>> fixture_sections_fp() {
    std::vector<SurfaceSection<Fp>> out;
    const json fx = load_fixture("sections.json");
    for (const auto& s : fx["sections_fp"]) out.push_back(fp_section(s));
    return out;
}

inline FieldHints<NFElem> k_hints() {
    FieldHints<NFElem> h;
    const json fx = load_fixture("sections.json");
    for (const auto& s : fx["fiber_points"]) h.place_candidates.push_back(k_elem(s));
    h.units = {k_elem("(a^4 + 3)/2"), k_elem("(a^6 + 5*a^2)/2")};
    return h;
}

struct FpSurface {
    SurfaceContext<Fp> ctx;
    QMatrix gram;
};

inline const FpSurface& e1_surface_fp() {
    static const FpSurface s = [] {
        const auto w = e1_fp();
        SurfaceContext<Fp> ctx{w, fiber_configuration(w), {}};
        for (long r : fiber_roots_113()) ctx.basis.component_places.push_back(point_place(f113(r)));
        ctx.basis.sections = fixture_sections_fp();
        QMatrix g = ns_gram_assemble(ctx);
        return FpSurface{std::move(ctx), std::move(g)};
    }();
    return s;
}

/// iota = (translation by (0, 0)) after (t -> -t).
template <class F>
SurfaceAutomorphism<F> iota_of(const WeierstrassModel<F>& w) {
    return {[](const std::optional<F>& r) -> std::optional<F> {
                if (!r) return r;
                return -*r;
            },
            [w](const SurfaceSection<F>& s) { return add(w, epsilon(s), origin_section(w.zero())); }};
}

/// (x, y, t) -> (x, y, zeta t).
template <class F>
SurfaceAutomorphism<F> base_rotation(const F& zeta) {
    return {[zeta](const std::optional<F>& r) -> std::optional<F> {
                if (!r) return r;
                return zeta * *r;
            },
            [zeta](const SurfaceSection<F>& s) {
                return base_transport(s, RatFunc<F>(UniPoly<F>(zeta, {zeta.zero(), zeta.inv()})));
            }};
}

}  // namespace testsupport
