#pragma once

#include "enr/ellsurf/sections.hpp"

#include <functional>

namespace enr {

struct SingularGram : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonIntegralClass : std::domain_error {
    using std::domain_error::domain_error;
};
struct IsometryCheckFailed : std::logic_error {
    using std::logic_error::logic_error;
};

/// Ordered basis (e, o, a_1..a_k, s_1..s_n): fiber class, zero section, the
/// non-identity component of each listed two-component fiber, sections.
template <class F>
struct NSBasisSpec {
    std::vector<Place<F>> component_places;
    std::vector<SurfaceSection<F>> sections;

    size_t size() const { return 2 + component_places.size() + sections.size(); }
    size_t component_index(size_t i) const { return 2 + i; }
    size_t section_index(size_t j) const { return 2 + component_places.size() + j; }
    /// Position of the fiber at `p` among the component places, if listed.
    std::optional<size_t> find_place(const Place<F>& p) const;
};

/// Divisor whose class is wanted: a section (possibly zero) or one of the two
/// components of a listed fiber.
template <class F>
struct Divisor {
    enum class Kind { Section, FiberComponent } kind = Kind::Section;
    SurfaceSection<F> section;
    size_t fiber = 0;
    Component component = Component::NonIdentity;

    static Divisor of(SurfaceSection<F> s) { return {Kind::Section, std::move(s), 0, Component::Identity}; }
    static Divisor fiber_component(const F& ctx, size_t fiber, Component c) {
        return {Kind::FiberComponent, SurfaceSection<F>::zero_section(ctx), fiber, c};
    }
};

/// Everything needed to intersect divisors on one surface.
template <class F>
struct SurfaceContext {
    WeierstrassModel<F> model;
    FiberConfiguration<F> fibers;
    NSBasisSpec<F> basis;

    const LocalFiberData<F>& fiber_data(size_t i) const;
};

/// Intersection numbers of a divisor with every basis element.
template <class F>
QVector intersection_row(const SurfaceContext<F>& ctx, const Divisor<F>& d);

/// Gram matrix of the basis, self-intersections of curves fixed at -2.
template <class F>
QMatrix ns_gram_assemble(const SurfaceContext<F>& ctx);

/// v with v G = (D.b_1, ..., D.b_n). Checks v G v^T = -2 and that the
/// denominators divide `index`.
template <class F>
QVector ns_class_of_divisor(const SurfaceContext<F>& ctx, const QMatrix& gram, const Divisor<F>& d,
                            const Integer& index = 2);

/// Automorphism of the surface over a Moebius map of the base: `base` sends
/// a point of P^1 (nullopt = infinity) to its image, `on_sections` maps
/// sections (including the zero section) to their images.
template <class F>
struct SurfaceAutomorphism {
    std::function<std::optional<F>(const std::optional<F>&)> base;
    std::function<SurfaceSection<F>(const SurfaceSection<F>&)> on_sections;
};

/// Matrix whose rows are the classes of the images of the basis elements;
/// verified to satisfy M G M^T = G.
template <class F>
QMatrix build_pushforward_matrix(const SurfaceContext<F>& ctx, const QMatrix& gram, const SurfaceAutomorphism<F>& aut,
                                 const Integer& index = 2);

}  // namespace enr
