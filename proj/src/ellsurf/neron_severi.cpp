#include "enr/ellsurf/neron_severi.hpp"
#include "enr/core/linalg.hpp"

namespace enr {

namespace {

template <class F>
Component component_or_identity(const SurfaceContext<F>& ctx, const SurfaceSection<F>& s, size_t fiber) {
    try {
        return component_of_section_at(ctx.model, s, ctx.fiber_data(fiber));
    } catch (const PoleAtPlace&) {
        return Component::Identity;  // meets the zero section there
    }
}

template <class F>
Place<F> place_of_point(const F& ctx, const std::optional<F>& pt) {
    if (!pt) return Place<F>::at_infinity(ctx);
    return Place<F>::finite(UniPoly<F>(ctx, {-*pt, ctx.one()}));
}

}  // namespace

template <class F>
std::optional<size_t> NSBasisSpec<F>::find_place(const Place<F>& p) const {
    for (size_t i = 0; i < component_places.size(); ++i)
        if (component_places[i] == p) return i;
    return std::nullopt;
}

template <class F>
const LocalFiberData<F>& SurfaceContext<F>::fiber_data(size_t i) const {
    const LocalFiberData<F>* fd = fibers.at(basis.component_places.at(i));
    if (!fd) throw std::invalid_argument("no fiber data at " + basis.component_places[i].str());
    if (fd->components != 2)
        throw UnsupportedFiberType("basis fibers must have two components, " + fd->type_name() + " has " +
                                   std::to_string(fd->components));
    return *fd;
}

template <class F>
QVector intersection_row(const SurfaceContext<F>& ctx, const Divisor<F>& d) {
    const auto& b = ctx.basis;
    QVector row(b.size());
    if (d.kind == Divisor<F>::Kind::Section) {
        const SurfaceSection<F>& s = d.section;
        row[0] = 1;
        row[1] = s.zero ? Rational(-2) : Rational(section_zero_intersection(ctx.model, s));
        for (size_t i = 0; i < b.component_places.size(); ++i)
            row[b.component_index(i)] = component_or_identity(ctx, s, i) == Component::NonIdentity ? 1 : 0;
        for (size_t j = 0; j < b.sections.size(); ++j)
            row[b.section_index(j)] = b.sections[j] == s ? Rational(-2)
                                                         : Rational(section_intersection(ctx.model, ctx.fibers,
                                                                                         s, b.sections[j]));
        return row;
    }
    const bool non_id = d.component == Component::NonIdentity;
    row[1] = non_id ? 0 : 1;
    ctx.fiber_data(d.fiber);
    row[b.component_index(d.fiber)] = non_id ? -2 : 2;
    for (size_t j = 0; j < b.sections.size(); ++j)
        row[b.section_index(j)] = component_or_identity(ctx, b.sections[j], d.fiber) == d.component ? 1 : 0;
    return row;
}

template <class F>
QMatrix ns_gram_assemble(const SurfaceContext<F>& ctx) {
    const auto& b = ctx.basis;
    const size_t n = b.size();
    const F z = ctx.model.zero();
    QMatrix g(n, n);
    QVector e(n);
    e[1] = 1;
    for (size_t j = 0; j < b.sections.size(); ++j) e[b.section_index(j)] = 1;
    g.set_row(0, e);
    g.set_row(1, intersection_row(ctx, Divisor<F>::of(SurfaceSection<F>::zero_section(z))));
    for (size_t i = 0; i < b.component_places.size(); ++i)
        g.set_row(b.component_index(i),
                  intersection_row(ctx, Divisor<F>::fiber_component(z, i, Component::NonIdentity)));
    for (size_t j = 0; j < b.sections.size(); ++j)
        g.set_row(b.section_index(j), intersection_row(ctx, Divisor<F>::of(b.sections[j])));
    if (!(g == g.transpose())) throw std::logic_error("assembled Gram matrix is not symmetric");
    return g;
}

template <class F>
QVector ns_class_of_divisor(const SurfaceContext<F>& ctx, const QMatrix& gram, const Divisor<F>& d,
                            const Integer& index) {
    QVector v;
    try {
        v = solve_left(gram, intersection_row(ctx, d));
    } catch (const SingularMatrix&) {
        throw SingularGram("Gram matrix is singular");
    }
    if (mod_floor(index, common_denominator(v)) != 0)
        throw NonIntegralClass("class has denominator " + common_denominator(v).get_str());
    if (bilinear(v, gram, v) != Rational(-2)) throw std::logic_error("class of a curve does not have square -2");
    return v;
}

template <class F>
QMatrix build_pushforward_matrix(const SurfaceContext<F>& ctx, const QMatrix& gram, const SurfaceAutomorphism<F>& aut,
                                 const Integer& index) {
    const auto& b = ctx.basis;
    const size_t n = b.size();
    const F z = ctx.model.zero();
    QMatrix m(n, n);
    QVector e(n);
    e[0] = 1;
    m.set_row(0, e);
    const SurfaceSection<F> image_o = aut.on_sections(SurfaceSection<F>::zero_section(z));
    m.set_row(1, ns_class_of_divisor(ctx, gram, Divisor<F>::of(image_o), index));
    for (size_t i = 0; i < b.component_places.size(); ++i) {
        const Place<F> target = place_of_point(z, aut.base(b.component_places[i].point()));
        auto j = b.find_place(target);
        if (!j) throw std::invalid_argument("image fiber " + target.str() + " is not in the basis");
        // the identity component goes to the component met by the image of O
        const Component c0 = component_or_identity(ctx, image_o, *j);
        const Component c = c0 == Component::Identity ? Component::NonIdentity : Component::Identity;
        m.set_row(b.component_index(i), ns_class_of_divisor(ctx, gram, Divisor<F>::fiber_component(z, *j, c), index));
    }
    for (size_t k = 0; k < b.sections.size(); ++k)
        m.set_row(b.section_index(k),
                  ns_class_of_divisor(ctx, gram, Divisor<F>::of(aut.on_sections(b.sections[k])), index));
    if (!(m * gram * m.transpose() == gram)) throw IsometryCheckFailed("pushforward matrix does not preserve the Gram");
    return m;
}

#define ENR_INSTANTIATE(F)                                                                                      \
    template struct NSBasisSpec<F>;                                                                             \
    template struct SurfaceContext<F>;                                                                          \
    template QVector intersection_row(const SurfaceContext<F>&, const Divisor<F>&);                             \
    template QMatrix ns_gram_assemble(const SurfaceContext<F>&);                                                \
    template QVector ns_class_of_divisor(const SurfaceContext<F>&, const QMatrix&, const Divisor<F>&,           \
                                         const Integer&);                                                       \
    template QMatrix build_pushforward_matrix(const SurfaceContext<F>&, const QMatrix&,                         \
                                              const SurfaceAutomorphism<F>&, const Integer&);

ENR_INSTANTIATE(Fp)
ENR_INSTANTIATE(NFElem)

}  // namespace enr
