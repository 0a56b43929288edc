#include "enr/specialize/specialize.hpp"
#include "enr/core/poly_algorithms.hpp"

namespace enr {

namespace {

Place<Fp> reduce_place(const Place<NFElem>& pl, const ReductionMap& m) {
    if (pl.infinity) return Place<Fp>::at_infinity(m.zero());
    const UniPoly<Fp> pi = reduce(pl.pi, m);
    if (pi.degree() != pl.pi.degree()) throw NotAdmissible("place " + pl.str() + " changes degree mod p");
    return Place<Fp>::finite(pi);
}

}  // namespace

std::vector<Fp> degree_one_roots(const FieldPtr& K, std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    std::vector<Fp> c;
    for (const auto& x : K->minpoly().coeffs()) {
        if (mpz_divisible_ui_p(x.den().get_mpz_t(), p)) return {};
        c.push_back(Fp::from_rational(p, x));
    }
    std::vector<Fp> out;
    for (const auto& [r, mult] : roots_in_field(UniPoly<Fp>(Fp(p, 0), c)).roots)
        if (mult == 1) out.push_back(r);
    std::sort(out.begin(), out.end(), [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
    return out;
}

ReductionMap find_degree_one_place(const FieldPtr& K, std::uint64_t p) {
    const auto roots = degree_one_roots(K, p);
    if (roots.empty()) throw NoDegreeOnePlace("minimal polynomial has no simple root mod " + std::to_string(p));
    return {K, p, roots.front()};
}

ReductionMap reduction_at_root(const FieldPtr& K, std::uint64_t p, std::uint64_t root) {
    for (const auto& r : degree_one_roots(K, p))
        if (r.value() == root % p) return {K, p, r};
    throw NoDegreeOnePlace(std::to_string(root) + " is not a simple root of the minimal polynomial mod " +
                           std::to_string(p));
}

Fp reduce(const Rational& x, const ReductionMap& m) {
    if (mpz_divisible_ui_p(x.den().get_mpz_t(), m.p))
        throw NotAdmissible("denominator " + x.den().get_str() + " lies in the place over " + std::to_string(m.p));
    return Fp::from_rational(m.p, x);
}

namespace {

bool p_integral(const NFElem& x, std::uint64_t p) {
    for (const auto& c : x.coords())
        if (mpz_divisible_ui_p(c.den().get_mpz_t(), p)) return false;
    return true;
}

Fp reduce_coords(const NFElem& x, const ReductionMap& m) {
    Fp v = m.zero(), pw(m.p, 1);
    for (const auto& c : x.coords()) {
        v += Fp::from_rational(m.p, c) * pw;
        pw *= m.root;
    }
    return v;
}

/// Integral lift of minpoly / (a - root) mod p: a unit at the place that lies
/// in every other prime over p.
NFElem cofactor(const ReductionMap& m) {
    std::vector<Fp> c;
    for (const auto& x : m.field->minpoly().coeffs()) c.push_back(Fp::from_rational(m.p, x));
    const UniPoly<Fp> h = UniPoly<Fp>(m.zero(), c) / UniPoly<Fp>(m.zero(), {-m.root, Fp(m.p, 1)});
    std::vector<Rational> lift;
    for (const auto& x : h.coeffs()) lift.emplace_back(static_cast<long>(x.value()));
    return NFElem(m.field, lift);
}

}  // namespace

Fp reduce(const NFElem& x, const ReductionMap& m) {
    if (x.field() != m.field) throw std::invalid_argument("element is not in the source field");
    if (p_integral(x, m.p)) return reduce_coords(x, m);
    // x is in the local ring at the place iff x e^k has p-integral coordinates
    // for some k bounded by the p-adic valuation of its denominator
    Integer den = 1;
    for (const auto& c : x.coords()) den = lcm(den, c.den());
    long bound = 0;
    for (Integer d = den; mpz_divisible_ui_p(d.get_mpz_t(), m.p); d /= m.p) ++bound;
    const NFElem e = cofactor(m);
    NFElem y = x;
    for (long k = 1; k <= bound; ++k) {
        y = y * e;
        if (p_integral(y, m.p)) return reduce_coords(y, m) / reduce_coords(e, m).pow(k);
    }
    throw NotAdmissible("element has a pole at the place over " + std::to_string(m.p));
}

UniPoly<Fp> reduce(const UniPoly<NFElem>& f, const ReductionMap& m) {
    std::vector<Fp> c;
    for (const auto& x : f.coeffs()) c.push_back(reduce(x, m));
    return UniPoly<Fp>(m.zero(), c);
}

RatFunc<Fp> reduce(const RatFunc<NFElem>& f, const ReductionMap& m) {
    const UniPoly<Fp> d = reduce(f.den(), m);
    if (d.is_zero()) throw NotAdmissible("denominator vanishes mod the place");
    return RatFunc<Fp>(reduce(f.num(), m), d);
}

WeierstrassModel<Fp> reduce(const WeierstrassModel<NFElem>& w, const ReductionMap& m) {
    return {{reduce(w.a[0], m), reduce(w.a[1], m), reduce(w.a[2], m), reduce(w.a[3], m), reduce(w.a[4], m)}};
}

SurfaceSection<Fp> reduce(const SurfaceSection<NFElem>& s, const WeierstrassModel<NFElem>& w, const ReductionMap& m) {
    if (s.zero) return SurfaceSection<Fp>::zero_section(m.zero());
    auto r = SurfaceSection<Fp>::point(reduce(s.x, m), reduce(s.y, m));
    if (!on_curve(reduce(w, m), r)) throw std::logic_error("reduced section is not on the reduced curve");
    return r;
}

std::vector<Fp> matching_roots(const FieldPtr& K, std::uint64_t p, const WeierstrassModel<NFElem>& w,
                               const std::vector<SurfaceSection<NFElem>>& char0,
                               const std::vector<SurfaceSection<Fp>>& reduced) {
    if (char0.size() != reduced.size()) throw std::invalid_argument("section lists differ in length");
    std::vector<Fp> out;
    for (const auto& r : degree_one_roots(K, p)) {
        const ReductionMap m{K, p, r};
        bool ok = true;
        try {
            for (size_t i = 0; ok && i < char0.size(); ++i) ok = reduce(char0[i], w, m) == reduced[i];
        } catch (const NotAdmissible&) {
            ok = false;
        }
        if (ok) out.push_back(r);
    }
    return out;
}

SurfaceContext<Fp> reduce(const SurfaceContext<NFElem>& ctx, const ReductionMap& m) {
    const WeierstrassModel<Fp> w = reduce(ctx.model, m);
    SurfaceContext<Fp> out{w, fiber_configuration(w), {}};
    for (const auto& pl : ctx.basis.component_places) out.basis.component_places.push_back(reduce_place(pl, m));
    for (const auto& s : ctx.basis.sections) out.basis.sections.push_back(reduce(s, ctx.model, m));
    return out;
}

bool EquivarianceReport::all() const {
    bool ok = fibers && intersections && gram;
    for (const auto& [name, eq] : pushforwards) ok = ok && eq;
    return ok;
}

EquivarianceReport equivariance_check(const SurfaceContext<NFElem>& ctx, const ReductionMap& m,
                                      const std::vector<AutomorphismPair>& autos) {
    EquivarianceReport rep;
    const SurfaceContext<Fp> red = reduce(ctx, m);

    rep.fibers = ctx.fibers.reducible().size() == red.fibers.reducible().size();
    for (size_t i = 0; i < ctx.basis.component_places.size(); ++i)
        rep.fibers = rep.fibers && ctx.fiber_data(i).type_name() == red.fiber_data(i).type_name();

    rep.intersections = true;
    const auto& s0 = ctx.basis.sections;
    const auto& s1 = red.basis.sections;
    for (size_t i = 0; i < s0.size(); ++i) {
        rep.intersections = rep.intersections &&
                            section_zero_intersection(ctx.model, s0[i]) == section_zero_intersection(red.model, s1[i]);
        for (size_t j = i + 1; j < s0.size(); ++j)
            rep.intersections = rep.intersections && section_intersection(ctx.model, ctx.fibers, s0[i], s0[j]) ==
                                                         section_intersection(red.model, red.fibers, s1[i], s1[j]);
    }

    rep.gram_char0 = ns_gram_assemble(ctx);
    rep.gram_reduced = ns_gram_assemble(red);
    rep.gram = rep.gram_char0 == rep.gram_reduced;

    for (const auto& a : autos) {
        const QMatrix m0 = build_pushforward_matrix(ctx, rep.gram_char0, a.char0);
        const QMatrix m1 = build_pushforward_matrix(red, rep.gram_reduced, a.reduced);
        rep.pushforwards.emplace_back(a.name, m0 == m1);
    }
    return rep;
}

}  // namespace enr
