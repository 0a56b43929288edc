#include "enr/ellsurf/sections.hpp"

namespace enr {

namespace {

constexpr int kInf = 1 << 20;

template <class F>
using RF = RatFunc<F>;

template <class F>
RF<F> lift(const UniPoly<F>& p) {
    return RF<F>(p);
}

template <class F>
int val_at_zero(const RF<F>& f) {
    if (f.is_zero()) return kInf;
    return f.num().low_degree() - f.den().low_degree();
}

template <class F>
void require_short(const WeierstrassModel<F>& w, const char* what) {
    if (!w.is_short()) throw UnsupportedForm(std::string(what) + " needs a short Weierstrass model");
}

template <class F>
UniPoly<F> reduce_mod(const RF<F>& f, const UniPoly<F>& pi) {
    UniPoly<F> d = f.den() % pi;
    if (d.is_zero()) throw PoleAtPlace("section has a pole at " + pi.str());
    return (f.num() * residue_inverse(d, pi)) % pi;
}

/// Does the section pass through the singular point of the fiber at the
/// place? False where the section has a pole (it meets the zero section).
template <class F>
bool through_singular_point(const WeierstrassModel<F>& w, const SurfaceSection<F>& p, const Place<F>& place) {
    require_short(w, "singular point test");
    if (p.zero) return false;
    const WeierstrassModel<F> m = place.infinity ? model_at_infinity(w) : w;
    const SurfaceSection<F> q = place.infinity ? section_at_infinity(p) : p;
    const UniPoly<F>& pi = place.pi;
    const UniPoly<F> A = m.a4() % pi, B = m.a6() % pi;
    // node at x0 = -3B/(2A) when A is a unit, cusp/additive at x0 = 0
    UniPoly<F> x0 = zero_like(A);
    if (!A.is_zero()) x0 = (B.scaled(w.zero().from_int(-3)) * residue_inverse(A.scaled(w.zero().from_int(2)), pi)) % pi;
    UniPoly<F> xr, yr;
    try {
        xr = reduce_mod(q.x, pi);
        yr = reduce_mod(q.y, pi);
    } catch (const PoleAtPlace&) {
        return false;
    }
    return xr == x0 && yr.is_zero();
}

/// Sum over places pi dividing r of deg(pi) * v_pi(n).
template <class F>
int local_length_over(UniPoly<F> n, const UniPoly<F>& r) {
    int total = 0;
    while (true) {
        UniPoly<F> c = poly_gcd(n, r);
        if (c.degree() <= 0) return total;
        total += c.degree();
        n = n.exact_div(c);
    }
}

template <class F>
int finite_intersection(const SurfaceSection<F>& p, const SurfaceSection<F>& q) {
    const RF<F> dx = p.x - q.x, dy = p.y - q.y;
    if (dx.is_zero() && dy.is_zero()) throw IdenticalSections("sections coincide");
    const UniPoly<F> poles = p.x.den() * q.x.den();
    UniPoly<F> g = poly_gcd(dx.num(), dy.num());
    // drop places where either section meets the zero section
    while (true) {
        UniPoly<F> c = poly_gcd(g, poles);
        if (c.degree() <= 0) break;
        g = g.exact_div(c);
    }
    int total = g.degree();
    UniPoly<F> both = poly_gcd(p.x.den(), q.x.den());
    if (both.degree() > 0) {
        // near the zero section u = x/y is a local coordinate on the fiber
        const RF<F> du = p.x / p.y - q.x / q.y;
        if (du.is_zero()) throw IdenticalSections("sections coincide near the zero section");
        total += local_length_over(du.num(), squarefree_part(both));
    }
    return total;
}

template <class F>
int infinity_intersection(const SurfaceSection<F>& p, const SurfaceSection<F>& q) {
    const SurfaceSection<F> a = section_at_infinity(p), b = section_at_infinity(q);
    const bool pa = val_at_zero(a.x) < 0, pb = val_at_zero(b.x) < 0;
    if (pa != pb) return 0;
    if (pa) return val_at_zero(RF<F>(a.x / a.y - b.x / b.y));
    return std::min(val_at_zero(RF<F>(a.x - b.x)), val_at_zero(RF<F>(a.y - b.y)));
}

}  // namespace

template <class F>
bool on_curve(const WeierstrassModel<F>& w, const SurfaceSection<F>& p) {
    if (p.zero) return true;
    const RF<F>&x = p.x, &y = p.y;
    RF<F> lhs = y * y + lift(w.a1()) * x * y + lift(w.a3()) * y;
    RF<F> rhs = x * x * x + lift(w.a2()) * x * x + lift(w.a4()) * x + lift(w.a6());
    return lhs == rhs;
}

template <class F>
SurfaceSection<F> negate(const WeierstrassModel<F>& w, const SurfaceSection<F>& p) {
    if (p.zero) return p;
    return SurfaceSection<F>::point(p.x, -p.y - lift(w.a1()) * p.x - lift(w.a3()));
}

template <class F>
SurfaceSection<F> add(const WeierstrassModel<F>& w, const SurfaceSection<F>& p, const SurfaceSection<F>& q) {
    if (!on_curve(w, p) || !on_curve(w, q)) throw NotOnCurve("addition of a point not on the curve");
    if (p.zero) return q;
    if (q.zero) return p;
    const RF<F> a1 = lift(w.a1()), a2 = lift(w.a2()), a3 = lift(w.a3()), a4 = lift(w.a4());
    RF<F> lambda;
    if (p.x == q.x) {
        if ((p.y + q.y + a1 * q.x + a3).is_zero()) return SurfaceSection<F>::zero_section(w.zero());
        const RF<F> three = p.x.from_int(3), two = p.x.from_int(2);
        lambda = (three * p.x * p.x + two * a2 * p.x + a4 - a1 * p.y) / (two * p.y + a1 * p.x + a3);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    const RF<F> nu = p.y - lambda * p.x;
    const RF<F> x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
    const RF<F> y3 = -(lambda + a1) * x3 - nu - a3;
    return SurfaceSection<F>::point(x3, y3);
}

template <class F>
SurfaceSection<F> multiply(const WeierstrassModel<F>& w, const SurfaceSection<F>& p, long n) {
    if (n < 0) return multiply(w, negate(w, p), -n);
    SurfaceSection<F> r = SurfaceSection<F>::zero_section(w.zero()), b = p;
    while (n) {
        if (n & 1) r = add(w, r, b);
        b = add(w, b, b);
        n >>= 1;
    }
    return r;
}

template <class F>
SurfaceSection<F> base_transport(const SurfaceSection<F>& p, const RatFunc<F>& inverse) {
    if (p.zero) return p;
    return SurfaceSection<F>::point(p.x.compose(inverse), p.y.compose(inverse));
}

template <class F>
SurfaceSection<F> epsilon(const SurfaceSection<F>& p) {
    if (p.zero) return p;
    const F z = p.x.base_zero();
    return base_transport(p, RF<F>(UniPoly<F>(z, {z, -z.one()})));
}

template <class F>
std::vector<SurfaceSection<F>> two_torsion(const WeierstrassModel<F>& w, const FieldHints<F>& hints) {
    require_short(w, "two-torsion");
    if (!w.a6().is_zero()) throw UnsupportedForm("two-torsion is implemented for y^2 = x^3 + A x");
    const F z = w.zero();
    std::vector<SurfaceSection<F>> out{SurfaceSection<F>::point(RF<F>(z), RF<F>(z))};
    auto root = poly_perfect_power(-w.a4(), 2, [&](const F& c, int k) { return kth_root(c, k, hints); });
    if (root && !root->is_zero()) {
        out.push_back(SurfaceSection<F>::point(lift(*root), RF<F>(z)));
        out.push_back(SurfaceSection<F>::point(lift(UniPoly<F>(-*root)), RF<F>(z)));
    }
    return out;
}

template <class F>
std::pair<FunctionFieldElem<F>, FunctionFieldElem<F>> translation_formula(const WeierstrassModel<F>& w,
                                                                          const SurfaceSection<F>& q) {
    if (!w.a1().is_zero() || !w.a3().is_zero()) throw UnsupportedForm("translation formula needs a1 = a3 = 0");
    using P = MultiPoly<F>;
    const F z = w.zero();
    P rhs = P::variable(z, 2, 0).pow(3) + P::variable(z, 2, 0).pow(2) * P::from_univariate(w.a2(), 2, 1) +
            P::variable(z, 2, 0) * P::from_univariate(w.a4(), 2, 1) + P::from_univariate(w.a6(), 2, 1);
    CurveFunctionField<F> ff(rhs);
    auto x = ff.x(), y = ff.y();
    if (q.zero) return {x, y};
    auto xq = ff.from_ratfunc(q.x), yq = ff.from_ratfunc(q.y);
    auto lambda = (y - yq) / (x - xq);
    auto x3 = lambda * lambda - ff.from_ratfunc(lift(w.a2())) - x - xq;
    auto y3 = -(lambda * x3) - (y - lambda * x);
    return {x3, y3};
}

template <class F>
Component component_of_section_at(const WeierstrassModel<F>& w, const SurfaceSection<F>& p,
                                  const LocalFiberData<F>& fd) {
    const bool ok = fd.type == Kodaira::III || (fd.type == Kodaira::In && (fd.n == 1 || fd.n == 2));
    if (!ok) throw UnsupportedFiberType("component test supports I1, I2 and III, got " + fd.type_name());
    if (p.zero) return Component::Identity;
    const SurfaceSection<F> q = fd.place.infinity ? section_at_infinity(p) : p;
    reduce_mod(q.x, fd.place.pi);  // throws PoleAtPlace
    return through_singular_point(w, p, fd.place) ? Component::NonIdentity : Component::Identity;
}

template <class F>
SurfaceSection<F> section_at_infinity(const SurfaceSection<F>& p) {
    if (p.zero) return p;
    const F z = p.x.base_zero();
    const RF<F> inv_s(UniPoly<F>::constant(z.one()), UniPoly<F>::variable(z));
    const RF<F> s4 = lift(UniPoly<F>::monomial(z.one(), 4)), s6 = lift(UniPoly<F>::monomial(z.one(), 6));
    return SurfaceSection<F>::point(p.x.compose(inv_s) * s4, p.y.compose(inv_s) * s6);
}

template <class F>
Integer section_zero_intersection(const WeierstrassModel<F>&, const SurfaceSection<F>& p) {
    if (p.zero) throw IdenticalSections("self-intersection of the zero section is not computed here");
    const int d = p.x.den().degree();
    if (d % 2) throw UnsupportedSectionShape("pole of x of odd order");
    int total = d / 2;
    const int v = val_at_zero(section_at_infinity(p).x);
    if (v < 0) {
        if (v % 2) throw UnsupportedSectionShape("pole of x of odd order at infinity");
        total += -v / 2;
    }
    return total;
}

template <class F>
Integer section_intersection(const WeierstrassModel<F>& w, const FiberConfiguration<F>& cfg,
                             const SurfaceSection<F>& p, const SurfaceSection<F>& q) {
    if (p == q) throw IdenticalSections("intersection of a section with itself");
    if (p.zero) return section_zero_intersection(w, q);
    if (q.zero) return section_zero_intersection(w, p);
    Integer total = finite_intersection(p, q) + infinity_intersection(p, q);
    for (const auto& fd : cfg.fibers) {
        if (!fd.reducible()) continue;
        if (!through_singular_point(w, p, fd.place) || !through_singular_point(w, q, fd.place)) continue;
        const bool a1 = fd.type == Kodaira::III || (fd.type == Kodaira::In && fd.n == 2);
        if (!a1) throw UnsupportedFiberType("intersection correction at a " + fd.type_name() + " fiber");
        total -= fd.place.degree();
    }
    return total;
}

#define ENR_INSTANTIATE(F)                                                                                          \
    template bool on_curve(const WeierstrassModel<F>&, const SurfaceSection<F>&);                                   \
    template SurfaceSection<F> negate(const WeierstrassModel<F>&, const SurfaceSection<F>&);                        \
    template SurfaceSection<F> add(const WeierstrassModel<F>&, const SurfaceSection<F>&, const SurfaceSection<F>&); \
    template SurfaceSection<F> multiply(const WeierstrassModel<F>&, const SurfaceSection<F>&, long);                \
    template SurfaceSection<F> base_transport(const SurfaceSection<F>&, const RatFunc<F>&);                         \
    template SurfaceSection<F> epsilon(const SurfaceSection<F>&);                                                   \
    template std::vector<SurfaceSection<F>> two_torsion(const WeierstrassModel<F>&, const FieldHints<F>&);          \
    template std::pair<FunctionFieldElem<F>, FunctionFieldElem<F>> translation_formula(const WeierstrassModel<F>&, \
                                                                                       const SurfaceSection<F>&);   \
    template Component component_of_section_at(const WeierstrassModel<F>&, const SurfaceSection<F>&,                \
                                               const LocalFiberData<F>&);                                           \
    template SurfaceSection<F> section_at_infinity(const SurfaceSection<F>&);                                       \
    template Integer section_zero_intersection(const WeierstrassModel<F>&, const SurfaceSection<F>&);               \
    template Integer section_intersection(const WeierstrassModel<F>&, const FiberConfiguration<F>&,                 \
                                          const SurfaceSection<F>&, const SurfaceSection<F>&);

ENR_INSTANTIATE(Fp)
ENR_INSTANTIATE(NFElem)

}  // namespace enr
