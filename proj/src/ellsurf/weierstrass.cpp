#include "enr/ellsurf/weierstrass.hpp"
#include "enr/core/linalg.hpp"

namespace enr {

namespace {

constexpr int kInfiniteValuation = 1 << 20;

template <class F>
int valuation(const UniPoly<F>& f, const UniPoly<F>& pi) {
    return f.is_zero() ? kInfiniteValuation : poly_valuation(f, pi);
}

struct TateType {
    Kodaira type;
    int n;
};

/// Kodaira type from (v(c4), v(c6), v(disc)) of a minimal model, residue
/// characteristic 0 or >= 5.
TateType classify(int v4, int v6, int vd) {
    if (vd == 0) return {Kodaira::I0, 0};
    if (v4 == 0) return {Kodaira::In, vd};
    if (v4 == 2 && v6 == 3 && vd > 6) return {Kodaira::Ins, vd - 6};
    switch (vd) {
        case 2: return {Kodaira::II, 0};
        case 3: return {Kodaira::III, 0};
        case 4: return {Kodaira::IV, 0};
        case 6: return {Kodaira::I0s, 0};
        case 8: return {Kodaira::IVs, 0};
        case 9: return {Kodaira::IIIs, 0};
        case 10: return {Kodaira::IIs, 0};
        default: throw std::logic_error("valuations (" + std::to_string(v4) + ", " + std::to_string(v6) + ", " +
                                        std::to_string(vd) + ") match no Kodaira type");
    }
}

}  // namespace

template <class F>
void WeierstrassModel<F>::check_k3_degrees() const {
    static constexpr int weight[5] = {1, 2, 3, 4, 6};
    for (int i = 0; i < 5; ++i)
        if (a[i].degree() > 2 * weight[i])
            throw UnsupportedForm("coefficient a" + std::to_string(weight[i]) + " exceeds the K3 degree bound");
}

template <class F>
std::optional<F> Place<F>::point() const {
    if (infinity) return std::nullopt;
    if (pi.degree() != 1) throw std::invalid_argument("place " + pi.str() + " has degree > 1");
    return -pi.coeff(0);
}

std::string kodaira_name(Kodaira k, int n) {
    switch (k) {
        case Kodaira::I0: return "I0";
        case Kodaira::In: return "I" + std::to_string(n);
        case Kodaira::II: return "II";
        case Kodaira::III: return "III";
        case Kodaira::IV: return "IV";
        case Kodaira::I0s: return "I0*";
        case Kodaira::Ins: return "I" + std::to_string(n) + "*";
        case Kodaira::IVs: return "IV*";
        case Kodaira::IIIs: return "III*";
        case Kodaira::IIs: return "II*";
    }
    return "?";
}

int kodaira_components(Kodaira k, int n) {
    switch (k) {
        case Kodaira::I0:
        case Kodaira::II: return 1;
        case Kodaira::In: return n;
        case Kodaira::III: return 2;
        case Kodaira::IV: return 3;
        case Kodaira::I0s: return 5;
        case Kodaira::Ins: return 5 + n;
        case Kodaira::IVs: return 7;
        case Kodaira::IIIs: return 8;
        case Kodaira::IIs: return 9;
    }
    return 0;
}

template <class F>
std::string LocalFiberData<F>::type_name() const {
    return kodaira_name(type, n);
}

template <class F>
std::string LocalFiberData<F>::root_lattice() const {
    switch (type) {
        case Kodaira::In: return n >= 2 ? "A" + std::to_string(n - 1) : "";
        case Kodaira::III: return "A1";
        case Kodaira::IV: return "A2";
        case Kodaira::I0s: return "D4";
        case Kodaira::Ins: return "D" + std::to_string(4 + n);
        case Kodaira::IVs: return "E6";
        case Kodaira::IIIs: return "E7";
        case Kodaira::IIs: return "E8";
        default: return "";
    }
}

template <class F>
std::vector<LocalFiberData<F>> FiberConfiguration<F>::reducible() const {
    std::vector<LocalFiberData<F>> out;
    for (const auto& f : fibers)
        if (f.reducible()) out.push_back(f);
    return out;
}

template <class F>
const LocalFiberData<F>* FiberConfiguration<F>::at(const Place<F>& p) const {
    for (const auto& f : fibers)
        if (f.place == p) return &f;
    return nullptr;
}

template <class F>
ModelInvariants<F> model_invariants(const WeierstrassModel<F>& w) {
    auto v = invariants_from(w.a1(), w.a2(), w.a3(), w.a4(), w.a6());
    if (v.disc.is_zero()) throw ZeroDiscriminant("Weierstrass model has zero discriminant");
    if (!(v.c4 * v.c4 * v.c4 - v.c6 * v.c6 == v.disc.scaled(w.zero().from_int(1728))))
        throw std::logic_error("c4^3 - c6^2 != 1728 disc");
    ModelInvariants<F> out{v.b2, v.b4, v.b6, v.b8, v.c4, v.c6, v.disc, RatFunc<F>(v.c4 * v.c4 * v.c4, v.disc)};
    return out;
}

template <class F>
WeierstrassModel<F> model_at_infinity(const WeierstrassModel<F>& w) {
    w.check_k3_degrees();
    static constexpr int weight[5] = {1, 2, 3, 4, 6};
    WeierstrassModel<F> out = w;
    for (int i = 0; i < 5; ++i) out.a[i] = w.a[i].reversed(2 * weight[i]);
    return out;
}

template <class F>
LocalFiberData<F> tate_at(const WeierstrassModel<F>& w, const Place<F>& place) {
    const int ch = characteristic(w.zero());
    if (ch == 2 || ch == 3) throw UnsupportedForm("Tate's algorithm is implemented for residue characteristic >= 5");
    const WeierstrassModel<F> m = place.infinity ? model_at_infinity(w) : w;
    const auto inv = model_invariants(m);
    LocalFiberData<F> d;
    d.place = place;
    d.v_c4 = valuation(inv.c4, place.pi);
    d.v_c6 = valuation(inv.c6, place.pi);
    d.v_disc = valuation(inv.disc, place.pi);
    while (d.v_c4 >= 4 && d.v_c6 >= 6) {
        d.v_c4 -= 4;
        d.v_c6 -= 6;
        d.v_disc -= 12;
        ++d.minimal_shifts;
    }
    const TateType t = classify(d.v_c4, d.v_c6, d.v_disc);
    d.type = t.type;
    d.n = t.n;
    d.components = kodaira_components(t.type, t.n);
    if (t.type == Kodaira::In && t.n >= 2) {
        // split iff the tangent slopes at the node are rational: -c6 a square
        ResidueSquare sq = residue_is_square(-inv.c6, place.pi);
        d.split = sq.square;
        d.split_probabilistic = sq.probabilistic;
    }
    return d;
}

template <class F>
FiberConfiguration<F> fiber_configuration(const WeierstrassModel<F>& w, const FieldHints<F>& hints,
                                          bool allow_partial) {
    w.check_k3_degrees();
    const auto inv = model_invariants(w);
    FiberConfiguration<F> cfg;
    auto places = irreducible_factors(squarefree_part(inv.disc), hints);
    cfg.complete = places.complete;
    if (!cfg.complete && !allow_partial)
        throw IncompletePlaceList("discriminant has factors not covered by the candidate roots");
    for (const auto& pi : places.factors) {
        Place<F> p = Place<F>::finite(pi);
        cfg.disc_degree_sum += p.degree() * valuation(inv.disc, p.pi);
        cfg.fibers.push_back(tate_at(w, p));
    }
    cfg.disc_degree_sum += 24 - inv.disc.degree();
    cfg.fibers.push_back(tate_at(w, Place<F>::at_infinity(w.zero())));
    if (cfg.complete && cfg.disc_degree_sum != 24)
        throw std::logic_error("discriminant degrees sum to " + std::to_string(cfg.disc_degree_sum) + ", not 24");
    return cfg;
}

TrivialLatticeResult trivial_lattice_and_mw(const QuadLattice& span, const EmbeddedLattice& ns,
                                            const std::vector<size_t>& triv_indices) {
    const size_t n = span.rank(), k = triv_indices.size();
    QMatrix g(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) g(i, j) = span.gram()(triv_indices[i], triv_indices[j]);
    TrivialLatticeResult out{QuadLattice(g), 0, {}};
    const size_t r = ns.basis.rows();
    QMatrix t(k, r);
    for (size_t i = 0; i < k; ++i) {
        QVector e(n);
        e.at(triv_indices[i]) = 1;
        t.set_row(i, solve_left(ns.basis, e));
    }
    auto snf = snf_with_transforms(to_integer(t));
    size_t nonzero = 0;
    for (const auto& d : snf.diagonal) {
        if (d == 0) continue;
        ++nonzero;
        if (abs(d) > 1) out.torsion.push_back(abs(d));
    }
    out.mw_rank = r - nonzero;
    return out;
}

#define ENR_INSTANTIATE(F)                                                                                        \
    template struct WeierstrassModel<F>;                                                                          \
    template struct Place<F>;                                                                                     \
    template struct LocalFiberData<F>;                                                                            \
    template struct FiberConfiguration<F>;                                                                        \
    template ModelInvariants<F> model_invariants(const WeierstrassModel<F>&);                                     \
    template WeierstrassModel<F> model_at_infinity(const WeierstrassModel<F>&);                                   \
    template LocalFiberData<F> tate_at(const WeierstrassModel<F>&, const Place<F>&);                              \
    template FiberConfiguration<F> fiber_configuration(const WeierstrassModel<F>&, const FieldHints<F>&, bool);

ENR_INSTANTIATE(Fp)
ENR_INSTANTIATE(NFElem)

}  // namespace enr
