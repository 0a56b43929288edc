#include <cmath>
#include "enr/app/checks.hpp"

#include "enr/core/expr.hpp"
#include "enr/ellsurf/transform.hpp"
#include "enr/hypgeo/hypgeo.hpp"
#include "enr/lattice/enumerate.hpp"
#include "enr/lattice/genus.hpp"
#include "enr/lattice/isometry.hpp"
#include "enr/specialize/specialize.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

namespace enr {

namespace {

template <class F>
struct Surface {
    SurfaceContext<F> ctx;
    QMatrix gram;
};

template <class F>
Place<F> point_place(const F& r) {
    return Place<F>::finite(UniPoly<F>(r, {-r, r.one()}));
}

template <class F>
SurfaceSection<F> origin(const F& z) {
    return SurfaceSection<F>::point(RatFunc<F>(z), RatFunc<F>(z));
}

/// Translation by (0, 0) after t -> -t.
template <class F>
SurfaceAutomorphism<F> iota_automorphism(const WeierstrassModel<F>& w) {
    return {[](const std::optional<F>& r) -> std::optional<F> {
                if (!r) return r;
                return -*r;
            },
            [w](const SurfaceSection<F>& s) { return add(w, epsilon(s), origin(w.zero())); }};
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

Fp primitive_eighth_root(std::uint64_t p) {
    for (std::uint64_t v = 2; v < p; ++v) {
        const Fp z(p, v);
        if (z.pow(8).is_one() && !z.pow(4).is_one()) return z;
    }
    throw std::domain_error("no primitive 8th root of unity mod " + std::to_string(p));
}

QVector unit(size_t n, size_t i) {
    QVector v(n);
    v[i] = 1;
    return v;
}

std::string str(const Rational& r) { return r.str(); }

std::string decimal(const Rational& r, int digits = 9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, r.to_double());
    return buf;
}

}  // namespace

struct CheckSession::State {
    const CheckSession* session = nullptr;
    std::optional<ReductionMap> map;
    bool fixture_sections = false;
    std::optional<Surface<Fp>> fp;
    std::optional<Surface<NFElem>> k;
    std::optional<QMatrix> alpha;
    std::optional<InvariantPair> iota_pair;
    std::optional<PolarizedLattice> polarized;
    std::optional<std::vector<QVector>> d1;

    const FixtureSet& fx() const { return session->fixtures(); }

    const ReductionMap& reduction() {
        if (map) return *map;
        const auto& o = session->options();
        const FieldPtr K = fx().field();
        std::vector<Fp> matching;
        if (o.prime == fx().prime())
            matching = matching_roots(K, o.prime, fx().e1_k(), fx().sections_char0(), fx().sections_fp());
        if (o.root)
            map = reduction_at_root(K, o.prime, *o.root);
        else if (!matching.empty())
            map = ReductionMap{K, o.prime, matching.front()};
        else
            map = find_degree_one_place(K, o.prime);
        fixture_sections = std::find(matching.begin(), matching.end(), map->root) != matching.end();
        return *map;
    }

    const Surface<Fp>& surface_fp() {
        if (fp) return *fp;
        const ReductionMap& m = reduction();
        const auto wk = fx().e1_k();
        const auto w = reduce(wk, m);
        SurfaceContext<Fp> ctx{w, fiber_configuration(w), {}};
        for (const auto& r : fx().fiber_points()) ctx.basis.component_places.push_back(point_place(reduce(r, m)));
        if (fixture_sections) {
            ctx.basis.sections = fx().sections_fp();
        } else {
            for (const auto& s : fx().sections_char0()) ctx.basis.sections.push_back(reduce(s, wk, m));
        }
        QMatrix g = ns_gram_assemble(ctx);
        fp = Surface<Fp>{std::move(ctx), std::move(g)};
        return *fp;
    }

    const Surface<NFElem>& surface_k() {
        if (k) return *k;
        const auto w = fx().e1_k();
        const auto hints = fx().k_hints();
        SurfaceContext<NFElem> ctx{w, fiber_configuration(w, hints), {}};
        for (const auto& r : hints.place_candidates) ctx.basis.component_places.push_back(point_place(r));
        ctx.basis.sections = fx().sections_char0();
        QMatrix g = ns_gram_assemble(ctx);
        k = Surface<NFElem>{std::move(ctx), std::move(g)};
        return *k;
    }

    const QMatrix& alpha8() {
        if (!alpha) {
            const auto& s = surface_fp();
            alpha = build_pushforward_matrix(s.ctx, s.gram, base_rotation(primitive_eighth_root(reduction().p)));
        }
        return *alpha;
    }

    const InvariantPair& iota_lattices() {
        if (!iota_pair) iota_pair = invariant_coinvariant(fx().ns().isometry(fx().iota()));
        return *iota_pair;
    }

    const PolarizedLattice& ns_polarized() {
        if (!polarized) polarized.emplace(fx().ns().ns.lattice, fx().ns().to_ns(fx().h()));
        return *polarized;
    }

    const std::vector<QVector>& slice_d1() {
        if (!d1) d1 = slice_vectors(ns_polarized(), 1, Rational(-2));
        return *d1;
    }
};

CheckSession::CheckSession(RunOptions opts)
    : opts_(std::move(opts)), fx_(opts_.fixtures), state_(std::make_unique<State>()) {
    if (opts_.prime < 5 || !is_prime(opts_.prime)) throw std::invalid_argument("--prime must be a prime >= 5");
    state_->session = this;
}

CheckSession::~CheckSession() = default;

namespace {

struct Outcome {
    CheckStatus status;
    std::string details;
};

Outcome verdict(bool ok, std::string details) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details)}; }
Outcome skip(std::string why) { return {CheckStatus::Skip, std::move(why)}; }

using State = CheckSession::State;
using CheckFn = std::function<Outcome(const CheckSession&, State&)>;

struct CheckDef {
    std::string suite, id;
    CheckFn fn;
};

template <class F>
std::string fiber_summary(const FiberConfiguration<F>& cfg, bool& ok) {
    const auto red = cfg.reducible();
    size_t iii = 0;
    for (const auto& fd : red) iii += fd.type_name() == "III" && fd.root_lattice() == "A1";
    const auto& inf = cfg.fibers.back();
    const bool good_inf = inf.place.infinity && inf.v_disc == 0;
    ok = red.size() == 8 && iii == 8 && good_inf && cfg.disc_degree_sum == 24;
    std::ostringstream os;
    os << red.size() << " reducible, " << iii << " of type III, infinity " << (good_inf ? "good" : inf.type_name())
       << ", sum v(disc) = " << cfg.disc_degree_sum;
    return os.str();
}

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        // sanity
        {"sanity", "sanity.isometry",
         [](const CheckSession& s, State&) {
             const QMatrix f = s.fixtures().f_oy(), g = s.fixtures().gram();
             return verdict(f * g * f.transpose() == g, "f G f^T = G");
         }},
        {"sanity", "sanity.spectral_radius",
         [](const CheckSession& s, State&) {
             const auto c = matrix_entropy_check(s.fixtures().f_oy(), s.fixtures().tau8());
             const auto [lo, hi] = s.fixtures().tau8_bounds();
             const bool ok = c.divides && c.cofactor_on_circle.value_or(false) && c.radius && c.radius->lo > lo &&
                             c.radius->hi < hi;
             std::string d = c.radius ? "radius in [" + decimal(c.radius->lo) + ", " + decimal(c.radius->hi) + "]"
                                      : "tau8 does not divide the characteristic polynomial";
             return verdict(ok, d);
         }},
        {"sanity", "sanity.nef_cone",
         [](const CheckSession& s, State& st) {
             const auto& fx = s.fixtures();
             const auto roots = separating_roots(st.ns_polarized(), fx.ns().to_ns(fx.h() * fx.f_oy()));
             return verdict(roots.empty(), std::to_string(roots.size()) + " separating roots between h and f(h)");
         }},
        {"sanity", "sanity.disc_action",
         [](const CheckSession& s, State& st) {
             const auto& ns = s.fixtures().ns();
             const DiscGroup a = discriminant_group(ns.ns.lattice);
             const auto f = disc_action_subgroup(a, {ns.isometry(s.fixtures().f_oy())});
             const auto al = disc_action_subgroup(a, {ns.isometry(st.alpha8())});
             return verdict(f == al, "subgroup orders " + std::to_string(f.order()) + " (f) and " +
                                         std::to_string(al.order()) + " (t -> zeta8 t)");
         }},
        {"sanity", "sanity.commutes",
         [](const CheckSession& s, State&) {
             const QMatrix f = s.fixtures().f_oy(), i = s.fixtures().iota();
             return verdict(f * i == i * f && i * i == QMatrix::identity(i.rows()), "f iota = iota f, iota^2 = 1");
         }},
        {"sanity", "sanity.e1_e1prime",
         [](const CheckSession& s, State&) {
             const QuadLattice l(s.fixtures().gram());
             const QVector e = s.fixtures().f_oy().row(0);
             const Rational sq = l.norm(e), pe = l.pair(e, unit(e.size(), 0));
             return verdict(sq.is_zero() && pe == Rational(2), "e'^2 = " + str(sq) + ", e1.e' = " + str(pe));
         }},
        // fibers
        {"fibers", "fibers.reduced",
         [](const CheckSession&, State& st) {
             bool ok = false;
             const std::string d = fiber_summary(st.surface_fp().ctx.fibers, ok);
             return verdict(ok, "F_" + std::to_string(st.reduction().p) + ": " + d);
         }},
        {"fibers", "fibers.char0",
         [](const CheckSession& s, State&) {
             bool ok = false;
             const std::string d = fiber_summary(fiber_configuration(s.fixtures().e1_k(), s.fixtures().k_hints()), ok);
             return verdict(ok, "K: " + d);
         }},
        // gram
        {"gram", "gram.reduced",
         [](const CheckSession& s, State& st) {
             const QMatrix& g = st.surface_fp().gram;
             const QMatrix b = s.fixtures().gram();
             size_t same = 0;
             for (size_t i = 0; i < g.rows(); ++i)
                 for (size_t j = 0; j < g.cols(); ++j) same += g(i, j) == b(i, j);
             return verdict(g == b, std::to_string(same) + " of " + std::to_string(b.rows() * b.cols()) +
                                        " entries agree with G_B");
         }},
        {"gram", "gram.char0",
         [](const CheckSession& s, State& st) {
             if (!s.options().char0) return skip("needs --char0");
             return verdict(st.surface_k().gram == s.fixtures().gram(), "K(t) Gram equals G_B");
         }},
        {"gram", "gram.p2_class",
         [](const CheckSession& s, State& st) {
             const auto& sf = st.surface_fp();
             const auto v = ns_class_of_divisor(sf.ctx, sf.gram, Divisor<Fp>::of(origin(sf.ctx.model.zero())));
             return verdict(v == s.fixtures().p2(), "class of (0, 0) equals v_B(p2)");
         }},
        // vinberg
        {"vinberg", "vinberg.isotropic_degree1",
         [](const CheckSession&, State& st) {
             const auto v = slice_vectors(st.ns_polarized(), 1, Rational(0));
             return verdict(v.empty(), std::to_string(v.size()) + " classes with e^2 = 0, h.e = 1");
         }},
        {"vinberg", "vinberg.isotropic_degree2",
         [](const CheckSession&, State& st) {
             const auto v = slice_vectors(st.ns_polarized(), 2, Rational(0));
             return verdict(v.size() == 2, std::to_string(v.size()) + " classes with e^2 = 0, h.e = 2");
         }},
        {"vinberg", "vinberg.lines",
         [](const CheckSession&, State& st) {
             const auto& v = st.slice_d1();
             QMatrix m(v.size(), v.empty() ? 0 : v[0].size());
             for (size_t i = 0; i < v.size(); ++i) m.set_row(i, v[i]);
             const size_t r = v.empty() ? 0 : rank(m);
             return verdict(v.size() == 32 && r == 14,
                            "|D1| = " + std::to_string(v.size()) + ", span rank " + std::to_string(r));
         }},
        {"vinberg", "vinberg.conics",
         [](const CheckSession&, State& st) {
             const auto v = slice_vectors(st.ns_polarized(), 2, Rational(-2), st.slice_d1());
             return verdict(v.size() == 160, "|D2| = " + std::to_string(v.size()));
         }},
        // enriques
        {"enriques", "enriques.lattice",
         [](const CheckSession& s, State&) {
             const auto& ns = s.fixtures().ns();
             const auto sig = ns.span.signature();
             const Rational h2 = ns.span.norm(s.fixtures().h());
             const bool ok = ns.span.det() == Rational(-1024) && sig.positive == 1 && sig.negative == 17 &&
                             ns.ns.lattice.det().abs() == Rational(256) && h2 == Rational(4);
             return verdict(ok, "det G_B = " + str(ns.span.det()) + ", signature (" + std::to_string(sig.positive) +
                                    "," + std::to_string(sig.negative) + "), det NS = " + str(ns.ns.lattice.det()) +
                                    ", h^2 = " + str(h2));
         }},
        {"enriques", "enriques.iota_pushforward",
         [](const CheckSession& s, State& st) {
             const auto& sf = st.surface_fp();
             const QMatrix m = build_pushforward_matrix(sf.ctx, sf.gram, iota_automorphism(sf.ctx.model));
             const QMatrix& fx = s.fixtures().iota();
             size_t same = 0;
             for (size_t i = 0; i < m.rows(); ++i)
                 for (size_t j = 0; j < m.cols(); ++j) same += m(i, j) == fx(i, j);
             return verdict(m == fx && m * m == QMatrix::identity(m.rows()),
                            std::to_string(same) + " of " + std::to_string(fx.rows() * fx.cols()) +
                                " entries agree with D_B(iota)");
         }},
        {"enriques", "enriques.invariant",
         [](const CheckSession&, State& st) {
             const auto& inv = st.iota_lattices().invariant.lattice;
             const QuadLattice half = inv.scaled(Rational(1, 2));
             const auto sig = half.signature();
             const bool ok = inv.rank() == 10 && half.is_even() && half.det().abs() == Rational(1) &&
                             sig.positive == 1 && sig.negative == 9;
             return verdict(ok, "rank " + std::to_string(inv.rank()) + ", (1/2)-rescale det " + str(half.det()) +
                                    (half.is_even() ? ", even" : ", odd"));
         }},
        {"enriques", "enriques.coinvariant",
         [](const CheckSession&, State& st) {
             const auto& co = st.iota_lattices().coinvariant.lattice;
             const bool roots = !enumerate_vectors(co, Rational(-2)).vectors.empty();
             const Rational m = extreme_norm(co);
             const bool ok = co.rank() == 8 && co.is_negative_definite() && co.det() == Rational(1024) && !roots &&
                             m == Rational(-4);
             return verdict(ok, "rank " + std::to_string(co.rank()) + ", det " + str(co.det()) + ", maximum " +
                                    str(m) + (roots ? ", has roots" : ", no roots"));
         }},
        {"enriques", "enriques.mordell_weil",
         [](const CheckSession& s, State&) {
             const auto& ns = s.fixtures().ns();
             std::vector<size_t> triv(10);
             for (size_t i = 0; i < 10; ++i) triv[i] = i;
             const auto r = trivial_lattice_and_mw(ns.span, ns.ns, triv);
             const auto w = s.fixtures().e1_k();
             const auto tors = two_torsion(w, s.fixtures().k_hints());
             const bool ok = r.mw_rank == 8 && r.torsion == std::vector<Integer>{2} && tors.size() == 1 &&
                             tors[0] == origin(w.zero());
             return verdict(ok, "NS/Triv = Z^" + std::to_string(r.mw_rank) + " + torsion of order " +
                                    (r.torsion.empty() ? std::string("1") : r.torsion[0].get_str()) + ", " +
                                    std::to_string(tors.size()) + " two-torsion section(s)");
         }},
        // genus
        {"genus", "genus.kneser",
         [](const CheckSession&, State& st) {
             const auto classes = genus_classes(st.iota_lattices().coinvariant.lattice, 3);
             std::vector<Rational> maxima;
             for (const auto& c : classes) maxima.push_back(c.extreme);
             std::sort(maxima.begin(), maxima.end());
             bool distinct = true;
             for (size_t i = 0; i < classes.size(); ++i)
                 for (size_t j = i + 1; j < classes.size(); ++j)
                     distinct = distinct && !isometry_test(classes[i].lattice, classes[j].lattice);
             std::string d = std::to_string(classes.size()) + " classes, maxima";
             for (const auto& m : maxima) d += " " + str(m);
             return verdict(classes.size() == 3 && distinct &&
                                maxima == std::vector<Rational>{Rational(-4), Rational(-2), Rational(-2)},
                            d);
         }},
        // salem
        {"salem", "salem.tau8",
         [](const CheckSession& s, State&) {
             const auto r = is_salem(s.fixtures().tau8());
             const auto [lo, hi] = s.fixtures().tau8_bounds();
             const bool ok = r.salem && r.root && r.root->lo > lo && r.root->hi < hi;
             return verdict(ok, r.root ? "root " + std::to_string(r.root->midpoint()) + ", log " +
                                             std::to_string(std::log(r.root->midpoint()))
                                       : "not a Salem polynomial");
         }},
        {"salem", "salem.lehmer",
         [](const CheckSession& s, State&) {
             const auto r = is_salem(s.fixtures().lehmer());
             const auto& j = s.fixtures().raw("salem").at("lehmer");
             const double approx = std::stod(j.at("approx").get<std::string>());
             const double tol = std::stod(j.at("tolerance").get<std::string>());
             const bool ok = r.salem && r.root && std::abs(r.root->midpoint() - approx) < tol;
             return verdict(ok, r.root ? "root " + std::to_string(r.root->midpoint()) : "not a Salem polynomial");
         }},
        {"salem", "salem.f_oy",
         [](const CheckSession& s, State&) {
             const auto c = matrix_entropy_check(s.fixtures().f_oy(), s.fixtures().tau8());
             return verdict(c.divides && c.cofactor_on_circle.value_or(false),
                            "charpoly = tau8 * (degree " + std::to_string(c.cofactor.degree()) + " cyclotomic part)");
         }},
        // projrep
        {"projrep", "projrep.order",
         [](const CheckSession& s, State&) {
             const auto d = s.fixtures().projrep();
             const size_t n = d.group.order();
             return verdict(n == 128 && n == d.expected_order, "order " + std::to_string(n));
         }},
        {"projrep", "projrep.center",
         [](const CheckSession& s, State&) {
             const auto d = s.fixtures().projrep();
             const auto c = d.group.center();
             const NFMatrix g1 = d.group.generators()[0];
             const bool ok = c.size() == 2 && c[1] == projective_normalize(g1 * g1);
             return verdict(ok, "center of order " + std::to_string(c.size()));
         }},
        {"projrep", "projrep.relative_invariants",
         [](const CheckSession& s, State&) {
             const auto d = s.fixtures().projrep();
             const auto q = relative_invariant_character(d.q, d.group);
             const auto b = relative_invariant_character(d.b, d.group);
             const bool ok = q && b && (*q)[0] == -d.field->one() && (*b)[0] == d.field->one();
             return verdict(ok, ok ? "chi_q(g1) = -1, chi_b(g1) = 1, chi_q(g2) = " + (*q)[1].str() +
                                         ", chi_b(g2) = " + (*b)[1].str()
                                   : "not relative invariants");
         }},
        {"projrep", "projrep.lemma",
         [](const CheckSession&, State&) {
             const auto r = lemma_identity_check(cyclotomic8());
             return verdict(r.all(), "form scalar " + r.form_scalar.str() + " of order " + std::to_string(r.form_order));
         }},
        {"projrep", "projrep.discriminant",
         [](const CheckSession&, State&) {
             const auto r = diagonal_discriminant(cyclotomic8());
             return verdict(r.matches_expansion && r.discriminant_matches,
                            "restriction " + std::string(r.matches_expansion ? "matches" : "differs") +
                                ", discriminant = -(a^8 + 6a^4 + 1)" + (r.discriminant_matches ? "" : " fails"));
         }},
        // kappa
        {"kappa", "kappa.quartic",
         [](const CheckSession& s, State&) {
             using RF = RatFunc<NFElem>;
             const auto& fx = s.fixtures();
             const auto& qj = fx.raw("kappa").at("quartic");
             const FieldPtr K = fx.field();
             ExprParser<NFElem> parser(K->zero(), {"u", "t"}, {{K->gen_name(), K->gen()}});
             const auto q2 = parser.parse(qj.at("poly"));
             std::vector<RF> coeffs;
             for (const auto& c : q2.coefficients_in(0)) coeffs.push_back(RF(c.to_univariate(1)));
             const UniPoly<RF> q(RF(K->zero()), coeffs);
             const RF u0(fx.k_poly(qj.at("point")[0])), v0(fx.k_poly(qj.at("point")[1]));
             const auto tr = quartic_to_weierstrass(q, u0, v0);
             const auto iso = weierstrass_isomorphism(tr.model, fx.e1_k(), fx.k_hints());
             const bool round_trip = tr.x.substitute(tr.u, tr.v, tr.model_field.t()) == tr.model_field.x() &&
                                     tr.u.substitute(tr.x, tr.y, tr.quartic_field.t()) == tr.quartic_field.x();
             return verdict(iso.has_value() && round_trip, "model y^2 = x^3 + (" + tr.model.a4().str("t") +
                                                               ") x, isomorphic to E1: " + (iso ? "yes" : "no"));
         }},
        {"kappa", "kappa.zeta16",
         [](const CheckSession& s, State&) {
             const auto& cyc = s.fixtures().raw("field").at("cyclotomic");
             std::vector<Rational> mp;
             for (const auto& c : cyc.at("zeta16_minpoly")) mp.emplace_back(c.get<long>());
             const FieldPtr Q16 = NumberField::create(UniPoly<Rational>(Rational(), mp), "z");
             const NFElem zeta = Q16->gen();
             const auto& m = s.fixtures().raw("sections").at("model");
             ExprParser<NFElem> p(Q16->zero(), {"t"});
             const auto a0 = p.parse(m.at("first_model_A")).to_univariate(0);
             const auto a1 = p.parse(m.at("A")).to_univariate(0);
             auto ff = CurveFunctionField<NFElem>::short_weierstrass(a0, UniPoly<NFElem>(Q16->zero()));
             const auto c = [&](const NFElem& v) { return ff.constant(v); };
             const auto w1 = WeierstrassModel<NFElem>::short_form(a1, UniPoly<NFElem>(Q16->zero()));
             const bool ok = function_field_identity(weierstrass_equation(w1), -c(zeta.pow(4)) * ff.x(),
                                                     -c(zeta.pow(2)) * ff.y(), c(zeta) * ff.t());
             return verdict(ok, "(x, y, t) -> (-z^4 x, -z^2 y, z t) maps the first model onto E1");
         }},
        {"kappa", "kappa.iota_invariant",
         [](const CheckSession& s, State&) {
             const auto& fx = s.fixtures();
             const auto& kj = fx.raw("kappa");
             const FieldPtr K = fx.field();
             ExprParser<NFElem> ps(K->zero(), {"x", "y", "t"},
                                   {{K->gen_name(), K->gen()}, {"r2", fx.elem(fx.raw("field").at("sqrt2"))}});
             const auto w = fx.e1_k();
             auto ff = CurveFunctionField<NFElem>::short_weierstrass(w.a4(), w.a6());
             const auto kx = ff.from_poly(ps.parse(kj.at("x_num"))) / ff.from_poly(ps.parse(kj.at("x_den")));
             const auto ky = ff.from_poly(ps.parse(kj.at("y_num"))) / ff.from_poly(ps.parse(kj.at("y_den")));
             const auto A = ff.from_ratfunc(RatFunc<NFElem>(w.a4()));
             const auto X = A / ff.x(), Y = -(A * ff.y()) / ff.x().pow(2), T = -ff.t();
             const bool ok = kx.substitute(X, Y, T) == kx && ky.substitute(X, Y, T) == ky;
             return verdict(ok, "kappa o iota = kappa in K(t)(x, y)");
         }},
        {"kappa", "kappa.enriques_equation",
         [](const CheckSession& s, State&) {
             const auto& fx = s.fixtures();
             const auto& kj = fx.raw("kappa");
             const FieldPtr K = fx.field();
             ExprParser<NFElem> ps(K->zero(), {"x", "y", "t"},
                                   {{K->gen_name(), K->gen()}, {"r2", fx.elem(fx.raw("field").at("sqrt2"))}});
             const auto w = fx.e1_k();
             auto ff = CurveFunctionField<NFElem>::short_weierstrass(w.a4(), w.a6());
             const auto kx = ff.from_poly(ps.parse(kj.at("x_num"))) / ff.from_poly(ps.parse(kj.at("x_den")));
             const auto ky = ff.from_poly(ps.parse(kj.at("y_num"))) / ff.from_poly(ps.parse(kj.at("y_den")));
             const auto& eq = kj.at("enriques_equation");
             ExprParser<NFElem> pe(K->zero(), eq.at("variables").get<std::vector<std::string>>());
             const auto rel = pe.parse(eq.at("lhs")) - pe.parse(eq.at("rhs"));
             const auto sval = ff.from_poly(ps.parse(kj.at("s")));
             return verdict(function_field_identity(rel, kx, ky, sval),
                            eq.at("lhs").get<std::string>() + " = " + eq.at("rhs").get<std::string>() +
                                " holds with s = " + kj.at("s").get<std::string>());
         }},
        // specialize
        {"specialize", "specialize.place",
         [](const CheckSession&, State& st) {
             const auto& m = st.reduction();
             return verdict(true, "p = " + std::to_string(m.p) + ", root " + std::to_string(m.root.value()) +
                                      (st.fixture_sections ? " (matches the published sections)" : ""));
         }},
        {"specialize", "specialize.on_curve",
         [](const CheckSession& s, State& st) {
             const auto w = s.fixtures().e1_k();
             size_t k = 0, p = 0;
             for (const auto& sec : s.fixtures().sections_char0()) k += on_curve(w, sec);
             const auto& sf = st.surface_fp();
             for (const auto& sec : sf.ctx.basis.sections) p += on_curve(sf.ctx.model, sec);
             return verdict(k == 8 && p == 8, std::to_string(k) + "/8 over K, " + std::to_string(p) + "/8 over F_" +
                                                  std::to_string(st.reduction().p));
         }},
        {"specialize", "specialize.sections",
         [](const CheckSession& s, State& st) {
             const auto& fx = s.fixtures();
             const auto& m = st.reduction();
             if (m.p != fx.prime()) return skip("published sections live over F_" + std::to_string(fx.prime()));
             const auto wk = fx.e1_k();
             const auto pub = fx.sections_fp();
             const auto lifts = fx.sections_char0();
             size_t same = 0;
             for (size_t i = 0; i < lifts.size(); ++i) same += reduce(lifts[i], wk, m) == pub[i];
             return verdict(same == pub.size(), std::to_string(same) + "/" + std::to_string(pub.size()) +
                                                    " liftings reduce to the published sections");
         }},
        {"specialize", "specialize.fiber_points",
         [](const CheckSession& s, State& st) {
             const auto& m = st.reduction();
             std::vector<std::uint64_t> seen;
             bool ok = true;
             for (const auto& r : s.fixtures().fiber_points()) {
                 const Fp v = reduce(r, m);
                 ok = ok && v.pow(8).is_one();
                 seen.push_back(v.value());
             }
             std::string d = "t_i ->";
             for (auto v : seen) d += " " + std::to_string(v);
             std::sort(seen.begin(), seen.end());
             ok = ok && std::adjacent_find(seen.begin(), seen.end()) == seen.end() && seen.size() == 8;
             return verdict(ok, d);
         }},
        {"specialize", "specialize.equivariance",
         [](const CheckSession& s, State& st) {
             if (!s.options().char0) return skip("needs --char0");
             const auto& m = st.reduction();
             const auto& sk = st.surface_k();
             const auto rep = equivariance_check(sk.ctx, m,
                                                 {{"iota", iota_automorphism(sk.ctx.model),
                                                   iota_automorphism(reduce(sk.ctx.model, m))}});
             std::string d = std::string("fibers ") + (rep.fibers ? "ok" : "differ") + ", intersections " +
                             (rep.intersections ? "ok" : "differ") + ", Gram " + (rep.gram ? "ok" : "differs");
             for (const auto& [name, eq] : rep.pushforwards) d += ", " + name + (eq ? " ok" : " differs");
             return verdict(rep.all(), d);
         }},
    };
    return defs;
}

}  // namespace

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "fail";
}

bool CheckReport::passed() const { return count(CheckStatus::Fail) == 0; }

size_t CheckReport::count(CheckStatus s) const {
    return static_cast<size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"sanity", "fibers", "gram",    "vinberg", "enriques", "genus",
                                                   "salem",  "projrep", "kappa", "specialize", "all"};
    return names;
}

std::vector<std::string> suite_checks(const std::string& suite) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw UnknownSuite("unknown suite '" + suite + "'");
    std::vector<std::string> ids;
    for (const auto& d : registry())
        if (suite == "all" || d.suite == suite) ids.push_back(d.id);
    return ids;
}

CheckResult run_check(const CheckSession& session, const std::string& id) {
    const auto& defs = registry();
    const auto it = std::find_if(defs.begin(), defs.end(), [&](const CheckDef& d) { return d.id == id; });
    if (it == defs.end()) throw std::invalid_argument("unknown check '" + id + "'");
    CheckResult r{id, CheckStatus::Fail, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = it->fn(session, session.state());
        r.status = o.status;
        r.details = std::move(o.details);
    } catch (const std::exception& e) {
        r.details = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

CheckReport run_suite(const CheckSession& session, const std::string& suite) {
    CheckReport rep{suite, {}};
    for (const auto& id : suite_checks(suite)) rep.checks.push_back(run_check(session, id));
    return rep;
}

CheckReport run_suite(const std::string& suite, const RunOptions& opts) {
    suite_checks(suite);
    const CheckSession session(opts);
    return run_suite(session, suite);
}

nlohmann::json report_json(const CheckReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"id", c.id}, {"status", status_name(c.status)}, {"details", c.details}});
    return {{"suite", r.suite}, {"checks", checks}};
}

void emit_report(const CheckReport& r, ReportFormat f, std::ostream& out) {
    if (f == ReportFormat::Json) {
        out << report_json(r).dump(1) << '\n';
    } else {
        for (const auto& c : r.checks) {
            const char* mark = c.status == CheckStatus::Pass ? "✓" : c.status == CheckStatus::Fail ? "✗" : "-";
            char t[32];
            std::snprintf(t, sizeof t, "%8.2fs", c.seconds);
            out << mark << ' ' << c.id << std::string(c.id.size() < 30 ? 30 - c.id.size() : 1, ' ') << t << "  "
                << c.details << '\n';
        }
        out << r.suite << ": " << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail)
            << " failed, " << r.count(CheckStatus::Skip) << " skipped\n";
    }
    if (!out) throw std::ios_base::failure("cannot write report");
}

}  // namespace enr
