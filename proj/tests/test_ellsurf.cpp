#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surface_support.hpp"

#include <algorithm>
#include <set>

using namespace enr;
using namespace testsupport;

namespace {

QVector unit(size_t n, size_t i) {
    QVector v(n);
    v[i] = 1;
    return v;
}

/// e_i - e_j
QVector unit_difference(size_t n, size_t i, size_t j) {
    QVector v(n);
    v[i] = 1;
    v[j] = -1;
    return v;
}

Fp primitive_eighth_root() {
    for (long v = 2; v < 113; ++v) {
        const Fp z = f113(v);
        if (z.pow(8).is_one() && !z.pow(4).is_one()) return z;
    }
    throw std::logic_error("no primitive 8th root");
}

std::string kodaira_for_vdisc(int v) {
    switch (v) {
        case 2: return "II";
        case 3: return "III";
        case 4: return "IV";
        case 6: return "I0*";
        case 8: return "IV*";
        case 9: return "III*";
        case 10: return "II*";
    }
    return "?";
}

int components_for_vdisc(int v) {
    switch (v) {
        case 2: return 1;
        case 3: return 2;
        case 4: return 3;
        case 6: return 5;
        case 8: return 7;
        case 9: return 8;
        case 10: return 9;
    }
    return 0;
}

UniPoly<Fp> random_fp_poly(Rng& rng, int deg) {
    std::vector<Fp> c;
    for (int i = 0; i <= deg; ++i) c.push_back(f113(rng.uniform(0, 112)));
    return UniPoly<Fp>(f113(), c);
}

}  // namespace

TEST_CASE("model invariants examples") {
    const auto K = field_K();
    const NFElem z = K->zero();
    auto m = model_invariants(WeierstrassModel<NFElem>::short_form(k_poly("1"), k_poly("0")));
    CHECK(m.disc == k_poly("-64"));
    CHECK(m.j == RatFunc<NFElem>(k_poly("1728")));

    auto e = model_invariants(e1_k());
    CHECK(e.disc == k_poly("-64*(1 - t^8)^3"));
    CHECK(e.disc.degree() == 24);

    CHECK(model_invariants(WeierstrassModel<NFElem>::short_form(k_poly("0"), k_poly("1"))).j.is_zero());
    CHECK_THROWS_AS(model_invariants(WeierstrassModel<NFElem>::short_form(k_poly("0"), k_poly("0"))),
                    ZeroDiscriminant);
    (void)z;
}

TEST_CASE("property: c4^3 - c6^2 = 1728 disc on random long models") {
    Rng rng;
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        WeierstrassModel<Fp> w;
        for (int i = 0; i < 5; ++i) w.a[i] = random_fp_poly(rng, static_cast<int>(rng.uniform(0, 2)));
        const auto inv = invariants_from(w.a1(), w.a2(), w.a3(), w.a4(), w.a6());
        CHECK(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 == inv.disc.scaled(f113(1728)));
        ++checked;
    }
    CHECK(checked == 30);
}

TEST_CASE("fiber configuration of E1 over F_113") {
    const auto cfg = fiber_configuration(e1_fp());
    CHECK(cfg.complete);
    CHECK(cfg.disc_degree_sum == 24);
    std::set<long> eighth_roots;  // exhaustive scan
    for (long v = 0; v < 113; ++v)
        if (f113(v).pow(8).is_one()) eighth_roots.insert(v);
    REQUIRE(eighth_roots.size() == 8);
    std::set<long> seen;
    for (const auto& f : cfg.fibers) {
        if (f.place.infinity) {
            CHECK(f.type == Kodaira::I0);
            continue;
        }
        CHECK(f.type_name() == "III");
        CHECK(f.components == 2);
        CHECK(f.v_disc == 3);
        CHECK(f.root_lattice() == "A1");
        seen.insert(static_cast<long>(f.place.point()->value()));
    }
    CHECK(seen == eighth_roots);
    CHECK(cfg.reducible().size() == 8);
}

TEST_CASE("fiber configuration of E1 over K(t)") {
    const auto cfg = fiber_configuration(e1_k(), k_hints());
    CHECK(cfg.complete);
    CHECK(cfg.reducible().size() == 8);
    for (const auto& f : cfg.reducible()) CHECK(f.type_name() == "III");
    CHECK(cfg.fibers.back().place.infinity);
    CHECK(cfg.fibers.back().type == Kodaira::I0);
    CHECK_THROWS_AS(fiber_configuration(e1_k()), IncompletePlaceList);
    CHECK_FALSE(fiber_configuration(e1_k(), {}, true).complete);
}

TEST_CASE("type III at t = 0 for y^2 = x^3 + t x over F_7") {
    const Fp z(7, 0);
    auto w = WeierstrassModel<Fp>::short_form(fp_poly("t", 7), fp_poly("0", 7));
    auto fd = tate_at(w, point_place(z));
    CHECK(fd.type_name() == "III");
    CHECK(fd.v_disc == 3);
}

TEST_CASE("property: Kodaira types of y^2 = x^3 + c t^a x + d t^b match the table") {
    Rng rng;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 5; ++b) {
            if (3 * a == 2 * b) continue;
            const Fp c = f113(rng.uniform(1, 112)), d = f113(rng.uniform(1, 112));
            auto w = WeierstrassModel<Fp>::short_form(UniPoly<Fp>::monomial(c, a), UniPoly<Fp>::monomial(d, b));
            const auto cfg = fiber_configuration(w);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(cfg.disc_degree_sum == 24);
            const int v0 = std::min(3 * a, 2 * b), vinf = std::min(12 - 3 * a, 12 - 2 * b);
            const auto* at0 = cfg.at(point_place(f113()));
            REQUIRE(at0);
            CHECK(at0->type_name() == kodaira_for_vdisc(v0));
            CHECK(at0->components == components_for_vdisc(v0));
            const auto& inf = cfg.fibers.back();
            CHECK(inf.minimal_shifts == 1);
            CHECK(inf.type_name() == kodaira_for_vdisc(vinf));
        }
}

TEST_CASE("group law examples") {
    const auto w = e1_fp();
    const auto p2 = origin_section(f113());
    CHECK(add(w, p2, p2).zero);
    CHECK(multiply(w, p2, 2).zero);

    const auto secs = fixture_sections_fp();
    for (const auto& s : secs) {
        CHECK(on_curve(w, s));
        CHECK(add(w, s, negate(w, s)).zero);
    }
    const auto bad = SurfaceSection<Fp>::point(RatFunc<Fp>(fp_poly("1")), RatFunc<Fp>(fp_poly("1")));
    CHECK_FALSE(on_curve(w, bad));
    CHECK_THROWS_AS(add(w, bad, secs[0]), NotOnCurve);
}

TEST_CASE("translation by (0, 0) is (A/x, -A y/x^2)") {
    const auto w = e1_fp();
    auto [x3, y3] = translation_formula(w, origin_section(f113()));
    auto ff = CurveFunctionField<Fp>::short_weierstrass(w.a4(), w.a6());
    const auto A = ff.from_ratfunc(RatFunc<Fp>(w.a4()));
    CHECK(x3 == A / ff.x());
    CHECK(y3 == -(A * ff.y()) / ff.x().pow(2));
}

TEST_CASE("two-torsion sections") {
    auto t = two_torsion(e1_k(), k_hints());
    REQUIRE(t.size() == 1);
    CHECK(t[0].x.is_zero());
    CHECK(t[0].y.is_zero());
    auto split = two_torsion(WeierstrassModel<Fp>::short_form(fp_poly("-t^2"), fp_poly("0")));
    CHECK(split.size() == 3);
    for (const auto& s : split) CHECK(on_curve(WeierstrassModel<Fp>::short_form(fp_poly("-t^2"), fp_poly("0")), s));
}

TEST_CASE("property: group law is associative and commutative on fixture sections") {
    const auto w = e1_fp();
    const auto secs = fixture_sections_fp();
    std::vector<SurfaceSection<Fp>> pool = secs;
    pool.push_back(origin_section(f113()));
    pool.push_back(negate(w, secs[2]));
    pool.push_back(add(w, secs[0], secs[1]));
    Rng rng;
    for (int trial = 0; trial < 25; ++trial) {
        const auto& p = pool[rng.uniform(0, pool.size() - 1)];
        const auto& q = pool[rng.uniform(0, pool.size() - 1)];
        const auto& r = pool[rng.uniform(0, pool.size() - 1)];
        const auto pq = add(w, p, q);
        CHECK(pq == add(w, q, p));
        const auto lhs = add(w, pq, r), rhs = add(w, p, add(w, q, r));
        CHECK(lhs == rhs);
        CHECK(on_curve(w, lhs));
    }
}

TEST_CASE("section intersection examples") {
    const auto w = e1_fp();
    const auto& cfg = e1_surface_fp().ctx.fibers;
    const auto secs = fixture_sections_fp();
    CHECK(on_curve(w, fp_section(json{{"x", "t^4 + 112"}, {"y", "87*t^4 + 26"}})));
    CHECK(section_intersection(w, cfg, secs[0], secs[1]) == 2);
    for (const auto& s : secs) CHECK(section_zero_intersection(w, s) == 0);
    CHECK_THROWS_AS(section_intersection(w, cfg, secs[0], secs[0]), IdenticalSections);
    // 2 S_1 has poles; its height pairing with O must be positive
    CHECK(section_zero_intersection(w, multiply(w, secs[0], 2)) > 0);
}

TEST_CASE("property: section intersections are symmetric and invariant under t -> zeta t") {
    const auto w = e1_fp();
    const auto& cfg = e1_surface_fp().ctx.fibers;
    auto pool = fixture_sections_fp();
    pool.push_back(origin_section(f113()));
    const auto rot = base_rotation(primitive_eighth_root());
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j) {
            const Integer pq = section_intersection(w, cfg, pool[i], pool[j]);
            CHECK(pq == section_intersection(w, cfg, pool[j], pool[i]));
            CHECK(pq == section_intersection(w, cfg, rot.on_sections(pool[i]), rot.on_sections(pool[j])));
        }
}

TEST_CASE("component of a section at a fiber") {
    const auto& s = e1_surface_fp();
    const auto w = e1_fp();
    for (size_t i = 0; i < 8; ++i) {
        CHECK(component_of_section_at(w, origin_section(f113()), s.ctx.fiber_data(i)) == Component::NonIdentity);
        CHECK(component_of_section_at(w, SurfaceSection<Fp>::zero_section(f113()), s.ctx.fiber_data(i)) ==
              Component::Identity);
    }
    const auto pole = SurfaceSection<Fp>::point(RatFunc<Fp>(fp_poly("1"), fp_poly("t + 1")), RatFunc<Fp>(f113()));
    CHECK_THROWS_AS(component_of_section_at(w, pole, s.ctx.fiber_data(0)), PoleAtPlace);
    // S_1 at t_1 = -1: x(-1) = y(-1) = 0
    const auto s1 = fixture_sections_fp()[0];
    CHECK(s1.x(f113(112)).is_zero());
    CHECK(s1.y(f113(112)).is_zero());
    CHECK(component_of_section_at(w, s1, s.ctx.fiber_data(0)) == Component::NonIdentity);

    auto iv = WeierstrassModel<Fp>::short_form(fp_poly("0"), fp_poly("t^2"));
    CHECK_THROWS_AS(component_of_section_at(iv, origin_section(f113()), tate_at(iv, point_place(f113()))),
                    UnsupportedFiberType);
}

TEST_CASE("Gram matrix over F_113 equals G_B") {
    const auto& s = e1_surface_fp();
    CHECK(s.gram == gram_B());
    const QuadLattice l(s.gram);
    const auto sig = l.signature();
    CHECK(sig.positive == 1);
    CHECK(sig.negative == 17);
    CHECK(l.is_even());
    CHECK(s.gram == s.gram.transpose());
}

TEST_CASE("Gram matrix over K(t) from the lifted sections equals G_B") {
    const auto w = e1_k();
    const auto hints = k_hints();
    SurfaceContext<NFElem> ctx{w, fiber_configuration(w, hints), {}};
    for (const auto& r : hints.place_candidates) ctx.basis.component_places.push_back(point_place(r));
    const json fx = load_fixture("sections.json");
    for (const auto& sj : fx["sections_char0"]) {
        const auto sec = k_section(sj);
        REQUIRE(on_curve(w, sec));
        ctx.basis.sections.push_back(sec);
    }
    CHECK(ns_gram_assemble(ctx) == gram_B());
}

TEST_CASE("divisor classes") {
    const auto& s = e1_surface_fp();
    const size_t n = s.ctx.basis.size();
    const auto v = ns_class_of_divisor(s.ctx, s.gram, Divisor<Fp>::of(origin_section(f113())));
    CHECK(v == json_codec::rational_vector_from(load_fixture("lattice.json")["p2"]));
    CHECK(ns_class_of_divisor(s.ctx, s.gram, Divisor<Fp>::of(SurfaceSection<Fp>::zero_section(f113()))) == unit(n, 1));
    CHECK_THROWS_AS(ns_class_of_divisor(s.ctx, s.gram, Divisor<Fp>::of(origin_section(f113())), 1), NonIntegralClass);
    const auto is1 = iota_of(e1_fp()).on_sections(s.ctx.basis.sections[0]);
    CHECK(ns_class_of_divisor(s.ctx, s.gram, Divisor<Fp>::of(is1)) == ns_data().iota.row(10));
}

TEST_CASE("property: classes of basis curves are unit vectors") {
    const auto& s = e1_surface_fp();
    const size_t n = s.ctx.basis.size();
    for (size_t j = 0; j < s.ctx.basis.sections.size(); ++j)
        CHECK(ns_class_of_divisor(s.ctx, s.gram, Divisor<Fp>::of(s.ctx.basis.sections[j])) ==
              unit(n, s.ctx.basis.section_index(j)));
    for (size_t i = 0; i < 8; ++i) {
        const size_t k = s.ctx.basis.component_index(i);
        CHECK(ns_class_of_divisor(s.ctx, s.gram, Divisor<Fp>::fiber_component(f113(), i, Component::NonIdentity)) ==
              unit(n, k));
        CHECK(ns_class_of_divisor(s.ctx, s.gram, Divisor<Fp>::fiber_component(f113(), i, Component::Identity)) ==
              unit_difference(n, 0, k));
    }
}

TEST_CASE("trivial lattice and Mordell-Weil group") {
    const auto& d = ns_data();
    std::vector<size_t> triv;
    for (size_t i = 0; i < 10; ++i) triv.push_back(i);
    auto r = trivial_lattice_and_mw(d.span, d.ns, triv);
    CHECK(r.triv.rank() == 10);
    CHECK(r.mw_rank == 8);
    CHECK(r.torsion == std::vector<Integer>{2});

    auto plain = trivial_lattice_and_mw(d.span, overlattice(d.span, {}), triv);
    CHECK(plain.mw_rank == 8);
    CHECK(plain.torsion.empty());

    QMatrix g(10, 10);
    g(0, 1) = g(1, 0) = 1;
    g(1, 1) = -2;
    for (size_t i = 2; i < 10; ++i) g(i, i) = -2;
    const QuadLattice toy(g);
    auto t = trivial_lattice_and_mw(toy, overlattice(toy, {}), triv);
    CHECK(t.mw_rank == 0);
    CHECK(t.torsion.empty());
}

TEST_CASE("pushforward matrices") {
    const auto& s = e1_surface_fp();
    const size_t n = s.ctx.basis.size();
    SurfaceAutomorphism<Fp> id{[](const std::optional<Fp>& r) { return r; },
                               [](const SurfaceSection<Fp>& p) { return p; }};
    CHECK(build_pushforward_matrix(s.ctx, s.gram, id) == QMatrix::identity(n));

    const QMatrix iota = build_pushforward_matrix(s.ctx, s.gram, iota_of(e1_fp()));
    CHECK(iota == ns_data().iota);
    CHECK(iota * iota == QMatrix::identity(n));
    // t_1 = -1 goes to t_8 = 1
    CHECK(iota.row(2) == unit_difference(n, 0, 9));

    const QMatrix alpha = build_pushforward_matrix(s.ctx, s.gram, base_rotation(primitive_eighth_root()));
    QMatrix pw = QMatrix::identity(n);
    int order = 0;
    do {
        pw = pw * alpha;
        ++order;
    } while (!(pw == QMatrix::identity(n)) && order < 20);
    CHECK(order == 8);
    CHECK(alpha.row(0) == unit(n, 0));
    CHECK(alpha.row(1) == unit(n, 1));
}

TEST_CASE("Weierstrass isomorphisms") {
    Rng rng;
    int found = 0;
    for (int trial = 0; trial < 15; ++trial) {
        WeierstrassModel<Fp> w;
        for (int i = 0; i < 5; ++i) w.a[i] = random_fp_poly(rng, static_cast<int>(rng.uniform(0, 2)));
        if (invariants_from(w.a1(), w.a2(), w.a3(), w.a4(), w.a6()).disc.is_zero()) continue;
        const auto m = rat_model(w);
        const auto c = [&](long lo) { return RatFunc<Fp>::constant(f113(rng.uniform(lo, 112))); };
        const WeierstrassIso<Fp> tau{c(1), c(0), c(0), c(0)};
        const auto m2 = apply_iso(m, tau);
        CHECK(apply_iso(m2, tau.inverse()) == m);
        CHECK(tau.then(tau.inverse()) == WeierstrassIso<Fp>::identity(f113()));
        const WeierstrassIso<Fp> sigma{c(1), c(0), c(0), c(0)};
        CHECK(apply_iso(apply_iso(m, tau), sigma) == apply_iso(m, tau.then(sigma)));
        auto found_iso = weierstrass_isomorphism(m, m2);
        REQUIRE(found_iso);
        CHECK(apply_iso(m, *found_iso) == m2);
        ++found;
    }
    CHECK(found > 5);

    // long form to short form
    WeierstrassModel<Fp> lw{{fp_poly("1"), fp_poly("t"), fp_poly("2"), fp_poly("t^2"), fp_poly("3")}};
    const auto sm = apply_iso(rat_model(lw), iso_to_short(rat_model(lw)));
    CHECK(sm[0].is_zero());
    CHECK(sm[1].is_zero());
    CHECK(sm[2].is_zero());

    // j differs: no isomorphism
    CHECK_FALSE(weierstrass_isomorphism(e1_fp(), WeierstrassModel<Fp>::short_form(fp_poly("0"), fp_poly("t^3 + 1"))));
}

TEST_CASE("quartic to Weierstrass") {
    using RF = RatFunc<Fp>;
    const RF one = RF(f113()).one(), zero = RF(f113()), t = RF::variable(f113());
    const UniPoly<RF> q(zero, {t.pow(8) - one, zero, zero, zero, one});
    const auto tr = quartic_to_weierstrass(q, one, t.pow(4));
    CHECK(tr.model.is_short());
    CHECK(weierstrass_isomorphism(tr.model, e1_fp()).has_value());
    CHECK(function_field_identity(weierstrass_equation(tr.model), tr.x, tr.y, tr.quartic_field.t()));

    const UniPoly<RF> q2(zero, {one, zero, zero, zero, one});
    const auto t2 = quartic_to_weierstrass(q2, zero, one);
    CHECK(model_invariants(t2.model).j == RF::constant(f113(1728)));

    CHECK_THROWS_AS(quartic_to_weierstrass(q, one, one), PointNotOnCurve);
    const UniPoly<RF> sq(zero, {one, zero, -one - one, zero, one});
    CHECK_THROWS_AS(quartic_to_weierstrass(sq, zero, one), SingularQuartic);
}

TEST_CASE("quartic to Weierstrass over K reproduces E1 up to isomorphism") {
    using RF = RatFunc<NFElem>;
    const NFElem z = field_K()->zero();
    const RF one = RF(z).one(), zero = RF(z), t = RF::variable(z);
    const UniPoly<RF> q(zero, {t.pow(8) - one, zero, zero, zero, one});
    const auto tr = quartic_to_weierstrass(q, one, t.pow(4));
    CHECK(tr.model == WeierstrassModel<NFElem>::short_form(k_poly("5184*(1 - t^8)"), k_poly("0")));
    auto iso = weierstrass_isomorphism(tr.model, e1_k(), k_hints());
    REQUIRE(iso);
    CHECK(iso->u.pow(4) == RF(k_poly("5184")));
}

TEST_CASE("property: random quartics with a point transform consistently") {
    using RF = RatFunc<Fp>;
    Rng rng;
    const RF zero(f113());
    int done = 0;
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<RF> c;
        const UniPoly<Fp> e = random_fp_poly(rng, 1);
        if (e.is_zero()) continue;
        c.push_back(RF(e * e));
        for (int i = 1; i <= 4; ++i) c.push_back(RF(random_fp_poly(rng, 1)));
        if (c[4].is_zero()) continue;
        const UniPoly<RF> q(zero, c);
        RF j;
        try {
            j = quartic_j(q);
        } catch (const SingularQuartic&) {
            continue;
        }
        const auto tr = quartic_to_weierstrass(q, zero, RF(e));
        CHECK(model_invariants(tr.model).j == j);
        CHECK(tr.x.substitute(tr.u, tr.v, tr.model_field.t()) == tr.model_field.x());
        CHECK(tr.u.substitute(tr.x, tr.y, tr.quartic_field.t()) == tr.quartic_field.x());
        ++done;
    }
    CHECK(done >= 3);
}

TEST_CASE("Moebius maps") {
    Rng rng;
    for (int trial = 0; trial < 30; ++trial) {
        std::array<std::optional<Fp>, 3> p, q;
        auto pick = [&](std::array<std::optional<Fp>, 3>& a) {
            std::vector<long> v;
            while (v.size() < 3) {
                long x = rng.uniform(0, 113);  // 113 = infinity
                if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
            }
            for (int i = 0; i < 3; ++i) a[i] = v[i] == 113 ? std::nullopt : std::optional<Fp>(f113(v[i]));
        };
        pick(p);
        pick(q);
        const auto mu = MoebiusMap<Fp>::through(p, q);
        for (int i = 0; i < 3; ++i) CHECK(mu(p[i]) == q[i]);
        CHECK(mu.inverse().compose(mu) == MoebiusMap<Fp>::identity(f113()));
    }

    const Fp zeta = primitive_eighth_root();
    const MoebiusMap<Fp> rot{zeta, f113(), f113(), f113(1)};
    CHECK(base_change(e1_fp(), rot) == e1_fp());
    CHECK(base_change(e1_fp(), MoebiusMap<Fp>::identity(f113())) == e1_fp());

    const auto adm = admissible_moebius(e1_fp(), e1_fp());
    CHECK(adm.size() == 16);
    auto it = std::find_if(adm.begin(), adm.end(), [&](const auto& a) { return a.map == rot; });
    REQUIRE(it != adm.end());
    CHECK(it->lift.has_value());
    CHECK(std::all_of(adm.begin(), adm.end(), [](const auto& a) { return a.lift.has_value(); }));

    CHECK(generic_fiber_automorphisms(e1_fp()).size() == 4);
    CHECK(generic_fiber_automorphisms(e1_k(), k_hints()).size() == 4);
    CHECK(generic_fiber_automorphisms(WeierstrassModel<Fp>::short_form(fp_poly("t"), fp_poly("t^2 + 1"))).size() == 2);
    CHECK_THROWS_AS(admissible_moebius(WeierstrassModel<Fp>::short_form(fp_poly("t"), fp_poly("0")),
                                       WeierstrassModel<Fp>::short_form(fp_poly("t"), fp_poly("0"))),
                    TooFewCriticalValues);
}

TEST_CASE("the two Weierstrass equations are related over Q(zeta_16)") {
    const auto Q16 = NumberField::create(UniPoly<Rational>(Rational(), {1, 0, 0, 0, 0, 0, 0, 0, 1}), "z");
    const NFElem z = Q16->zero(), zeta = Q16->gen();
    ExprParser<NFElem> p(z, {"t"});
    const auto w0 = WeierstrassModel<NFElem>::short_form(p.parse("-(t^8 + 1)").to_univariate(0), UniPoly<NFElem>(z));
    const auto w1 = WeierstrassModel<NFElem>::short_form(p.parse("1 - t^8").to_univariate(0), UniPoly<NFElem>(z));
    auto ff = CurveFunctionField<NFElem>::short_weierstrass(w0.a4(), w0.a6());
    const auto c = [&](const NFElem& v) { return ff.constant(v); };
    CHECK(function_field_identity(weierstrass_equation(w1), -c(zeta.pow(4)) * ff.x(), -c(zeta.pow(2)) * ff.y(),
                                  c(zeta) * ff.t()));
    CHECK_FALSE(function_field_identity(weierstrass_equation(w1), c(zeta.pow(4)) * ff.x(), c(zeta.pow(2)) * ff.y(),
                                        c(zeta) * ff.t()));
}

TEST_CASE("function field arithmetic") {
    const auto w = e1_fp();
    auto ff = CurveFunctionField<Fp>::short_weierstrass(w.a4(), w.a6());
    const auto x = ff.x(), y = ff.y(), t = ff.t();
    CHECK(y * y == x.pow(3) + ff.from_ratfunc(RatFunc<Fp>(w.a4())) * x);
    CHECK(function_field_identity(weierstrass_equation(w), x, y, t));
    const auto f = (x + y * t) / (x * x + t), g = y - x * t + ff.constant(f113(3));
    CHECK((f * g) / g == f);
    CHECK(f - f == ff.constant(f113()));
    CHECK_THROWS_AS(ff.constant(f113()).inv(), DivisionByZeroElement);
}

TEST_CASE("kappa is invariant under iota and lands on the Enriques quartic") {
    const auto kj = load_fixture("kappa.json");
    const NFElem z = field_K()->zero();
    ExprParser<NFElem> ps(z, {"x", "y", "t"}, {{"r2", k_elem("(a^4 + 3)/2")}});
    const auto w = e1_k();
    auto ff = CurveFunctionField<NFElem>::short_weierstrass(w.a4(), w.a6());
    const auto kx = ff.from_poly(ps.parse(kj["x_num"])) / ff.from_poly(ps.parse(kj["x_den"]));
    const auto ky = ff.from_poly(ps.parse(kj["y_num"])) / ff.from_poly(ps.parse(kj["y_den"]));
    const auto A = ff.from_ratfunc(RatFunc<NFElem>(w.a4()));
    const auto X = A / ff.x(), Y = -(A * ff.y()) / ff.x().pow(2), T = -ff.t();
    CHECK(kx.substitute(X, Y, T) == kx);
    CHECK(ky.substitute(X, Y, T) == ky);
    ExprParser<NFElem> pe(z, {"x", "y", "t"});
    CHECK(function_field_identity(pe.parse("y^2 - (t*x^4 + t^7 - t^3)"), kx, ky, ff.t().pow(2)));
    CHECK_FALSE(function_field_identity(pe.parse("y^2 - (t*x^4 + t^7 + t^3)"), kx, ky, ff.t().pow(2)));
}
