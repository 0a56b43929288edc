#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enr/core/poly_algorithms.hpp"
#include "enr/core/ratfunc.hpp"
#include "support.hpp"

using namespace enr;
using namespace testsupport;

namespace {

UniPoly<Rational> qpoly(std::vector<Rational> c) { return UniPoly<Rational>(Rational(), std::move(c)); }

QMatrix qmat(std::vector<std::vector<Rational>> rows) { return QMatrix(rows); }

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    Rational r(Integer(6), Integer(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational::parse(" -3/2 ") == r);
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), ArithmeticError);
    CHECK_THROWS_AS(Rational(0).inv(), ArithmeticError);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
}

TEST_CASE("prime field basics") {
    CHECK(is_prime(113));
    CHECK(!is_prime(113 * 41));
    CHECK(is_prime(2147483647ULL));
    Fp a(113, 15);
    CHECK((a.pow(8)).is_one());
    CHECK((a * a.inv()).is_one());
    CHECK(Fp(113, -1).is_square());
    CHECK(!Fp(3, -1).is_square());
    CHECK_THROWS_AS(Fp(5, 1) + Fp(7, 1), ArithmeticError);
    CHECK_THROWS_AS(Fp::from_rational(113, Rational(1, 113)), ArithmeticError);
}

TEST_CASE("number field: sqrt 2 and roots of unity in K") {
    auto K = field_K();
    NFElem a = K->gen();
    NFElem r2 = k_elem("(a^4 + 3)/2");
    CHECK(r2 * r2 == K->from_rational(2));
    NFElem i = k_elem("(a^6 + 5*a^2)/2");
    CHECK(i * i == K->from_rational(-1));
    CHECK(a.pow(8) == K->from_rational(-6) * a.pow(4) - K->one());
    CHECK((a * a.inv()).is_one());
}

TEST_CASE("poly gcd and squarefree part") {
    auto g = poly_gcd(qpoly({-1, 0, 1}), qpoly({-1, 1}));
    CHECK(g == qpoly({-1, 1}));

    auto f = fp_poly("(t - 1)^3*(t + 1)");
    CHECK(squarefree_part(f) == fp_poly("(t - 1)*(t + 1)"));
    CHECK(poly_gcd_squarefree(f, fp_poly("t - 1")).gcd == fp_poly("t - 1"));

    // characteristic smaller than the degree: p-th power factors
    auto h = fp_poly("(t + 1)^3*(t^2 + 1)", 3);
    auto sq = squarefree_decomposition(h);
    UniPoly<Fp> back = UniPoly<Fp>::constant(Fp(3, 1));
    for (const auto& [q, m] : sq) back = back * q.pow(m);
    CHECK(back == h.monic());
}

TEST_CASE("gcd degree of section differences equals the place-by-place valuation sum") {
    auto sec = load_fixture("sections.json")["sections_fp"];
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            auto dx = fp_poly(sec[i]["x"].get<std::string>()) - fp_poly(sec[j]["x"].get<std::string>());
            auto dy = fp_poly(sec[i]["y"].get<std::string>()) - fp_poly(sec[j]["y"].get<std::string>());
            int total = 0;
            for (const auto& [pi, m] : factor_mod_p(dx))
                total += pi.degree() * std::min(poly_valuation(dx, pi), poly_valuation(dy, pi));
            CHECK(poly_gcd(dx, dy).degree() == total);
        }
}

TEST_CASE("factor_mod_p examples") {
    auto f = factor_mod_p(fp_poly("t^8 - 1"));
    REQUIRE(f.size() == 8);
    std::vector<std::uint64_t> scan;
    for (std::uint64_t x = 0; x < 113; ++x)
        if (Fp(113, x).pow(8).is_one()) scan.push_back(x);
    std::vector<std::uint64_t> got;
    for (const auto& [g, m] : f) {
        CHECK(g.degree() == 1);
        CHECK(m == 1);
        got.push_back((-g.coeff(0)).value());
    }
    std::sort(got.begin(), got.end());
    CHECK(got == scan);

    auto irr = factor_mod_p(fp_poly("t^2 + 1", 3));
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].first.degree() == 2);
    CHECK(irr[0].second == 1);

    auto sq = factor_mod_p(fp_poly("(t - 1)^2", 5));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].first == fp_poly("t - 1", 5));
    CHECK(sq[0].second == 2);
}

TEST_CASE("factor_mod_p properties on random polynomials") {
    Rng rng;
    for (std::uint64_t p : {2ULL, 3ULL, 7ULL, 113ULL}) {
        for (int trial = 0; trial < 25; ++trial) {
            int deg = static_cast<int>(rng.uniform(1, 9));
            std::vector<Fp> c;
            for (int i = 0; i <= deg; ++i) c.push_back(Fp(p, rng.uniform(0, static_cast<long>(p) - 1)));
            c.back() = Fp(p, rng.uniform(1, static_cast<long>(p) - 1));
            UniPoly<Fp> f(Fp(p, 0), c);
            if (trial % 3 == 0) f = f * f;
            auto fac = factor_mod_p(f);
            UniPoly<Fp> back = UniPoly<Fp>::constant(f.leading());
            for (size_t k = 0; k < fac.size(); ++k) {
                CHECK(fac[k].first.is_monic());
                CHECK(is_irreducible_mod_p(fac[k].first));
                for (size_t l = 0; l < k; ++l) CHECK(!(fac[l].first == fac[k].first));
                back = back * fac[k].first.pow(fac[k].second);
            }
            CHECK(back == f);
        }
    }
}

TEST_CASE("roots_in_field") {
    auto K = field_K();
    NFElem r2 = k_elem("(a^4 + 3)/2");
    auto roots = roots_in_field(k_poly("t^2 - 2"), {r2, -r2});
    CHECK(roots.roots.size() == 2);
    CHECK(roots.complete);

    std::vector<NFElem> ti;
    const json sections = load_fixture("sections.json");
    for (const auto& s : sections["fiber_points"]) ti.push_back(k_elem(s.get<std::string>()));
    auto eight = roots_in_field(k_poly("t^8 - 1"), ti);
    CHECK(eight.roots.size() == 8);
    for (const auto& [r, m] : eight.roots) CHECK(m == 1);
    CHECK(eight.complete);

    auto none = roots_in_field(qpoly({1, 0, 1}));
    CHECK(none.roots.empty());
    CHECK(none.complete);

    auto partial = roots_in_field(k_poly("t^2 - 3"));
    CHECK(partial.roots.empty());
    CHECK(!partial.complete);

    auto rat = roots_in_field(qpoly({Rational(-3), Rational(2)}).pow(2) * qpoly({1, 0, 1}));
    REQUIRE(rat.roots.size() == 1);
    CHECK(rat.roots[0].first == Rational(3, 2));
    CHECK(rat.roots[0].second == 2);
}

TEST_CASE("snf examples") {
    auto d1 = snf_with_transforms(IntMatrix({{2, 0}, {0, 4}}));
    CHECK(d1.diagonal == std::vector<Integer>{2, 4});
    auto d2 = snf_with_transforms(IntMatrix({{0, 1}, {1, 0}}));
    CHECK(d2.diagonal == std::vector<Integer>{1, 1});
    auto d3 = snf_with_transforms(IntMatrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    CHECK(d3.diagonal == std::vector<Integer>{2, 6, 12});
    CHECK(d3.u * IntMatrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) * d3.v == d3.d);
}

TEST_CASE("snf of the trivial lattice inside the fixture Neron-Severi lattice") {
    auto lat = load_fixture("lattice.json");
    QVector p2 = json_codec::rational_vector_from(lat["p2"]);
    // generators of NS: the 18 basis vectors and p2, scaled by 2 to clear denominators
    IntMatrix gens(19, 18);
    for (size_t i = 0; i < 18; ++i) gens(i, i) = 2;
    for (size_t j = 0; j < 18; ++j) gens(18, j) = (p2[j] * Rational(2)).num();
    IntMatrix basis2 = row_basis(gens);  // 2 * (Z-basis of NS)
    REQUIRE(basis2.rows() == 18);
    QMatrix ns = Rational(1, 2) * to_rational(basis2);
    QMatrix ns_inv = inverse(ns);
    // coordinates of e, o, a_{1,i} in the NS basis
    QMatrix triv(10, 18);
    for (size_t i = 0; i < 10; ++i) triv(i, i) = 1;
    IntMatrix coords = to_integer(triv * ns_inv);
    auto s = snf_with_transforms(coords);
    std::vector<Integer> expect(9, Integer(1));
    expect.push_back(2);
    CHECK(s.diagonal == expect);
    CHECK(18 - s.diagonal.size() == 8);
}

TEST_CASE("snf invariant factors are stable under unimodular changes") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        size_t r = rng.uniform(1, 5), c = rng.uniform(1, 5);
        IntMatrix m = random_int_matrix(rng, r, c, 6);
        auto s = snf_with_transforms(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(abs(det_bareiss(s.u)) == 1);
        CHECK(abs(det_bareiss(s.v)) == 1);
        for (size_t i = 0; i + 1 < s.diagonal.size(); ++i)
            if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        auto s2 = snf_with_transforms(random_unimodular(rng, r) * m * random_unimodular(rng, c));
        CHECK(s2.diagonal == s.diagonal);
    }
}

TEST_CASE("hnf and integer kernels") {
    IntMatrix m({{2, 4, 6}, {1, 2, 3}, {0, 1, 1}});
    auto h = hnf_with_transform(m);
    CHECK(h.u * m == h.h);
    CHECK(h.rank == 2);
    IntMatrix k = integer_left_kernel(m);
    REQUIRE(k.rows() == 1);
    CHECK(k * m == IntMatrix(1, 3));
}

TEST_CASE("det and charpoly") {
    QMatrix swap = qmat({{0, 1}, {1, 0}});
    CHECK(det(swap) == Rational(-1));
    CHECK(charpoly(swap) == qpoly({-1, 0, 1}));
    CHECK_THROWS_AS(det(QMatrix(2, 3)), DimensionError);

    QMatrix g = gram_B();
    CHECK(det(g) == Rational(-1024));
    CHECK(det(g).abs() == Rational(1024));

    QMatrix f = json_codec::rational_matrix_from(load_fixture("pushforward.json")["f_oy"]);
    auto salem = qpoly({1, 0, -1, -2, -1, 0, 1});
    CHECK(charpoly(f).divisible_by(salem));
}

TEST_CASE("Cayley-Hamilton and Bareiss against charpoly") {
    Rng rng;
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = rng.uniform(1, 8);
        QMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m(i, j) = Rational(rng.uniform(-5, 5), rng.uniform(1, 3));
        auto cp = charpoly(m);
        CHECK(cp.degree() == static_cast<int>(n));
        CHECK(cp.is_monic());
        QMatrix at = cp.eval_in(m, QMatrix::identity(n, Rational(), Rational(1)),
                                [](const Rational& c) { return c; });
        CHECK(at == QMatrix(n, n));
        Rational sign = n % 2 ? Rational(-1) : Rational(1);
        CHECK(det(m) == sign * cp.coeff(0));
    }
}

TEST_CASE("solve and invert") {
    QMatrix id = QMatrix::identity(3, Rational(), Rational(1));
    QVector v = {1, Rational(2, 3), -5};
    CHECK(solve_left(id, v) == v);
    CHECK_THROWS_AS(inverse(qmat({{1, 2}, {2, 4}})), SingularMatrix);

    // intersection numbers of the 2-torsion section with the basis: one with the
    // fiber, none with the zero section, one with every non-identity component,
    // none with the sections s_j
    QVector row(18);
    row[0] = 1;
    for (size_t i = 2; i < 10; ++i) row[i] = 1;
    QMatrix g = gram_B();
    QVector x = solve_left(g, row);
    CHECK(x == json_codec::rational_vector_from(load_fixture("lattice.json")["p2"]));
    CHECK(x * g == row);
    CHECK(inverse(g) * g == QMatrix::identity(18, Rational(), Rational(1)));
}

TEST_CASE("lll examples") {
    auto r1 = lll_reduce(qmat({{1, 0}, {0, 1}}));
    CHECK(r1.u == IntMatrix::identity(2));
    auto r2 = lll_reduce(qmat({{4, 1}, {1, 4}}));
    CHECK(r2.u == IntMatrix::identity(2));
    CHECK_THROWS_AS(lll_reduce(qmat({{1, 0}, {0, -1}})), IndefiniteInput);

    QMatrix g = gram_B();
    QVector h = json_codec::rational_vector_from(load_fixture("lattice.json")["h"]);
    // integral basis of h-perp inside the span of B
    QVector hg = h * g;
    Integer den = common_denominator(hg);
    IntMatrix col(18, 1);
    for (size_t i = 0; i < 18; ++i) col(i, 0) = (hg[i] * Rational(den)).num();
    IntMatrix k = integer_left_kernel(col);
    REQUIRE(k.rows() == 17);
    QMatrix kq = to_rational(k);
    auto red = lll_reduce(kq * g * kq.transpose());
    for (size_t i = 0; i < 17; ++i) CHECK(red.gram(i, i).abs() <= Rational(12));
}

TEST_CASE("lll transform is unimodular and preserves the determinant") {
    Rng rng;
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = rng.uniform(1, 6);
        IntMatrix b = random_int_matrix(rng, n, n, 9);
        if (det_bareiss(b) == 0) continue;
        QMatrix g = to_rational(b) * to_rational(b).transpose();
        if (trial % 2) g = -g;
        auto r = lll_reduce(g);
        CHECK(abs(det_bareiss(r.u)) == 1);
        CHECK(to_rational(r.u) * g * to_rational(r.u).transpose() == r.gram);
        CHECK(det(r.gram) == det(g));
    }
}

TEST_CASE("field tower: (a*b)/b == a") {
    Rng rng;
    auto K = field_K();
    auto rnd_k = [&] {
        std::vector<Rational> c;
        for (int i = 0; i < 8; ++i) c.push_back(Rational(rng.uniform(-4, 4), rng.uniform(1, 3)));
        return K->from_coeffs(c);
    };
    for (int trial = 0; trial < 20; ++trial) {
        Rational a(rng.uniform(-50, 50), rng.uniform(1, 9)), b(rng.uniform(1, 50), rng.uniform(1, 9));
        CHECK((a * b) / b == a);
        Fp x(113, rng.uniform(0, 112)), y(113, rng.uniform(1, 112));
        CHECK((x * y) / y == x);
        NFElem u = rnd_k(), v = rnd_k();
        if (!v.is_zero()) CHECK((u * v) / v == u);

        using RF = RatFunc<Fp>;
        RF t = RF::variable(Fp(113, 0));
        RF p = t * t + RF::constant(Fp(113, rng.uniform(0, 112)));
        RF q = (t - RF::constant(Fp(113, rng.uniform(0, 112)))) / (t * t * t + RF::constant(Fp(113, 1)));
        CHECK((p * q) / q == p);
        using RK = RatFunc<NFElem>;
        RK s = RK::variable(K->zero());
        RK f = s * RK::constant(rnd_k()) + RK::constant(rnd_k());
        RK g = (s * s + RK::constant(rnd_k())) / (s + RK::constant(K->one()));
        if (!g.is_zero()) CHECK((f * g) / g == f);
    }
}

TEST_CASE("RatFunc canonical form is unique") {
    using RF = RatFunc<Rational>;
    RF t = RF::variable(Rational());
    RF one = RF::constant(Rational(1));
    RF a = (t * t - one) / (t - one);
    RF b = t + one;
    CHECK(a == b);
    RF c = (RF::constant(Rational(2)) * t + RF::constant(Rational(2))) / (RF::constant(Rational(4)) * t * t - RF::constant(Rational(4)));
    RF d = RF::constant(Rational(1, 2)) / (t - one);
    CHECK(c == d);
    CHECK(c.den().is_monic());
    CHECK(a.compose(t * t) == t * t + one);
}

TEST_CASE("expression parser") {
    auto p = fp_poly("62*t^4 + 6*t^3 + 106*t^2 + 75*t + 26");
    CHECK(p.degree() == 4);
    CHECK(p.coeff(0).value() == 26);
    CHECK_THROWS_AS(fp_poly("1/t"), ParseError);
    CHECK_THROWS_AS(fp_poly("t + q"), ParseError);
    CHECK(k_elem("(1/2)*a^4 + 3/2") * k_elem("2") == k_elem("a^4 + 3"));
}

TEST_CASE("json scalar encodings round-trip") {
    Rational r(-7, 3);
    CHECK(json_codec::rational_from(json_codec::to_json(r)) == r);
    CHECK(json_codec::to_json(Rational(5)) == json(5));
    QMatrix m = qmat({{1, Rational(1, 2)}, {0, -3}});
    CHECK(json_codec::rational_matrix_from(json_codec::to_json(m)) == m);
    NFElem a = field_K()->gen();
    CHECK(json_codec::nf_elem_from(field_K(), json_codec::to_json(a)) == a);
}
