#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enr/hypgeo/hypgeo.hpp"
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace enr;
using namespace testsupport;

namespace {

/// NS in its own coordinates, polarized by h.
const PolarizedLattice& ns_polarized() {
    static const PolarizedLattice p = [] {
        const auto& d = ns_data();
        return PolarizedLattice(d.ns.lattice, solve_left(d.ns.basis, d.h));
    }();
    return p;
}

QVector to_ns(const QVector& b) { return solve_left(ns_data().ns.basis, b); }

const std::vector<QVector>& d1() {
    static const auto v = slice_vectors(ns_polarized(), 1, Rational(-2));
    return v;
}

QMatrix rows(const std::vector<QVector>& v) {
    QMatrix m(v.size(), v.empty() ? 0 : v[0].size());
    for (size_t i = 0; i < v.size(); ++i) m.set_row(i, v[i]);
    return m;
}

QVector neg(QVector v) {
    for (auto& x : v) x = -x;
    return v;
}

}  // namespace

TEST_CASE("isotropic slices") {
    const auto& p = ns_polarized();
    CHECK(p.lattice().norm(p.h()) == Rational(4));
    CHECK(slice_vectors(p, 1, Rational(0)).empty());
    auto e = slice_vectors(p, 2, Rational(0));
    CHECK(e.size() == 2);
    for (const auto& x : e) CHECK(p.lattice().pair(x, p.h()) == Rational(2));
}

TEST_CASE("rational curve slices") {
    const auto& p = ns_polarized();
    const auto& one = d1();
    CHECK(one.size() == 32);
    CHECK(rank(rows(one)) == 14);
    auto two = slice_vectors(p, 2, Rational(-2), one);
    CHECK(two.size() == 160);
    for (const auto& y : two)
        for (const auto& x : one) CHECK(p.lattice().pair(x, y).sign() >= 0);
}

TEST_CASE("slice errors") {
    const auto& p = ns_polarized();
    CHECK_THROWS_AS(slice_vectors(p, 0, Rational(0)), InfiniteSlice);
    PolarizedLattice twice(p.lattice(), [&] {
        QVector v = p.h();
        for (auto& x : v) x *= Rational(2);
        return v;
    }());
    CHECK_THROWS_AS(slice_vectors(twice, 1, Rational(-2)), NoSolution);
}

TEST_CASE("separating roots") {
    const auto& p = ns_polarized();
    const auto& d = ns_data();
    CHECK(separating_roots(p, p.h()).empty());
    QVector hf = to_ns(d.h * d.f_oy);
    CHECK(p.lattice().norm(hf) == Rational(4));
    CHECK(separating_roots(p, hf).empty());

    const QVector& r0 = d1().front();
    QVector h2 = reflect(p.lattice(), p.h(), r0);
    auto sep = separating_roots(p, h2);
    CHECK(std::find(sep.begin(), sep.end(), r0) != sep.end());
    for (const auto& r : sep) {
        CHECK(p.lattice().norm(r) == Rational(-2));
        CHECK(p.lattice().pair(r, p.h()).sign() > 0);
        CHECK(p.lattice().pair(r, h2).sign() < 0);
    }
    CHECK_THROWS_AS(separating_roots(p, neg(p.h())), NotInPositiveCone);
}

TEST_CASE("relative ampleness") {
    const auto& p = ns_polarized();
    const auto& d = ns_data();
    CHECK(is_ample_relative(p, p.h()));
    CHECK(is_ample_relative(p, to_ns(d.h * d.f_oy)));
    const QVector& r = d1().front();
    QVector v = p.h();
    for (size_t i = 0; i < v.size(); ++i) v[i] -= Rational(3) * r[i];
    CHECK(!is_ample_relative(p, v));
    CHECK(!is_ample_relative(p, reflect(p.lattice(), p.h(), r)));
}

TEST_CASE("property: slices are stable under isometries fixing h") {
    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        // U + A1(-1)^k, h in U; signed permutations of the A1 summands fix h
        const size_t k = rng.uniform(2, 5), n = k + 2;
        IntMatrix g(n, n);
        g(0, 1) = g(1, 0) = 1;
        for (size_t i = 2; i < n; ++i) g(i, i) = -2;
        IntMatrix s(n, n);
        s(0, 0) = s(1, 1) = 1;
        std::vector<size_t> perm(k);
        for (size_t i = 0; i < k; ++i) perm[i] = i;
        for (size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(0, static_cast<long>(i) - 1)]);
        for (size_t i = 0; i < k; ++i) s(2 + i, 2 + perm[i]) = rng.uniform(0, 1) ? 1 : -1;
        IntMatrix u = random_unimodular(rng, n, 4);
        QMatrix uq = to_rational(u), ui = inverse(uq);
        QuadLattice l = QuadLattice::from_int(u * g * u.transpose());
        QVector h0(n);
        h0[0] = 1;
        h0[1] = rng.uniform(1, 2);
        PolarizedLattice p(l, h0 * ui);
        QMatrix m = uq * to_rational(s) * ui;
        REQUIRE(p.h() * m == p.h());
        LatticeIsometry iso(l, to_integer(m));
        const Integer c = rng.uniform(1, 3);
        auto v = slice_vectors(p, c, Rational(-2));
        std::set<QVector> a(v.begin(), v.end()), img;
        for (const auto& x : v) img.insert(x * m);
        CHECK(a == img);
    }
}

TEST_CASE("property: separating roots are antisymmetric") {
    const auto& p = ns_polarized();
    const QVector h2 = reflect(p.lattice(), p.h(), d1().front());
    PolarizedLattice q(p.lattice(), h2);
    auto ab = separating_roots(p, h2);
    auto ba = separating_roots(q, p.h());
    std::set<QVector> negated;
    for (const auto& r : ba) negated.insert(neg(r));
    CHECK(std::set<QVector>(ab.begin(), ab.end()) == negated);
}

TEST_CASE("property: slices agree with a box search on small hyperbolic lattices") {
    Rng rng;
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const size_t n = rng.uniform(2, 4);
        // U + negative definite diagonal block
        IntMatrix g(n, n);
        g(0, 1) = g(1, 0) = 1;
        g(1, 1) = -2 * rng.uniform(0, 1);
        for (size_t i = 2; i < n; ++i) g(i, i) = -2 * rng.uniform(1, 3);
        IntMatrix u = random_unimodular(rng, n, 4);
        IntMatrix gu = u * g * u.transpose();
        QuadLattice l = QuadLattice::from_int(gu);
        QVector h(n);
        for (auto& x : h) x = rng.uniform(-2, 2);
        if (l.norm(h).sign() <= 0) continue;
        PolarizedLattice p(l, h);
        const Integer c = rng.uniform(1, 3);
        const Rational nm(-2 * rng.uniform(0, 2));
        std::vector<QVector> got;
        try {
            got = slice_vectors(p, c, nm);
        } catch (const NoSolution&) {
            continue;
        }
        std::set<QVector> in_box, brute;
        for (const auto& x : got) {
            CHECK(l.pair(x, h) == Rational(c));
            CHECK(l.norm(x) == nm);
            if (std::all_of(x.begin(), x.end(), [](const Rational& r) { return r.abs() <= Rational(6); })) in_box.insert(x);
        }
        std::vector<long> z(n, -6);
        while (true) {
            QVector x(n);
            for (size_t i = 0; i < n; ++i) x[i] = z[i];
            if (l.pair(x, h) == Rational(c) && l.norm(x) == nm) brute.insert(x);
            size_t i = 0;
            while (i < n && ++z[i] == 7) z[i++] = -6;
            if (i == n) break;
        }
        CHECK(in_box == brute);
        ++checked;
    }
    CHECK(checked > 25);
}
