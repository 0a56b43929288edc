#pragma once

#include "enr/core/expr.hpp"
#include "enr/core/json_codec.hpp"
#include "enr/core/linalg.hpp"
#include "enr/core/number_field.hpp"
#include "enr/core/prime_field.hpp"
#include "enr/lattice/lattice.hpp"

#include <fstream>
#include <random>
#include <string>

namespace testsupport {

using namespace enr;
using nlohmann::json;

inline json load_fixture(const std::string& name) {
    std::ifstream in(std::string(ENR_FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("cannot open fixture " + name);
    return json::parse(in);
}

inline FieldPtr field_K() {
    static FieldPtr K = NumberField::create(
        UniPoly<Rational>(Rational(), {Rational(1), 0, 0, 0, 6, 0, 0, 0, 1}), "a");
    return K;
}

inline UniPoly<Fp> fp_poly(const std::string& s, std::uint64_t p = 113) {
    ExprParser<Fp> parser(Fp(p, 0), {"t"});
    return parser.parse(s).to_univariate(0);
}

inline UniPoly<NFElem> k_poly(const std::string& s) {
    ExprParser<NFElem> parser(field_K()->zero(), {"t"}, {{"a", field_K()->gen()}});
    return parser.parse(s).to_univariate(0);
}

inline NFElem k_elem(const std::string& s) {
    ExprParser<NFElem> parser(field_K()->zero(), {}, {{"a", field_K()->gen()}});
    return parser.parse(s).constant_term();
}

inline QMatrix gram_B() { return json_codec::rational_matrix_from(load_fixture("lattice.json")["gram"]); }

struct NSData {
    QuadLattice span;    // Z^18 with the Gram G_B
    EmbeddedLattice ns;  // span + Z p2
    QVector p2, h;
    QMatrix f_oy, iota;  // action on basis coordinates
};

inline const NSData& ns_data() {
    static const NSData d = [] {
        auto lat = load_fixture("lattice.json");
        auto pf = load_fixture("pushforward.json");
        NSData out;
        out.span = QuadLattice(json_codec::rational_matrix_from(lat["gram"]));
        out.p2 = json_codec::rational_vector_from(lat["p2"]);
        out.h = json_codec::rational_vector_from(lat["h"]);
        out.ns = overlattice(out.span, {out.p2});
        out.f_oy = json_codec::rational_matrix_from(pf["f_oy"]);
        out.iota = json_codec::rational_matrix_from(pf["iota"]);
        return out;
    }();
    return d;
}

/// Isometry of NS given by a matrix on basis coordinates.
inline LatticeIsometry ns_isometry(const QMatrix& m) {
    const auto& d = ns_data();
    return LatticeIsometry(d.ns.lattice, restrict_to_basis(m, d.ns.basis));
}

struct Rng {
    std::mt19937_64 gen{20240611};
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
};

inline IntMatrix random_unimodular(Rng& rng, size_t n, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    for (int s = 0; s < steps; ++s) {
        size_t i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
        if (i == j) continue;
        long f = rng.uniform(-2, 2);
        for (size_t k = 0; k < n; ++k) u(i, k) += f * u(j, k);
        if (rng.uniform(0, 3) == 0) u.swap_rows(i, j);
    }
    return u;
}

inline IntMatrix random_int_matrix(Rng& rng, size_t r, size_t c, long bound) {
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-bound, bound);
    return m;
}

}  // namespace testsupport
