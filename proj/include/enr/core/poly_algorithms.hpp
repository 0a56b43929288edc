#pragma once

#include "enr/core/number_field.hpp"
#include "enr/core/prime_field.hpp"
#include "enr/core/upoly.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace enr {

template <class F>
struct GcdSquarefree {
    UniPoly<F> gcd;
    UniPoly<F> squarefree_part;
};

/// Squarefree decomposition f = c * prod g_i^i (Yun). Valid in characteristic
/// zero or when the characteristic exceeds deg f; prime fields of small
/// characteristic go through squarefree_decomposition_mod_p instead.
template <class F>
std::vector<std::pair<UniPoly<F>, int>> yun(const UniPoly<F>& f) {
    std::vector<std::pair<UniPoly<F>, int>> out;
    if (f.degree() <= 0) return out;
    UniPoly<F> fm = f.monic();
    UniPoly<F> d = fm.derivative();
    UniPoly<F> a = poly_gcd(fm, d);
    UniPoly<F> b = fm.exact_div(a);
    UniPoly<F> c = d.exact_div(a);
    UniPoly<F> e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly<F> g = poly_gcd(b, e);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b.exact_div(g);
        c = e.exact_div(g);
        e = c - b.derivative();
        ++i;
    }
    return out;
}

std::vector<std::pair<UniPoly<Fp>, int>> squarefree_decomposition_mod_p(const UniPoly<Fp>& f);

template <class F>
std::vector<std::pair<UniPoly<F>, int>> squarefree_decomposition(const UniPoly<F>& f) {
    return yun(f);
}
template <>
inline std::vector<std::pair<UniPoly<Fp>, int>> squarefree_decomposition(const UniPoly<Fp>& f) {
    return squarefree_decomposition_mod_p(f);
}

template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& f) {
    UniPoly<F> r = UniPoly<F>::constant(f.zero_elem().one());
    for (const auto& [g, m] : squarefree_decomposition(f)) r = r * g;
    return r;
}

template <class F>
GcdSquarefree<F> poly_gcd_squarefree(const UniPoly<F>& f, const UniPoly<F>& g) {
    return {poly_gcd(f, g), squarefree_part(f)};
}

/// Monic irreducible factors with multiplicities (Cantor-Zassenhaus, fixed seed).
std::vector<std::pair<UniPoly<Fp>, int>> factor_mod_p(const UniPoly<Fp>& f);

/// Irreducibility over F_p via Rabin's test.
bool is_irreducible_mod_p(const UniPoly<Fp>& f);

template <class F>
struct RootList {
    std::vector<std::pair<F, int>> roots;
    bool complete = false;
};

/// Multiplicity of the root r of f (0 if not a root).
template <class F>
int root_multiplicity(UniPoly<F> f, const F& r) {
    if (f.is_zero()) return 0;
    UniPoly<F> lin(r, {-r, r.one()});
    return poly_valuation(f, lin);
}

RootList<Fp> roots_in_field(const UniPoly<Fp>& f);
RootList<Rational> roots_in_field(const UniPoly<Rational>& f);
/// Rational roots plus validated candidates; complete only if the roots found
/// account for the full degree.
RootList<NFElem> roots_in_field(const UniPoly<NFElem>& f, const std::vector<NFElem>& candidates = {});

/// Returns g with g^k = f when f = c * h^k and c has a k-th root among
/// root_of_leading(c); otherwise nullopt.
template <class F, class LeadRoot>
std::optional<UniPoly<F>> poly_perfect_power(const UniPoly<F>& f, int k, LeadRoot root_of_leading) {
    if (f.is_zero()) return f;
    UniPoly<F> g = UniPoly<F>::constant(f.zero_elem().one());
    for (const auto& [h, m] : squarefree_decomposition(f)) {
        if (m % k != 0) return std::nullopt;
        g = g * h.pow(static_cast<unsigned>(m / k));
    }
    std::optional<F> c = root_of_leading(f.leading(), k);
    if (!c) return std::nullopt;
    UniPoly<F> r = g.scaled(*c);
    if (!(r.pow(static_cast<unsigned>(k)) == f)) return std::nullopt;
    return r;
}

/// k-th root of a in F_p by exhaustive search over a^(1/k) candidates.
std::optional<Fp> fp_kth_root(const Fp& a, int k);

}  // namespace enr
