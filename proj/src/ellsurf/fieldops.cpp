#include "enr/ellsurf/fieldops.hpp"

#include <algorithm>

namespace enr {

namespace {

std::optional<Rational> rational_kth_root(const Rational& a, int k) {
    Integer n, d;
    if (!exact_root(a.num(), static_cast<unsigned>(k), n) || !exact_root(a.den(), static_cast<unsigned>(k), d))
        return std::nullopt;
    return Rational(n, d);
}

/// Reduction of an element of K at the degree-one prime (p, r).
std::optional<Fp> reduce_at(const NFElem& a, std::uint64_t p, const Fp& r) {
    Fp v(p, 0), pw(p, 1);
    for (const auto& c : a.coords()) {
        if (mpz_divisible_ui_p(c.den().get_mpz_t(), p)) return std::nullopt;
        v += Fp::from_rational(p, c) * pw;
        pw *= r;
    }
    return v;
}

struct Probe {
    std::uint64_t p;
    Fp root;
};

/// First three primes above 100 where the minimal polynomial has a simple root.
std::vector<Probe> probes(const NumberField& K) {
    std::vector<Probe> out;
    for (std::uint64_t p = 101; out.size() < 3 && p < 100000; p += 2) {
        if (!is_prime(p)) continue;
        bool ok = true;
        std::vector<Fp> c;
        for (const auto& x : K.minpoly().coeffs()) {
            if (mpz_divisible_ui_p(x.den().get_mpz_t(), p)) ok = false;
            else c.push_back(Fp::from_rational(p, x));
        }
        if (!ok) continue;
        UniPoly<Fp> f(Fp(p, 0), c);
        for (const auto& [r, m] : roots_in_field(f).roots)
            if (m == 1) {
                out.push_back({p, r});
                break;
            }
    }
    return out;
}

/// Products of hint units with exponents 0..7.
std::vector<NFElem> unit_products(const NFElem& ctx, const std::vector<NFElem>& units) {
    std::vector<NFElem> prods{ctx.one()};
    for (const auto& u : units) {
        std::vector<NFElem> next;
        for (const auto& q : prods) {
            NFElem pw = q;
            for (int e = 0; e < 8; ++e) {
                next.push_back(pw);
                pw *= u;
            }
        }
        prods = std::move(next);
    }
    return prods;
}

}  // namespace

std::vector<Fp> roots_of_unity(const Fp& ctx, int k, const FieldHints<Fp>&) {
    std::vector<Fp> c(k + 1, ctx.zero());
    c[0] = -ctx.one();
    c[k] = ctx.one();
    std::vector<Fp> out;
    for (const auto& [r, m] : roots_in_field(UniPoly<Fp>(ctx, c)).roots) out.push_back(r);
    return out;
}

std::vector<NFElem> roots_of_unity(const NFElem& ctx, int k, const FieldHints<NFElem>& hints) {
    std::vector<NFElem> out;
    for (const auto& u : unit_products(ctx, hints.units))
        for (const NFElem& v : {u, -u})
            if (v.pow(k).is_one() && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Fp> kth_root(const Fp& a, int k, const FieldHints<Fp>&) { return fp_kth_root(a, k); }

std::optional<NFElem> kth_root(const NFElem& a, int k, const FieldHints<NFElem>& hints) {
    if (a.is_zero()) return a;
    for (const auto& u : unit_products(a, hints.units)) {
        NFElem rest = a / u.pow(k);
        if (!rest.is_rational()) continue;
        if (auto r = rational_kth_root(rest.rational_part(), k)) {
            NFElem cand = a.field()->from_rational(*r) * u;
            if (cand.pow(k) == a) return cand;
        }
    }
    return std::nullopt;
}

RootList<Fp> base_roots(const UniPoly<Fp>& f, const FieldHints<Fp>&) { return roots_in_field(f); }

RootList<NFElem> base_roots(const UniPoly<NFElem>& f, const FieldHints<NFElem>& hints) {
    return roots_in_field(f, hints.place_candidates);
}

PlaceSearch<Fp> irreducible_factors(const UniPoly<Fp>& f, const FieldHints<Fp>&) {
    PlaceSearch<Fp> out;
    for (const auto& [g, m] : factor_mod_p(f)) out.factors.push_back(g);
    return out;
}

PlaceSearch<NFElem> irreducible_factors(const UniPoly<NFElem>& f, const FieldHints<NFElem>& hints) {
    PlaceSearch<NFElem> out;
    UniPoly<NFElem> rest = squarefree_part(f).monic();
    for (const auto& [r, m] : roots_in_field(rest, hints.place_candidates).roots) {
        UniPoly<NFElem> lin(r, {-r, r.one()});
        out.factors.push_back(lin);
        rest = rest.exact_div(lin);
    }
    out.complete = rest.degree() <= 0;
    return out;
}

ResidueSquare residue_is_square(const UniPoly<Fp>& a, const UniPoly<Fp>& pi) {
    UniPoly<Fp> r = a % pi;
    if (r.is_zero()) return {true, false};
    // Euler criterion in F_q, q = p^deg(pi)
    Integer q = 1;
    for (int i = 0; i < pi.degree(); ++i) q *= static_cast<unsigned long>(pi.zero_elem().modulus());
    Integer e = (q - 1) / 2;
    UniPoly<Fp> acc = UniPoly<Fp>::constant(pi.zero_elem().one()), base = r;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = (acc * acc) % pi;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * base) % pi;
    }
    return {acc.degree() == 0 && acc.coeff(0).is_one(), false};
}

ResidueSquare residue_is_square(const UniPoly<NFElem>& a, const UniPoly<NFElem>& pi) {
    if (pi.degree() != 1) throw UnsupportedResidueTest("square test over a number field needs a degree-one place");
    const NFElem r = -pi.monic().coeff(0);
    const NFElem c = a(r);
    if (c.is_zero()) return {true, false};
    int tested = 0;
    for (const auto& pr : probes(*c.field())) {
        auto v = reduce_at(c, pr.p, pr.root);
        if (!v || v->is_zero()) continue;
        ++tested;
        if (!v->is_square()) return {false, false};
    }
    if (tested == 0) throw UnsupportedResidueTest("no usable degree-one primes for the square test");
    return {true, true};
}

}  // namespace enr
