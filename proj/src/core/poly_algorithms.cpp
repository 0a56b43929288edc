#include "enr/core/poly_algorithms.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace enr {

namespace {

using PolyP = UniPoly<Fp>;

PolyP x_poly(const Fp& ctx) { return PolyP::variable(ctx); }

PolyP powmod(PolyP base, const Integer& e, const PolyP& mod) {
    PolyP r = PolyP::constant(mod.zero_elem().one());
    base = base % mod;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = (r * r) % mod;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % mod;
    }
    return r;
}

/// f(x) = g(x)^p in characteristic p: returns g.
PolyP pth_root(const PolyP& f, std::uint64_t p) {
    std::vector<Fp> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
    return PolyP(f.zero_elem(), std::move(c));
}

void merge(std::map<std::vector<std::uint64_t>, std::pair<PolyP, int>>& acc, const PolyP& g, int m) {
    std::vector<std::uint64_t> key;
    for (const auto& c : g.coeffs()) key.push_back(c.value());
    auto it = acc.find(key);
    if (it == acc.end()) acc.emplace(key, std::make_pair(g, m));
    else it->second.second += m;
}

void sff(const PolyP& f, int scale, std::map<std::vector<std::uint64_t>, std::pair<PolyP, int>>& acc) {
    if (f.degree() <= 0) return;
    const std::uint64_t p = f.zero_elem().modulus();
    PolyP d = f.derivative();
    if (d.is_zero()) {
        sff(pth_root(f, p), scale * static_cast<int>(p), acc);
        return;
    }
    PolyP c = poly_gcd(f, d);
    PolyP w = f.exact_div(c);
    int i = 1;
    while (w.degree() > 0) {
        PolyP y = poly_gcd(w, c);
        PolyP fac = w.exact_div(y);
        if (fac.degree() > 0) merge(acc, fac.monic(), i * scale);
        ++i;
        w = y;
        c = c.exact_div(y);
    }
    if (c.degree() > 0) sff(pth_root(c.monic(), p), scale * static_cast<int>(p), acc);
}

std::vector<std::pair<PolyP, int>> distinct_degree(PolyP f) {
    std::vector<std::pair<PolyP, int>> out;
    const Fp z = f.zero_elem();
    const Integer p = static_cast<unsigned long>(z.modulus());
    PolyP x = x_poly(z);
    PolyP h = x % f;
    int d = 0;
    while (2 * (d + 1) <= f.degree()) {
        ++d;
        h = powmod(h, p, f);
        PolyP g = poly_gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f.exact_div(g);
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

void equal_degree(const PolyP& g, int d, std::mt19937_64& rng, std::vector<PolyP>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const Fp z = g.zero_elem();
    const std::uint64_t p = z.modulus();
    const int n = g.degree();
    Integer pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
    while (true) {
        std::vector<Fp> c;
        for (int i = 0; i < n; ++i) c.push_back(Fp(p, static_cast<std::int64_t>(rng() % p)));
        PolyP a(z, std::move(c));
        if (a.degree() <= 0) continue;
        PolyP b;
        if (p == 2) {
            // trace map F_{2^d} -> F_2 evaluated on a
            PolyP t = a % g, s = t;
            for (int i = 1; i < d; ++i) {
                t = (t * t) % g;
                s = s + t;
            }
            b = s;
        } else {
            Integer e = (pd - 1) / 2;
            b = powmod(a, e, g) - PolyP::constant(z.one());
        }
        PolyP h = poly_gcd(g, b);
        if (h.degree() > 0 && h.degree() < n) {
            equal_degree(h, d, rng, out);
            equal_degree(g.exact_div(h).monic(), d, rng, out);
            return;
        }
    }
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool poly_less(const PolyP& a, const PolyP& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i).value() != b.coeff(i).value()) return a.coeff(i).value() < b.coeff(i).value();
    return false;
}

std::vector<Integer> positive_divisors(Integer n) {
    n = abs(n);
    std::vector<std::pair<Integer, int>> fac;
    for (Integer q = 2; q * q <= n; ++q) {
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e) fac.emplace_back(q, e);
    }
    if (n > 1) fac.emplace_back(n, 1);
    std::vector<Integer> divs = {1};
    for (const auto& [q, e] : fac) {
        size_t sz = divs.size();
        Integer pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= q;
            for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return divs;
}

}  // namespace

std::vector<std::pair<UniPoly<Fp>, int>> squarefree_decomposition_mod_p(const UniPoly<Fp>& f) {
    std::map<std::vector<std::uint64_t>, std::pair<PolyP, int>> acc;
    if (f.degree() > 0) sff(f.monic(), 1, acc);
    std::vector<std::pair<PolyP, int>> out;
    for (auto& [k, v] : acc) out.push_back(v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

std::vector<std::pair<UniPoly<Fp>, int>> factor_mod_p(const UniPoly<Fp>& f) {
    if (f.is_zero()) throw ArithmeticError("factor_mod_p: zero polynomial");
    std::mt19937_64 rng(0x5eed);
    std::vector<std::pair<PolyP, int>> out;
    for (const auto& [sq, m] : squarefree_decomposition_mod_p(f)) {
        for (const auto& [g, d] : distinct_degree(sq)) {
            std::vector<PolyP> parts;
            equal_degree(g, d, rng, parts);
            for (auto& h : parts) out.emplace_back(std::move(h), m);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (poly_less(a.first, b.first)) return true;
        if (poly_less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible_mod_p(const UniPoly<Fp>& f) {
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const Fp z = f.zero_elem();
    const std::uint64_t p = z.modulus();
    PolyP fm = f.monic(), x = x_poly(z);
    for (std::uint64_t q : prime_divisors(static_cast<std::uint64_t>(n))) {
        Integer e;
        mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(n / q));
        PolyP h = powmod(x, e, fm) - x;
        if (poly_gcd(fm, h).degree() > 0) return false;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(n));
    return ((powmod(x, e, fm) - x) % fm).is_zero();
}

RootList<Fp> roots_in_field(const UniPoly<Fp>& f) {
    RootList<Fp> out;
    out.complete = true;
    if (f.is_zero()) throw ArithmeticError("roots_in_field: zero polynomial");
    for (const auto& [g, m] : factor_mod_p(f))
        if (g.degree() == 1) out.roots.emplace_back(-g.coeff(0), m);
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

RootList<Rational> roots_in_field(const UniPoly<Rational>& f) {
    RootList<Rational> out;
    out.complete = true;
    if (f.is_zero()) throw ArithmeticError("roots_in_field: zero polynomial");
    if (f.degree() == 0) return out;
    UniPoly<Rational> g = squarefree_part(f);
    Integer den = 1;
    for (const auto& c : g.coeffs()) den = lcm(den, c.den());
    std::vector<Integer> ic;
    for (const auto& c : g.coeffs()) ic.push_back((c * Rational(den)).num());
    std::set<Rational> found;
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) found.insert(Rational(0));
    const Integer& a0 = ic[low];
    const Integer& an = ic.back();
    for (const Integer& num : positive_divisors(a0))
        for (const Integer& dn : positive_divisors(an))
            for (int s : {1, -1}) {
                Rational r(Integer(s * num), dn);
                if (g(r).is_zero()) found.insert(r);
            }
    for (const auto& r : found) out.roots.emplace_back(r, root_multiplicity(f, r));
    return out;
}

RootList<NFElem> roots_in_field(const UniPoly<NFElem>& f, const std::vector<NFElem>& candidates) {
    RootList<NFElem> out;
    if (f.is_zero()) throw ArithmeticError("roots_in_field: zero polynomial");
    const NFElem z = f.zero_elem();
    const FieldPtr& K = z.field();
    int total = 0;
    auto add = [&](const NFElem& r) {
        for (const auto& [q, m] : out.roots)
            if (q == r) return;
        if (!f(r).is_zero()) return;
        int m = root_multiplicity(f, r);
        out.roots.emplace_back(r, m);
        total += m;
    };
    bool rational_coeffs = true;
    for (const auto& c : f.coeffs()) rational_coeffs = rational_coeffs && c.is_rational();
    if (rational_coeffs) {
        std::vector<Rational> rc;
        for (const auto& c : f.coeffs()) rc.push_back(c.rational_part());
        for (const auto& [r, m] : roots_in_field(UniPoly<Rational>(Rational(), rc)).roots) add(K->from_rational(r));
    }
    for (const auto& c : candidates) add(c);
    out.complete = total == f.degree() || K->degree() == 1;
    return out;
}

std::optional<Fp> fp_kth_root(const Fp& a, int k) {
    if (a.is_zero()) return a;
    const std::uint64_t p = a.modulus();
    for (std::uint64_t x = 1; x < p; ++x) {
        Fp c(p, static_cast<std::int64_t>(x));
        if (c.pow(static_cast<std::uint64_t>(k)) == a) return c;
    }
    return std::nullopt;
}

}  // namespace enr
