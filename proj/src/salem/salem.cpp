#include "enr/salem/salem.hpp"
#include "enr/core/poly_algorithms.hpp"

namespace enr {

namespace {

int sign_at(const RatPoly& p, const std::optional<Rational>& x, bool minus_infinity) {
    if (x) return p(*x).sign();
    int s = p.leading().sign();
    return minus_infinity && p.degree() % 2 ? -s : s;
}

size_t variations(const std::vector<RatPoly>& seq, const std::optional<Rational>& x, bool minus_infinity) {
    size_t v = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = sign_at(p, x, minus_infinity);
        if (s == 0) continue;
        if (last && s != last) ++v;
        last = s;
    }
    return v;
}

void check_input(const RatPoly& f) {
    if (f.is_zero() || !f.is_monic()) throw NotMonic("polynomial is not monic");
    for (const auto& c : f.coeffs())
        if (!c.is_integer()) throw std::invalid_argument("polynomial has non-integer coefficients");
    if (f.coeff(0).is_zero()) throw ZeroConstantTerm("polynomial vanishes at 0");
}

Rational cauchy_bound(const RatPoly& f) {
    Rational m;
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, (f.coeff(i) / f.leading()).abs());
    return m + Rational(1);
}

}  // namespace

RatPoly int_poly(const std::vector<long>& coeffs) {
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return RatPoly(Rational(), c);
}

std::vector<RatPoly> sturm_sequence(const RatPoly& f) {
    std::vector<RatPoly> seq{f};
    if (f.degree() < 1) return seq;
    seq.push_back(f.derivative());
    while (!seq.back().is_constant()) {
        RatPoly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

size_t sturm_count(const std::vector<RatPoly>& seq, const std::optional<Rational>& lo,
                   const std::optional<Rational>& hi) {
    size_t a = variations(seq, lo, true), b = variations(seq, hi, false);
    return a >= b ? a - b : 0;
}

size_t count_distinct_roots(const RatPoly& f, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    return sturm_count(sturm_sequence(f), lo, hi);
}

size_t count_roots_with_multiplicity(const RatPoly& f, const std::optional<Rational>& lo,
                                     const std::optional<Rational>& hi) {
    size_t total = 0;
    for (const auto& [g, m] : yun(f)) {
        if (g.degree() < 1) continue;
        size_t n = count_distinct_roots(g, lo, hi);
        if (lo && g(*lo).is_zero()) ++n;
        total += n * static_cast<size_t>(m);
    }
    return total;
}

RootInterval isolate_root(const RatPoly& f, Rational lo, Rational hi, const Rational& width) {
    const RatPoly sf = squarefree_part(f);
    auto seq = sturm_sequence(sf);
    if (sturm_count(seq, lo, hi) != 1) throw std::invalid_argument("interval does not isolate a single root");
    while (hi - lo >= width) {
        Rational mid = (lo + hi) / Rational(2);
        if (sturm_count(seq, lo, mid) == 1)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi, f};
}

bool is_reciprocal(const RatPoly& f) { return f.reversed(f.degree()) == f; }

RatPoly trace_polynomial(const RatPoly& f) {
    if (f.degree() % 2 || !is_reciprocal(f)) throw std::invalid_argument("trace polynomial needs even reciprocal input");
    const int m = f.degree() / 2;
    const RatPoly y = RatPoly::variable(Rational());
    // x^k + x^-k = T_k(x + 1/x) with T_0 = 2, T_1 = y, T_{k+1} = y T_k - T_{k-1}.
    RatPoly prev = RatPoly::constant(Rational(2)), cur = y;
    RatPoly g = RatPoly::constant(f.coeff(m));
    for (int k = 1; k <= m; ++k) {
        g = g + cur.scaled(f.coeff(m + k));
        RatPoly next = y * cur - prev;
        prev = cur;
        cur = next;
    }
    return g;
}

SalemResult is_salem(const RatPoly& f) {
    check_input(f);
    SalemResult res;
    if (f.degree() < 2 || f.degree() % 2 || !is_reciprocal(f)) return res;
    const size_t m = static_cast<size_t>(f.degree() / 2);
    const RatPoly g = trace_polynomial(f);
    const Rational two(2);
    if (count_roots_with_multiplicity(g, std::nullopt, std::nullopt) != m) return res;
    if (count_distinct_roots(g, two, std::nullopt) != 1) return res;
    if (count_roots_with_multiplicity(g, Rational(-2), two) != m - 1) return res;
    res.salem = true;
    res.root = isolate_root(f, Rational(1), cauchy_bound(f), Rational(1, 1 << 20));
    return res;
}

bool unit_circle_factor_test(const RatPoly& f) {
    check_input(f);
    RatPoly r = f;
    for (const RatPoly& lin : {int_poly({-1, 1}), int_poly({1, 1})})
        while (r.degree() >= 1 && (r % lin).is_zero()) r = r / lin;
    if (r.degree() == 0) return true;
    if (r.degree() % 2 || !is_reciprocal(r)) return false;
    const RatPoly g = trace_polynomial(r);
    return count_roots_with_multiplicity(g, Rational(-2), Rational(2)) == static_cast<size_t>(g.degree());
}

EntropyCheck matrix_entropy_check(const QMatrix& m, const RatPoly& salem) {
    EntropyCheck out;
    out.charpoly = charpoly(m);
    out.divides = (out.charpoly % salem).is_zero();
    if (!out.divides) return out;
    out.cofactor = out.charpoly / salem;
    out.cofactor_on_circle = unit_circle_factor_test(out.cofactor);
    if (*out.cofactor_on_circle) {
        auto s = is_salem(salem);
        if (s.salem) out.radius = s.root;
    }
    return out;
}

}  // namespace enr
