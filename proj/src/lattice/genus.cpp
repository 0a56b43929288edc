#include "enr/lattice/genus.hpp"
#include "enr/core/prime_field.hpp"

#include <deque>

namespace enr {

namespace {

long modp(long a, long p) { return ((a % p) + p) % p; }

long inv_mod(long a, long p) { return Fp(p, a).inv().value(); }

QuadLattice reduced_form(const QuadLattice& l) {
    LLLResult r = lll_reduce(l.gram());
    return QuadLattice(to_rational(r.u) * l.gram() * to_rational(r.u).transpose());
}

}  // namespace

std::vector<QuadLattice> kneser_neighbors(const QuadLattice& l, long p) {
    if (!l.is_even()) throw std::invalid_argument("Kneser neighbors need an even lattice");
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("p must be an odd prime");
    if (mod_floor(l.det().num(), Integer(p)) == 0) throw std::invalid_argument("p divides the determinant");
    const int s = l.is_positive_definite() ? 1 : l.is_negative_definite() ? -1 : 0;
    if (!s) throw IndefiniteLattice("Kneser neighbors need a definite lattice");
    const size_t n = l.rank();
    IntMatrix gi = l.int_gram();
    std::vector<std::vector<long>> g(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g[i][j] = s * to_i64(gi(i, j));

    std::vector<QuadLattice> out;
    std::vector<long> x(n, 0);
    // Projective points: first nonzero coordinate equal to 1.
    for (size_t lead = n; lead-- > 0;) {
        std::fill(x.begin(), x.end(), 0);
        x[lead] = 1;
        while (true) {
            long q = 0;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) q += x[i] * g[i][j] * x[j];
            if (modp(q / 2, p) == 0) {
                std::vector<long> a(n, 0);
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j) a[i] += g[i][j] * x[j];
                size_t k = 0;
                while (modp(a[k], p) == 0) ++k;
                const long ak_inv = inv_mod(modp(a[k], p), p);
                std::vector<long> xl = x;
                xl[k] += p * modp(-(q / (2 * p)) * ak_inv, p);
                IntMatrix gens(n + 1, n);
                for (size_t i = 0; i < n; ++i) {
                    if (i == k) {
                        gens(i, k) = p * p;
                        continue;
                    }
                    gens(i, i) = p;
                    gens(i, k) = -p * modp(a[i] * ak_inv, p);
                }
                for (size_t j = 0; j < n; ++j) gens(n, j) = xl[j];
                QMatrix basis = Rational(1, p) * to_rational(row_basis(gens));
                QuadLattice nb = l.sublattice(basis);
                if (!nb.is_even() || nb.det() != l.det()) throw std::logic_error("neighbor construction failed");
                out.push_back(nb);
            }
            size_t i = lead + 1;
            while (i < n && ++x[i] == p) x[i++] = 0;
            if (i == n) break;
        }
    }
    if (out.empty()) throw NoIsotropicVector("no isotropic vector mod p");
    return out;
}

std::vector<GenusClass> genus_classes(const QuadLattice& l, long p, size_t max_classes) {
    const GenusFingerprint fp0 = genus_fingerprint(l);
    std::vector<QuadLattice> reps{reduced_form(l)};
    long bound = IsometryData(reps[0]).bound();
    std::vector<IsometryData> data{IsometryData(reps[0], bound)};
    auto rebuild = [&](long b) {
        bound = b;
        data.clear();
        for (const auto& r : reps) data.emplace_back(r, bound);
    };

    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        const size_t c = queue.front();
        queue.pop_front();
        for (const auto& nb : kneser_neighbors(reps[c], p)) {
            QuadLattice red = reduced_form(nb);
            IsometryData d(red, bound);
            if (d.bound() > bound) {
                rebuild(d.bound());
            }
            bool known = false;
            for (size_t i = 0; i < data.size() && !known; ++i) known = isometry_test(data[i], d).has_value();
            if (known) continue;
            if (!(genus_fingerprint(red) == fp0)) throw std::logic_error("neighbor left the genus");
            reps.push_back(red);
            data.push_back(std::move(d));
            queue.push_back(reps.size() - 1);
            if (reps.size() > max_classes) throw std::length_error("genus enumeration exceeds the class cap");
        }
    }
    std::vector<GenusClass> out;
    for (size_t i = 0; i < reps.size(); ++i)
        out.push_back({reps[i], Rational(data[i].sign() * data[i].min_norm())});
    return out;
}

}  // namespace enr
