#include "enr/lattice/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <numbers>
#include <set>

namespace enr {

namespace {

Rational mod_rational(const Rational& r, const Rational& m) { return r - m * Rational((r / m).floor()); }

QMatrix rows_to_matrix(const std::vector<QVector>& rows, size_t n) {
    QMatrix m(rows.size(), n);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

EmbeddedLattice embed(const QuadLattice& l, const QMatrix& basis) {
    EmbeddedLattice e{basis, l.sublattice(basis), 0};
    e.radical_rank = basis.rows() - rank(e.lattice.gram());
    return e;
}

}  // namespace

QuadLattice::QuadLattice(QMatrix gram) : QuadLattice(std::move(gram), true) {}

QuadLattice QuadLattice::allow_degenerate(QMatrix gram) { return QuadLattice(std::move(gram), false); }

QuadLattice::QuadLattice(QMatrix gram, bool check) : g_(std::move(gram)) {
    if (!g_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
    det_ = g_.rows() ? enr::det(g_) : Rational(1);
    if (check && det_.is_zero()) throw DegenerateLattice("Gram matrix is singular");
}

bool QuadLattice::is_integral() const { return enr::is_integral(g_); }

bool QuadLattice::is_even() const {
    if (!is_integral()) return false;
    for (size_t i = 0; i < rank(); ++i)
        if (mod_floor(g_(i, i).num(), Integer(2)) != 0) return false;
    return true;
}

bool QuadLattice::is_positive_definite() const { return signature().positive == rank(); }
bool QuadLattice::is_negative_definite() const { return signature().negative == rank(); }

IntMatrix QuadLattice::int_gram() const {
    if (!is_integral()) throw std::domain_error("Gram matrix is not integral");
    return to_integer(g_);
}

QuadLattice QuadLattice::scaled(const Rational& c) const { return QuadLattice(c * g_, !is_degenerate()); }

QuadLattice QuadLattice::sublattice(const QMatrix& basis) const {
    return allow_degenerate(basis * g_ * basis.transpose());
}

Integer DiscGroup::order() const {
    Integer n = 1;
    for (const auto& d : factors) n *= d;
    return n;
}

std::vector<Integer> DiscGroup::coordinates(const QVector& dual) const {
    QVector z = dual * coord_map;
    std::vector<Integer> out;
    for (size_t i = 0; i < z.size(); ++i) {
        if (!z[i].is_integer()) throw std::domain_error("vector is not in the dual lattice");
        out.push_back(mod_floor(z[i].num(), factors[i]));
    }
    return out;
}

QVector DiscGroup::element(const std::vector<Integer>& coords) const {
    QVector x(coord_map.rows());
    for (size_t i = 0; i < coords.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) x[j] += Rational(coords[i]) * generators[i][j];
    return x;
}

DiscGroup discriminant_group(const QuadLattice& l) {
    if (l.is_degenerate()) throw DegenerateLattice("discriminant group of a degenerate lattice");
    IntMatrix g = l.int_gram();
    SmithResult s = snf_with_transforms(g);
    DiscGroup a;
    a.even = l.is_even();
    const size_t n = l.rank();
    QMatrix gv = to_rational(g * s.v);
    std::vector<size_t> idx;
    for (size_t i = 0; i < n; ++i)
        if (s.diagonal[i] > 1) idx.push_back(i);
    a.coord_map = QMatrix(n, idx.size());
    for (size_t k = 0; k < idx.size(); ++k) {
        const size_t i = idx[k];
        a.factors.push_back(s.diagonal[i]);
        QVector gen(n);
        for (size_t j = 0; j < n; ++j) gen[j] = Rational(s.u(i, j), s.diagonal[i]);
        a.generators.push_back(gen);
        for (size_t j = 0; j < n; ++j) a.coord_map(j, k) = gv(j, i);
    }
    const size_t k = idx.size();
    a.pairings = QMatrix(k, k);
    const Rational qmod = a.even ? Rational(2) : Rational(1);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) a.pairings(i, j) = mod_rational(l.pair(a.generators[i], a.generators[j]), Rational(1));
        a.q_values.push_back(mod_rational(l.norm(a.generators[i]), qmod));
    }
    return a;
}

int milgram_residue(const DiscGroup& a) {
    if (!a.even) throw std::domain_error("Milgram residue needs an even discriminant form");
    const size_t k = a.factors.size();
    if (a.order() > Integer(1 << 22)) throw std::domain_error("discriminant group too large for a Gauss sum");
    std::vector<std::vector<Rational>> b(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) b[i][j] = i == j ? a.q_values[i] : a.pairings(i, j);
    std::vector<long> d(k), c(k, 0);
    for (size_t i = 0; i < k; ++i) d[i] = a.factors[i].get_si();
    std::complex<double> sum = 0;
    long count = 0;
    while (true) {
        Rational q;
        for (size_t i = 0; i < k; ++i) {
            if (!c[i]) continue;
            q += Rational(c[i] * c[i]) * b[i][i];
            for (size_t j = i + 1; j < k; ++j)
                if (c[j]) q += Rational(2 * c[i] * c[j]) * b[i][j];
        }
        sum += std::polar(1.0, std::numbers::pi * mod_rational(q, Rational(2)).to_double());
        ++count;
        size_t i = 0;
        while (i < k && ++c[i] == d[i]) c[i++] = 0;
        if (i == k) break;
    }
    const double mag = std::abs(sum), expected = std::sqrt(static_cast<double>(count));
    if (std::abs(mag - expected) > 1e-6 * expected) throw std::logic_error("Gauss sum has unexpected magnitude");
    double eighths = std::arg(sum) / (std::numbers::pi / 4);
    long r = std::lround(eighths);
    if (std::abs(eighths - static_cast<double>(r)) > 1e-6) throw std::logic_error("Gauss sum is not an 8th root of unity");
    return static_cast<int>(((r % 8) + 8) % 8);
}

GenusFingerprint genus_fingerprint(const QuadLattice& l) {
    Inertia s = l.signature();
    GenusFingerprint fp;
    fp.positive = s.positive;
    fp.negative = s.negative;
    fp.even = l.is_even();
    DiscGroup a = discriminant_group(l);
    fp.factors = a.factors;
    if (fp.even) {
        fp.milgram = milgram_residue(a);
        long sig = static_cast<long>(s.positive) - static_cast<long>(s.negative);
        if (((sig - *fp.milgram) % 8 + 8) % 8 != 0) throw std::logic_error("Milgram formula violated");
    }
    return fp;
}

LatticeInvariants lattice_invariants(const QuadLattice& l) {
    if (l.is_degenerate()) throw DegenerateLattice("lattice invariants of a degenerate lattice");
    LatticeInvariants inv;
    inv.signature = l.signature();
    inv.even = l.is_even();
    inv.det = l.det();
    if (l.is_integral()) {
        inv.disc = discriminant_group(l);
        inv.fingerprint = genus_fingerprint(l);
    } else {
        inv.fingerprint.positive = inv.signature.positive;
        inv.fingerprint.negative = inv.signature.negative;
    }
    return inv;
}

EmbeddedLattice orthogonal_complement(const QuadLattice& l, const std::vector<QVector>& vectors) {
    const size_t n = l.rank();
    if (vectors.empty()) return embed(l, QMatrix::identity(n));
    QMatrix m = l.gram() * rows_to_matrix(vectors, n).transpose();
    IntMatrix mi = to_integer(Rational(common_denominator(m)) * m);
    IntMatrix k = integer_left_kernel(mi);
    return embed(l, to_rational(k));
}

EmbeddedLattice saturation(const QuadLattice& l, const std::vector<QVector>& vectors) {
    const size_t n = l.rank();
    if (vectors.empty()) return embed(l, QMatrix(0, n));
    QMatrix c = left_kernel(rows_to_matrix(vectors, n).transpose());
    if (c.rows() == 0) return embed(l, QMatrix::identity(n));
    QMatrix ct = c.transpose();
    IntMatrix k = integer_left_kernel(to_integer(Rational(common_denominator(ct)) * ct));
    return embed(l, to_rational(k));
}

EmbeddedLattice overlattice(const QuadLattice& l, const std::vector<QVector>& extra) {
    const size_t n = l.rank();
    Integer d = 1;
    for (const auto& v : extra) d = lcm(d, common_denominator(v));
    IntMatrix gens(n + extra.size(), n);
    for (size_t i = 0; i < n; ++i) gens(i, i) = d;
    for (size_t r = 0; r < extra.size(); ++r)
        for (size_t j = 0; j < n; ++j) gens(n + r, j) = (Rational(d) * extra[r][j]).num();
    QMatrix basis = Rational(1, d) * to_rational(row_basis(gens));
    EmbeddedLattice e = embed(l, basis);
    if (!e.lattice.is_integral()) throw NonIntegralOverlattice("overlattice Gram is not integral");
    if (l.is_even() && !e.lattice.is_even()) throw NonIntegralOverlattice("overlattice of an even lattice is odd");
    return e;
}

LatticeIsometry::LatticeIsometry(const QuadLattice& l, IntMatrix m) : l_(l), m_(std::move(m)) {
    if (m_.rows() != l.rank() || m_.cols() != l.rank()) throw NotAnIsometry("isometry has the wrong size");
    QMatrix q = to_rational(m_);
    if (!(q * l.gram() * q.transpose() == l.gram())) throw NotAnIsometry("matrix does not preserve the Gram matrix");
    Integer dt = det_bareiss(m_);
    if (dt != 1 && dt != -1) throw NotAnIsometry("matrix is not invertible over Z");
}

IntMatrix restrict_to_basis(const QMatrix& m, const QMatrix& basis) {
    QMatrix r = basis * m * inverse(basis);
    if (!enr::is_integral(r)) throw NotAnIsometry("matrix does not preserve the lattice");
    return to_integer(r);
}

InvariantPair invariant_coinvariant(const LatticeIsometry& f) {
    const QuadLattice& l = f.lattice();
    IntMatrix d = f.matrix() - IntMatrix::identity(l.rank());
    IntMatrix k = integer_left_kernel(d);
    InvariantPair out;
    out.invariant = embed(l, to_rational(k));
    std::vector<QVector> rows;
    for (size_t i = 0; i < k.rows(); ++i) rows.push_back(to_rational(k.row(i)));
    out.coinvariant = orthogonal_complement(l, rows);
    return out;
}

IntMatrix induced_disc_map(const DiscGroup& a, const LatticeIsometry& f) {
    const size_t k = a.factors.size();
    QMatrix m = to_rational(f.matrix());
    IntMatrix out(k, k);
    for (size_t i = 0; i < k; ++i) {
        auto c = a.coordinates(a.generators[i] * m);
        for (size_t j = 0; j < k; ++j) out(i, j) = c[j];
    }
    return out;
}

DiscSubgroup::DiscSubgroup(const DiscGroup& a, const std::vector<IntMatrix>& generators, size_t cap)
    : factors_(a.factors) {
    const size_t k = factors_.size();
    std::set<std::vector<Integer>> seen;
    std::deque<IntMatrix> queue;
    IntMatrix id = IntMatrix::identity(k);
    seen.insert(reduce(id));
    queue.push_back(id);
    while (!queue.empty()) {
        IntMatrix e = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            IntMatrix p = e * g;
            auto key = reduce(p);
            if (seen.insert(key).second) {
                if (seen.size() > cap) throw std::length_error("discriminant subgroup exceeds the size cap");
                for (size_t i = 0; i < k; ++i)
                    for (size_t j = 0; j < k; ++j) p(i, j) = key[i * k + j];
                queue.push_back(p);
            }
        }
    }
    elements_.assign(seen.begin(), seen.end());
}

std::vector<Integer> DiscSubgroup::reduce(const IntMatrix& m) const {
    const size_t k = factors_.size();
    std::vector<Integer> key(k * k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) key[i * k + j] = mod_floor(m(i, j), factors_[j]);
    return key;
}

bool DiscSubgroup::contains(const IntMatrix& m) const { return std::binary_search(elements_.begin(), elements_.end(), reduce(m)); }

DiscSubgroup disc_action_subgroup(const DiscGroup& a, const std::vector<LatticeIsometry>& isometries) {
    std::vector<IntMatrix> maps;
    for (const auto& f : isometries) maps.push_back(induced_disc_map(a, f));
    return DiscSubgroup(a, maps);
}

}  // namespace enr
