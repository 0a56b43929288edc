#include "enr/hypgeo/hypgeo.hpp"

#include <algorithm>
#include <cmath>

namespace enr {

namespace {

/// Fixed linear conditions x.v_i = c_i on a lattice, with the orthogonal
/// complement of the v_i prepared for repeated queries.
class SliceContext {
public:
    SliceContext(const QuadLattice& l, const std::vector<QVector>& v)
        : l_(l), v_(v), comp_(orthogonal_complement(l, v)), enumerator_(checked(comp_.lattice)) {
        const size_t n = l.rank(), k = v.size();
        vm_ = QMatrix(k, n);
        for (size_t i = 0; i < k; ++i) vm_.set_row(i, v[i]);
        QMatrix m = l.gram() * vm_.transpose();
        if (!is_integral(m)) throw std::invalid_argument("linear conditions are not integral on the lattice");
        herm_ = hnf_with_transform(to_integer(m));
        gs_inv_ = inverse(vm_ * l.gram() * vm_.transpose());
        kgt_ = l.gram() * comp_.basis.transpose();
    }

    std::vector<QVector> solve(const std::vector<Integer>& c, const Rational& norm,
                               const std::vector<QVector>& filter) const {
        std::vector<QVector> out;
        auto x0 = particular(c);
        if (!x0) return out;
        const size_t k = v_.size();
        QVector cq(k);
        for (size_t i = 0; i < k; ++i) cq[i] = Rational(c[i]);
        const QVector alpha = cq * gs_inv_;
        const QVector xs = alpha * vm_;
        const Rational target = norm - dot(alpha, cq);
        QVector w0 = *x0;
        for (size_t j = 0; j < w0.size(); ++j) w0[j] -= xs[j];
        const QVector t = solve_left(comp_.lattice.gram(), w0 * kgt_);
        for (const auto& w : enumerator_.run(target, t).vectors) {
            QVector x = w * comp_.basis;
            for (size_t j = 0; j < x.size(); ++j) x[j] += xs[j];
            if (l_.norm(x) != norm) throw std::logic_error("slice vector has the wrong norm");
            bool keep = true;
            for (const auto& f : filter)
                if (l_.pair(x, f).sign() < 0) {
                    keep = false;
                    break;
                }
            if (keep) out.push_back(std::move(x));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static const QuadLattice& checked(const QuadLattice& k) {
        if (k.rank() && !k.is_negative_definite()) throw std::invalid_argument("orthogonal complement is not negative definite");
        return k;
    }

    /// Integral x with x.v_i = c_i, from the Hermite form of G V^T.
    std::optional<QVector> particular(const std::vector<Integer>& c) const {
        const IntMatrix& h = herm_.h;
        const size_t n = h.rows(), k = h.cols();
        std::vector<Integer> y(n, 0);
        size_t col = 0;
        for (size_t i = 0; i < herm_.rank; ++i) {
            while (h(i, col) == 0) ++col;
            Integer s = c[col];
            for (size_t r = 0; r < i; ++r) s -= y[r] * h(r, col);
            if (mod_floor(s, h(i, col)) != 0) return std::nullopt;
            y[i] = s / h(i, col);
        }
        for (size_t j = 0; j < k; ++j) {
            Integer s = 0;
            for (size_t r = 0; r < herm_.rank; ++r) s += y[r] * h(r, j);
            if (s != c[j]) return std::nullopt;
        }
        return to_rational(y) * to_rational(herm_.u);
    }

    const QuadLattice& l_;
    std::vector<QVector> v_;
    EmbeddedLattice comp_;
    Enumerator enumerator_;
    QMatrix vm_, gs_inv_, kgt_;
    HermiteResult herm_;
};

}  // namespace

PolarizedLattice::PolarizedLattice(QuadLattice l, QVector h) : l_(std::move(l)), h_(std::move(h)) {
    Inertia s = l_.signature();
    if (s.positive != 1 || s.zero != 0) throw std::invalid_argument("lattice is not hyperbolic");
    if (h_.size() != l_.rank() || common_denominator(h_) != 1) throw std::invalid_argument("h must be an integral vector");
    if (l_.norm(h_).sign() <= 0) throw std::invalid_argument("h must have positive square");
}

std::vector<QVector> affine_slice(const QuadLattice& l, const std::vector<QVector>& v, const std::vector<Integer>& c,
                                  const Rational& norm, const std::vector<QVector>& filter) {
    return SliceContext(l, v).solve(c, norm, filter);
}

std::vector<QVector> slice_vectors(const PolarizedLattice& p, const Integer& c, const Rational& norm,
                                   const std::vector<QVector>& filter) {
    const QuadLattice& l = p.lattice();
    if (c == 0 && norm.sign() >= 0) throw InfiniteSlice("slice with c = 0 and norm >= 0 is infinite");
    QVector hv = p.h() * l.gram();
    Integer g = 0;
    for (const auto& x : hv) g = gcd(g, x.num());
    if (mod_floor(c, g) != 0) throw NoSolution("c is not a multiple of the divisibility of h");
    return affine_slice(l, {p.h()}, {c}, norm, filter);
}

std::vector<QVector> separating_roots(const PolarizedLattice& p, const QVector& h2, long pair_cap) {
    const QuadLattice& l = p.lattice();
    const QVector& h = p.h();
    const Rational a = l.norm(h), b = l.pair(h, h2), c = l.norm(h2);
    if (c.sign() <= 0 || b.sign() <= 0) throw NotInPositiveCone("h2 is not in the positive cone of h");
    const Rational disc = b * b - a * c;  // -det of the span Gram
    if (disc.sign() < 0) throw std::logic_error("span of h and h2 is positive definite");
    if (disc.is_zero()) return {};  // h2 on the ray of h
    // With r.h = x > 0 and r.h2 = y < 0 the projection of r to span(h, h2) has
    // square -(c x^2 - 2 b x y + a y^2) / disc, which must be >= -2.
    const Rational rhs = Rational(2) * disc;
    const long xmax = static_cast<long>(std::floor(std::sqrt((rhs / c).to_double()))) + 1;
    const long ymax = static_cast<long>(std::floor(std::sqrt((rhs / a).to_double()))) + 1;
    if (xmax * ymax > pair_cap) throw std::length_error("separating roots: pair sweep exceeds the cap");
    SliceContext ctx(l, {h, h2});
    std::vector<QVector> out;
    for (long x = 1; x <= xmax; ++x)
        for (long y = -1; y >= -ymax; --y) {
            const Rational q = c * Rational(x * x) - Rational(2 * x * y) * b + a * Rational(y * y);
            if (q > rhs) continue;
            for (auto& r : ctx.solve({Integer(x), Integer(y)}, Rational(-2), {})) out.push_back(std::move(r));
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_ample_relative(const PolarizedLattice& p, const QVector& v) {
    const QuadLattice& l = p.lattice();
    if (l.norm(v).sign() <= 0 || l.pair(v, p.h()).sign() <= 0) return false;
    return separating_roots(p, v).empty();
}

QVector reflect(const QuadLattice& l, const QVector& x, const QVector& r) {
    const Rational k = l.pair(x, r);
    QVector out = x;
    for (size_t i = 0; i < out.size(); ++i) out[i] += k * r[i];
    return out;
}

}  // namespace enr
