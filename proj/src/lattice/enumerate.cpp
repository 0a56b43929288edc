#include "enr/lattice/enumerate.hpp"

#include <algorithm>
#include <cmath>

namespace enr {

namespace {

struct FinckePohst {
    size_t n;
    std::vector<std::vector<double>> r;
    const std::vector<double>& c;
    double slack;
    const std::function<void(const std::vector<long>&)>& fn;
    std::vector<long> y;

    void run(size_t i, double remaining) {
        double u = -c[i];
        for (size_t j = i + 1; j < n; ++j) u -= r[i][j] * (static_cast<double>(y[j]) + c[j]);
        const double rad = std::sqrt(std::max(0.0, (remaining + slack) / r[i][i]));
        const long lo = static_cast<long>(std::ceil(u - rad - 1e-9));
        const long hi = static_cast<long>(std::floor(u + rad + 1e-9));
        for (long v = lo; v <= hi; ++v) {
            const double t = static_cast<double>(v) - u;
            const double rem = remaining - r[i][i] * t * t;
            if (rem < -slack) continue;
            y[i] = v;
            if (i == 0)
                fn(y);
            else
                run(i - 1, rem);
        }
    }
};

std::vector<std::vector<double>> to_double(const QMatrix& m) {
    std::vector<std::vector<double>> d(m.rows(), std::vector<double>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j).to_double();
    return d;
}

bool first_nonzero_positive(const QVector& x) {
    for (const auto& v : x)
        if (!v.is_zero()) return v.sign() > 0;
    return true;
}

int definite_sign(const QuadLattice& l) {
    Inertia s = l.signature();
    if (s.positive == l.rank()) return 1;
    if (s.negative == l.rank()) return -1;
    throw IndefiniteLattice("lattice is not definite");
}

}  // namespace

void fincke_pohst(const std::vector<std::vector<double>>& q, const std::vector<double>& c, double bound,
                  const std::function<void(const std::vector<long>&)>& fn) {
    const size_t n = q.size();
    if (n == 0) {
        if (bound >= 0) fn({});
        return;
    }
    FinckePohst fp{n, q, c, 1e-9 * (1.0 + std::abs(bound)), fn, std::vector<long>(n, 0)};
    auto& r = fp.r;
    for (size_t i = 0; i < n; ++i) {
        if (r[i][i] <= 0) throw IndefiniteLattice("Fincke-Pohst needs a positive definite form");
        for (size_t j = i + 1; j < n; ++j) {
            r[j][i] = r[i][j];
            r[i][j] /= r[i][i];
        }
        for (size_t k = i + 1; k < n; ++k)
            for (size_t l = k; l < n; ++l) r[k][l] -= r[k][i] * r[i][l];
    }
    fp.run(n - 1, bound);
}

Enumerator::Enumerator(const QuadLattice& l) : l_(l), sign_(definite_sign(l)) {
    LLLResult red = lll_reduce(l.gram());
    u_ = to_rational(red.u);
    u_inv_ = inverse(u_);
    pos_ = to_double(Rational(sign_) * (u_ * l.gram() * u_.transpose()));
}

VectorList Enumerator::run(const Rational& norm, const std::optional<QVector>& offset) const {
    const size_t n = l_.rank();
    VectorList out;
    out.folded = !offset.has_value();
    const Rational target = norm * Rational(sign_);
    if (target.sign() < 0) return out;
    QVector c(n);
    if (offset) {
        if (offset->size() != n) throw DimensionError("offset length mismatch");
        c = *offset * u_inv_;
    }
    std::vector<double> cd(n);
    for (size_t i = 0; i < n; ++i) cd[i] = c[i].to_double();
    const double td = target.to_double();

    fincke_pohst(pos_, cd, td, [&](const std::vector<long>& y) {
        double approx = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                approx += (static_cast<double>(y[i]) + cd[i]) * pos_[i][j] * (static_cast<double>(y[j]) + cd[j]);
        if (std::abs(approx - td) > 1e-6 * (1.0 + td)) return;
        QVector z(n);
        for (size_t i = 0; i < n; ++i) z[i] = Rational(y[i]) + c[i];
        QVector x = z * u_;
        if (l_.norm(x) != norm) return;
        if (out.folded && !first_nonzero_positive(x)) return;
        out.vectors.push_back(std::move(x));
    });
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

VectorList enumerate_vectors(const QuadLattice& l, const Rational& norm, const std::optional<QVector>& offset) {
    return Enumerator(l).run(norm, offset);
}

ShortVectors short_vectors(const std::vector<std::vector<long>>& gram, long bound) {
    const size_t n = gram.size();
    std::vector<std::vector<double>> q(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) q[i][j] = static_cast<double>(gram[i][j]);
    ShortVectors out;
    const std::vector<double> c(n, 0.0);
    fincke_pohst(q, c, static_cast<double>(bound), [&](const std::vector<long>& y) {
        size_t first = 0;
        while (first < n && y[first] == 0) ++first;
        if (first == n || y[first] < 0) return;
        long nm = 0;
        for (size_t i = 0; i < n; ++i) {
            if (!y[i]) continue;
            long row = 0;
            for (size_t j = 0; j < n; ++j) row += gram[i][j] * y[j];
            nm += y[i] * row;
        }
        if (nm > bound) return;
        out.vectors.push_back(y);
        out.norms.push_back(nm);
    });
    return out;
}

Rational extreme_norm(const QuadLattice& l) {
    const int s = definite_sign(l);
    const Integer den = common_denominator(l.gram());
    LLLResult red = lll_reduce(Rational(Integer(s * den)) * l.gram());
    const QMatrix& g = red.gram;
    const size_t n = g.rows();
    std::vector<std::vector<long>> gi(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) gi[i][j] = to_i64(g(i, j).num());
    long bound = gi[0][0];
    for (size_t i = 1; i < n; ++i) bound = std::min(bound, gi[i][i]);
    ShortVectors sv = short_vectors(gi, bound);
    long best = bound;
    for (long v : sv.norms) best = std::min(best, v);
    return Rational(s) * Rational(best) / Rational(den);
}

}  // namespace enr
