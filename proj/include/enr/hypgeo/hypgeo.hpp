#pragma once

#include "enr/lattice/enumerate.hpp"

namespace enr {

struct NoSolution : std::domain_error {
    using std::domain_error::domain_error;
};
struct InfiniteSlice : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotInPositiveCone : std::domain_error {
    using std::domain_error::domain_error;
};

/// Hyperbolic lattice with a reference class h, h^2 > 0.
class PolarizedLattice {
public:
    /// Throws std::invalid_argument unless the signature is (1, n-1), h is integral and h^2 > 0.
    PolarizedLattice(QuadLattice l, QVector h);
    const QuadLattice& lattice() const { return l_; }
    const QVector& h() const { return h_; }

private:
    QuadLattice l_;
    QVector h_;
};

/// {x in L : x.v_i = c_i, x^2 = norm, x.f >= 0 for f in filter}, sorted.
/// The orthogonal complement of the v_i must be negative definite.
std::vector<QVector> affine_slice(const QuadLattice& l, const std::vector<QVector>& v, const std::vector<Integer>& c,
                                  const Rational& norm, const std::vector<QVector>& filter = {});

/// {x : x.h = c, x^2 = norm, x.f >= 0 for f in filter}.
std::vector<QVector> slice_vectors(const PolarizedLattice& p, const Integer& c, const Rational& norm,
                                   const std::vector<QVector>& filter = {});

/// Roots r with r.h > 0 > r.h2; h2 must lie in the positive cone of h.
std::vector<QVector> separating_roots(const PolarizedLattice& p, const QVector& h2, long pair_cap = 1000000);

/// v^2 > 0, v.h > 0 and no root separates v from h.
bool is_ample_relative(const PolarizedLattice& p, const QVector& v);

/// Reflection x -> x + (x.r) r in a (-2)-vector r.
QVector reflect(const QuadLattice& l, const QVector& x, const QVector& r);

}  // namespace enr
