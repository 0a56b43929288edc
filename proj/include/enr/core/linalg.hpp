#pragma once

#include "enr/core/matrix.hpp"
#include "enr/core/upoly.hpp"

#include <stdexcept>
#include <vector>

namespace enr {

struct SingularMatrix : std::domain_error {
    using std::domain_error::domain_error;
};

struct IndefiniteInput : std::domain_error {
    using std::domain_error::domain_error;
};

/// Fraction-free Bareiss determinant.
Integer det_bareiss(const IntMatrix& m);
Rational det(const QMatrix& m);

/// Berkowitz characteristic polynomial det(x I - M), monic of degree n.
UniPoly<Rational> charpoly(const QMatrix& m);

QMatrix inverse(const QMatrix& m);
/// Solves x * M = rhs for a row vector x.
QVector solve_left(const QMatrix& m, const QVector& rhs);
/// Solves M * x = rhs for a column vector x.
QVector solve_right(const QMatrix& m, const QVector& rhs);

size_t rank(const QMatrix& m);
/// Basis (as rows) of {x : x * M = 0} over Q, reduced row echelon form.
QMatrix left_kernel(const QMatrix& m);

struct HermiteResult {
    IntMatrix h;  ///< U * M, row echelon, nonzero rows first
    IntMatrix u;  ///< unimodular
    size_t rank = 0;
};

/// Row-style Hermite normal form: pivots positive, entries above pivots
/// reduced to [0, pivot).
HermiteResult hnf_with_transform(const IntMatrix& m);
IntMatrix hnf(const IntMatrix& m);

struct SmithResult {
    IntMatrix d, u, v;  ///< U * M * V = D
    /// Diagonal entries of D, d_1 | d_2 | ..., zeros last.
    std::vector<Integer> diagonal;
};

SmithResult snf_with_transforms(const IntMatrix& m);

/// Row basis of the Z-module spanned by the rows of m (HNF, zero rows dropped).
IntMatrix row_basis(const IntMatrix& m);
/// Basis of the integral left kernel {x in Z^m : x * M = 0}; saturated.
IntMatrix integer_left_kernel(const IntMatrix& m);

struct LLLResult {
    QMatrix gram;  ///< U * G * U^T
    IntMatrix u;
};

/// LLL reduction of a definite Gram matrix (negated internally when negative
/// definite), exact rational Gram-Schmidt, Lovasz constant delta.
LLLResult lll_reduce(const QMatrix& gram, const Rational& delta = Rational(99, 100));

/// Inertia of a symmetric rational matrix via congruence diagonalization.
struct Inertia {
    size_t positive = 0, negative = 0, zero = 0;
};
Inertia inertia(const QMatrix& sym);

}  // namespace enr
