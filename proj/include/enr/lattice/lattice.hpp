#pragma once

#include "enr/core/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace enr {

struct DegenerateLattice : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonIntegralOverlattice : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotAnIsometry : std::domain_error {
    using std::domain_error::domain_error;
};

/// Lattice Z^n with a symmetric rational Gram matrix.
class QuadLattice {
public:
    QuadLattice() = default;
    /// Throws DegenerateLattice when det = 0.
    explicit QuadLattice(QMatrix gram);
    static QuadLattice allow_degenerate(QMatrix gram);
    static QuadLattice from_int(const IntMatrix& gram) { return QuadLattice(to_rational(gram)); }

    size_t rank() const { return g_.rows(); }
    const QMatrix& gram() const { return g_; }
    const Rational& det() const { return det_; }
    bool is_degenerate() const { return det_.is_zero(); }
    bool is_integral() const;
    /// Integral with even diagonal.
    bool is_even() const;
    Inertia signature() const { return inertia(g_); }
    bool is_positive_definite() const;
    bool is_negative_definite() const;

    Rational pair(const QVector& x, const QVector& y) const { return bilinear(x, g_, y); }
    Rational norm(const QVector& x) const { return bilinear(x, g_, x); }
    /// Throws std::domain_error when the Gram is not integral.
    IntMatrix int_gram() const;

    QuadLattice scaled(const Rational& c) const;
    /// Lattice spanned by the rows of basis (coordinates in this lattice).
    QuadLattice sublattice(const QMatrix& basis) const;

private:
    QuadLattice(QMatrix gram, bool check);
    QMatrix g_;
    Rational det_;
};

/// A lattice given by basis rows in the coordinates of an ambient lattice.
struct EmbeddedLattice {
    QMatrix basis;
    QuadLattice lattice;
    /// Dimension of the radical of the induced form.
    size_t radical_rank = 0;
};

struct DiscGroup {
    /// Invariant factors d_1 | d_2 | ..., all > 1.
    std::vector<Integer> factors;
    /// Generators as dual vectors in lattice coordinates; g_i has order d_i.
    std::vector<QVector> generators;
    /// b(g_i, g_j) mod Z, representatives in [0, 1).
    QMatrix pairings;
    /// q(g_i) mod 2Z for even lattices and mod Z otherwise, in [0, modulus).
    std::vector<Rational> q_values;
    bool even = false;

    Integer order() const;
    /// Coordinates of a dual vector with respect to the generators, reduced mod d_i.
    std::vector<Integer> coordinates(const QVector& dual) const;
    /// Element of the dual lattice with the given coordinates.
    QVector element(const std::vector<Integer>& coords) const;

    /// x * G * V restricted to the nontrivial factors.
    QMatrix coord_map;
};

/// Discriminant group via SNF; requires an integral nondegenerate Gram.
DiscGroup discriminant_group(const QuadLattice& l);

/// Gauss sum signature of an even discriminant form, in [0, 8).
int milgram_residue(const DiscGroup& a);

struct GenusFingerprint {
    size_t positive = 0, negative = 0;
    bool even = false;
    std::vector<Integer> factors;
    /// Only defined for even lattices.
    std::optional<int> milgram;

    friend bool operator==(const GenusFingerprint&, const GenusFingerprint&) = default;
};

struct LatticeInvariants {
    Inertia signature;
    bool even = false;
    Rational det;
    DiscGroup disc;
    GenusFingerprint fingerprint;
};

/// Throws DegenerateLattice when det = 0; the discriminant data needs an integral Gram.
LatticeInvariants lattice_invariants(const QuadLattice& l);
GenusFingerprint genus_fingerprint(const QuadLattice& l);

/// Primitive sublattice {x in L : x.v = 0 for all v}; may be degenerate.
EmbeddedLattice orthogonal_complement(const QuadLattice& l, const std::vector<QVector>& vectors);
/// (span_Q of vectors) intersected with L.
EmbeddedLattice saturation(const QuadLattice& l, const std::vector<QVector>& vectors);
/// L + sum Z v_i for rational vectors v_i; throws NonIntegralOverlattice unless the
/// result is integral, and even when L is even.
EmbeddedLattice overlattice(const QuadLattice& l, const std::vector<QVector>& extra);

/// Matrix M with M G M^T = G acting on row vectors.
class LatticeIsometry {
public:
    /// Throws NotAnIsometry unless M is integral, invertible over Z and preserves the form.
    LatticeIsometry(const QuadLattice& l, IntMatrix m);
    const QuadLattice& lattice() const { return l_; }
    const IntMatrix& matrix() const { return m_; }

private:
    QuadLattice l_;
    IntMatrix m_;
};

/// Rewrites a rational matrix acting on ambient coordinates in terms of the
/// sublattice basis B: returns B M B^{-1}. Throws NotAnIsometry if B is not
/// preserved by M.
IntMatrix restrict_to_basis(const QMatrix& m, const QMatrix& basis);

struct InvariantPair {
    EmbeddedLattice invariant, coinvariant;
};
InvariantPair invariant_coinvariant(const LatticeIsometry& f);

/// Induced automorphism of the discriminant group: row i gives the coordinates
/// of the image of generator i.
IntMatrix induced_disc_map(const DiscGroup& a, const LatticeIsometry& f);

/// Finite subgroup of Aut(L^v/L) generated by induced maps.
class DiscSubgroup {
public:
    DiscSubgroup(const DiscGroup& a, const std::vector<IntMatrix>& generators, size_t cap = 1 << 20);
    size_t order() const { return elements_.size(); }
    bool contains(const IntMatrix& m) const;
    bool operator==(const DiscSubgroup& other) const { return elements_ == other.elements_; }

private:
    std::vector<Integer> reduce(const IntMatrix& m) const;
    std::vector<Integer> factors_;
    std::vector<std::vector<Integer>> elements_;  // sorted
};

DiscSubgroup disc_action_subgroup(const DiscGroup& a, const std::vector<LatticeIsometry>& isometries);

}  // namespace enr
