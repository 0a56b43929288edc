#pragma once

#include "enr/lattice/isometry.hpp"

namespace enr {

struct NoIsotropicVector : std::domain_error {
    using std::domain_error::domain_error;
};

/// All p-neighbors of an even definite lattice, one per isotropic line mod p.
std::vector<QuadLattice> kneser_neighbors(const QuadLattice& l, long p);

struct GenusClass {
    QuadLattice lattice;
    /// Maximum norm of nonzero vectors (negative definite) or minimum (positive definite).
    Rational extreme;
};

/// Classes reachable from l by iterated p-neighbor steps, deduplicated up to
/// isometry. The first entry is (a reduced form of) l itself.
std::vector<GenusClass> genus_classes(const QuadLattice& l, long p, size_t max_classes = 256);

}  // namespace enr
