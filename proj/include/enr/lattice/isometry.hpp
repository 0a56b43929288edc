#pragma once

#include "enr/lattice/enumerate.hpp"

#include <array>
#include <map>
#include <memory>

namespace enr {

/// Precomputed data of a definite integral lattice for isometry testing:
/// sign-normalized LLL-reduced Gram, its short vectors up to a bound and
/// per-vector pairing fingerprints.
class IsometryData {
public:
    /// bound = 0 selects the largest diagonal entry of the reduced Gram.
    explicit IsometryData(const QuadLattice& l, long bound = 0);

    int sign() const { return sign_; }
    const IntMatrix& gram() const { return gram_; }
    /// reduced = sign * W G W^T
    const IntMatrix& transform() const { return w_; }
    const std::vector<std::vector<long>>& reduced() const { return red_; }
    long bound() const { return bound_; }
    const ShortVectors& short_vectors() const { return sv_; }
    const Rational& det() const { return det_; }
    size_t rank() const { return red_.size(); }
    /// Number of +-pairs of each norm up to the bound.
    std::map<long, size_t> theta() const;
    long max_diagonal() const;
    long min_norm() const;

    /// {norm(w), |v.w|, count} over the short vectors w, sorted.
    using Fingerprint = std::vector<std::array<long, 3>>;
    Fingerprint fingerprint(const std::vector<long>& v) const;
    /// Fingerprints of all short vectors, computed once.
    const std::vector<Fingerprint>& short_vector_fingerprints() const;

private:
    int sign_ = 1;
    IntMatrix gram_, w_;
    std::vector<std::vector<long>> red_;
    long bound_ = 0;
    ShortVectors sv_;
    std::vector<std::vector<long>> sv_images_;  // reduced Gram times each short vector
    Rational det_;
    mutable std::shared_ptr<std::vector<Fingerprint>> fps_;
};

/// Returns U with U * G_a * U^T = G_b when the definite lattices are isometric.
std::optional<IntMatrix> isometry_test(const QuadLattice& a, const QuadLattice& b);
/// Same on precomputed data; both bounds must agree.
std::optional<IntMatrix> isometry_test(const IsometryData& a, const IsometryData& b);

}  // namespace enr
