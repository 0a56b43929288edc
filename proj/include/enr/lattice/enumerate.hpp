#pragma once

#include "enr/lattice/lattice.hpp"

#include <functional>
#include <optional>

namespace enr {

struct IndefiniteLattice : std::domain_error {
    using std::domain_error::domain_error;
};

struct VectorList {
    std::vector<QVector> vectors;
    /// True when only one of +-x is listed (zero offset).
    bool folded = false;
};

/// Definite lattice with its LLL reduction cached, for repeated queries.
class Enumerator {
public:
    explicit Enumerator(const QuadLattice& l);
    /// All x in L + offset with x.x = norm, sorted lexicographically.
    VectorList run(const Rational& norm, const std::optional<QVector>& offset = {}) const;

private:
    QuadLattice l_;
    int sign_ = 1;
    QMatrix u_, u_inv_;
    std::vector<std::vector<double>> pos_;
};

/// All x in L + offset with x.x = norm, sorted lexicographically.
VectorList enumerate_vectors(const QuadLattice& l, const Rational& norm, const std::optional<QVector>& offset = {});

/// Fincke-Pohst over a positive definite real Gram: calls fn(y) for every
/// y in Z^n with (y + c) Q (y + c)^T <= bound, up to a small relative slack.
/// Candidates must be verified exactly by the caller.
void fincke_pohst(const std::vector<std::vector<double>>& q, const std::vector<double>& c, double bound,
                  const std::function<void(const std::vector<long>&)>& fn);

/// Nonzero vectors of a positive definite integral Gram with norm <= bound,
/// one of each pair +-x, together with their norms.
struct ShortVectors {
    std::vector<std::vector<long>> vectors;
    std::vector<long> norms;
};
ShortVectors short_vectors(const std::vector<std::vector<long>>& gram, long bound);

/// Maximum of x.x over nonzero x in a negative definite lattice (minimum for positive definite).
Rational extreme_norm(const QuadLattice& l);

}  // namespace enr
