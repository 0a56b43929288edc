#pragma once

#include "enr/core/matrix.hpp"
#include "enr/core/mpoly.hpp"
#include "enr/core/number_field.hpp"

#include <json.hpp>
#include <optional>
#include <stdexcept>

namespace enr {

struct ClosureCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonHomogeneous : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using NFMatrix = Matrix<NFElem>;

/// Scale so that the first nonzero entry (row-major) is one.
NFMatrix projective_normalize(const NFMatrix& m);

/// Finite subgroup of PGL_n over a number field; matrices act on row vectors.
class ProjMatrixGroup {
public:
    ProjMatrixGroup(FieldPtr base, std::vector<NFMatrix> generators);

    const FieldPtr& base() const { return base_; }
    const std::vector<NFMatrix>& generators() const { return gens_; }
    size_t dimension() const { return gens_.front().rows(); }

    /// Breadth-first closure; elements are normalized, identity first.
    const std::vector<NFMatrix>& elements(size_t cap = 100000) const;
    size_t order(size_t cap = 100000) const { return elements(cap).size(); }
    /// Elements commuting projectively with every generator.
    std::vector<NFMatrix> center() const;
    bool contains(const NFMatrix& m) const;

private:
    FieldPtr base_;
    std::vector<NFMatrix> gens_;
    mutable std::vector<NFMatrix> closure_;
};

struct ClosureSummary {
    size_t order = 0;
    std::vector<NFMatrix> center;
};
ClosureSummary closure_order_center(const ProjMatrixGroup& g);

/// p(x M) as a polynomial in x.
MultiPoly<NFElem> act(const MultiPoly<NFElem>& p, const NFMatrix& m);

/// chi(g) with p(x g) = chi(g) p(x) for each generator g, or nullopt if p is
/// not a relative invariant. Multiplicativity is verified on products of
/// generator pairs.
std::optional<std::vector<NFElem>> relative_invariant_character(const MultiPoly<NFElem>& p,
                                                                const ProjMatrixGroup& g);

/// Smallest k <= bound with x^k = 1.
std::optional<long> multiplicative_order(const NFElem& x, long bound = 1000);

struct LemmaReport {
    bool pullback_identity = false;  ///< t^4 f(1/(z t), z^3 v) = i f(t, v)
    bool lambda_identity = false;    ///< (z lambda / t^2)^2 = i lambda^2 / t^4
    NFElem form_scalar;              ///< action on the 2-form
    long form_order = 0;

    bool all() const { return pullback_identity && lambda_identity && form_order == 8; }
};

/// Identities for the lift of g2 to the double cover, over Q(z) with z^4 = -1.
LemmaReport lemma_identity_check(const FieldPtr& zeta8_field);

struct DiagonalReport {
    MultiPoly<NFElem> restriction;        ///< b(s^2, a t^2, s t, -a s t) in (a, s, t)
    MultiPoly<NFElem> literal;            ///< b(s^2, a t^2, s t, -a^2 s t)
    UniPoly<NFElem> discriminant;         ///< of the quadratic form in (s^4, t^4)
    bool matches_expansion = false;       ///< restriction == s^8 - i(a^4+1)s^4t^4 + a^4t^8
    bool literal_matches = false;
    bool discriminant_matches = false;    ///< discriminant == -(a^8 + 6a^4 + 1)
};

DiagonalReport diagonal_discriminant(const FieldPtr& zeta8_field);

/// Q(z) with z^4 + 1 = 0.
FieldPtr cyclotomic8();

struct ProjrepData {
    FieldPtr field;
    ProjMatrixGroup group;
    MultiPoly<NFElem> q, b;
    size_t expected_order = 0;
};
ProjrepData projrep_from_json(const nlohmann::json& j);

}  // namespace enr
