#pragma once

#include "enr/core/number_field.hpp"
#include "enr/core/poly_algorithms.hpp"
#include "enr/core/prime_field.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace enr {

struct UnsupportedResidueTest : std::domain_error {
    using std::domain_error::domain_error;
};

/// Data a field cannot produce unaided: candidate roots for place
/// enumeration and elements whose products seed k-th root searches.
/// Prime fields ignore both.
template <class F>
struct FieldHints {
    std::vector<F> place_candidates;
    std::vector<F> units;
};

inline int characteristic(const Fp& a) { return static_cast<int>(a.modulus()); }
inline int characteristic(const NFElem&) { return 0; }

std::optional<Fp> kth_root(const Fp& a, int k, const FieldHints<Fp>& hints);
/// Searches r * u with r rational and u a product of hint units (exponents < 8).
std::optional<NFElem> kth_root(const NFElem& a, int k, const FieldHints<NFElem>& hints);

/// k-th roots of unity in the base field (over number fields: among the
/// rational ones and products of hint units).
std::vector<Fp> roots_of_unity(const Fp& ctx, int k, const FieldHints<Fp>& hints);
std::vector<NFElem> roots_of_unity(const NFElem& ctx, int k, const FieldHints<NFElem>& hints);

/// Roots in the base field; over number fields only rational roots and
/// validated candidates are found.
RootList<Fp> base_roots(const UniPoly<Fp>& f, const FieldHints<Fp>& hints);
RootList<NFElem> base_roots(const UniPoly<NFElem>& f, const FieldHints<NFElem>& hints);

/// Monic irreducible factors of a squarefree polynomial; `complete` is false
/// when part of it could not be split.
template <class F>
struct PlaceSearch {
    std::vector<UniPoly<F>> factors;
    bool complete = true;
};
PlaceSearch<Fp> irreducible_factors(const UniPoly<Fp>& f, const FieldHints<Fp>& hints);
PlaceSearch<NFElem> irreducible_factors(const UniPoly<NFElem>& f, const FieldHints<NFElem>& hints);

struct ResidueSquare {
    bool square = false;
    bool probabilistic = false;
};
/// Is a a square in F[t]/(pi)? Exact over prime fields; over number fields
/// only degree-one pi, decided by reduction at three degree-one primes.
ResidueSquare residue_is_square(const UniPoly<Fp>& a, const UniPoly<Fp>& pi);
ResidueSquare residue_is_square(const UniPoly<NFElem>& a, const UniPoly<NFElem>& pi);

/// a mod pi, a^-1 mod pi in F[t]/(pi).
template <class F>
UniPoly<F> residue_inverse(const UniPoly<F>& a, const UniPoly<F>& pi) {
    UniPoly<F> s, t;
    UniPoly<F> g = poly_xgcd(a % pi, pi, s, t);
    if (g.degree() != 0) throw ArithmeticError("element is not invertible modulo the place");
    return s % pi;
}

}  // namespace enr
