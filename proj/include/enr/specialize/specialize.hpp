#pragma once

#include "enr/ellsurf/neron_severi.hpp"

#include <json.hpp>

namespace enr {

struct NoDegreeOnePlace : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotAdmissible : std::domain_error {
    using std::domain_error::domain_error;
};

/// The degree-one prime (p, a - root) of a number field; K -> F_p.
struct ReductionMap {
    FieldPtr field;
    std::uint64_t p = 0;
    Fp root;

    Fp zero() const { return Fp(p, 0); }
    nlohmann::json to_json() const { return {{"p", p}, {"root", root.value()}}; }
};

/// Simple roots of the minimal polynomial mod p, ascending.
std::vector<Fp> degree_one_roots(const FieldPtr& K, std::uint64_t p);

/// The place with the smallest simple root.
ReductionMap find_degree_one_place(const FieldPtr& K, std::uint64_t p);

/// The place with a given root; throws NoDegreeOnePlace if it is not a simple root.
ReductionMap reduction_at_root(const FieldPtr& K, std::uint64_t p, std::uint64_t root);

Fp reduce(const Rational& x, const ReductionMap& m);
Fp reduce(const NFElem& x, const ReductionMap& m);
UniPoly<Fp> reduce(const UniPoly<NFElem>& f, const ReductionMap& m);
/// Denominator must not vanish identically mod the place.
RatFunc<Fp> reduce(const RatFunc<NFElem>& f, const ReductionMap& m);
WeierstrassModel<Fp> reduce(const WeierstrassModel<NFElem>& w, const ReductionMap& m);
/// Checks that the result lies on the reduced model.
SurfaceSection<Fp> reduce(const SurfaceSection<NFElem>& s, const WeierstrassModel<NFElem>& w, const ReductionMap& m);

/// Roots r for which every section reduces to its given counterpart.
std::vector<Fp> matching_roots(const FieldPtr& K, std::uint64_t p, const WeierstrassModel<NFElem>& w,
                               const std::vector<SurfaceSection<NFElem>>& char0,
                               const std::vector<SurfaceSection<Fp>>& reduced);

/// The surface data over F_p obtained by reducing a context over K; fibers
/// are recomputed on the reduced model.
SurfaceContext<Fp> reduce(const SurfaceContext<NFElem>& ctx, const ReductionMap& m);

/// An automorphism given on both sides of the reduction.
struct AutomorphismPair {
    std::string name;
    SurfaceAutomorphism<NFElem> char0;
    SurfaceAutomorphism<Fp> reduced;
};

struct EquivarianceReport {
    bool fibers = false;          ///< same Kodaira type at each basis place
    bool intersections = false;   ///< pairwise section intersections
    bool gram = false;
    std::vector<std::pair<std::string, bool>> pushforwards;
    QMatrix gram_char0, gram_reduced;

    bool all() const;
};

EquivarianceReport equivariance_check(const SurfaceContext<NFElem>& ctx, const ReductionMap& m,
                                      const std::vector<AutomorphismPair>& autos = {});

}  // namespace enr
