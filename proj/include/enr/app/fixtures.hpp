#pragma once

#include "enr/core/linalg.hpp"
#include "enr/ellsurf/neron_severi.hpp"
#include "enr/lattice/lattice.hpp"
#include "enr/projrep/projrep.hpp"
#include "enr/salem/salem.hpp"

#include <json.hpp>
#include <map>
#include <string>

namespace enr {

struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The Neron-Severi data on the basis B.
struct NSLattice {
    QuadLattice span;      ///< Z^18 with the Gram G_B
    EmbeddedLattice ns;    ///< span + Z v_B(p2)
    LatticeIsometry isometry(const QMatrix& on_basis) const;
    QVector to_ns(const QVector& on_basis) const;
};

/// All published data, read from one directory of JSON files.
class FixtureSet {
public:
    explicit FixtureSet(const std::string& dir);

    const nlohmann::json& raw(const std::string& name) const;
    /// Files without a "source" entry.
    std::vector<std::string> missing_sources() const;

    FieldPtr field() const { return K_; }
    NFElem elem(const std::string& s) const;
    UniPoly<NFElem> k_poly(const std::string& s) const;
    static UniPoly<Fp> fp_poly(const std::string& s, std::uint64_t p);

    QMatrix gram() const;
    QVector p2() const;
    QVector h() const;
    QMatrix f_oy() const;
    QMatrix iota() const;
    const NSLattice& ns() const;

    std::uint64_t prime() const;
    WeierstrassModel<NFElem> e1_k() const;
    WeierstrassModel<NFElem> first_model_k() const;
    std::vector<NFElem> fiber_points() const;
    std::vector<SurfaceSection<Fp>> sections_fp() const;
    std::vector<SurfaceSection<NFElem>> sections_char0() const;
    FieldHints<NFElem> k_hints() const;

    RatPoly tau8() const;
    RatPoly lehmer() const;
    std::pair<Rational, Rational> tau8_bounds() const;

    ProjrepData projrep() const;

private:
    std::map<std::string, nlohmann::json> files_;
    FieldPtr K_;
    mutable std::optional<NSLattice> ns_;
};

}  // namespace enr
