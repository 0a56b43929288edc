#pragma once

#include "enr/core/ratfunc.hpp"
#include "enr/ellsurf/fieldops.hpp"
#include "enr/lattice/lattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace enr {

struct ZeroDiscriminant : std::domain_error {
    using std::domain_error::domain_error;
};
struct IncompletePlaceList : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedForm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with a_i in F[t], K3 degree
/// bounds deg a_i <= 2i (m = 2).
template <class F>
struct WeierstrassModel {
    std::array<UniPoly<F>, 5> a;  ///< a1, a2, a3, a4, a6

    static WeierstrassModel short_form(const UniPoly<F>& A, const UniPoly<F>& B) {
        const UniPoly<F> z = zero_like(A);
        return {{z, z, z, A, B}};
    }
    const F& zero() const { return a[3].zero_elem(); }
    const UniPoly<F>& a1() const { return a[0]; }
    const UniPoly<F>& a2() const { return a[1]; }
    const UniPoly<F>& a3() const { return a[2]; }
    const UniPoly<F>& a4() const { return a[3]; }
    const UniPoly<F>& a6() const { return a[4]; }
    bool is_short() const { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }
    /// Throws unless the degree bounds for m = 2 hold.
    void check_k3_degrees() const;

    friend bool operator==(const WeierstrassModel&, const WeierstrassModel&) = default;
};

template <class F>
UniPoly<F> ring_int(const UniPoly<F>& like, long n) { return UniPoly<F>::constant(like.zero_elem().from_int(n)); }
template <class F>
RatFunc<F> ring_int(const RatFunc<F>& like, long n) { return like.from_int(n); }

/// Standard invariants over any coefficient ring R (polynomials or rational functions).
template <class R>
struct InvariantsOf {
    R b2, b4, b6, b8, c4, c6, disc;
};

template <class R>
InvariantsOf<R> invariants_from(const R& a1, const R& a2, const R& a3, const R& a4, const R& a6) {
    InvariantsOf<R> v;
    const auto k = [&](long n) { return ring_int(a4, n); };
    v.b2 = a1 * a1 + k(4) * a2;
    v.b4 = k(2) * a4 + a1 * a3;
    v.b6 = a3 * a3 + k(4) * a6;
    v.b8 = a1 * a1 * a6 + k(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    v.c4 = v.b2 * v.b2 - k(24) * v.b4;
    v.c6 = -(v.b2 * v.b2 * v.b2) + k(36) * v.b2 * v.b4 - k(216) * v.b6;
    v.disc = -(v.b2 * v.b2 * v.b8) - k(8) * v.b4 * v.b4 * v.b4 - k(27) * v.b6 * v.b6 + k(9) * v.b2 * v.b4 * v.b6;
    return v;
}

template <class F>
struct ModelInvariants {
    UniPoly<F> b2, b4, b6, b8, c4, c6, disc;
    RatFunc<F> j;
};

template <class F>
ModelInvariants<F> model_invariants(const WeierstrassModel<F>& w);

/// Finite place (monic irreducible pi) or the place at infinity.
template <class F>
struct Place {
    bool infinity = false;
    UniPoly<F> pi;

    static Place finite(UniPoly<F> p) { return {false, p.monic()}; }
    static Place at_infinity(const F& ctx) { return {true, UniPoly<F>::variable(ctx)}; }
    int degree() const { return infinity ? 1 : pi.degree(); }
    /// The point of P^1 for degree-one places; nullopt for infinity.
    std::optional<F> point() const;
    std::string str() const { return infinity ? "oo" : pi.str(); }
    friend bool operator==(const Place&, const Place&) = default;
};

enum class Kodaira { I0, In, II, III, IV, I0s, Ins, IVs, IIIs, IIs };

template <class F>
struct LocalFiberData {
    Place<F> place;
    Kodaira type = Kodaira::I0;
    int n = 0;             ///< index for I_n and I_n^*
    int components = 1;    ///< geometric components
    int v_disc = 0;        ///< of the locally minimal model
    int v_c4 = 0, v_c6 = 0;
    int minimal_shifts = 0;  ///< local twists by pi^(4,6) needed for minimality
    std::optional<bool> split;  ///< multiplicative fibers only
    bool split_probabilistic = false;

    std::string type_name() const;
    /// "A1", "D4", "E8", ... or "" for irreducible fibers.
    std::string root_lattice() const;
    bool reducible() const { return components > 1; }
};

template <class F>
struct FiberConfiguration {
    std::vector<LocalFiberData<F>> fibers;  ///< finite places, then infinity
    bool complete = true;
    /// Sum over places of deg(place) * v(disc) before minimalization.
    int disc_degree_sum = 0;

    std::vector<LocalFiberData<F>> reducible() const;
    /// Fiber at a place, if present.
    const LocalFiberData<F>* at(const Place<F>& p) const;
};

/// Tate's algorithm (characteristic 0 or >= 5) at every finite place of the
/// discriminant and at infinity via t = 1/s, x -> x/s^4, y -> y/s^6.
/// Over number fields the places come from the hint candidates; a partial
/// list raises IncompletePlaceList unless allow_partial is set.
template <class F>
FiberConfiguration<F> fiber_configuration(const WeierstrassModel<F>& w, const FieldHints<F>& hints = {},
                                          bool allow_partial = false);

/// Model in the chart at infinity.
template <class F>
WeierstrassModel<F> model_at_infinity(const WeierstrassModel<F>& w);

/// Local Tate data at one place.
template <class F>
LocalFiberData<F> tate_at(const WeierstrassModel<F>& w, const Place<F>& place);

std::string kodaira_name(Kodaira k, int n);
int kodaira_components(Kodaira k, int n);

struct TrivialLatticeResult {
    QuadLattice triv;
    size_t mw_rank = 0;
    std::vector<Integer> torsion;  ///< invariant factors > 1 of NS / Triv
};

/// Triv spanned by the basis vectors with the given indices (zero section,
/// fiber, components) inside the overlattice NS of the basis span; NS/Triv
/// is read off a Smith form.
TrivialLatticeResult trivial_lattice_and_mw(const QuadLattice& span, const EmbeddedLattice& ns,
                                            const std::vector<size_t>& triv_indices);

}  // namespace enr
