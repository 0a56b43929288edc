#pragma once

#include "enr/core/linalg.hpp"

#include <optional>
#include <stdexcept>

namespace enr {

struct NotMonic : std::domain_error {
    using std::domain_error::domain_error;
};
struct ZeroConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

using RatPoly = UniPoly<Rational>;

/// Integer polynomial from ascending coefficients.
RatPoly int_poly(const std::vector<long>& coeffs);

/// Sturm sequence f, f', -rem(f, f'), ...
std::vector<RatPoly> sturm_sequence(const RatPoly& f);

/// Number of distinct real roots in (lo, hi]; unbounded ends when nullopt.
size_t sturm_count(const std::vector<RatPoly>& seq, const std::optional<Rational>& lo,
                   const std::optional<Rational>& hi);
size_t count_distinct_roots(const RatPoly& f, const std::optional<Rational>& lo, const std::optional<Rational>& hi);
/// Real roots in the closed interval [lo, hi], counted with multiplicity.
size_t count_roots_with_multiplicity(const RatPoly& f, const std::optional<Rational>& lo,
                                     const std::optional<Rational>& hi);

/// Interval (lo, hi] with dyadic ends containing exactly one root of poly.
struct RootInterval {
    Rational lo, hi;
    RatPoly poly;
    double midpoint() const { return ((lo + hi) / Rational(2)).to_double(); }
};

/// Bisects (lo, hi], which must hold exactly one distinct root of f, until hi - lo < width.
RootInterval isolate_root(const RatPoly& f, Rational lo, Rational hi, const Rational& width);

bool is_reciprocal(const RatPoly& f);
/// For reciprocal f of degree 2m, the g of degree m with f(x) = x^m g(x + 1/x).
RatPoly trace_polynomial(const RatPoly& f);

struct SalemResult {
    bool salem = false;
    /// Root > 1, width below 2^-20 (< 1e-6).
    std::optional<RootInterval> root;
};
/// Throws NotMonic / ZeroConstantTerm.
SalemResult is_salem(const RatPoly& f);

/// True iff every complex root of f lies on the unit circle.
bool unit_circle_factor_test(const RatPoly& f);

struct EntropyCheck {
    bool divides = false;
    std::optional<bool> cofactor_on_circle;
    std::optional<RootInterval> radius;
    RatPoly charpoly, cofactor;
};
EntropyCheck matrix_entropy_check(const QMatrix& m, const RatPoly& salem);

}  // namespace enr
