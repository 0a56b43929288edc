#pragma once

#include "enr/core/rational.hpp"
#include "enr/core/upoly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace enr {

class NFElem;

/// Q(a) = Q[x]/(minpoly). The minimal polynomial must be monic; its
/// irreducibility is the caller's responsibility.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static std::shared_ptr<const NumberField> create(UniPoly<Rational> minpoly, std::string gen_name = "a");

    int degree() const { return degree_; }
    const UniPoly<Rational>& minpoly() const { return minpoly_; }
    const std::string& gen_name() const { return gen_; }

    NFElem zero() const;
    NFElem one() const;
    NFElem gen() const;
    NFElem from_rational(const Rational& r) const;
    NFElem from_coeffs(std::vector<Rational> c) const;

    /// Reduce a polynomial in the generator to canonical coordinates.
    std::vector<Rational> reduce(const std::vector<Rational>& poly) const;

private:
    NumberField(UniPoly<Rational> minpoly, std::string gen);

    UniPoly<Rational> minpoly_;
    int degree_;
    std::string gen_;
    // powers_[k] = coordinates of a^(degree + k)
    std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field as coordinates on the power basis.
class NFElem {
public:
    NFElem() = default;
    NFElem(FieldPtr K, std::vector<Rational> c);

    const FieldPtr& field() const { return K_; }
    const std::vector<Rational>& coords() const { return c_; }
    /// Polynomial representative in the generator.
    UniPoly<Rational> as_poly() const { return UniPoly<Rational>(Rational(), c_); }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_part() const { return c_.empty() ? Rational() : c_[0]; }

    NFElem zero() const { return K_->zero(); }
    NFElem one() const { return K_->one(); }
    NFElem from_int(long n) const { return K_->from_rational(Rational(n)); }

    NFElem inv() const;
    NFElem pow(long e) const;
    std::string str() const;

    NFElem& operator+=(const NFElem& o);
    NFElem& operator-=(const NFElem& o);
    NFElem& operator*=(const NFElem& o) { return *this = *this * o; }
    NFElem& operator/=(const NFElem& o) { return *this = *this * o.inv(); }
    friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
    friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inv(); }
    NFElem operator-() const;
    friend NFElem operator*(const Rational& r, const NFElem& a);

    friend bool operator==(const NFElem& a, const NFElem& b) { return a.c_ == b.c_; }
    friend bool operator<(const NFElem& a, const NFElem& b) { return a.c_ < b.c_; }

private:
    FieldPtr K_;
    std::vector<Rational> c_;
};

inline NFElem zero_like(const NFElem& a) { return a.zero(); }
inline NFElem one_like(const NFElem& a) { return a.one(); }

}  // namespace enr
