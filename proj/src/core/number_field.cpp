#include "enr/core/number_field.hpp"

#include <sstream>

namespace enr {

std::shared_ptr<const NumberField> NumberField::create(UniPoly<Rational> minpoly, std::string gen_name) {
    if (minpoly.degree() < 1 || !minpoly.is_monic())
        throw std::invalid_argument("number field minimal polynomial must be monic of degree >= 1");
    return std::shared_ptr<const NumberField>(new NumberField(std::move(minpoly), std::move(gen_name)));
}

NumberField::NumberField(UniPoly<Rational> minpoly, std::string gen)
    : minpoly_(std::move(minpoly)), degree_(minpoly_.degree()), gen_(std::move(gen)) {
    // a^d = -sum_{i<d} m_i a^i, then shift repeatedly
    std::vector<Rational> cur(degree_);
    for (int i = 0; i < degree_; ++i) cur[i] = -minpoly_.coeff(i);
    powers_.push_back(cur);
    for (int k = 1; k < degree_; ++k) {
        std::vector<Rational> nxt(degree_);
        Rational top = cur[degree_ - 1];
        for (int i = degree_ - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = Rational();
        if (!top.is_zero())
            for (int i = 0; i < degree_; ++i) nxt[i] += top * powers_[0][i];
        powers_.push_back(nxt);
        cur = std::move(nxt);
    }
}

std::vector<Rational> NumberField::reduce(const std::vector<Rational>& poly) const {
    std::vector<Rational> r(degree_);
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i].is_zero()) continue;
        if (static_cast<int>(i) < degree_) {
            r[i] += poly[i];
            continue;
        }
        size_t k = i - degree_;
        if (k < powers_.size()) {
            for (int j = 0; j < degree_; ++j)
                if (!powers_[k][j].is_zero()) r[j] += poly[i] * powers_[k][j];
        } else {
            auto mono = UniPoly<Rational>::monomial(poly[i], static_cast<int>(i)) % minpoly_;
            for (int j = 0; j <= mono.degree(); ++j) r[j] += mono.coeff(j);
        }
    }
    return r;
}

NFElem NumberField::zero() const { return NFElem(shared_from_this(), std::vector<Rational>(degree_)); }
NFElem NumberField::one() const { return from_rational(Rational(1)); }
NFElem NumberField::gen() const {
    std::vector<Rational> c(degree_);
    if (degree_ == 1) c[0] = -minpoly_.coeff(0);
    else c[1] = Rational(1);
    return NFElem(shared_from_this(), std::move(c));
}
NFElem NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree_);
    c[0] = r;
    return NFElem(shared_from_this(), std::move(c));
}
NFElem NumberField::from_coeffs(std::vector<Rational> c) const {
    return NFElem(shared_from_this(), reduce(c));
}

NFElem::NFElem(FieldPtr K, std::vector<Rational> c) : K_(std::move(K)), c_(std::move(c)) {
    if (!K_) throw std::invalid_argument("number field element without field");
    if (static_cast<int>(c_.size()) != K_->degree()) c_ = K_->reduce(c_);
}

bool NFElem::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool NFElem::is_one() const { return is_rational() && c_[0].is_one(); }

bool NFElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

NFElem& NFElem::operator+=(const NFElem& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    if (a.K_.get() != b.K_.get() && a.K_->minpoly() != b.K_->minpoly())
        throw ArithmeticError("mixed number fields");
    const size_t d = a.c_.size();
    std::vector<Rational> prod(2 * d - 1);
    for (size_t i = 0; i < d; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < d; ++j)
            if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return NFElem(a.K_, a.K_->reduce(prod));
}

NFElem operator*(const Rational& r, const NFElem& a) {
    NFElem x = a;
    for (auto& c : x.c_) c *= r;
    return x;
}

NFElem NFElem::operator-() const {
    NFElem x = *this;
    for (auto& c : x.c_) c = -c;
    return x;
}

NFElem NFElem::inv() const {
    if (is_zero()) throw ArithmeticError("inverse of zero in number field");
    UniPoly<Rational> s, t;
    UniPoly<Rational> g = poly_xgcd(as_poly(), K_->minpoly(), s, t);
    if (g.degree() != 0) throw ArithmeticError("element not invertible: minimal polynomial is reducible");
    return NFElem(K_, K_->reduce(s.coeffs()));
}

NFElem NFElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    NFElem r = one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string NFElem::str() const {
    if (!K_) return "?";
    return as_poly().str(K_->gen_name());
}

}  // namespace enr
