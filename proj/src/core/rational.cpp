#include "enr/core/rational.hpp"

#include <limits>

namespace enr {

Rational::Rational(const Integer& n, const Integer& d) {
    if (d == 0) throw ArithmeticError("zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s.push_back(c);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s, 10));
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational: " + raw);
    }
}

Rational Rational::inv() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    v_ /= o.v_;
    return *this;
}

Integer Rational::floor() const { return floor_div(v_.get_num(), v_.get_den()); }

Integer Rational::ceil() const { return -floor_div(-v_.get_num(), v_.get_den()); }

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer xgcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
    Integer g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool exact_root(const Integer& n, unsigned k, Integer& root) {
    if (n < 0) {
        if (k % 2 == 0) return false;
        Integer r;
        bool ok = exact_root(-n, k, r);
        root = -r;
        return ok;
    }
    return mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::int64_t to_i64(const Integer& n) {
    if (!mpz_fits_slong_p(n.get_mpz_t())) throw ArithmeticError("integer exceeds 64 bits");
    return n.get_si();
}

}  // namespace enr
