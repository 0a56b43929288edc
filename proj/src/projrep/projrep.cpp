#include "enr/projrep/projrep.hpp"

#include "enr/core/expr.hpp"

#include <deque>
#include <set>

namespace enr {

namespace {

std::vector<NFElem> flat(const NFMatrix& m) {
    std::vector<NFElem> v;
    for (size_t i = 0; i < m.rows(); ++i)
        for (const auto& x : m.row(i)) v.push_back(x);
    return v;
}

NFMatrix identity_over(const FieldPtr& K, size_t n) { return NFMatrix::identity(n, K->zero(), K->one()); }

ExprParser<NFElem> zeta_parser(const FieldPtr& K, std::vector<std::string> vars) {
    const NFElem z = K->gen();
    return ExprParser<NFElem>(K->zero(), std::move(vars), {{"zeta", z}, {"i", z * z}});
}

}  // namespace

NFMatrix projective_normalize(const NFMatrix& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return m(i, j).inv() * m;
    throw std::invalid_argument("zero matrix has no projective class");
}

ProjMatrixGroup::ProjMatrixGroup(FieldPtr base, std::vector<NFMatrix> generators)
    : base_(std::move(base)), gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("at least one generator is required");
    for (const auto& g : gens_)
        if (!g.is_square() || g.rows() != gens_.front().rows())
            throw std::invalid_argument("generators must be square of equal size");
}

const std::vector<NFMatrix>& ProjMatrixGroup::elements(size_t cap) const {
    if (!closure_.empty()) return closure_;
    std::set<std::vector<NFElem>> seen;
    std::vector<NFMatrix> out;
    std::deque<NFMatrix> queue;
    const NFMatrix id = identity_over(base_, dimension());
    seen.insert(flat(id));
    out.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        const NFMatrix e = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens_) {
            NFMatrix n = projective_normalize(e * g);
            if (!seen.insert(flat(n)).second) continue;
            if (out.size() >= cap) throw ClosureCapExceeded("closure exceeds " + std::to_string(cap) + " elements");
            out.push_back(n);
            queue.push_back(std::move(n));
        }
    }
    closure_ = std::move(out);
    return closure_;
}

std::vector<NFMatrix> ProjMatrixGroup::center() const {
    std::vector<NFMatrix> c;
    for (const auto& e : elements()) {
        bool central = true;
        for (const auto& g : gens_) central = central && projective_normalize(e * g) == projective_normalize(g * e);
        if (central) c.push_back(e);
    }
    return c;
}

bool ProjMatrixGroup::contains(const NFMatrix& m) const {
    const NFMatrix n = projective_normalize(m);
    for (const auto& e : elements())
        if (e == n) return true;
    return false;
}

ClosureSummary closure_order_center(const ProjMatrixGroup& g) { return {g.order(), g.center()}; }

MultiPoly<NFElem> act(const MultiPoly<NFElem>& p, const NFMatrix& m) {
    const size_t n = p.nvars();
    if (m.rows() != n) throw std::invalid_argument("matrix size does not match the number of variables");
    const NFElem z = p.zero_elem();
    std::vector<MultiPoly<NFElem>> vals;
    for (size_t j = 0; j < n; ++j) {
        MultiPoly<NFElem> v(z, n);
        for (size_t i = 0; i < n; ++i)
            if (!m(i, j).is_zero()) v += MultiPoly<NFElem>::variable(z, n, i).scaled(m(i, j));
        vals.push_back(std::move(v));
    }
    return p.substitute(vals);
}

std::optional<std::vector<NFElem>> relative_invariant_character(const MultiPoly<NFElem>& p,
                                                                const ProjMatrixGroup& g) {
    if (p.is_zero() || !p.is_homogeneous()) throw NonHomogeneous("relative invariants must be homogeneous");
    const auto& [e0, c0] = *p.terms().begin();
    std::vector<NFElem> chi;
    for (const auto& m : g.generators()) {
        const auto image = act(p, m);
        const NFElem c = image.coeff(e0) / c0;
        if (c.is_zero() || image != p.scaled(c)) return std::nullopt;
        chi.push_back(c);
    }
    const auto& gens = g.generators();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j)
            if (act(p, gens[i] * gens[j]) != p.scaled(chi[i] * chi[j]))
                throw std::logic_error("character is not multiplicative");
    return chi;
}

std::optional<long> multiplicative_order(const NFElem& x, long bound) {
    NFElem y = x;
    for (long k = 1; k <= bound; ++k) {
        if (y.is_one()) return k;
        y *= x;
    }
    return std::nullopt;
}

FieldPtr cyclotomic8() {
    static const FieldPtr K =
        NumberField::create(UniPoly<Rational>(Rational(), {Rational(1), 0, 0, 0, 1}), "zeta");
    return K;
}

LemmaReport lemma_identity_check(const FieldPtr& K) {
    const NFElem z = K->gen(), i = z * z;
    if (!(i * i + K->one()).is_zero()) throw std::invalid_argument("field generator is not a primitive 8th root of unity");
    LemmaReport r;

    const auto f = zeta_parser(K, {"t", "v"}).parse("1 + t^4*v^4 - i*t^4 - i*v^4");
    // t^4 f(1/(z t), z^3 v): each t^a becomes z^(-a) t^(4-a)
    MultiPoly<NFElem> pulled(K->zero(), 2);
    for (const auto& [e, c] : f.terms()) {
        if (e[0] > 4) throw std::logic_error("unexpected degree in t");
        pulled.add_term({4 - e[0], e[1]}, c * z.pow(-e[0]) * z.pow(3 * e[1]));
    }
    r.pullback_identity = pulled == f.scaled(i);
    r.lambda_identity = z * z == i;

    // (t^2 / (2 z lambda)) (-1 / (z t^2)) z^3 against 1 / (2 lambda)
    const NFElem two = K->from_rational(Rational(2));
    r.form_scalar = two * (two * z).inv() * (-(z.inv())) * z.pow(3);
    r.form_order = multiplicative_order(r.form_scalar).value_or(0);
    return r;
}

DiagonalReport diagonal_discriminant(const FieldPtr& K) {
    auto parser = zeta_parser(K, {"a", "s", "t"});
    const auto b = zeta_parser(K, {"x", "y", "z", "w"}).parse("x^4 + y^4 - i*z^4 - i*w^4");
    DiagonalReport r;
    r.restriction = b.substitute({parser.parse("s^2"), parser.parse("a*t^2"), parser.parse("s*t"), parser.parse("-a*s*t")});
    r.literal = b.substitute({parser.parse("s^2"), parser.parse("a*t^2"), parser.parse("s*t"), parser.parse("-a^2*s*t")});
    const auto expected = parser.parse("s^8 - i*(a^4 + 1)*s^4*t^4 + a^4*t^8");
    r.matches_expansion = r.restriction == expected;
    r.literal_matches = r.literal == expected;

    // A X^2 + B X Y + C Y^2 with X = s^4, Y = t^4
    auto coeff = [&](int es, int et) {
        std::vector<NFElem> c;
        for (const auto& [e, x] : r.restriction.terms()) {
            if (e[1] != es || e[2] != et) continue;
            if (c.size() <= static_cast<size_t>(e[0])) c.resize(e[0] + 1, K->zero());
            c[e[0]] = x;
        }
        return UniPoly<NFElem>(K->zero(), c);
    };
    const auto A = coeff(8, 0), B = coeff(4, 4), C = coeff(0, 8);
    r.discriminant = B * B - UniPoly<NFElem>::constant(K->from_rational(Rational(4))) * A * C;
    r.discriminant_matches = r.discriminant == -parser.parse("a^8 + 6*a^4 + 1").to_univariate(0);
    return r;
}

ProjrepData projrep_from_json(const nlohmann::json& j) {
    std::vector<Rational> mp;
    for (const auto& c : j.at("field_minpoly")) mp.push_back(Rational(c.get<long>()));
    const FieldPtr K = NumberField::create(UniPoly<Rational>(Rational(), mp), j.value("generator", "zeta"));
    auto scalar = zeta_parser(K, {});
    auto matrix = [&](const nlohmann::json& rows) {
        std::vector<std::vector<NFElem>> m;
        for (const auto& row : rows) {
            m.emplace_back();
            for (const auto& e : row) m.back().push_back(scalar.parse(e.get<std::string>()).constant_term());
        }
        return NFMatrix(m, K->zero());
    };
    const auto vars = j.at("variables").get<std::vector<std::string>>();
    auto poly = zeta_parser(K, vars);
    return {K, ProjMatrixGroup(K, {matrix(j.at("g1")), matrix(j.at("g2"))}), poly.parse(j.at("q")),
            poly.parse(j.at("b")), j.value("expected_order", size_t{0})};
}

}  // namespace enr
