#include "enr/app/fixtures.hpp"

#include "enr/core/expr.hpp"
#include "enr/core/json_codec.hpp"

#include <filesystem>
#include <fstream>

namespace enr {

namespace {

const char* const kFiles[] = {"field", "lattice", "pushforward", "sections", "salem", "projrep", "kappa"};

Rational decimal(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(Integer(s));
    const std::string frac = s.substr(dot + 1);
    Integer den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational(Integer(s.substr(0, dot) + frac), den);
}

RatPoly poly_of(const nlohmann::json& coeffs) {
    std::vector<long> c;
    for (const auto& x : coeffs) c.push_back(x.get<long>());
    return int_poly(c);
}

}  // namespace

LatticeIsometry NSLattice::isometry(const QMatrix& on_basis) const {
    return LatticeIsometry(ns.lattice, restrict_to_basis(on_basis, ns.basis));
}

QVector NSLattice::to_ns(const QVector& on_basis) const { return solve_left(ns.basis, on_basis); }

FixtureSet::FixtureSet(const std::string& dir) {
    for (const char* name : kFiles) {
        const auto path = std::filesystem::path(dir) / (std::string(name) + ".json");
        std::ifstream in(path);
        if (!in) throw FixtureError("cannot open " + path.string());
        try {
            files_[name] = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw FixtureError(path.string() + ": " + e.what());
        }
    }
    std::vector<Rational> mp;
    for (const auto& c : raw("field").at("minpoly")) mp.emplace_back(c.get<long>());
    K_ = NumberField::create(UniPoly<Rational>(Rational(), mp), raw("field").value("generator", "a"));
}

const nlohmann::json& FixtureSet::raw(const std::string& name) const {
    const auto it = files_.find(name);
    if (it == files_.end()) throw FixtureError("unknown fixture " + name);
    return it->second;
}

std::vector<std::string> FixtureSet::missing_sources() const {
    std::vector<std::string> out;
    for (const auto& [name, j] : files_)
        if (!j.contains("source") || !j["source"].is_string() || j["source"].get<std::string>().empty())
            out.push_back(name);
    return out;
}

NFElem FixtureSet::elem(const std::string& s) const {
    ExprParser<NFElem> parser(K_->zero(), {}, {{K_->gen_name(), K_->gen()}});
    return parser.parse(s).constant_term();
}

UniPoly<NFElem> FixtureSet::k_poly(const std::string& s) const {
    ExprParser<NFElem> parser(K_->zero(), {"t"}, {{K_->gen_name(), K_->gen()}});
    return parser.parse(s).to_univariate(0);
}

UniPoly<Fp> FixtureSet::fp_poly(const std::string& s, std::uint64_t p) {
    ExprParser<Fp> parser(Fp(p, 0), {"t"});
    return parser.parse(s).to_univariate(0);
}

QMatrix FixtureSet::gram() const { return json_codec::rational_matrix_from(raw("lattice").at("gram")); }
QVector FixtureSet::p2() const { return json_codec::rational_vector_from(raw("lattice").at("p2")); }
QVector FixtureSet::h() const { return json_codec::rational_vector_from(raw("lattice").at("h")); }
QMatrix FixtureSet::f_oy() const { return json_codec::rational_matrix_from(raw("pushforward").at("f_oy")); }
QMatrix FixtureSet::iota() const { return json_codec::rational_matrix_from(raw("pushforward").at("iota")); }

const NSLattice& FixtureSet::ns() const {
    if (!ns_) {
        NSLattice l;
        l.span = QuadLattice(gram());
        l.ns = overlattice(l.span, {p2()});
        ns_ = std::move(l);
    }
    return *ns_;
}

std::uint64_t FixtureSet::prime() const { return raw("sections").at("prime").get<std::uint64_t>(); }

WeierstrassModel<NFElem> FixtureSet::e1_k() const {
    const auto& m = raw("sections").at("model");
    return WeierstrassModel<NFElem>::short_form(k_poly(m.at("A")), k_poly(m.at("B")));
}

WeierstrassModel<NFElem> FixtureSet::first_model_k() const {
    const auto& m = raw("sections").at("model");
    return WeierstrassModel<NFElem>::short_form(k_poly(m.at("first_model_A")), k_poly(m.at("B")));
}

std::vector<NFElem> FixtureSet::fiber_points() const {
    std::vector<NFElem> out;
    for (const auto& s : raw("sections").at("fiber_points")) out.push_back(elem(s));
    return out;
}

std::vector<SurfaceSection<Fp>> FixtureSet::sections_fp() const {
    std::vector<SurfaceSection<Fp>> out;
    for (const auto& s : raw("sections").at("sections_fp"))
        out.push_back(SurfaceSection<Fp>::point(RatFunc<Fp>(fp_poly(s.at("x"), prime())),
                                                RatFunc<Fp>(fp_poly(s.at("y"), prime()))));
    return out;
}

std::vector<SurfaceSection<NFElem>> FixtureSet::sections_char0() const {
    std::vector<SurfaceSection<NFElem>> out;
    for (const auto& s : raw("sections").at("sections_char0"))
        out.push_back(SurfaceSection<NFElem>::point(RatFunc<NFElem>(k_poly(s.at("x"))), RatFunc<NFElem>(k_poly(s.at("y")))));
    return out;
}

FieldHints<NFElem> FixtureSet::k_hints() const {
    FieldHints<NFElem> h;
    h.place_candidates = fiber_points();
    h.units = {elem(raw("field").at("sqrt2")), elem("(a^6 + 5*a^2)/2")};
    return h;
}

RatPoly FixtureSet::tau8() const { return poly_of(raw("salem").at("tau8").at("poly")); }
RatPoly FixtureSet::lehmer() const { return poly_of(raw("salem").at("lehmer").at("poly")); }

std::pair<Rational, Rational> FixtureSet::tau8_bounds() const {
    const auto& t = raw("salem").at("tau8");
    return {decimal(t.at("lo")), decimal(t.at("hi"))};
}

ProjrepData FixtureSet::projrep() const { return projrep_from_json(raw("projrep")); }

}  // namespace enr
