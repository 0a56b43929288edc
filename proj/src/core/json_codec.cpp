#include "enr/core/json_codec.hpp"

namespace enr::json_codec {

Rational rational_from(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("rational must be an integer or a \"num/den\" string: " + j.dump());
}

json to_json(const Rational& r) {
    if (r.is_integer() && r.num().fits_slong_p()) return r.num().get_si();
    return r.str();
}

QVector rational_vector_from(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array: " + j.dump());
    QVector v;
    for (const auto& x : j) v.push_back(rational_from(x));
    return v;
}

QMatrix rational_matrix_from(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::vector<QVector> rows;
    for (const auto& r : j) rows.push_back(rational_vector_from(r));
    return QMatrix(rows);
}

IntMatrix int_matrix_from(const json& j) { return to_integer(rational_matrix_from(j)); }

json to_json(const QVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const QMatrix& m) {
    json a = json::array();
    for (size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

json to_json(const IntMatrix& m) { return to_json(to_rational(m)); }

NFElem nf_elem_from(const FieldPtr& K, const json& j) {
    if (j.is_array()) return K->from_coeffs(rational_vector_from(j));
    return K->from_rational(rational_from(j));
}

json to_json(const NFElem& a) { return to_json(a.coords()); }

UniPoly<Rational> rational_poly_from(const json& j) { return UniPoly<Rational>(Rational(), rational_vector_from(j)); }

json to_json(const UniPoly<Rational>& p) { return to_json(p.coeffs()); }

}  // namespace enr::json_codec
