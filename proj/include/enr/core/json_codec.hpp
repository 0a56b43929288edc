#pragma once

#include "enr/core/matrix.hpp"
#include "enr/core/number_field.hpp"
#include "enr/core/upoly.hpp"

#include <json.hpp>

namespace enr::json_codec {

using nlohmann::json;

Rational rational_from(const json& j);
json to_json(const Rational& r);

IntMatrix int_matrix_from(const json& j);
QMatrix rational_matrix_from(const json& j);
QVector rational_vector_from(const json& j);
json to_json(const QMatrix& m);
json to_json(const IntMatrix& m);
json to_json(const QVector& v);

NFElem nf_elem_from(const FieldPtr& K, const json& j);
json to_json(const NFElem& a);

UniPoly<Rational> rational_poly_from(const json& j);
json to_json(const UniPoly<Rational>& p);

}  // namespace enr::json_codec
