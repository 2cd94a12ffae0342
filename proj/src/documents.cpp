#include "kmorbit/documents.hpp"

#include "kmorbit/error.hpp"

using nlohmann::json;

namespace kmorbit {

namespace {

std::string literal_field(const json& doc, const char* key, const char* fallback) {
  if (!doc.contains(key))
    return fallback;
  const json& v = doc.at(key);
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_number_integer())
    return std::to_string(v.get<long long>());
  throw InvalidInput(std::string("field \"") + key + "\" must be a literal string");
}

} // namespace

json matrix_to_json(const MatK& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(format_laurent(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatK matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty())
    throw InvalidInput("\"matrix\" must be a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  MatK m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw InvalidInput("matrix row " + std::to_string(i + 1) + " must have " + std::to_string(n) +
                         " entries");
    for (Eigen::Index j = 0; j < n; ++j) {
      const json& leaf = row[static_cast<std::size_t>(j)];
      if (leaf.is_string())
        m(i, j) = parse_laurent(leaf.get<std::string>());
      else if (leaf.is_number_integer())
        m(i, j) = LaurentSeries(static_cast<long>(leaf.get<long long>()));
      else
        throw InvalidInput("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") must be a literal string");
    }
  }
  return m;
}

AffineElement element_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("matrix"))
    throw InvalidInput("element document needs a \"matrix\" field");
  MatK m = matrix_from_json(doc.at("matrix"));
  if (doc.contains("n")) {
    if (!doc.at("n").is_number_integer() || doc.at("n").get<long long>() != m.rows())
      throw InvalidInput("\"n\" does not match the matrix size");
  }
  return AffineElement(std::move(m), parse_scalar(literal_field(doc, "c", "0")),
                       parse_scalar(literal_field(doc, "d", "0")));
}

json element_to_json(const AffineElement& a) {
  return {{"n", a.n()}, {"matrix", matrix_to_json(a.mat())}, {"c", a.c().to_string()},
          {"d", a.d().to_string()}};
}

GroupElement group_from_json(const json& doc, int working_prec) {
  if (!doc.is_object() || !doc.contains("matrix"))
    throw InvalidInput("group document needs a \"matrix\" field");
  MatK g = matrix_from_json(doc.at("matrix"));
  return GroupElement::certify(std::move(g), parse_scalar(literal_field(doc, "z", "1")), working_prec);
}

json group_to_json(const GroupElement& g) {
  return {{"z", g.z.to_string()},
          {"matrix", matrix_to_json(g.g)},
          {"det_mode", g.det_mode == DetMode::exact_one ? "exact_one" : "nth_power_certified"}};
}

} // namespace kmorbit
