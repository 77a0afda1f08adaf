#include "nctoric/json_io.hpp"

#include <cctype>

#include "nctoric/error.hpp"

namespace nctoric {

namespace {

[[noreturn]] void bad_input(const std::string& message) { throw InputError(message); }

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : s_(text) {}

  Scalar parse() {
    Scalar x = expr();
    skip();
    if (pos_ != s_.size()) bad_input("unexpected '" + std::string(1, s_[pos_]) + "' in scalar literal '" + std::string(s_) + "'");
    return x;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) bad_input("expected '" + std::string(1, c) + "' in scalar literal '" + std::string(s_) + "'");
  }

  Scalar expr() {
    Scalar x = term();
    for (;;) {
      if (accept('+')) x = x + term();
      else if (accept('-')) x = x - term();
      else return x;
    }
  }

  Scalar term() {
    Scalar x = factor();
    while (accept('*')) x = x * factor();
    return x;
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) bad_input("expected a number in scalar literal '" + std::string(s_) + "'");
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
      bad_input("decimal literals are not accepted: '" + std::string(s_) + "'");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Scalar factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    if (accept('(')) {
      Scalar x = expr();
      expect(')');
      return x;
    }
    skip();
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      Integer n = integer();
      expect(')');
      return Scalar::sqrt(n);
    }
    Integer p = integer();
    if (accept('/')) {
      Integer q = integer();
      if (q == 0) bad_input("zero denominator in scalar literal '" + std::string(s_) + "'");
      return Scalar(Rational(p, q));
    }
    return Scalar(p);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Rational rational_field(const Json& j, const char* key) {
  if (!j.contains(key)) return 0;
  const Json& v = j.at(key);
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  if (!v.is_string()) bad_input(std::string("scalar field '") + key + "' must be a string \"p/q\"");
  return parse_rational(v.get<std::string>());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_input(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) bad_input(std::string("field '") + key + "' must be an array");
  return v;
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) bad_input(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<Vector> rays_from_json(const Json& j) {
  if (!j.is_array()) bad_input("rays must be an array");
  std::vector<Vector> rays;
  for (const auto& r : j) rays.push_back(vector_from_json(r));
  return rays;
}

Json rays_to_json(const std::vector<Vector>& rays) {
  Json out = Json::array();
  for (const auto& r : rays) out.push_back(vector_to_json(r));
  return out;
}

}  // namespace

Scalar parse_scalar_literal(std::string_view text) { return LiteralParser(text).parse(); }

Json scalar_to_json(const Scalar& x) {
  return Json{{"a", rational_to_string(x.rational_part())},
              {"b", rational_to_string(x.irrational_part())},
              {"d", x.radicand()}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar_literal(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
  if (!j.is_object()) bad_input("a scalar must be an object {\"a\",\"b\",\"d\"} or a literal string");
  Rational a = rational_field(j, "a"), b = rational_field(j, "b");
  long long d = j.contains("d") ? j.at("d").get<long long>() : 0;
  if (b == 0) return Scalar(a);
  if (d < 1) bad_input("an irrational scalar needs a positive radicand d");
  return Scalar(a, b, static_cast<std::int64_t>(d));
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) bad_input("expected an array of scalars");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      bad_input("not an integer: " + j.get<std::string>());
    }
  }
  bad_input("expected an integer");
}

Json integers_to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json rational_to_json(const Rational& q) { return Json(rational_to_string(q)); }

Json index_set_to_json(const IndexSet& s) {
  Json out = Json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

Json index_family_to_json(const IndexFamily& f) {
  Json out = Json::array();
  for (const auto& s : f) out.push_back(index_set_to_json(s));
  return out;
}

SimplePolytope polytope_from_json(const Json& j) {
  std::size_t dim = size_field(j, "dim");
  std::vector<Halfspace> hs;
  for (const auto& f : array_field(j, "facets")) {
    Vector n = vector_from_json(field(f, "normal"));
    if (n.size() != dim) bad_input("facet normal length differs from dim");
    hs.push_back({n, scalar_from_json(field(f, "offset"))});
  }
  return SimplePolytope(dim, std::move(hs));
}

Json polytope_to_json(const SimplePolytope& p) {
  Json facets = Json::array();
  for (const auto& h : p.halfspaces())
    facets.push_back(Json{{"normal", vector_to_json(h.normal)}, {"offset", scalar_to_json(h.offset)}});
  return Json{{"dim", p.dim()}, {"facets", facets}};
}

Cone cone_from_json(const Json& j) {
  std::size_t dim = size_field(j, "dim");
  auto rays = rays_from_json(field(j, "rays"));
  for (const auto& r : rays)
    if (r.size() != dim) bad_input("ray length differs from dim");
  return make_cone(dim, rays);
}

Json cone_to_json(const Cone& c) { return Json{{"dim", c.dim}, {"rays", rays_to_json(c.rays)}}; }

Fan fan_from_json(const Json& j) {
  std::size_t dim = size_field(j, "dim");
  std::vector<Cone> cones;
  for (const auto& c : array_field(j, "cones")) {
    auto rays = rays_from_json(field(c, "rays"));
    for (const auto& r : rays)
      if (r.size() != dim) bad_input("ray length differs from dim");
    cones.push_back(make_cone(dim, rays));
  }
  bool complete = j.contains("complete") && j.at("complete").is_boolean() && j.at("complete").get<bool>();
  return make_fan(dim, std::move(cones), complete);
}

Json fan_to_json(const Fan& f) {
  Json cones = Json::array();
  for (const auto& c : f.cones) cones.push_back(Json{{"rays", rays_to_json(c.rays)}});
  return Json{{"dim", f.dim}, {"complete", f.complete}, {"cones", cones}};
}

Configuration configuration_from_json(const Json& j) {
  std::size_t m = size_field(j, "m");
  std::vector<std::vector<Complex>> lambdas;
  for (const auto& point : array_field(j, "lambdas")) {
    if (!point.is_array()) bad_input("each lambda must be an array of m complex numbers");
    std::vector<Complex> coords;
    for (const auto& z : point) coords.push_back({scalar_from_json(field(z, "re")), scalar_from_json(field(z, "im"))});
    lambdas.push_back(std::move(coords));
  }
  return make_configuration(m, std::move(lambdas));
}

FinDimAlgebra algebra_from_json(const Json& j) {
  std::size_t d = size_field(j, "dim");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : array_field(j, "labels")) {
      if (!l.is_string()) bad_input("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  auto rational_vector = [&](const Json& v) {
    if (!v.is_array() || v.size() != d) bad_input("expected an array of " + std::to_string(d) + " rationals");
    RationalVector out;
    for (const auto& x : v) {
      Scalar s = scalar_from_json(x);
      if (!s.is_rational()) bad_input("algebra coefficients must be rational");
      out.push_back(s.to_rational());
    }
    return out;
  };
  if (labels.size() != d) bad_input("labels length differs from dim");
  const Json& c = array_field(j, "c");
  if (c.size() != d) bad_input("structure constants must be a D x D x D array");
  std::vector<std::vector<RationalVector>> table;
  for (const auto& row : c) {
    if (!row.is_array() || row.size() != d) bad_input("structure constants must be a D x D x D array");
    std::vector<RationalVector> r;
    for (const auto& v : row) r.push_back(rational_vector(v));
    table.push_back(std::move(r));
  }
  return FinDimAlgebra(std::move(labels), table, rational_vector(field(j, "unit")));
}

Json algebra_to_json(const FinDimAlgebra& a) {
  Json c = Json::array();
  for (const auto& row : a.structure_constants()) {
    Json r = Json::array();
    for (const auto& v : row) {
      Json entries = Json::array();
      for (const auto& q : v) entries.push_back(rational_to_json(q));
      r.push_back(entries);
    }
    c.push_back(r);
  }
  Json unit = Json::array();
  for (const auto& q : a.unit()) unit.push_back(rational_to_json(q));
  return Json{{"dim", a.dim()}, {"labels", a.labels()}, {"unit", unit}, {"c", c}};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad_input(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace nctoric
