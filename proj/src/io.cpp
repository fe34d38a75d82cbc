#include "celab/io.hpp"

#include "celab/error.hpp"

#include <fstream>
#include <sstream>

namespace celab {

namespace {

[[noreturn]] void bad(const std::string &path, const std::string &what) {
  throw Error(ErrorCode::InvalidJson, path + ": " + what);
}

std::int64_t get_int(const Json &j, const std::string &key, const std::string &path) {
  const Json &v = json_member(j, key, path);
  if (!v.is_number_integer()) bad(path + "/" + key, "expected an integer");
  return v.get<std::int64_t>();
}

std::string get_string(const Json &j, const std::string &key, const std::string &path) {
  const Json &v = json_member(j, key, path);
  if (!v.is_string()) bad(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> get_strings(const Json &j, const std::string &key, const std::string &path) {
  const Json &v = json_member(j, key, path);
  if (!v.is_array()) bad(path + "/" + key, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) bad(path + "/" + key + "/" + std::to_string(i), "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

Scalar parse_coeff(const ScalarRing &ring, const Json &j, const std::string &path) {
  try {
    if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
    if (!j.is_string()) bad(path, "expected a scalar string");
    return ring.parse(j.get<std::string>());
  } catch (const Error &e) {
    if (e.code() == ErrorCode::InvalidJson) throw;
    bad(path, e.what());
  }
}

}  // namespace

const Json &json_member(const Json &j, const std::string &key, const std::string &path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path + "/" + key, "missing");
  return *it;
}

Json scalar_ring_to_json(const ScalarRing &ring) {
  const auto &s = ring.spec();
  Json j;
  switch (s.kind) {
    case ScalarKind::PrimeField:
      j["kind"] = "PrimeField";
      j["p"] = s.modulus;
      break;
    case ScalarKind::GaloisField:
      j["kind"] = "GaloisField";
      j["p"] = s.modulus;
      j["k"] = s.degree;
      j["modulus"] = upoly::format(s.poly_modulus, s.variables[0]);
      j["variable"] = s.variables[0];
      break;
    case ScalarKind::ResidueRing:
      j["kind"] = "ResidueRing";
      j["n"] = s.modulus;
      break;
    case ScalarKind::Rationals: j["kind"] = "Rationals"; break;
    case ScalarKind::PolynomialRing:
      j["kind"] = "PolynomialRing";
      j["base"] = s.modulus == 0 ? std::string("Z") : "F" + std::to_string(s.modulus);
      j["variables"] = s.variables;
      j["derivations"] = s.derivations;
      break;
    case ScalarKind::RationalFunctionField:
      j["kind"] = "RationalFunctionField";
      j["p"] = s.modulus;
      j["variable"] = s.variables[0];
      j["derivations"] = s.derivations;
      break;
  }
  return j;
}

ScalarRing scalar_ring_from_json(const Json &j, const std::string &path) {
  std::string kind = get_string(j, "kind", path);
  ScalarRingSpec s;
  try {
    if (kind == "PrimeField") return ScalarRing::prime_field(get_int(j, "p", path));
    if (kind == "ResidueRing") return ScalarRing::residue_ring(get_int(j, "n", path));
    if (kind == "Rationals") return ScalarRing::rationals();
    if (kind == "GaloisField") {
      std::int64_t p = get_int(j, "p", path);
      int k = static_cast<int>(get_int(j, "k", path));
      std::string var = j.contains("variable") ? get_string(j, "variable", path) : "t";
      UPoly mod;
      if (j.contains("modulus")) {
        auto f = ScalarRing::rational_function_field(p, var).parse(get_string(j, "modulus", path));
        mod = std::get<RatFunc>(f).num;
      }
      s.kind = ScalarKind::GaloisField;
      s.modulus = p;
      s.degree = k;
      s.poly_modulus = mod;
      s.variables = {var};
      return ScalarRing(s);
    }
    if (kind == "PolynomialRing") {
      std::string base = get_string(j, "base", path);
      s.kind = ScalarKind::PolynomialRing;
      if (base == "Z") s.modulus = 0;
      else if (base.size() > 1 && base[0] == 'F') s.modulus = std::stoll(base.substr(1));
      else bad(path + "/base", "expected Z or F<p>");
      s.variables = get_strings(j, "variables", path);
      if (j.contains("derivations")) s.derivations = get_strings(j, "derivations", path);
      return ScalarRing(s);
    }
    if (kind == "RationalFunctionField") {
      s.kind = ScalarKind::RationalFunctionField;
      s.modulus = get_int(j, "p", path);
      s.variables = {j.contains("variable") ? get_string(j, "variable", path) : "t"};
      if (j.contains("derivations")) s.derivations = get_strings(j, "derivations", path);
      return ScalarRing(s);
    }
  } catch (const Error &e) {
    if (e.code() == ErrorCode::InvalidJson) throw;
    bad(path, e.what());
  } catch (const std::exception &e) {
    bad(path, e.what());
  }
  bad(path + "/kind", "unknown scalar kind '" + kind + "'");
}

Json vec_to_json(const ScalarRing &ring, const Vec &v) {
  Json a = Json::array();
  for (const auto &x : v) a.push_back(ring.format(x));
  return a;
}

Vec vec_from_json(const ScalarRing &ring, const Json &j, std::size_t n, const std::string &path) {
  if (!j.is_array() || j.size() != n) bad(path, "expected an array of length " + std::to_string(n));
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(parse_coeff(ring, j[i], path + "/" + std::to_string(i)));
  return v;
}

Json algebra_to_json(const Algebra &A) {
  const ScalarRing &r = A.ring();
  std::size_t n = A.dim();
  Json j;
  j["scalar"] = scalar_ring_to_json(r);
  j["dim"] = n;
  j["labels"] = A.labels();
  if (A.unit()) j["unit"] = vec_to_json(r, *A.unit());
  Json table = Json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto &t : A.terms(a, b)) table.push_back(Json::array({a, b, t.k, r.format(t.c)}));
  j["table"] = std::move(table);
  if (A.involution()) {
    Json m = Json::array();
    for (std::size_t a = 0; a < n; ++a) m.push_back(vec_to_json(r, A.involution()->row(a)));
    j["involution"] = std::move(m);
  }
  return j;
}

Algebra algebra_from_json(const Json &j) {
  ScalarRing r = scalar_ring_from_json(json_member(j, "scalar", ""), "/scalar");
  std::int64_t n = get_int(j, "dim", "");
  if (n < 0) bad("/dim", "negative dimension");
  std::size_t dim = static_cast<std::size_t>(n);
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = get_strings(j, "labels", "");
    if (labels.size() != dim) bad("/labels", "expected " + std::to_string(dim) + " labels");
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  std::optional<Vec> unit;
  if (j.contains("unit") && !j["unit"].is_null()) unit = vec_from_json(r, j["unit"], dim, "/unit");
  const Json &table = json_member(j, "table", "");
  if (!table.is_array()) bad("/table", "expected an array");
  std::vector<std::vector<Term>> products(dim * dim);
  for (std::size_t t = 0; t < table.size(); ++t) {
    std::string p = "/table/" + std::to_string(t);
    const Json &e = table[t];
    if (!e.is_array() || e.size() != 4) bad(p, "expected [i, j, k, coeff]");
    std::size_t idx[3];
    for (int c = 0; c < 3; ++c) {
      if (!e[c].is_number_integer() || e[c].get<std::int64_t>() < 0 || e[c].get<std::size_t>() >= dim)
        bad(p + "/" + std::to_string(c), "basis index out of range");
      idx[c] = e[c].get<std::size_t>();
    }
    products[idx[0] * dim + idx[1]].push_back({static_cast<std::uint32_t>(idx[2]), parse_coeff(r, e[3], p + "/3")});
  }
  std::optional<Matrix> inv;
  if (j.contains("involution") && !j["involution"].is_null()) {
    const Json &m = j["involution"];
    if (!m.is_array() || m.size() != dim) bad("/involution", "expected " + std::to_string(dim) + " rows");
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < dim; ++a) rows.push_back(vec_from_json(r, m[a], dim, "/involution/" + std::to_string(a)));
    inv = Matrix::from_rows(r, rows, dim);
  }
  return Algebra(r, std::move(labels), std::move(products), std::move(unit), std::move(inv));
}

Json parse_json(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw Error(ErrorCode::InvalidJson, std::string("syntax: ") + e.what());
  }
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidJson, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_json_file(const std::string &path, const Json &j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidJson, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace celab
