#include "celab/registry.hpp"

#include "celab/analyzers.hpp"
#include "celab/builders.hpp"
#include "celab/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace celab {

namespace {

std::string param_string(const Json &params, const std::string &key, const std::string &fallback) {
  if (!params.is_object() || !params.contains(key)) return fallback;
  const Json &v = params.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

std::int64_t param_int(const Json &params, const std::string &key, std::int64_t fallback) {
  if (!params.is_object() || !params.contains(key)) return fallback;
  const Json &v = params.at(key);
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) {
    const auto &s = v.get_ref<const std::string &>();
    try {
      std::size_t used = 0;
      auto n = std::stoll(s, &used);
      if (used == s.size()) return n;
    } catch (const std::exception &) {
    }
  }
  throw Error(ErrorCode::UnsupportedParameter, "parameter '" + key + "' must be an integer");
}

bool param_bool(const Json &params, const std::string &key, bool fallback) {
  std::string s = param_string(params, key, fallback ? "true" : "false");
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw Error(ErrorCode::UnsupportedParameter, "parameter '" + key + "' must be true or false");
}

ScalarRing param_ring(const Json &params, const std::string &key, const std::string &fallback) {
  return ScalarRing::from_name(param_string(params, key, fallback));
}

// Nested builder given as an object {"builder": ..., "params": {...}} or its JSON text.
Built param_nested(const Json &params, const std::string &key) {
  if (!params.is_object() || !params.contains(key))
    throw Error(ErrorCode::UnsupportedParameter, "missing parameter '" + key + "'");
  Json spec = params.at(key);
  if (spec.is_string()) spec = parse_json(spec.get<std::string>());
  if (!spec.is_object() || !spec.contains("builder"))
    throw Error(ErrorCode::UnsupportedParameter, "parameter '" + key + "' must name a builder");
  Built b = build_named(spec.at("builder").get<std::string>(), spec.value("params", Json::object()));
  if (!b.algebra) throw Error(ErrorCode::UnsupportedParameter, "parameter '" + key + "' must build an algebra");
  return b;
}

std::vector<std::int64_t> int_list(const std::string &text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception &) {
      throw Error(ErrorCode::UnsupportedParameter, "bad integer list '" + text + "'");
    }
  }
  return out;
}

Built with_algebra(const std::string &name, const Json &params, Algebra A) {
  Built b;
  b.builder = name;
  b.params = params;
  b.algebra = std::move(A);
  return b;
}

Built build_group_algebra(const std::string &name, const Json &params, const ScalarRing &F, const FiniteGroup &G) {
  auto info = group_algebra(F, G);
  Built b = with_algebra(name, params, info.algebra);
  b.group = G;
  b.augmentation = info.augmentation;
  return b;
}

using BuilderFn = std::function<Built(const std::string &, const Json &)>;

const std::map<std::string, BuilderFn> &registry() {
  static const std::map<std::string, BuilderFn> table = {
      {"q8-group-algebra",
       [](const std::string &n, const Json &p) {
         return build_group_algebra(n, p, param_ring(p, "field", "F2"), quaternion_q8());
       }},
      {"group-algebra",
       [](const std::string &n, const Json &p) {
         return build_group_algebra(n, p, param_ring(p, "field", "F2"), group_by_name(param_string(p, "group", "Q8")));
       }},
      {"grassmann",
       [](const std::string &n, const Json &p) {
         auto F = param_ring(p, "field", "F3");
         int rank = static_cast<int>(param_int(p, "n", 3));
         Built b = with_algebra(n, p, grassmann(F, rank));
         b.exterior_base = scalar_algebra(F);
         b.exterior_rank = rank;
         return b;
       }},
      {"grassmann-over",
       [](const std::string &n, const Json &p) {
         Built base = param_nested(p, "base");
         int rank = static_cast<int>(param_int(p, "n", 1));
         Built b = with_algebra(n, p, grassmann_over(*base.algebra, rank));
         b.exterior_base = *base.algebra;
         b.exterior_rank = rank;
         return b;
       }},
      {"cayley-dickson",
       [](const std::string &n, const Json &p) {
         auto K = param_ring(p, "ring", "Z4");
         auto alphas = int_list(param_string(p, "alphas", "1,1"));
         if (alphas.empty() || alphas.size() > 4)
           throw Error(ErrorCode::UnsupportedParameter, "alphas must list between 1 and 4 integers");
         Algebra base = scalar_algebra(K);
         for (std::size_t i = 0; i + 1 < alphas.size(); ++i)
           base = cayley_dickson(base, vec_scale(K, K.from_int(alphas[i]), *base.unit()));
         Vec alpha = vec_scale(K, K.from_int(alphas.back()), *base.unit());
         Built b = with_algebra(n, p, cayley_dickson(base, alpha));
         b.double_base = base;
         b.double_alpha = alpha;
         return b;
       }},
      {"ce-matrix",
       [](const std::string &n, const Json &p) {
         Algebra A = ce_matrix_family(param_ring(p, "field", "F3"), static_cast<int>(param_int(p, "n", 7)),
                                      param_bool(p, "adjoin", true));
         Built b = with_algebra(n, p, A);
         if (A.unit()) b.right_ideal = ce_matrix_right_ideal(A);
         return b;
       }},
      {"t-algebra",
       [](const std::string &n, const Json &p) {
         auto F = param_ring(p, "field", "Q");
         std::string v = param_string(p, "variant", "K");
         if (v.size() != 1) throw Error(ErrorCode::UnsupportedParameter, "variant must be one of K, R, S, T");
         return with_algebra(n, p, t_algebra(F, v[0], F.from_int(param_int(p, "k", 1))));
       }},
      {"skew-poly",
       [](const std::string &n, const Json &p) {
         return with_algebra(n, p, skew_poly_quotient(param_int(p, "q", 4), static_cast<int>(param_int(p, "k", 3))));
       }},
      {"uniserial",
       [](const std::string &n, const Json &p) { return with_algebra(n, p, uniserial_derivation_ring(param_int(p, "p", 2))); }},
      {"jelonek",
       [](const std::string &n, const Json &p) {
         Built b;
         b.builder = n;
         b.params = p;
         b.derivation = jelonek_triangular(param_int(p, "base", 0));
         return b;
       }},
      {"upper-triangular",
       [](const std::string &n, const Json &p) {
         return with_algebra(n, p, upper_triangular(param_ring(p, "field", "F2"), static_cast<int>(param_int(p, "n", 2))));
       }},
      {"zero-algebra",
       [](const std::string &n, const Json &p) {
         return with_algebra(n, p, zero_algebra(param_ring(p, "field", "F3"), static_cast<int>(param_int(p, "n", 1))));
       }},
      {"exterior-plane-radical",
       [](const std::string &n, const Json &p) {
         return with_algebra(n, p, exterior_plane_radical(param_ring(p, "field", "F3")));
       }},
      {"truncated-polynomial",
       [](const std::string &n, const Json &p) {
         Built base = param_nested(p, "of");
         return with_algebra(n, p, truncated_polynomial(*base.algebra, static_cast<int>(param_int(p, "k", 2))));
       }},
      {"tensor-product",
       [](const std::string &n, const Json &p) {
         return with_algebra(n, p, tensor_product(*param_nested(p, "left").algebra, *param_nested(p, "right").algebra));
       }},
      {"direct-sum",
       [](const std::string &n, const Json &p) {
         return with_algebra(n, p, direct_sum(*param_nested(p, "left").algebra, *param_nested(p, "right").algebra));
       }},
      {"random-algebra",
       [](const std::string &n, const Json &p) {
         std::mt19937_64 rng(static_cast<std::uint64_t>(param_int(p, "seed", 1)));
         return with_algebra(n, p,
                             random_unital_algebra(param_ring(p, "field", "F2"), static_cast<int>(param_int(p, "dim", 3)), rng));
       }},
      {"semiring",
       [](const std::string &n, const Json &p) {
         std::string kind = param_string(p, "kind", "powerset-example");
         Built b;
         b.builder = n;
         b.params = p;
         if (kind == "powerset-example") {
           b.semiring = powerset_semiring(four_element_monoid());
         } else if (kind == "boolean-group") {
           b.semiring = boolean_group_semiring(group_by_name(param_string(p, "group", "Q8")));
         } else if (kind == "truncated-triangular") {
           b.semiring = truncated_triangular_semiring(static_cast<int>(param_int(p, "bound", 2)));
         } else if (kind == "rational-group") {
           b.group_semiring = GroupSemiring(Coefficients::NonNegativeRationals, group_by_name(param_string(p, "group", "Q8")));
         } else if (kind == "ring") {
           b.semiring = ring_semiring(param_ring(p, "field", "F2"));
         } else {
           throw Error(ErrorCode::UnsupportedParameter,
                       "semiring kind must be powerset-example, boolean-group, rational-group, truncated-triangular or ring");
         }
         return b;
       }},
  };
  return table;
}

std::int64_t suffix_int(const std::string &name, const std::string &prefix) {
  std::string rest = name.substr(prefix.size());
  try {
    std::size_t used = 0;
    auto v = std::stoll(rest, &used);
    if (used == rest.size()) return v;
  } catch (const std::exception &) {
  }
  throw Error(ErrorCode::UnsupportedParameter, "bad group name '" + name + "'");
}

}  // namespace

std::vector<std::string> builder_names() {
  std::vector<std::string> out;
  for (const auto &[name, fn] : registry()) out.push_back(name);
  return out;
}

Built build_named(const std::string &name, const Json &params) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::UnsupportedParameter, "unknown builder '" + name + "'");
  return it->second(name, params.is_null() ? Json::object() : params);
}

FiniteGroup group_by_name(const std::string &name) {
  auto starts = [&](const std::string &p) { return name.rfind(p, 0) == 0; };
  if (name == "Q8") return quaternion_q8();
  if (name == "symmetric-3") return dihedral(6);
  if (starts("cyclic-")) return cyclic(static_cast<std::size_t>(suffix_int(name, "cyclic-")));
  if (starts("dihedral-")) return dihedral(static_cast<std::size_t>(suffix_int(name, "dihedral-")));
  if (starts("quaternion-")) return generalized_quaternion(static_cast<std::size_t>(suffix_int(name, "quaternion-")));
  if (starts("semidihedral-")) return semidihedral(static_cast<std::size_t>(suffix_int(name, "semidihedral-")));
  if (starts("order-p5-")) return order_p5_group(suffix_int(name, "order-p5-"));
  if (starts("heisenberg-")) {
    std::string rest = name.substr(std::string("heisenberg-").size());
    auto dash = rest.find('-');
    if (dash == std::string::npos) throw Error(ErrorCode::UnsupportedParameter, "heisenberg needs heisenberg-P-N");
    return heisenberg_G(suffix_int(rest.substr(0, dash), ""), static_cast<int>(suffix_int(rest.substr(dash + 1), "")));
  }
  throw Error(ErrorCode::UnsupportedParameter, "unknown group '" + name + "'");
}

Json built_to_json(const Built &b) {
  if (b.algebra) return algebra_to_json(*b.algebra);
  if (b.semiring) return semiring_to_json(*b.semiring);
  if (b.group_semiring) {
    Json j;
    j["kind"] = "group-semiring";
    j["coefficients"] = b.group_semiring->kind() == Coefficients::Boolean ? "boolean" : "nonnegative-rationals";
    j["group"] = group_to_json(b.group_semiring->group());
    return j;
  }
  const auto &D = *b.derivation;
  Json j;
  j["kind"] = "derivation-triangular";
  j["base"] = scalar_ring_to_json(D.base());
  j["d1"] = D.d1();
  j["d2"] = D.d2();
  return j;
}

Built built_from_json(const Json &j) {
  Built b;
  b.builder = "file";
  if (j.is_object() && j.contains("add") && j.contains("mul")) {
    b.semiring = semiring_from_json(j);
  } else if (j.is_object() && j.value("kind", "") == "group-semiring") {
    std::string c = json_member(j, "coefficients", "").get<std::string>();
    if (c != "boolean" && c != "nonnegative-rationals")
      throw Error(ErrorCode::ParseError, "/coefficients: expected boolean or nonnegative-rationals");
    b.group_semiring = GroupSemiring(c == "boolean" ? Coefficients::Boolean : Coefficients::NonNegativeRationals,
                                     group_from_json(json_member(j, "group", "")));
  } else if (j.is_object() && j.value("kind", "") == "derivation-triangular") {
    b.derivation = DerivationTriangularRing(scalar_ring_from_json(json_member(j, "base", ""), "/base"),
                                            json_member(j, "d1", "").get<std::string>(),
                                            json_member(j, "d2", "").get<std::string>());
  } else {
    b.algebra = algebra_from_json(j);
  }
  return b;
}

std::vector<std::string> check_names() {
  return {"dim", "size", "commutative", "associative", "alternative", "right-alternative", "ce", "ce-enumerate",
          "ce-socle", "strong-ce", "weak-ce", "ce-notions-agree", "n-essential", "k-essential", "center",
          "center-dim", "center-size", "center-is-square", "center-nilradical-dim", "socle-in-center", "idempotents",
          "idempotent-count", "idempotents-central", "zero-divisor-symmetry", "group-invariants", "group-predicate",
          "grassmann-predicate", "cd-formulas", "cd-ce-criterion", "cd-n-essential-criterion",
          "right-ideal-two-sided", "augmentation-local", "predicates", "reduced", "ideal-central",
          "noncommutative-witness", "square-zero-sandwich:", "ideal-of:", "commutator:"};
}

Vec parse_element(const Algebra &A, const std::string &text) {
  const auto &F = A.ring();
  Vec out = zero_vec(F, A.dim());
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw Error(ErrorCode::ParseError, "empty element");
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    int depth = 0;
    while (end < compact.size() && (depth > 0 || (compact[end] != '+' && compact[end] != '-'))) {
      if (compact[end] == '(') ++depth;
      if (compact[end] == ')') --depth;
      ++end;
    }
    std::string term = compact.substr(pos, end - pos);
    if (term.empty()) throw Error(ErrorCode::ParseError, "bad element '" + text + "'");
    Scalar coef = F.one();
    std::string label = term;
    const auto &labels = A.labels();
    auto star = term.rfind('*');
    if (std::find(labels.begin(), labels.end(), term) == labels.end() && star != std::string::npos) {
      coef = F.parse(term.substr(0, star));
      label = term.substr(star + 1);
    }
    auto it = std::find(labels.begin(), labels.end(), label);
    Vec v;
    if (it != labels.end()) {
      v = A.basis(static_cast<std::size_t>(it - labels.begin()));
    } else if (A.unit() && star == std::string::npos) {
      v = *A.unit();
      coef = F.parse(term);
    } else {
      throw Error(ErrorCode::ParseError, "unknown basis label '" + label + "'");
    }
    if (negative) coef = F.neg(coef);
    out = vec_add(F, out, vec_scale(F, coef, v));
    pos = end;
  }
  return out;
}

namespace {

Json report_value(const Algebra &A, const Report &r, const std::string &check) {
  Json j;
  j["check"] = check;
  j["value"] = r.verdict == Verdict::Unknown ? Json("unknown") : Json(r.holds());
  j["report"] = report_to_json(A, r);
  return j;
}

Json plain(const std::string &check, Json value) {
  Json j;
  j["check"] = check;
  j["value"] = std::move(value);
  return j;
}

Json subspace_json(const Algebra &A, const Subspace &S) {
  Json basis = Json::array();
  for (const auto &v : S.basis()) basis.push_back(format_vec(A, v));
  return Json{{"rank", S.rank()}, {"basis", basis}};
}

Json cardinality_json(const Subspace &S) {
  auto c = S.cardinality();
  return c == 0 ? Json(nullptr) : Json(c);
}

Json evaluate_semiring(const FiniteSemiring &S, const std::string &check) {
  if (check == "size") return plain(check, S.size());
  if (check == "commutative") return plain(check, S.is_commutative());
  if (check == "ce") {
    Report r = is_ce_semiring(S);
    Json j = plain(check, r.holds());
    j["report"] = Json{{"predicate", r.predicate}, {"verdict", verdict_name(r.verdict)}, {"strategy", r.strategy},
                       {"certification", r.certification}, {"details", r.details}};
    return j;
  }
  if (check == "center" || check == "center-size") {
    auto Z = semiring_center(S);
    if (check == "center-size") return plain(check, Z.size());
    Json labels = Json::array();
    for (auto z : Z) labels.push_back(S.label(z));
    return plain(check, labels);
  }
  if (check == "predicates") return plain(check, predicates_to_json(semiring_predicates(S)));
  auto preds = predicates_to_json(semiring_predicates(S));
  std::string key = check;
  for (auto &c : key)
    if (c == '-') c = '_';
  if (preds.contains(key) && preds.at(key).is_boolean()) return plain(check, preds.at(key));
  throw Error(ErrorCode::UnsupportedParameter, "check '" + check + "' does not apply to semirings");
}

Json evaluate_group_semiring(const GroupSemiring &S, const std::string &check) {
  std::mt19937_64 rng(0x5eed);
  if (check == "ce") {
    Report r = is_ce_semiring(S, rng, 1000);
    Json j = plain(check, r.holds());
    j["report"] = Json{{"predicate", r.predicate}, {"verdict", verdict_name(r.verdict)}, {"strategy", r.strategy},
                       {"certification", r.certification}, {"details", r.details}};
    return j;
  }
  if (check == "predicates" || check == "reduced") {
    Json preds = predicates_to_json(semiring_predicates(S, rng));
    if (check == "predicates") return plain(check, preds);
    Json j = plain(check, preds.at("reduced"));
    j["certification"] = preds.value("certification", "sampled");
    return j;
  }
  throw Error(ErrorCode::UnsupportedParameter, "check '" + check + "' does not apply to group semirings");
}

Json evaluate_derivation(const DerivationTriangularRing &D, const std::string &check) {
  std::mt19937_64 rng(0x5eed);
  const auto &R = D.base();
  if (check == "commutative" || check == "noncommutative-witness") {
    auto x = D.make(R.parse("x"), R.zero()), y = D.make(R.parse("y"), R.zero());
    bool commutes = D.commutes(x, y);
    if (check == "commutative") return plain(check, commutes);
    return plain(check, Json{{"a", D.format(x)}, {"b", D.format(y)}, {"ab", D.format(D.multiply(x, y))},
                             {"ba", D.format(D.multiply(y, x))}});
  }
  if (check == "ideal-central") {
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      auto e = D.make(R.zero(), R.random(rng));
      ok = D.is_central_sampled(e, 20, rng);
    }
    Json j = plain(check, ok);
    j["certification"] = "sampled";
    return j;
  }
  throw Error(ErrorCode::UnsupportedParameter, "check '" + check + "' does not apply to derivation rings");
}

// Enumeration is used up to this many elements; larger unital algebras use the centroid reduction.
constexpr std::uint64_t notions_enumeration_cap = 4096;
constexpr std::size_t notions_centroid_dim = 16;

Json ce_notions(const Algebra &A, Strategy strategy, const std::string &check) {
  Verdict ce = is_centrally_essential(A, strategy).verdict;
  auto size = Subspace::whole(A.ring(), A.dim()).cardinality();
  Json j;
  Verdict strong, weak;
  if (size != 0 && size <= notions_enumeration_cap) {
    strong = is_strongly_ce(A).verdict;
    weak = is_weakly_ce(A).verdict;
    j["route"] = "enumerate";
  } else {
    if (!A.unit()) throw Error(ErrorCode::TooLargeToEnumerate, "ce-notions-agree needs a unit beyond 4096 elements");
    if (A.dim() > notions_centroid_dim)
      throw Error(ErrorCode::DimensionTooLarge, "ce-notions-agree solves for the centroid only up to dimension 16");
    // Every centroid map must be multiplication by a central element.
    Subspace Z = center(A);
    bool reduced = true;
    for (const auto &phi : centroid(A).basis) {
      Vec c = phi.apply(*A.unit());
      reduced = reduced && Z.contains(c) && phi == A.left_mult(c);
    }
    if (!reduced) throw Error(ErrorCode::UnsupportedParameter, "centroid is not the center acting by multiplication");
    strong = weak = ce;
    j["route"] = "centroid-reduction";
  }
  j["check"] = check;
  j["value"] = ce == strong && ce == weak && ce != Verdict::Unknown;
  j["ce"] = verdict_name(ce);
  j["strong"] = verdict_name(strong);
  j["weak"] = verdict_name(weak);
  return j;
}

Json evaluate_with_argument(const Algebra &A, const std::string &name, const std::string &arg, const std::string &check) {
  const auto &F = A.ring();
  if (name == "square-zero-sandwich") {
    Vec x = parse_element(A, arg);
    bool square_zero = is_zero_vec(F, A.multiply(x, x));
    Json witness = nullptr;
    for (std::size_t i = 0; i < A.dim() && witness.is_null(); ++i) {
      Vec s = A.multiply(A.multiply(x, A.basis(i)), x);
      if (!is_zero_vec(F, s)) witness = Json{{"r", A.labels()[i]}, {"xrx", format_vec(A, s)}};
    }
    Json j = plain(check, square_zero && !witness.is_null());
    j["square_zero"] = square_zero;
    j["sandwich"] = witness;
    return j;
  }
  if (name == "ideal-of") {
    Subspace I = ideal_generated_by(A, {parse_element(A, arg)});
    Subspace I2 = subspace_product(A, I, I);
    auto index = nilpotency_index(A, I);
    Json v;
    v["rank"] = I.rank();
    v["nilpotency_index"] = index ? Json(*index) : Json(nullptr);
    v["square_central"] = I2.is_subspace_of(center(A));
    return plain(check, v);
  }
  if (name == "commutator") {
    auto comma = arg.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::UnsupportedParameter, "commutator needs two elements a,b");
    Vec c = commutator(A, parse_element(A, arg.substr(0, comma)), parse_element(A, arg.substr(comma + 1)));
    return plain(check, format_vec(A, c));
  }
  throw Error(ErrorCode::UnsupportedParameter, "unknown check '" + check + "'");
}

}  // namespace

Json evaluate_check(const Built &b, const std::string &check, Strategy strategy) {
  if (b.semiring) return evaluate_semiring(*b.semiring, check);
  if (b.group_semiring) return evaluate_group_semiring(*b.group_semiring, check);
  if (b.derivation) return evaluate_derivation(*b.derivation, check);
  const Algebra &A = *b.algebra;
  auto colon = check.find(':');
  if (colon != std::string::npos) return evaluate_with_argument(A, check.substr(0, colon), check.substr(colon + 1), check);
  if (check == "dim") return plain(check, A.dim());
  if (check == "size") return plain(check, cardinality_json(Subspace::whole(A.ring(), A.dim())));
  if (check == "commutative") return plain(check, A.is_commutative());
  if (check == "associative") return plain(check, A.is_associative());
  if (check == "alternative") return plain(check, is_alternative(A));
  if (check == "right-alternative") return plain(check, is_right_alternative(A));
  if (check == "ce") return report_value(A, is_centrally_essential(A, strategy), check);
  if (check == "ce-enumerate") return report_value(A, is_centrally_essential(A, Strategy::Enumerate), check);
  if (check == "ce-socle") return report_value(A, is_centrally_essential(A, Strategy::Socle), check);
  if (check == "strong-ce") return report_value(A, is_strongly_ce(A), check);
  if (check == "weak-ce") return report_value(A, is_weakly_ce(A), check);
  if (check == "ce-notions-agree") return ce_notions(A, strategy, check);
  if (check == "n-essential") return report_value(A, is_n_essential(A), check);
  if (check == "k-essential") return report_value(A, is_k_essential(A), check);
  if (check == "center") {
    Subspace Z = center(A);
    Json j = plain(check, subspace_json(A, Z));
    j["dim"] = Z.rank();
    return j;
  }
  if (check == "center-dim") return plain(check, center(A).rank());
  if (check == "center-size") return plain(check, cardinality_json(center(A)));
  if (check == "center-is-square") {
    Subspace W = Subspace::whole(A.ring(), A.dim());
    return plain(check, center(A) == subspace_product(A, W, W));
  }
  if (check == "center-nilradical-dim") return plain(check, nilradical_in(A, center(A)).rank());
  if (check == "socle-in-center") return plain(check, socle_over_center(A).is_subspace_of(center(A)));
  if (check == "idempotents") {
    Json list = Json::array();
    for (const auto &e : idempotents(A)) list.push_back(format_vec(A, e));
    return plain(check, list);
  }
  if (check == "idempotent-count") return plain(check, idempotents(A).size());
  if (check == "idempotents-central") return plain(check, all_idempotents_central(A));
  if (check == "zero-divisor-symmetry") return plain(check, zero_divisor_sets_equal(A));
  if (check == "group-invariants") {
    if (!b.group) throw Error(ErrorCode::UnsupportedParameter, "group-invariants needs a group algebra builder");
    const FiniteGroup &G = *b.group;
    Json orders = Json::array();
    auto series = upper_central_series(G);
    for (const auto &Z : series) orders.push_back(Z.size());
    Json v;
    v["order"] = G.order();
    v["upper_central_orders"] = orders;
    if (series.size() > 2) v["z2_self_centralizing"] = centralizer(G, series[2]) == series[2];
    auto cls = nilpotence_class(G);
    v["nilpotence_class"] = cls ? Json(*cls) : Json(nullptr);
    std::int64_t p = A.ring().characteristic();
    if (p > 0) v["sylow_direct_factor"] = sylow_direct_decomposition(G, p).has_value();
    return plain(check, v);
  }
  if (check == "group-predicate") {
    if (!b.group) throw Error(ErrorCode::UnsupportedParameter, "group-predicate needs a group algebra builder");
    return plain(check, verdict_name(group_algebra_ce_predicate(A.ring(), *b.group)));
  }
  if (check == "grassmann-predicate") {
    if (!b.exterior_base) throw Error(ErrorCode::UnsupportedParameter, "grassmann-predicate needs a grassmann builder");
    return plain(check, grassmann_ce_predicate(*b.exterior_base, b.exterior_rank));
  }
  if (check == "cd-formulas" || check == "cd-ce-criterion" || check == "cd-n-essential-criterion") {
    if (!b.double_base) throw Error(ErrorCode::UnsupportedParameter, check + " needs a cayley-dickson builder");
    const Algebra &base = *b.double_base;
    if (check == "cd-ce-criterion") return plain(check, cd_ce_criterion(base, *b.double_alpha));
    if (check == "cd-n-essential-criterion") return plain(check, cd_n_essential_criterion(base, *b.double_alpha));
    Algebra R = cayley_dickson(base, *b.double_alpha);
    bool nucleus = cd_nucleus_by_formula(R, base) == associative_center(R);
    bool centre = cd_center_by_formula(R, base) == center(R);
    bool ce = cd_ce_criterion(base, *b.double_alpha) == is_centrally_essential(R).holds();
    Json j = plain(check, nucleus && centre && ce);
    j["nucleus"] = nucleus;
    j["center"] = centre;
    j["ce"] = ce;
    return j;
  }
  if (check == "right-ideal-two-sided") {
    if (!b.right_ideal) throw Error(ErrorCode::UnsupportedParameter, "right-ideal-two-sided needs a ce-matrix builder");
    return plain(check, Json{{"right", is_right_ideal(A, *b.right_ideal)}, {"left", is_left_ideal(A, *b.right_ideal)}});
  }
  if (check == "augmentation-local") {
    if (!b.augmentation) throw Error(ErrorCode::UnsupportedParameter, "augmentation-local needs a group algebra builder");
    return report_value(A, verify_local_radical(A, *b.augmentation), check);
  }
  throw Error(ErrorCode::UnsupportedParameter, "unknown check '" + check + "'");
}

}  // namespace celab
