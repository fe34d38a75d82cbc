#ifndef CELAB_REGISTRY_HPP
#define CELAB_REGISTRY_HPP

#include "celab/algebra.hpp"
#include "celab/derivation_ring.hpp"
#include "celab/groups.hpp"
#include "celab/io.hpp"
#include "celab/semirings.hpp"

#include <optional>
#include <string>
#include <vector>

namespace celab {

/// Result of a named builder; exactly one of algebra, semiring, group_semiring, derivation is set.
struct Built {
  std::string builder;
  Json params;
  std::optional<Algebra> algebra;
  std::optional<FiniteSemiring> semiring;
  std::optional<GroupSemiring> group_semiring;
  std::optional<DerivationTriangularRing> derivation;
  /// Group and field for group algebras.
  std::optional<FiniteGroup> group;
  /// Base algebra and alpha for a Cayley-Dickson double.
  std::optional<Algebra> double_base;
  std::optional<Vec> double_alpha;
  /// Base algebra and rank for exterior algebras.
  std::optional<Algebra> exterior_base;
  int exterior_rank = -1;
  /// Distinguished right ideal (matrix family).
  std::optional<Subspace> right_ideal;
  /// Distinguished ideal (augmentation of a group algebra).
  std::optional<Subspace> augmentation;
};

std::vector<std::string> builder_names();
/// Params are a JSON object; values may be strings or numbers. Throws UnsupportedParameter.
Built build_named(const std::string &name, const Json &params);
/// Names: Q8, cyclic-N, dihedral-N, quaternion-N, semidihedral-N, symmetric-3, heisenberg-P-N, order-p5-P.
FiniteGroup group_by_name(const std::string &name);

/// JSON written by `ce-lab build`: Algebra JSON, Semiring JSON, or a descriptor for derivation rings.
Json built_to_json(const Built &b);
/// Inverse of built_to_json for algebra and semiring files.
Built built_from_json(const Json &j);

/// Element such as "1+b" or "2*i - k" in the basis labels of A.
Vec parse_element(const Algebra &A, const std::string &text);

/// Check names; entries ending in ':' take an argument, e.g. "ideal-of:x".
std::vector<std::string> check_names();
/// Evaluates one named check; the result has "check", "value" and, for analyzers, "report".
Json evaluate_check(const Built &b, const std::string &check, Strategy strategy = Strategy::Auto);

}  // namespace celab

#endif
