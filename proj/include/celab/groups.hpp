#ifndef CELAB_GROUPS_HPP
#define CELAB_GROUPS_HPP

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace celab {

using Index = std::uint32_t;
/// Sorted list of element indices.
using Subset = std::vector<Index>;
/// Image of each element under a map G -> G.
using Perm = std::vector<Index>;

/// Finite group as a verified Cayley table.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<Index>> table);

  std::size_t order() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(Index g) const { return labels_[g]; }
  const std::vector<std::vector<Index>> &table() const { return table_; }
  Index mul(Index a, Index b) const { return table_[a][b]; }
  Index identity() const { return identity_; }
  Index inverse(Index a) const { return inverse_[a]; }
  Index commutator(Index a, Index b) const { return mul(mul(inverse(a), inverse(b)), mul(a, b)); }
  Index power(Index a, std::int64_t e) const;
  std::size_t element_order(Index a) const;
  std::optional<Index> find(const std::string &label) const;
  Index at(const std::string &label) const;
  FiniteGroup relabeled(std::vector<std::string> labels) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Index>> table_;
  Index identity_ = 0;
  std::vector<Index> inverse_;
};

FiniteGroup cyclic(std::size_t n);
FiniteGroup direct_product(const FiniteGroup &G, const FiniteGroup &H);
/// action[h] is the automorphism phi_h of N; (n1,h1)(n2,h2) = (n1 phi_h1(n2), h1 h2).
FiniteGroup semidirect_product(const FiniteGroup &N, const FiniteGroup &H, const std::vector<Perm> &action);
/// Extend generator images to an endomorphism of G (NotAHomomorphism if inconsistent).
Perm homomorphism_from_images(const FiniteGroup &G, const std::vector<Index> &gens, const std::vector<Index> &images);
/// <a, b | a^m = 1, b^2 = a^s, b a b^-1 = a^r>, elements a^i b^j.
FiniteGroup metacyclic(std::size_t m, std::int64_t r, std::int64_t s);
FiniteGroup quaternion_q8();
FiniteGroup dihedral(std::size_t order);
FiniteGroup generalized_quaternion(std::size_t order);
FiniteGroup semidihedral(std::size_t order);
/// Triples (y, z, x) standing for b^y c^z a^x with entries mod p^n.
FiniteGroup heisenberg_G(std::int64_t p, int n);
/// Group of order p^5 whose group algebra is not centrally essential (p = 2 or 3).
FiniteGroup order_p5_group(std::int64_t p);

Subset subgroup_generated(const FiniteGroup &G, const std::vector<Index> &gens);
bool is_subgroup(const FiniteGroup &G, const Subset &S);
bool is_normal(const FiniteGroup &G, const Subset &S);
bool is_abelian(const FiniteGroup &G);
bool is_abelian_subset(const FiniteGroup &G, const Subset &S);
std::vector<Subset> conjugacy_classes(const FiniteGroup &G);
Subset group_center(const FiniteGroup &G);
Subset centralizer(const FiniteGroup &G, const Subset &S);
Subset commutator_subgroup(const FiniteGroup &G);
/// Z_0 = 1, Z_1, ... until stable.
std::vector<Subset> upper_central_series(const FiniteGroup &G);
std::optional<int> nilpotence_class(const FiniteGroup &G);
/// (P, H) with G = P x H, P the Sylow p-subgroup; none if no such decomposition.
std::optional<std::pair<Subset, Subset>> sylow_direct_decomposition(const FiniteGroup &G, std::int64_t p);
/// Subgroup S re-materialized as a group.
FiniteGroup subgroup_as_group(const FiniteGroup &G, const Subset &S);

nlohmann::ordered_json group_to_json(const FiniteGroup &G);
FiniteGroup group_from_json(const nlohmann::ordered_json &j);

}  // namespace celab

#endif
