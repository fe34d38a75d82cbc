#ifndef CELAB_DERIVATION_RING_HPP
#define CELAB_DERIVATION_RING_HPP

#include "celab/scalar.hpp"

#include <random>
#include <string>

namespace celab {

/// Pairs (f, g) over a polynomial ring with
/// (f1, g1)(f2, g2) = (f1 f2, f1 g2 + g1 f2 + d1(f1) d2(f2)).
class DerivationTriangularRing {
 public:
  struct Elem {
    Scalar f, g;
    bool operator==(const Elem &o) const = default;
  };

  DerivationTriangularRing(ScalarRing base, std::string d1, std::string d2);

  const ScalarRing &base() const { return base_; }
  const std::string &d1() const { return d1_; }
  const std::string &d2() const { return d2_; }

  Elem make(const Scalar &f, const Scalar &g) const { return {f, g}; }
  Elem zero() const { return {base_.zero(), base_.zero()}; }
  Elem one() const { return {base_.one(), base_.zero()}; }
  Elem add(const Elem &a, const Elem &b) const;
  Elem sub(const Elem &a, const Elem &b) const;
  Elem multiply(const Elem &a, const Elem &b) const;
  bool is_zero(const Elem &a) const { return base_.is_zero(a.f) && base_.is_zero(a.g); }
  bool commutes(const Elem &a, const Elem &b) const;
  Elem random(std::mt19937_64 &rng) const { return {base_.random(rng), base_.random(rng)}; }
  std::string format(const Elem &a) const;

  /// Commutes with `samples` random elements and the generators (x, 0), (y, 0), (0, 1).
  bool is_central_sampled(const Elem &a, int samples, std::mt19937_64 &rng) const;

 private:
  ScalarRing base_;
  std::string d1_, d2_;
};

}  // namespace celab

#endif
