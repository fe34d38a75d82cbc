#include "celab/derivation_ring.hpp"

#include "celab/error.hpp"

namespace celab {

DerivationTriangularRing::DerivationTriangularRing(ScalarRing base, std::string d1, std::string d2)
    : base_(std::move(base)), d1_(std::move(d1)), d2_(std::move(d2)) {
  if (base_.kind() != ScalarKind::PolynomialRing)
    throw Error(ErrorCode::UnsupportedScalars, "derivation triangular rings need a polynomial ring");
  base_.derive(base_.zero(), d1_);
  base_.derive(base_.zero(), d2_);
}

DerivationTriangularRing::Elem DerivationTriangularRing::add(const Elem &a, const Elem &b) const {
  return {base_.add(a.f, b.f), base_.add(a.g, b.g)};
}

DerivationTriangularRing::Elem DerivationTriangularRing::sub(const Elem &a, const Elem &b) const {
  return {base_.sub(a.f, b.f), base_.sub(a.g, b.g)};
}

DerivationTriangularRing::Elem DerivationTriangularRing::multiply(const Elem &a, const Elem &b) const {
  const auto &r = base_;
  Scalar g = r.add(r.add(r.mul(a.f, b.g), r.mul(a.g, b.f)), r.mul(r.derive(a.f, d1_), r.derive(b.f, d2_)));
  return {r.mul(a.f, b.f), g};
}

bool DerivationTriangularRing::commutes(const Elem &a, const Elem &b) const { return multiply(a, b) == multiply(b, a); }

std::string DerivationTriangularRing::format(const Elem &a) const {
  return "(" + base_.format(a.f) + ", " + base_.format(a.g) + ")";
}

bool DerivationTriangularRing::is_central_sampled(const Elem &a, int samples, std::mt19937_64 &rng) const {
  std::vector<Elem> probes{{base_.zero(), base_.one()}};
  for (const auto &v : base_.spec().variables) probes.push_back({base_.parse(v), base_.zero()});
  for (const auto &p : probes)
    if (!commutes(a, p)) return false;
  for (int i = 0; i < samples; ++i)
    if (!commutes(a, random(rng))) return false;
  return true;
}

}  // namespace celab
