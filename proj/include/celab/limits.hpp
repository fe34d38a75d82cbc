#ifndef CELAB_LIMITS_HPP
#define CELAB_LIMITS_HPP

#include <cstdint>

namespace celab {

/// Process-wide caps and mutation hooks. max_enum is read from CE_LAB_MAX_ENUM on first use.
struct Limits {
  std::size_t max_dim = 64;
  std::uint64_t max_enum = std::uint64_t(1) << 20;
  /// Mutation hook: exterior products lose their sign.
  bool flip_grassmann_sign = false;
};

Limits &limits();

}  // namespace celab

#endif
