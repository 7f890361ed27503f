#ifndef LIAISON_RNG_HPP
#define LIAISON_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "liaison/fp.hpp"

namespace liaison {

/// Deterministic splittable RNG (splitmix64 core). Identical (seed, labels)
/// reproduce identical streams on every platform, which is what makes
/// certificates replayable. Streams are forked by label so that independent
/// pipeline stages never share state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ kGolden) {}

  std::uint64_t next_u64();

  /// Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n);

  Fe fe(const Fp& fp) { return static_cast<Fe>(below(fp.modulus())); }

  /// Nonzero field element.
  Fe fe_nonzero(const Fp& fp) {
    return static_cast<Fe>(1 + below(fp.modulus() - 1));
  }

  std::vector<Fe> fe_vector(const Fp& fp, std::size_t n);

  /// Independent child stream derived from a label; does not advance *this.
  Rng child(std::string_view label) const;
  Rng child(std::uint64_t index) const;

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
  static std::uint64_t mix(std::uint64_t x);
  std::uint64_t state_;
};

}  // namespace liaison

#endif
