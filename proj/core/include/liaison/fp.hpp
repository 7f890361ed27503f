#ifndef LIAISON_FP_HPP
#define LIAISON_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace liaison {

/// Residue in [0, p). All arithmetic goes through an Fp context.
using Fe = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic context for the prime field F_p. Cheap to copy; immutable.
class Fp {
 public:
  explicit Fp(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Fe reduce(std::uint64_t x) const {
    // Barrett: q = floor(x * m / 2^64) with m = floor(2^64 / p), then at most
    // two correction steps.
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * magic_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return static_cast<Fe>(r);
  }

  Fe from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Fe>(r);
  }

  Fe add(Fe a, Fe b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fe sub(Fe a, Fe b) const { return a >= b ? a - b : a + p_ - b; }
  Fe neg(Fe a) const { return a == 0 ? 0 : p_ - a; }
  Fe mul(Fe a, Fe b) const {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  Fe pow(Fe a, std::uint64_t e) const;
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

 private:
  std::uint32_t p_;
  std::uint64_t magic_;  // floor(2^64 / p)
};

}  // namespace liaison

#endif
