#include "liaison/fp.hpp"

namespace liaison {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 7; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Fp::Fp(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31))
    throw std::invalid_argument("modulus out of range");
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  magic_ = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(1) << 64) / p_);
}

Fe Fp::pow(Fe a, std::uint64_t e) const {
  std::uint64_t base = a % p_;
  std::uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = reduce(acc * base);
    base = reduce(base * base);
    e >>= 1;
  }
  return static_cast<Fe>(acc);
}

Fe Fp::inv(Fe a) const {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // Extended Euclid; p prime so gcd is 1.
  std::int64_t t = 0, nt = 1;
  std::int64_t r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Fe>(t);
}

}  // namespace liaison
