#include "liaison/rng.hpp"

namespace liaison {

std::uint64_t Rng::mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix(state_);
}

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection sampling on the top range keeps the distribution exactly
  // uniform and the stream platform-independent.
  std::uint64_t lim = ~0ull - ~0ull % n;
  for (;;) {
    std::uint64_t v = next_u64();
    if (v < lim) return v % n;
  }
}

std::vector<Fe> Rng::fe_vector(const Fp& fp, std::size_t n) {
  std::vector<Fe> out(n);
  for (auto& v : out) v = fe(fp);
  return out;
}

Rng Rng::child(std::string_view label) const {
  // FNV-1a over the label folded into the current seed.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  Rng r(0);
  r.state_ = mix(state_ ^ h);
  return r;
}

Rng Rng::child(std::uint64_t index) const {
  Rng r(0);
  r.state_ = mix(state_ ^ (index * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
  return r;
}

}  // namespace liaison
