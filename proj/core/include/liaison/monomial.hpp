#ifndef LIAISON_MONOMIAL_HPP
#define LIAISON_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <string>

namespace liaison {

/// Hard cap on ring arity. Large enough for the Pluecker ring (15
/// variables) plus one tag variable.
inline constexpr int kMaxVars = 16;

/// Exponent vector with cached total degree. Exponents stay below 128 so
/// that the packed-word tricks (divisibility, product) are carry-free.
struct Monomial {
  alignas(16) std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial one() { return Monomial{}; }
  static Monomial var(int i, std::uint8_t k = 1) {
    Monomial m;
    m.e[i] = k;
    m.deg = k;
    return m;
  }

  std::uint64_t w0() const {
    std::uint64_t v;
    std::memcpy(&v, e.data(), 8);
    return v;
  }
  std::uint64_t w1() const {
    std::uint64_t v;
    std::memcpy(&v, e.data() + 8, 8);
    return v;
  }

  bool operator==(const Monomial& o) const {
    return deg == o.deg && w0() == o.w0() && w1() == o.w1();
  }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    constexpr std::uint64_t H = 0x8080808080808080ull;
    // per-byte borrow-free test, valid for exponents < 128
    std::uint64_t a0 = w0(), b0 = o.w0();
    if ((((b0 | H) - a0) & H) != H) return false;
    std::uint64_t a1 = w1(), b1 = o.w1();
    return (((b1 | H) - a1) & H) == H;
  }

  Monomial mul(const Monomial& o) const {
    Monomial r;
    std::uint64_t c0 = w0() + o.w0(), c1 = w1() + o.w1();
    std::memcpy(r.e.data(), &c0, 8);
    std::memcpy(r.e.data() + 8, &c1, 8);
    r.deg = static_cast<std::uint16_t>(deg + o.deg);
    return r;
  }

  /// this / o, assuming o.divides(*this).
  Monomial div(const Monomial& o) const {
    Monomial r;
    std::uint64_t c0 = w0() - o.w0(), c1 = w1() - o.w1();
    std::memcpy(r.e.data(), &c0, 8);
    std::memcpy(r.e.data() + 8, &c1, 8);
    r.deg = static_cast<std::uint16_t>(deg - o.deg);
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    std::uint16_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
      d = static_cast<std::uint16_t>(d + r.e[i]);
    }
    r.deg = d;
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

  std::uint64_t hash() const {
    std::uint64_t h = w0() * 0x9e3779b97f4a7c15ull;
    h ^= (w1() + 0xbf58476d1ce4e5b9ull) * 0x94d049bb133111ebull;
    h ^= h >> 29;
    return h;
  }
};

/// Monomial orders: degrevlex, or a block (elimination) order whose leading
/// block is the last `elim` variables, degrevlex within each block. An
/// element whose lead has no eliminated variable is then entirely free of
/// them.
struct MonomialOrder {
  enum class Kind { DegRevLex, Elim };
  Kind kind = Kind::DegRevLex;
  int elim = 0;  // trailing variables forming the leading block

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder elim_last(int k) {
    return {Kind::Elim, k};
  }

  bool operator==(const MonomialOrder&) const = default;

  /// Negative if a < b, zero if equal, positive if a > b.
  int cmp(const Monomial& a, const Monomial& b, int nvars) const;

  bool less(const Monomial& a, const Monomial& b, int nvars) const {
    return cmp(a, b, nvars) < 0;
  }

  std::string describe() const;
};

int cmp_degrevlex(const Monomial& a, const Monomial& b, int nvars);

}  // namespace liaison

#endif
