#ifndef LIAISON_UNIPOLY_HPP
#define LIAISON_UNIPOLY_HPP

#include <vector>

#include "liaison/fp.hpp"
#include "liaison/rng.hpp"

namespace liaison {

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial is the empty vector; otherwise the leading coefficient is
/// nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Fe> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static UniPoly x();  // the monomial x
  static UniPoly constant(Fe v);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Fe>& coeffs() const { return c_; }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

 private:
  std::vector<Fe> c_;
};

UniPoly uni_add(const Fp& fp, const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const Fp& fp, const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const Fp& fp, const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const Fp& fp, const UniPoly& a, Fe c);
UniPoly uni_monic(const Fp& fp, const UniPoly& a);
Fe uni_eval(const Fp& fp, const UniPoly& a, Fe x);

/// Remainder of a mod b; b nonzero.
UniPoly uni_mod(const Fp& fp, const UniPoly& a, const UniPoly& b);
UniPoly uni_gcd(const Fp& fp, UniPoly a, UniPoly b);

/// (base^e) mod f by square and multiply.
UniPoly uni_powmod(const Fp& fp, const UniPoly& base, std::uint64_t e,
                   const UniPoly& f);

/// All roots of f in F_p (each multiple root listed once), sorted
/// ascending. Computed as gcd(f, x^p - x) followed by randomized
/// equal-degree splitting with (x + c)^((p-1)/2) - 1.
std::vector<Fe> uni_roots(const Fp& fp, const UniPoly& f, Rng rng);

}  // namespace liaison

#endif
