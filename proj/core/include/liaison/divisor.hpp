#ifndef LIAISON_DIVISOR_HPP
#define LIAISON_DIVISOR_HPP

#include <vector>

#include "liaison/fp.hpp"

namespace liaison {

/// Divisor class on a blow-up of the plane: coefficients (a; m_1..m_k) for
/// a*P - sum m_i E_i, with intersection form diag(1, -1, ..., -1).
struct DivisorClass {
  std::vector<long long> c;

  static DivisorClass plane_blowup(long long a,
                                   std::vector<long long> mults);

  std::size_t rank() const { return c.size(); }

  long long dot(const DivisorClass& other) const;
  long long self_intersection() const { return dot(*this); }

  DivisorClass scaled(long long k) const;
  DivisorClass minus(const DivisorClass& other) const;
  DivisorClass plus(const DivisorClass& other) const;

  /// Canonical class -3P + sum E_i on the same lattice.
  static DivisorClass canonical(std::size_t points);
};

struct ClassInvariants {
  long long self_intersection = 0;
  long long degree = 0;  // against the polarization H
  long long pa = 0;      // (D^2 + D.K)/2 + 1
};

/// Exact lattice computation; throws on rank mismatch or parity violation.
ClassInvariants class_invariants(const DivisorClass& D,
                                 const DivisorClass& K,
                                 const DivisorClass& H);

/// Expected linear-system dimension chi = 1 + (D^2 - D.K)/2 on a rational
/// surface (Riemann-Roch without correction terms).
long long expected_system_dim(const DivisorClass& D, const DivisorClass& K);

}  // namespace liaison

#endif
