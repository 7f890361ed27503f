#ifndef LIAISON_PLANE_HPP
#define LIAISON_PLANE_HPP

#include <array>
#include <vector>

#include "liaison/multipoly.hpp"
#include "liaison/rng.hpp"
#include "liaison/unipoly.hpp"

namespace liaison {

using PlanePoint = std::array<Fe, 3>;

struct PointWithMultiplicity {
  PlanePoint point;
  int multiplicity = 1;
};

/// Linear system of plane curves of fixed degree with base-point
/// multiplicity conditions. Every basis element vanishes to the prescribed
/// order at each base point.
struct PlaneLinearSystem {
  int degree = 0;
  std::vector<PointWithMultiplicity> base;
  std::vector<MultiPoly> basis;  // ternary forms
};

struct EmptySystemError : std::runtime_error {
  long long expected_dim;
  explicit EmptySystemError(const std::string& what, long long expected)
      : std::runtime_error(what), expected_dim(expected) {}
};

/// Kernel of the condition matrix (value and all partials through order
/// mult-1 at each base point). Throws EmptySystemError when no curve
/// satisfies the conditions.
PlaneLinearSystem plane_system_basis(
    const Fp& fp, int degree,
    const std::vector<PointWithMultiplicity>& conditions,
    long long expected_dim = -1);

/// N distinct F_p points with f = 0, found by scanning pencils of lines
/// and extracting univariate roots. Throws when the budget of lines is
/// exhausted before N points are found.
std::vector<PlanePoint> plane_curve_points(const Fp& fp, const MultiPoly& f,
                                           std::size_t count, Rng rng);

/// Scale so the first nonzero coordinate is 1 (canonical representative).
PlanePoint normalize_point(const Fp& fp, PlanePoint p);

}  // namespace liaison

#endif
