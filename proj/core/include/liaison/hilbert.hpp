#ifndef LIAISON_HILBERT_HPP
#define LIAISON_HILBERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "liaison/groebner.hpp"
#include "liaison/matrix.hpp"

namespace liaison {

/// Hilbert function values of R/I with a fitted Hilbert polynomial and the
/// derived invariants. For curves HP(t) = deg*t + 1 - p_a; for surfaces
/// HP(t) = (deg/2)t^2 + ... with p_a = HP(0) - 1.
struct HilbertProfile {
  std::vector<std::pair<int, long long>> values;  // (degree, HF)
  // fitted polynomial in the binomial basis: c2*C(t,2) + c1*t + c0
  long long c2 = 0, c1 = 0, c0 = 0;
  int dimension = -1;  // projective dimension; -1 means empty
  long long degree = 0;
  long long pa = 0;

  long long hp_at(long long t) const {
    return c2 * (t * (t - 1) / 2) + c1 * t + c0;
  }
  std::string to_json() const;
};

struct GradedPieceDim {
  int dim = 0;    // dim I_d
  int codim = 0;  // C(n-1+d, d) - dim = HF(R/I, d)
};

/// Dimension of the degree-d slice of the ideal (span of monomial
/// multiples of the generators) by row reduction.
GradedPieceDim graded_piece_dim(const Ideal& I, int d);

/// Basis of the degree-d slice of the ideal as dense coefficient rows in
/// the canonical monomial basis.
std::vector<MultiPoly> graded_piece_basis(const Ideal& I, int d);

/// HF(R/I, d) for a window of degrees, computed by counting standard
/// monomials of the initial ideal (degrevlex).
std::vector<long long> hilbert_values(const Ideal& I, int from, int to);

/// Fit over the window [from, to]; caller must pass a saturated ideal.
/// Throws with the raw values attached if no polynomial of degree <= 2
/// matches at least 4 consecutive values up to the end of the window.
HilbertProfile hilbert_profile(const Ideal& I, int from, int to);

/// Window defaulted to [max generator degree + 1, + 6].
HilbertProfile hilbert_profile(const Ideal& I);

struct GenerationCheck {
  bool generated = true;  // ideal generated in degrees <= f
  int dim_f = 0;          // dim I_f
  int dim_f1 = 0;         // dim I_{f+1}
  int mu_rank = 0;        // rank of R_1 x I_f -> I_{f+1}
};

/// Is the (saturated) ideal generated in degrees <= f? Reports the rank of
/// the multiplication map in degree f as well. The low-degree comparison
/// uses row reduction; completeness beyond f+1 is certified by comparing
/// the reduced basis of the truncated subideal with the full one.
GenerationCheck generated_in_degree(const Ideal& I, int f);

struct RegularityError : std::runtime_error {
  std::vector<std::pair<int, long long>> raw;
  explicit RegularityError(const std::string& what,
                           std::vector<std::pair<int, long long>> values)
      : std::runtime_error(what), raw(std::move(values)) {}
};

}  // namespace liaison

#endif
