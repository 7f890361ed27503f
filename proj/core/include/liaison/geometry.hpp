#ifndef LIAISON_GEOMETRY_HPP
#define LIAISON_GEOMETRY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liaison/hilbert.hpp"
#include "liaison/plane.hpp"
#include "liaison/rng.hpp"

namespace liaison {

using ProjPoint = std::vector<Fe>;

/// Genericity failure that the caller is expected to retry with a fresh
/// sub-seed.
struct RetryError : std::runtime_error {
  std::string stage;
  RetryError(std::string stage_, const std::string& what)
      : std::runtime_error(stage_ + ": " + what), stage(std::move(stage_)) {}
};

struct UnluckySampleError : std::runtime_error {
  explicit UnluckySampleError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Rational map P^2 -> P^{k-1} given by equal-degree ternary forms with no
/// common factor.
struct ParametrizedSurface {
  std::vector<MultiPoly> components;
  int target_nvars() const { return static_cast<int>(components.size()); }
};

ProjPoint normalize_proj(const Fp& fp, ProjPoint p);
bool on_variety(const Ideal& I, const ProjPoint& p);
Fe eval_at(const Fp& fp, const MultiPoly& f, const ProjPoint& p);

/// Degree-d forms vanishing on 2*C(n-1+d, d) sampled points, re-verified
/// on a fresh batch of the same size; throws UnluckySampleError if a form
/// fails the fresh batch.
std::vector<MultiPoly> interpolate_ideal(const Fp& fp, int nvars, int d,
                                         const std::function<ProjPoint()>& sample);

/// Point supplier mapping plane-curve points through a parametrization,
/// rejecting base points. Draws from plane_curve_points batches.
std::function<ProjPoint()> curve_image_sampler(const Fp& fp,
                                               const MultiPoly& plane_curve,
                                               const ParametrizedSurface& map,
                                               Rng rng);

/// Greedy minimal generating subset of the span of the given generators,
/// selected degree by degree.
std::vector<MultiPoly> minimal_generators(const Ideal& I);

/// Saturated ideal of I + (c x c minors of the Jacobian of a minimal
/// generating set). Empty (unit ideal) iff the scheme is smooth in
/// codimension c.
Ideal singular_scheme(const Ideal& I, int codim);

/// One-sided fast smoothness certificate: streams Jacobian minors into a
/// full-rank test in low degree, falling back to the exact singular
/// scheme when inconclusive.
bool is_smooth(const Ideal& I, int codim);

/// All F_p points of a saturated 0-dimensional ideal: dehomogenize on each
/// chart, eliminate to a univariate polynomial, extract roots,
/// back-substitute, deduplicate. Throws if some elimination shows positive
/// dimension.
std::vector<ProjPoint> rational_points_dim0(const Ideal& I);

/// Image ideal of the projection away from `center`: linear change moving
/// the center to (0:...:0:1), elimination of the last variable, then
/// saturation.
Ideal project_from_point(const Ideal& I, const ProjPoint& center);

/// Jacobian matrix rank at a rational point of V(I).
int jacobian_rank_at(const Ideal& I, const ProjPoint& p);

struct NodeCheck {
  bool ok = false;
  int jacobian_rank = 0;
  int tangent_dim = 0;
  std::string reason;
};

/// Ordinary-node certificate at a rational point of a curve of codimension
/// c: Jacobian corank 1 and rank-2 quadratic cone on the tangent plane.
NodeCheck ordinary_node_at(const Ideal& I, const ProjPoint& p, int codim);

struct GrassmannSlice {
  Ideal curve;          // ideal of G(2,6) ∩ P^7 in 8 variables
  int quadric_count = 0;
};

/// Pluecker ideal of G(2,6) restricted to a random 7-plane. Throws
/// RetryError if the slice fails its dimension check.
GrassmannSlice grassmann_slice(const Fp& fp, Rng rng);

/// The fifteen 3-term Pluecker relations of G(2,6) in the 15 coordinate
/// ring (p_ij, i<j, ordered lexicographically).
std::vector<MultiPoly> pluecker_relations_g26(const Fp& fp);
/// Pluecker coordinates (2x2 minors) of a 2x6 matrix, in the same order.
std::vector<Fe> pluecker_coords_g26(const Fp& fp,
                                    const std::vector<Fe>& row0,
                                    const std::vector<Fe>& row1);

struct K3WithCurve {
  MultiPoly quartic;      // smooth plane quartic (genus 3 model)
  Ideal surface;          // X' = three quadrics in P^5
  Ideal curve;            // L' of degree 10, genus 3 on X'
  std::vector<MultiPoly> cubic_map;  // the six cubics defining the embedding
  MultiPoly plane_quartic() const { return quartic; }
};

/// Builds the polarized K3 with the degree-10 genus-3 curve: a smooth
/// plane quartic mapped to P^5 by six cubics through two of its points,
/// its quadrics interpolated, and the complete intersection of those three
/// quadrics verified smooth and containing the curve.
K3WithCurve k3_with_curve(const Fp& fp, Rng rng);

/// Random k-dimensional subspace of the span of `basis`, returned as k
/// combinations; retries the draw until the coefficient matrix has rank k.
std::vector<MultiPoly> random_subspace(const Fp& fp,
                                       const std::vector<MultiPoly>& basis,
                                       std::size_t k, Rng& rng);

std::vector<MultiPoly> random_linear_forms(const Ring& ring, std::size_t k,
                                           Rng& rng);

/// True when HF(R/I, d) = 0 for some probed degree (certifies an empty
/// scheme); never returns a false positive.
bool certified_empty(const Ideal& I, int extra_degrees = 2);

}  // namespace liaison

#endif
