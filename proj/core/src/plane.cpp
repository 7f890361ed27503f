#include "liaison/plane.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "liaison/matrix.hpp"

namespace liaison {

namespace {

// Value of the mixed partial d^(a,b,c) f at a point, divided exponents
// not used: plain iterated derivative (char p far above the degrees in
// play, so no factorial vanishes).
Fe partial_value(const Fp& fp, const MultiPoly& f, int da, int db, int dc,
                 const PlanePoint& pt) {
  MultiPoly g = f;
  for (int i = 0; i < da; ++i) g = mp_derivative(fp, g, 0);
  for (int i = 0; i < db; ++i) g = mp_derivative(fp, g, 1);
  for (int i = 0; i < dc; ++i) g = mp_derivative(fp, g, 2);
  return mp_evaluate(fp, g, std::span<const Fe>(pt.data(), 3));
}

}  // namespace

PlaneLinearSystem plane_system_basis(
    const Fp& fp, int degree,
    const std::vector<PointWithMultiplicity>& conditions,
    long long expected_dim) {
  for (std::size_t i = 0; i < conditions.size(); ++i)
    for (std::size_t j = i + 1; j < conditions.size(); ++j)
      if (normalize_point(fp, conditions[i].point) ==
          normalize_point(fp, conditions[j].point))
        throw std::invalid_argument("base points must be pairwise distinct");

  auto monos = monomials_of_degree(3, degree);
  // one row per mixed partial of order < mult: C(mult+2, 3) rows a point
  std::size_t rows = 0;
  for (const auto& c : conditions)
    rows += binomial(static_cast<std::uint64_t>(c.multiplicity) + 2, 3);

  Matrix cond(rows, monos.size());
  std::size_t r = 0;
  for (const auto& c : conditions) {
    for (int total = 0; total < c.multiplicity; ++total) {
      for (int da = total; da >= 0; --da) {
        for (int db = total - da; db >= 0; --db) {
          int dc = total - da - db;
          for (std::size_t j = 0; j < monos.size(); ++j) {
            MultiPoly mono(3, {Term{monos[j], 1}});
            cond.at(r, j) = partial_value(fp, mono, da, db, dc, c.point);
          }
          ++r;
        }
      }
    }
  }

  auto kernel = kernel_basis(fp, cond);
  if (kernel.empty())
    throw EmptySystemError("plane linear system is empty", expected_dim);

  PlaneLinearSystem sys;
  sys.degree = degree;
  sys.base = conditions;
  for (const auto& v : kernel)
    sys.basis.push_back(mp_from_dense(fp, 3, monos, v));

  // Every basis element must satisfy every condition exactly.
  for (const auto& f : sys.basis) {
    for (const auto& c : conditions) {
      for (int total = 0; total < c.multiplicity; ++total) {
        for (int da = total; da >= 0; --da) {
          for (int db = total - da; db >= 0; --db) {
            if (partial_value(fp, f, da, db, total - da - db, c.point) != 0)
              throw std::logic_error(
                  "plane system basis fails a vanishing condition");
          }
        }
      }
    }
  }
  return sys;
}

PlanePoint normalize_point(const Fp& fp, PlanePoint p) {
  for (auto& coord : p) {
    if (coord != 0) {
      Fe inv = fp.inv(coord);
      for (auto& c2 : p) c2 = fp.mul(c2, inv);
      break;
    }
  }
  return p;
}

std::vector<PlanePoint> plane_curve_points(const Fp& fp, const MultiPoly& f,
                                           std::size_t count, Rng rng) {
  if (f.is_zero()) throw std::domain_error("plane_curve_points: zero form");
  if (f.nvars() != 3)
    throw std::invalid_argument("plane_curve_points: expects a ternary form");

  std::set<PlanePoint> found;
  const std::size_t line_budget = 64 * (count + 8);
  for (std::size_t line = 0; line < line_budget && found.size() < count;
       ++line) {
    PlanePoint a{rng.fe(fp), rng.fe(fp), rng.fe(fp)};
    PlanePoint b{rng.fe(fp), rng.fe(fp), rng.fe(fp)};
    if ((a[0] | a[1] | a[2]) == 0 || (b[0] | b[1] | b[2]) == 0) continue;
    // f restricted to the line a + t b as a univariate in t
    std::vector<Fe> coeffs(static_cast<std::size_t>(f.degree()) + 1, 0);
    for (const auto& term : f.terms()) {
      // expand prod (a_i + t b_i)^{e_i}
      std::vector<Fe> poly{1};
      for (int v = 0; v < 3; ++v) {
        for (int k = 0; k < term.m.e[v]; ++k) {
          std::vector<Fe> next(poly.size() + 1, 0);
          for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] = fp.add(next[i], fp.mul(poly[i], a[v]));
            next[i + 1] = fp.add(next[i + 1], fp.mul(poly[i], b[v]));
          }
          poly.swap(next);
        }
      }
      for (std::size_t i = 0; i < poly.size(); ++i)
        coeffs[i] = fp.add(coeffs[i], fp.mul(term.c, poly[i]));
    }
    UniPoly restricted(std::move(coeffs));
    if (restricted.is_zero()) continue;  // line inside the curve
    for (Fe t : uni_roots(fp, restricted, rng.child(line))) {
      PlanePoint p{fp.add(a[0], fp.mul(t, b[0])),
                   fp.add(a[1], fp.mul(t, b[1])),
                   fp.add(a[2], fp.mul(t, b[2]))};
      if ((p[0] | p[1] | p[2]) == 0) continue;
      found.insert(normalize_point(fp, p));
      if (found.size() >= count) break;
    }
  }
  if (found.size() < count)
    throw std::runtime_error(
        "plane_curve_points: not enough rational points (try a larger "
        "prime)");
  std::vector<PlanePoint> out(found.begin(), found.end());
  out.resize(count);
  return out;
}

}  // namespace liaison
