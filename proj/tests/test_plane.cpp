#include <set>

#include "doctest.h"
#include "liaison/plane.hpp"
#include "liaison/divisor.hpp"

using namespace liaison;

namespace {

std::vector<PointWithMultiplicity> random_points(const Fp& fp, Rng& rng,
                                                 int count, int mult) {
  std::vector<PointWithMultiplicity> out;
  std::set<PlanePoint> used;
  while (static_cast<int>(out.size()) < count) {
    PlanePoint p{rng.fe(fp), rng.fe(fp), rng.fe(fp)};
    if ((p[0] | p[1] | p[2]) == 0) continue;
    p = normalize_point(fp, p);
    if (used.insert(p).second) out.push_back({p, mult});
  }
  return out;
}

}  // namespace

TEST_CASE("conics through four general points form a pencil") {
  Fp fp(10007);
  Rng rng(2);
  auto pts = random_points(fp, rng, 4, 1);
  PlaneLinearSystem sys = plane_system_basis(fp, 2, pts);
  CHECK(sys.basis.size() == 2);
}

TEST_CASE("sextics with five double and six simple points have dim 7") {
  Fp fp(10007);
  Rng rng(3);
  auto doubles = random_points(fp, rng, 5, 2);
  auto simples = random_points(fp, rng, 6, 1);
  std::vector<PointWithMultiplicity> cond = doubles;
  for (auto& s : simples) cond.push_back(s);
  PlaneLinearSystem sys = plane_system_basis(fp, 6, cond);
  CHECK(sys.basis.size() == 7);
}

TEST_CASE("the genus-12 class system has dimension 12") {
  Fp fp(10007);
  Rng rng(5);
  std::vector<int> l_mults{3, 3, 4, 4, 4};
  std::vector<int> e_mults{1, 1, 2, 2, 2, 1};
  std::vector<PointWithMultiplicity> cond;
  auto ls = random_points(fp, rng, 5, 1);
  auto es = random_points(fp, rng, 6, 1);
  for (int i = 0; i < 5; ++i)
    cond.push_back({ls[static_cast<std::size_t>(i)].point,
                    l_mults[static_cast<std::size_t>(i)]});
  for (int j = 0; j < 6; ++j)
    cond.push_back({es[static_cast<std::size_t>(j)].point,
                    e_mults[static_cast<std::size_t>(j)]});
  PlaneLinearSystem sys = plane_system_basis(fp, 10, cond);
  CHECK(sys.basis.size() == 12);
}

TEST_CASE("empty systems raise with the expected dimension attached") {
  Fp fp(10007);
  Rng rng(7);
  auto pts = random_points(fp, rng, 3, 1);
  bool threw = false;
  try {
    plane_system_basis(fp, 1, pts, 0);
  } catch (const EmptySystemError& e) {
    threw = true;
    CHECK(e.expected_dim == 0);
  }
  CHECK(threw);
}

TEST_CASE("coincident base points are rejected") {
  Fp fp(10007);
  PlanePoint p{1, 2, 3};
  CHECK_THROWS_AS(plane_system_basis(fp, 2, {{p, 1}, {p, 1}}),
                  std::invalid_argument);
}

TEST_CASE("points on a line have first coordinate zero") {
  Fp fp(10007);
  MultiPoly line = mp_parse(fp, 3, "1*x0");
  auto pts = plane_curve_points(fp, line, 5, Rng(1));
  CHECK(pts.size() == 5);
  for (const auto& p : pts) CHECK(p[0] == 0);
}

TEST_CASE("a smooth conic over F_7 has exactly 8 rational points") {
  Fp fp(7);
  MultiPoly conic = mp_parse(fp, 3, "1*x0*x1 + 6*x2^2");
  auto pts = plane_curve_points(fp, conic, 8, Rng(5));
  CHECK(pts.size() == 8);
  for (const auto& p : pts)
    CHECK(mp_evaluate(fp, conic, std::span<const Fe>(p.data(), 3)) == 0);
  // asking for a ninth point must fail
  CHECK_THROWS_AS(plane_curve_points(fp, conic, 9, Rng(5)),
                  std::runtime_error);
}

TEST_CASE("a random smooth quartic over the default prime has many points") {
  Fp fp(10007);
  Rng rng(11);
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(3, 4))
    terms.push_back(Term{m, rng.fe(fp)});
  MultiPoly quartic = mp_from_terms(fp, 3, std::move(terms));
  auto pts = plane_curve_points(fp, quartic, 500, Rng(13));
  CHECK(pts.size() == 500);
  for (const auto& p : pts)
    CHECK(mp_evaluate(fp, quartic, std::span<const Fe>(p.data(), 3)) == 0);
}

TEST_CASE("zero form is rejected") {
  Fp fp(7);
  CHECK_THROWS_AS(plane_curve_points(fp, MultiPoly(3), 1, Rng(1)),
                  std::domain_error);
}
