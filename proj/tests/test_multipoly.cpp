#include "doctest.h"
#include "liaison/geometry.hpp"
#include "liaison/multipoly.hpp"
#include "liaison/rng.hpp"

using namespace liaison;

namespace {

MultiPoly random_homogeneous(const Fp& fp, Rng& rng, int nvars, int d) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(nvars, d))
    terms.push_back(Term{m, rng.fe(fp)});
  return mp_from_terms(fp, nvars, std::move(terms));
}

}  // namespace

TEST_CASE("square of x0 + x1") {
  Fp fp(10007);
  MultiPoly f = mp_parse(fp, 2, "1*x0 + 1*x1");
  MultiPoly sq = mp_mul(fp, f, f);
  CHECK(sq == mp_parse(fp, 2, "1*x0^2 + 2*x0*x1 + 1*x1^2"));
}

TEST_CASE("multiplying by zero gives zero") {
  Fp fp(10007);
  MultiPoly f = mp_parse(fp, 3, "3*x0*x2 + 5*x1^2");
  CHECK(mp_mul(fp, f, MultiPoly(3)).is_zero());
}

TEST_CASE("multinomial coefficient of x0*x1*x2 in (x0+x1+x2)^3") {
  Fp fp(10007);
  MultiPoly f = mp_parse(fp, 3, "1*x0 + 1*x1 + 1*x2");
  MultiPoly cube = mp_pow(fp, f, 3);
  Monomial target = Monomial::var(0).mul(Monomial::var(1)).mul(Monomial::var(2));
  Fe coeff = 0;
  for (const auto& t : cube.terms())
    if (t.m == target) coeff = t.c;
  CHECK(coeff == 6);
}

TEST_CASE("evaluation examples") {
  Fp fp(7);
  MultiPoly f = mp_parse(fp, 2, "1*x0*x1");
  std::vector<Fe> pt{2, 3};
  CHECK(mp_evaluate(fp, f, pt) == 6);
}

TEST_CASE("homogeneous scaling law") {
  Fp fp(10007);
  Rng rng(5);
  for (int d = 1; d <= 4; ++d) {
    MultiPoly f = random_homogeneous(fp, rng, 4, d);
    std::vector<Fe> pt = rng.fe_vector(fp, 4);
    Fe lambda = rng.fe_nonzero(fp);
    std::vector<Fe> scaled(pt);
    for (auto& c : scaled) c = fp.mul(c, lambda);
    CHECK(mp_evaluate(fp, f, scaled) ==
          fp.mul(fp.pow(lambda, d), mp_evaluate(fp, f, pt)));
  }
}

TEST_CASE("pluecker relation vanishes on decomposable vectors") {
  Fp fp(10007);
  Rng rng(8);
  std::vector<Fe> r0 = rng.fe_vector(fp, 6);
  std::vector<Fe> r1 = rng.fe_vector(fp, 6);
  auto coords = pluecker_coords_g26(fp, r0, r1);
  for (const auto& rel : pluecker_relations_g26(fp))
    CHECK(mp_evaluate(fp, rel, coords) == 0);
}

TEST_CASE("euler identity on a random cubic in 5 variables") {
  Fp fp(10007);
  Rng rng(21);
  MultiPoly f = random_homogeneous(fp, rng, 5, 3);
  MultiPoly acc(5);
  for (int i = 0; i < 5; ++i)
    acc = mp_add(fp, acc,
                 mp_mul(fp, mp_var(5, i), mp_derivative(fp, f, i)));
  CHECK(acc == mp_scale(fp, f, 3));
}

TEST_CASE("partial derivative drops degree by one") {
  Fp fp(10007);
  MultiPoly f = mp_parse(fp, 2, "1*x0^2*x1");
  CHECK(mp_derivative(fp, f, 0) == mp_parse(fp, 2, "2*x0*x1"));
  CHECK(mp_derivative(fp, mp_parse(fp, 2, "1*x0^3"), 1).is_zero());
}

TEST_CASE("monomial counts match binomials") {
  CHECK(monomials_of_degree(7, 2).size() == 28);
  CHECK(monomials_of_degree(5, 3).size() == 35);
  CHECK(monomials_of_degree(2, 0).size() == 1);
}

TEST_CASE("ring axioms on random samples") {
  Fp fp(31991);
  Rng rng(33);
  for (int trial = 0; trial < 5; ++trial) {
    MultiPoly a = random_homogeneous(fp, rng, 3, 2);
    MultiPoly b = random_homogeneous(fp, rng, 3, 3);
    MultiPoly c = random_homogeneous(fp, rng, 3, 2);
    CHECK(mp_mul(fp, a, b) == mp_mul(fp, b, a));
    CHECK(mp_mul(fp, mp_mul(fp, a, b), c) == mp_mul(fp, a, mp_mul(fp, b, c)));
    CHECK(mp_mul(fp, mp_add(fp, a, c), b) ==
          mp_add(fp, mp_mul(fp, a, b), mp_mul(fp, c, b)));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Fp fp(10007);
  Rng rng(44);
  MultiPoly a = random_homogeneous(fp, rng, 4, 2);
  MultiPoly b = random_homogeneous(fp, rng, 4, 3);
  std::vector<Fe> pt = rng.fe_vector(fp, 4);
  CHECK(mp_evaluate(fp, mp_mul(fp, a, b), pt) ==
        fp.mul(mp_evaluate(fp, a, pt), mp_evaluate(fp, b, pt)));
  CHECK(mp_evaluate(fp, mp_add(fp, a, mp_scale(fp, a, 4)), pt) ==
        fp.mul(5, mp_evaluate(fp, a, pt)));
}

TEST_CASE("homogeneity is preserved by arithmetic") {
  Fp fp(10007);
  Rng rng(55);
  MultiPoly a = random_homogeneous(fp, rng, 4, 2);
  MultiPoly b = random_homogeneous(fp, rng, 4, 2);
  CHECK(mp_is_homogeneous(mp_add(fp, a, b)));
  CHECK(mp_is_homogeneous(mp_mul(fp, a, b)));
  CHECK(mp_mul(fp, a, b).degree() == 4);
}

TEST_CASE("text format round-trips exactly") {
  Fp fp(10007);
  Rng rng(66);
  for (int trial = 0; trial < 20; ++trial) {
    int nvars = 2 + static_cast<int>(rng.below(6));
    int deg = 1 + static_cast<int>(rng.below(4));
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(nvars, deg))
      if (rng.below(3) == 0) terms.push_back(Term{m, rng.fe(fp)});
    MultiPoly f = mp_from_terms(fp, nvars, std::move(terms));
    MultiPoly back = mp_parse(fp, nvars, mp_print(f));
    CHECK(back == f);
    CHECK(mp_print(back) == mp_print(f));
  }
  // whitespace is insignificant; coefficients reduce mod p
  CHECK(mp_parse(fp, 2, " 10008 * x0 ^ 2 + 3*x1^2 ") ==
        mp_parse(fp, 2, "1*x0^2+3*x1^2"));
  CHECK(mp_print(MultiPoly(3)) == "0");
  CHECK(mp_parse(fp, 3, "0").is_zero());
}

TEST_CASE("arity mismatches are rejected") {
  Fp fp(7);
  CHECK_THROWS_AS(mp_add(fp, MultiPoly(2), MultiPoly(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(mp_parse(fp, 2, "1*x5"), std::invalid_argument);
}
