#include <algorithm>

#include "doctest.h"
#include "liaison/unipoly.hpp"

using namespace liaison;

namespace {

std::vector<Fe> scan_roots(const Fp& fp, const UniPoly& f) {
  std::vector<Fe> out;
  for (Fe a = 0; a < fp.modulus(); ++a)
    if (uni_eval(fp, f, a) == 0) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("roots of x^2 - 1 over F_7") {
  Fp fp(7);
  UniPoly f({fp.neg(1), 0, 1});
  auto roots = uni_roots(fp, f, Rng(1));
  CHECK(roots == std::vector<Fe>{1, 6});
}

TEST_CASE("x^2 + 1 has no roots over F_7") {
  Fp fp(7);
  UniPoly f({1, 0, 1});
  CHECK(uni_roots(fp, f, Rng(1)).empty());
}

TEST_CASE("roots of a constructed product of linear factors") {
  Fp fp(10007);
  Rng rng(3);
  std::vector<Fe> chosen;
  for (int i = 0; i < 8; ++i) chosen.push_back(rng.fe(fp));
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  UniPoly f = UniPoly::constant(1);
  for (Fe a : chosen) f = uni_mul(fp, f, UniPoly({fp.neg(a), 1}));
  auto roots = uni_roots(fp, f, Rng(9));
  CHECK(roots == chosen);
}

TEST_CASE("roots match the exhaustive scan for small primes") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 31u, 101u}) {
    Fp fp(p);
    Rng rng(p);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Fe> coeffs;
      int deg = 1 + static_cast<int>(rng.below(7));
      for (int i = 0; i <= deg; ++i) coeffs.push_back(rng.fe(fp));
      UniPoly f(std::move(coeffs));
      if (f.is_zero()) continue;
      auto expect = scan_roots(fp, f);
      if (f.degree() == 0) expect.clear();
      auto got = uni_roots(fp, f, rng.child(trial));
      CHECK(got == expect);
    }
  }
}

TEST_CASE("multiple roots are listed once") {
  Fp fp(101);
  // (x - 3)^2 (x - 5)
  UniPoly f = uni_mul(fp, uni_mul(fp, UniPoly({fp.neg(3), 1}),
                                  UniPoly({fp.neg(3), 1})),
                      UniPoly({fp.neg(5), 1}));
  CHECK(uni_roots(fp, f, Rng(2)) == std::vector<Fe>{3, 5});
}

TEST_CASE("zero polynomial is rejected") {
  Fp fp(7);
  CHECK_THROWS_AS(uni_roots(fp, UniPoly(), Rng(1)), std::domain_error);
}

TEST_CASE("gcd and mod behave") {
  Fp fp(10007);
  UniPoly a({2, 0, 1});          // x^2 + 2
  UniPoly b({1, 1});             // x + 1
  UniPoly prod = uni_mul(fp, a, b);
  CHECK(uni_mod(fp, prod, a).is_zero());
  UniPoly g = uni_gcd(fp, prod, a);
  CHECK(g.degree() == a.degree());
}
