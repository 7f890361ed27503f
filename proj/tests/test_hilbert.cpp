#include "doctest.h"
#include "liaison/hilbert.hpp"
#include "liaison/rng.hpp"

using namespace liaison;

namespace {

Ring ring(std::uint32_t p, int n) { return Ring{Fp(p), n}; }

Ideal twisted_cubic(const Ring& rg) {
  const Fp& fp = rg.fp;
  return Ideal(rg, {mp_parse(fp, 4, "1*x0*x2 + 10006*x1^2"),
                    mp_parse(fp, 4, "1*x1*x3 + 10006*x2^2"),
                    mp_parse(fp, 4, "1*x0*x3 + 10006*x1*x2")});
}

// Koszul / inclusion-exclusion count for a regular sequence of c forms:
// HF(R/I, d) = sum over subsets S of (-1)^|S| C(n-1+d-deg(S), n-1).
long long koszul_hf(int nvars, const std::vector<int>& degs, int d) {
  long long acc = 0;
  const int c = static_cast<int>(degs.size());
  for (int mask = 0; mask < (1 << c); ++mask) {
    int total = 0, bits = 0;
    for (int i = 0; i < c; ++i)
      if (mask & (1 << i)) {
        total += degs[static_cast<std::size_t>(i)];
        ++bits;
      }
    if (d - total < 0) continue;
    long long term = static_cast<long long>(
        binomial(static_cast<std::uint64_t>(nvars - 1 + d - total),
                 static_cast<std::uint64_t>(d - total)));
    acc += (bits % 2 == 0) ? term : -term;
  }
  return acc;
}

MultiPoly random_homog(const Fp& fp, Rng& rng, int nvars, int d) {
  std::vector<Term> t;
  for (const auto& m : monomials_of_degree(nvars, d))
    t.push_back(Term{m, rng.fe(fp)});
  return mp_from_terms(fp, nvars, std::move(t));
}

}  // namespace

TEST_CASE("graded piece dimensions of simple ideals") {
  Ring rg = ring(10007, 4);
  Ideal zero = Ideal::zero(rg);
  CHECK(graded_piece_dim(zero, 3).dim == 0);
  CHECK(graded_piece_dim(zero, 3).codim == 20);

  Ideal tc = twisted_cubic(rg);
  CHECK(graded_piece_dim(tc, 2).dim == 3);
  // HF(R/I_tc, d) = 3d + 1
  for (int d = 1; d <= 5; ++d)
    CHECK(graded_piece_dim(tc, d).codim == 3 * d + 1);
}

TEST_CASE("twisted cubic hilbert polynomial is 3t + 1") {
  Ring rg = ring(10007, 4);
  HilbertProfile p = hilbert_profile(twisted_cubic(rg));
  CHECK(p.dimension == 1);
  CHECK(p.degree == 3);
  CHECK(p.pa == 0);
  CHECK(p.hp_at(10) == 31);
}

TEST_CASE("hilbert values by counting match row reduction") {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    int nvars = 3 + static_cast<int>(rng.below(2));
    Ring rg = ring(10007, nvars);
    std::vector<MultiPoly> gens;
    for (int i = 0; i < 2; ++i)
      gens.push_back(random_homog(rg.fp, rng, nvars,
                                  2 + static_cast<int>(rng.below(2))));
    Ideal I(rg, gens);
    auto vals = hilbert_values(I, 0, 6);
    for (int d = 0; d <= 6; ++d)
      CHECK(vals[static_cast<std::size_t>(d)] ==
            graded_piece_dim(I, d).codim);
  }
}

TEST_CASE("complete intersections match the Koszul count") {
  Rng rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    int nvars = 3 + static_cast<int>(rng.below(2));
    int c = 1 + static_cast<int>(rng.below(3));
    std::vector<int> degs;
    std::vector<MultiPoly> gens;
    Ring rg = ring(10007, nvars);
    for (int i = 0; i < c; ++i) {
      int d = 1 + static_cast<int>(rng.below(3));
      degs.push_back(d);
      gens.push_back(random_homog(rg.fp, rng, nvars, d));
    }
    Ideal I(rg, gens);
    for (int d = 0; d <= 6; ++d)
      CHECK(graded_piece_dim(I, d).codim == koszul_hf(nvars, degs, d));
  }
}

TEST_CASE("profiles of low-dimensional schemes") {
  Ring rg = ring(10007, 3);
  const Fp& fp = rg.fp;
  // three coordinate points in the plane
  Ideal pts(rg, {mp_parse(fp, 3, "1*x0*x1"), mp_parse(fp, 3, "1*x0*x2"),
                 mp_parse(fp, 3, "1*x1*x2")});
  HilbertProfile p = hilbert_profile(pts);
  CHECK(p.dimension == 0);
  CHECK(p.degree == 3);

  // a plane conic is a (2, 0) curve
  Ideal conic(rg, {mp_parse(fp, 3, "1*x0*x1 + 10006*x2^2")});
  HilbertProfile c = hilbert_profile(conic);
  CHECK(c.dimension == 1);
  CHECK(c.degree == 2);
  CHECK(c.pa == 0);

  // empty scheme
  Ideal unit = Ideal::unit(rg);
  CHECK(hilbert_profile(unit).dimension == -1);
}

TEST_CASE("surface profile carries chi in the constant term") {
  Ring rg = ring(10007, 4);
  // a quadric surface in P^3: chi(O) = 1, so pa = 0
  Ideal q(rg, {mp_parse(rg.fp, 4, "1*x0*x3 + 10006*x1*x2")});
  HilbertProfile p = hilbert_profile(q);
  CHECK(p.dimension == 2);
  CHECK(p.degree == 2);
  CHECK(p.pa == 0);
}

TEST_CASE("regularity error carries the raw values") {
  Ring rg = ring(10007, 4);
  // the zero ideal grows cubically; no fit of degree <= 2 exists
  bool threw = false;
  try {
    hilbert_profile(Ideal::zero(rg), 1, 6);
  } catch (const RegularityError& e) {
    threw = true;
    CHECK(e.raw.size() == 6);
    CHECK(e.raw.front().second == 4);
  }
  CHECK(threw);
  CHECK_THROWS_AS(hilbert_profile(twisted_cubic(rg), 1, 3),
                  RegularityError);
}

TEST_CASE("generation checks: twisted cubic and complete intersections") {
  Ring rg = ring(10007, 4);
  Ideal tc = twisted_cubic(rg);
  GenerationCheck g = generated_in_degree(tc, 2);
  CHECK(g.generated);
  CHECK(g.dim_f == 3);
  // quadrics times linear forms span all of I_3: dim I_3 = 20 - 10 = 10
  CHECK(g.dim_f1 == 10);
  CHECK(g.mu_rank == 10);

  Rng rng(31);
  Ideal ci(rg, {random_homog(rg.fp, rng, 4, 2),
                random_homog(rg.fp, rng, 4, 2)});
  GenerationCheck g2 = generated_in_degree(ci, 2);
  CHECK(g2.generated);
  CHECK(g2.dim_f == 2);

  // a quadric plus an irreducible cubic is not generated in degree 2
  Ideal mixed(rg, {random_homog(rg.fp, rng, 4, 2),
                   random_homog(rg.fp, rng, 4, 3)});
  CHECK_FALSE(generated_in_degree(mixed, 2).generated);
}

TEST_CASE("profile json shape") {
  Ring rg = ring(10007, 4);
  std::string js = hilbert_profile(twisted_cubic(rg)).to_json();
  CHECK(js.find("\"hf\"") != std::string::npos);
  CHECK(js.find("\"dim\": 1") != std::string::npos);
  CHECK(js.find("\"degree\": 3") != std::string::npos);
  CHECK(js.find("\"pa\": 0") != std::string::npos);
}
