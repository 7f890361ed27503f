#include <algorithm>

#include "doctest.h"
#include "liaison/groebner.hpp"
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

MultiPoly random_homog(const Fp& fp, Rng& rng, int nvars, int d,
                       int keep_one_in = 2) {
  std::vector<Term> t;
  for (const auto& m : monomials_of_degree(nvars, d))
    if (rng.below(static_cast<std::uint64_t>(keep_one_in)) == 0)
      t.push_back(Term{m, rng.fe(fp)});
  return mp_from_terms(fp, nvars, std::move(t));
}

// Brute-force membership of a homogeneous form in bounded degree: reduce
// against the row space of all monomial multiples of the generators.
bool member_by_rref(const Ideal& I, const MultiPoly& f) {
  if (f.is_zero()) return true;
  const int d = f.degree();
  auto monos = monomials_of_degree(I.nvars(), d);
  RowReducer red(I.fp(), monos.size());
  for (const auto& g : I.gens()) {
    if (g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(I.nvars(), d - g.degree())) {
      auto dense = mp_dense_coeffs(mp_mul_term(I.fp(), g, m, 1), monos);
      red.add_row(std::move(dense));
    }
  }
  auto row = mp_dense_coeffs(f, monos);
  red.reduce(row);
  return std::all_of(row.begin(), row.end(), [](Fe v) { return v == 0; });
}

// --- combinatorial oracle for monomial ideals ---

using MonIdeal = std::vector<Monomial>;

MonIdeal minimalized(MonIdeal M) {
  std::sort(M.begin(), M.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return cmp_degrevlex(a, b, kMaxVars) < 0;
  });
  MonIdeal out;
  for (const auto& m : M) {
    bool dom = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        dom = true;
        break;
      }
    if (!dom) out.push_back(m);
  }
  return out;
}

Monomial mon_colon(const Monomial& m, const Monomial& g) {
  Monomial r;
  std::uint16_t deg = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = static_cast<std::uint8_t>(m.e[i] > g.e[i] ? m.e[i] - g.e[i] : 0);
    deg = static_cast<std::uint16_t>(deg + r.e[i]);
  }
  r.deg = deg;
  return r;
}

MonIdeal oracle_quotient_single(const MonIdeal& M, const Monomial& g) {
  MonIdeal out;
  for (const auto& m : M) out.push_back(mon_colon(m, g));
  return minimalized(out);
}

MonIdeal oracle_intersect(const MonIdeal& A, const MonIdeal& B) {
  MonIdeal out;
  for (const auto& a : A)
    for (const auto& b : B) out.push_back(a.lcm(b));
  return minimalized(out);
}

MonIdeal oracle_quotient(const MonIdeal& M, const MonIdeal& J) {
  MonIdeal acc;
  bool have = false;
  for (const auto& g : J) {
    MonIdeal q = oracle_quotient_single(M, g);
    acc = have ? oracle_intersect(acc, q) : q;
    have = true;
  }
  return acc;
}

MonIdeal oracle_saturate_irrelevant(MonIdeal M, int nvars) {
  // intersection over variables of the ideals with all powers of that
  // variable stripped
  MonIdeal acc;
  bool have = false;
  for (int v = 0; v < nvars; ++v) {
    MonIdeal s;
    for (auto m : M) {
      m.deg = static_cast<std::uint16_t>(m.deg - m.e[v]);
      m.e[v] = 0;
      s.push_back(m);
    }
    s = minimalized(s);
    acc = have ? oracle_intersect(acc, s) : s;
    have = true;
  }
  return acc;
}

Ideal mon_ideal(const Ring& rg, const MonIdeal& M) {
  std::vector<MultiPoly> gens;
  for (const auto& m : M) gens.push_back(MultiPoly(rg.nvars, {Term{m, 1}}));
  return Ideal(rg, std::move(gens));
}

Monomial random_monomial(Rng& rng, int nvars, int maxdeg) {
  Monomial m;
  int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(maxdeg)));
  for (int i = 0; i < d; ++i) {
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(nvars)));
    m.e[v] = static_cast<std::uint8_t>(m.e[v] + 1);
  }
  m.deg = static_cast<std::uint16_t>(d);
  return m;
}

}  // namespace

TEST_CASE("normal form of a generator is zero") {
  Ring rg = ring(10007, 4);
  Ideal tc = twisted_cubic(rg);
  auto gb = gb_for(tc);
  for (const auto& g : tc.gens())
    CHECK(normal_form(rg.fp, g, *gb).is_zero());
}

TEST_CASE("normal form of 1 against a proper homogeneous ideal is 1") {
  Ring rg = ring(10007, 4);
  auto gb = gb_for(twisted_cubic(rg));
  MultiPoly one = mp_constant(4, 1);
  CHECK(normal_form(rg.fp, one, *gb) == one);
}

TEST_CASE("x0^2 x3 - x0 x1 x2 lies on the twisted cubic") {
  Ring rg = ring(10007, 4);
  Ideal tc = twisted_cubic(rg);
  MultiPoly f = mp_parse(rg.fp, 4, "1*x0^2*x3 + 10006*x0*x1*x2");
  CHECK(in_ideal(f, tc));
}

TEST_CASE("monomial ideals are their own reduced basis") {
  Ring rg = ring(10007, 3);
  Ideal I(rg, {mp_parse(rg.fp, 3, "1*x0^2"), mp_parse(rg.fp, 3, "1*x1^2")});
  auto gb = gb_for(I);
  REQUIRE(gb->elems.size() == 2);
  CHECK(gb->elems[0] == mp_parse(rg.fp, 3, "1*x1^2"));
  CHECK(gb->elems[1] == mp_parse(rg.fp, 3, "1*x0^2"));
}

TEST_CASE("twisted cubic reduced basis is the three quadrics") {
  Ring rg = ring(10007, 4);
  Ideal tc = twisted_cubic(rg);
  auto gb = gb_for(tc);
  REQUIRE(gb->elems.size() == 3);
  // every input generator reduces to zero and every basis element is a
  // monic combination of the inputs of degree 2
  for (const auto& e : gb->elems) {
    CHECK(e.degree() == 2);
    CHECK(member_by_rref(tc, e));
    CHECK(e.lead().c == 1);
  }
}

TEST_CASE("principal ideals reduce to the monic generator") {
  Ring rg = ring(10007, 3);
  MultiPoly f = mp_parse(rg.fp, 3, "4*x0^2 + 8*x1*x2");
  auto gb = gb_for(Ideal(rg, {f}));
  REQUIRE(gb->elems.size() == 1);
  CHECK(gb->elems[0] == mp_monic(rg.fp, f));
}

TEST_CASE("buchberger is idempotent and permutation independent") {
  Ring rg = ring(10007, 4);
  Rng rng(3);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<MultiPoly> gens;
    for (int i = 0; i < 3; ++i)
      gens.push_back(random_homog(rg.fp, rng, 4, 2 + static_cast<int>(
                                                       rng.below(2))));
    GroebnerBasis gb = buchberger(rg, gens, MonomialOrder::degrevlex());
    GroebnerBasis gb2 =
        buchberger(rg, gb.elems, MonomialOrder::degrevlex());
    CHECK(gb == gb2);
    std::vector<MultiPoly> shuffled(gens.rbegin(), gens.rend());
    CHECK(buchberger(rg, shuffled, MonomialOrder::degrevlex()) == gb);
  }
}

TEST_CASE("every s-polynomial of a basis reduces to zero") {
  Ring rg = ring(10007, 4);
  Rng rng(5);
  std::vector<MultiPoly> gens;
  for (int i = 0; i < 3; ++i)
    gens.push_back(random_homog(rg.fp, rng, 4, 2));
  GroebnerBasis gb = buchberger(rg, gens, MonomialOrder::degrevlex());
  for (std::size_t i = 0; i < gb.elems.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.elems.size(); ++j) {
      const auto& f = gb.elems[i];
      const auto& g = gb.elems[j];
      Monomial lcm = f.lead().m.lcm(g.lead().m);
      MultiPoly s =
          mp_sub(rg.fp,
                 mp_mul_term(rg.fp, f, lcm.div(f.lead().m), 1),
                 mp_mul_term(rg.fp, g, lcm.div(g.lead().m), 1));
      CHECK(normal_form(rg.fp, s, gb).is_zero());
    }
  }
}

TEST_CASE("membership agrees with degreewise row reduction") {
  Rng rng(77);
  int agree = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int nvars = 3 + static_cast<int>(rng.below(3));
    Ring rg = ring(10007, nvars);
    std::vector<MultiPoly> gens;
    int count = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < count; ++i) {
      MultiPoly g = random_homog(rg.fp, rng, nvars,
                                 1 + static_cast<int>(rng.below(4)));
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Ideal I(rg, gens);
    MultiPoly probe;
    if (trial % 2 == 0) {
      // random combination, a member by construction
      MultiPoly acc(nvars);
      int target = 0;
      for (const auto& g : gens) target = std::max(target, g.degree());
      target += 2;
      for (const auto& g : gens) {
        MultiPoly h = random_homog(rg.fp, rng, nvars, target - g.degree());
        acc = mp_add(rg.fp, acc, mp_mul(rg.fp, h, g));
      }
      probe = acc;
    } else {
      probe = random_homog(rg.fp, rng, nvars,
                           1 + static_cast<int>(rng.below(6)));
    }
    if (probe.is_zero()) continue;
    CHECK(in_ideal(probe, I) == member_by_rref(I, probe));
    ++agree;
  }
  CHECK(agree > 80);
}

TEST_CASE("elimination with a substitution relation") {
  Ring rg = ring(10007, 3);
  Ideal I(rg, {mp_parse(rg.fp, 3, "1*x2 + 10006*x0"),
               mp_parse(rg.fp, 3, "1*x2^2")});
  Ideal E = elimination_ideal(I, 2);
  Ring rg2 = ring(10007, 2);
  CHECK(ideal_equal(E, Ideal(rg2, {mp_parse(rg2.fp, 2, "1*x0^2")})));
}

TEST_CASE("graph ideal of the twisted cubic eliminates to the minors") {
  Ring rg6 = ring(10007, 6);  // x0..x3, s=x4, t=x5
  const Fp& fp = rg6.fp;
  std::vector<MultiPoly> gens{
      mp_parse(fp, 6, "1*x0 + 10006*x4^3"),
      mp_parse(fp, 6, "1*x1 + 10006*x4^2*x5"),
      mp_parse(fp, 6, "1*x2 + 10006*x4*x5^2"),
      mp_parse(fp, 6, "1*x3 + 10006*x5^3")};
  Ideal graph(rg6, gens);
  Ideal E = elimination_ideal(graph, 4);
  Ring rg4 = ring(10007, 4);
  CHECK(ideal_equal(E, twisted_cubic(rg4)));
}

TEST_CASE("eliminating an unrelated variable gives the zero ideal") {
  Ring rg = ring(10007, 4);
  Ideal I(rg, {mp_parse(rg.fp, 4, "1*x3")});
  Ideal E = elimination_ideal(I, 3);
  CHECK(E.gens().empty());
}

TEST_CASE("monomial quotient examples") {
  Ring rg = ring(10007, 3);
  const Fp& fp = rg.fp;
  Ideal I(rg, {mp_parse(fp, 3, "1*x0*x1"), mp_parse(fp, 3, "1*x0*x2")});
  Ideal J(rg, {mp_parse(fp, 3, "1*x0")});
  Ideal Q = ideal_quotient(I, J);
  CHECK(ideal_equal(Q, Ideal(rg, {mp_parse(fp, 3, "1*x1"),
                                  mp_parse(fp, 3, "1*x2")})));

  Ideal I2(rg, {mp_parse(fp, 3, "1*x0^2"), mp_parse(fp, 3, "1*x0*x1")});
  Ideal Q2 = ideal_quotient(I2, Ideal(rg, {mp_parse(fp, 3, "1*x1")}));
  CHECK(ideal_equal(Q2, Ideal(rg, {mp_parse(fp, 3, "1*x0")})));
}

TEST_CASE("quotient and saturation match the combinatorial oracle") {
  Rng rng(99);
  Ring rg = ring(10007, 4);
  for (int trial = 0; trial < 12; ++trial) {
    MonIdeal M, J;
    int mc = 2 + static_cast<int>(rng.below(3));
    int jc = 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < mc; ++i) M.push_back(random_monomial(rng, 4, 4));
    for (int i = 0; i < jc; ++i) J.push_back(random_monomial(rng, 4, 3));
    M = minimalized(M);
    J = minimalized(J);
    Ideal qi = ideal_quotient(mon_ideal(rg, M), mon_ideal(rg, J));
    CHECK(ideal_equal(qi, mon_ideal(rg, oracle_quotient(M, J))));

    Ideal sat = saturate(mon_ideal(rg, M), Ideal::irrelevant(rg));
    CHECK(ideal_equal(sat,
                      mon_ideal(rg, oracle_saturate_irrelevant(M, 4))));
  }
}

TEST_CASE("quotient containment properties on random samples") {
  Rng rng(111);
  Ring rg = ring(10007, 4);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<MultiPoly> gens;
    for (int i = 0; i < 2; ++i)
      gens.push_back(random_homog(rg.fp, rng, 4, 2));
    Ideal I(rg, gens);
    MultiPoly g = random_homog(rg.fp, rng, 4, 1, 1);
    if (g.is_zero()) continue;
    Ideal J(rg, {g});
    Ideal Q = ideal_quotient(I, J);
    CHECK(ideal_contains(Q, I));
    for (const auto& q : Q.gens())
      CHECK(in_ideal(mp_mul(rg.fp, q, g), I));
  }
}

TEST_CASE("saturation examples and fixed point") {
  Ring rg = ring(10007, 3);
  const Fp& fp = rg.fp;
  Ideal I(rg, {mp_parse(fp, 3, "1*x0^2"), mp_parse(fp, 3, "1*x0*x1")});
  Ideal Jm(rg, {mp_parse(fp, 3, "1*x0"), mp_parse(fp, 3, "1*x1")});
  Ideal S = saturate(I, Jm);
  CHECK(ideal_equal(S, Ideal(rg, {mp_parse(fp, 3, "1*x0")})));
  CHECK(ideal_equal(saturate(S, Jm), S));

  Ring rg4 = ring(10007, 4);
  Ideal tc = twisted_cubic(rg4);
  CHECK(ideal_equal(saturate(tc, Ideal::irrelevant(rg4)), tc));
}

TEST_CASE("quotient by the zero ideal is rejected") {
  Ring rg = ring(10007, 3);
  Ideal I(rg, {mp_parse(rg.fp, 3, "1*x0")});
  CHECK_THROWS_AS(ideal_quotient(I, Ideal::zero(rg)), std::domain_error);
}

TEST_CASE("divide_exact recovers cofactors") {
  Ring rg = ring(10007, 4);
  Rng rng(8);
  MultiPoly a = random_homog(rg.fp, rng, 4, 2);
  MultiPoly b = random_homog(rg.fp, rng, 4, 3);
  CHECK(divide_exact(rg.fp, mp_mul(rg.fp, a, b), a) == b);
  CHECK_THROWS_AS(divide_exact(rg.fp, mp_parse(rg.fp, 4, "1*x0"), a),
                  std::domain_error);
}

TEST_CASE("intersection of principal ideals is the lcm") {
  Ring rg = ring(10007, 3);
  const Fp& fp = rg.fp;
  Ideal A(rg, {mp_parse(fp, 3, "1*x0*x1")});
  Ideal B(rg, {mp_parse(fp, 3, "1*x1*x2")});
  CHECK(ideal_equal(ideal_intersection(A, B),
                    Ideal(rg, {mp_parse(fp, 3, "1*x0*x1*x2")})));
}
