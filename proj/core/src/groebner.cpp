#include "liaison/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace liaison {

namespace {

using Terms = std::vector<Term>;

struct WorkPoly {
  Terms terms;  // sorted descending under the working order
  int sugar = 0;
};

// out = a[ai..] - c * m * g[gi..]; both inputs sorted descending, output
// likewise. The callers arrange for the cancelled lead terms to be skipped
// via ai/gi.
void merge_sub(const Fp& fp, const Terms& a, std::size_t ai, Fe c,
               const Monomial& m, const Terms& g, std::size_t gi,
               const MonomialOrder& ord, int nvars, Terms& out) {
  out.clear();
  out.reserve((a.size() - ai) + (g.size() - gi));
  std::size_t i = ai, j = gi;
  while (i < a.size() && j < g.size()) {
    Monomial gm = g[j].m.mul(m);
    int cc = ord.cmp(a[i].m, gm, nvars);
    if (cc > 0) {
      out.push_back(a[i++]);
    } else if (cc < 0) {
      out.push_back(Term{gm, fp.neg(fp.mul(c, g[j].c))});
      ++j;
    } else {
      Fe v = fp.sub(a[i].c, fp.mul(c, g[j].c));
      if (v != 0) out.push_back(Term{a[i].m, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < g.size(); ++j)
    out.push_back(Term{g[j].m.mul(m), fp.neg(fp.mul(c, g[j].c))});
}

Terms sorted_under(const Fp& fp, const MultiPoly& f,
                   const MonomialOrder& ord) {
  Terms t = f.terms();
  normalize_terms(fp, t, ord, f.nvars());
  return t;
}

struct Engine {
  const Ring& ring;
  MonomialOrder ord;
  int nvars;

  std::vector<WorkPoly> basis;
  std::vector<Monomial> leads;
  std::vector<Fe> lead_coeffs;

  struct Pair {
    int i, j;
    Monomial lcm;
    int sugar;
  };
  std::vector<Pair> pairs;

  Terms scratch;

  Engine(const Ring& r, const MonomialOrder& o)
      : ring(r), ord(o), nvars(r.nvars) {}

  int find_reducer(const Monomial& m) const {
    int best = -1;
    std::size_t best_size = ~std::size_t(0);
    for (std::size_t k = 0; k < leads.size(); ++k) {
      if (leads[k].divides(m) && basis[k].terms.size() < best_size) {
        best = static_cast<int>(k);
        best_size = basis[k].terms.size();
      }
    }
    return best;
  }

  void reduce_full(WorkPoly& h) {
    Terms result;
    Terms work = std::move(h.terms);
    std::size_t start = 0;
    while (start < work.size()) {
      const Monomial lm = work[start].m;
      int red = find_reducer(lm);
      if (red < 0) {
        result.push_back(work[start]);
        ++start;
        continue;
      }
      const auto r = static_cast<std::size_t>(red);
      Monomial q = lm.div(leads[r]);
      Fe c = ring.fp.mul(work[start].c, ring.fp.inv(lead_coeffs[r]));
      merge_sub(ring.fp, work, start + 1, c, q, basis[r].terms, 1, ord,
                nvars, scratch);
      work.swap(scratch);
      start = 0;
      h.sugar = std::max(h.sugar,
                         basis[r].sugar + static_cast<int>(q.deg));
    }
    h.terms = std::move(result);
  }

  void add_element(WorkPoly h) {
    const int t = static_cast<int>(basis.size());
    const Monomial lt = h.terms.front().m;

    // Chain criterion against old pairs.
    {
      std::vector<Pair> kept;
      kept.reserve(pairs.size());
      for (auto& pr : pairs) {
        if (lt.divides(pr.lcm)) {
          Monomial lit = leads[static_cast<std::size_t>(pr.i)].lcm(lt);
          Monomial ljt = leads[static_cast<std::size_t>(pr.j)].lcm(lt);
          if (!(lit == pr.lcm) && !(ljt == pr.lcm)) continue;
        }
        kept.push_back(std::move(pr));
      }
      pairs.swap(kept);
    }

    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
      bool dead = false;
    };
    std::vector<Cand> cands;
    cands.reserve(leads.size());
    for (int i = 0; i < t; ++i)
      cands.push_back(Cand{i, leads[static_cast<std::size_t>(i)].lcm(lt),
                           leads[static_cast<std::size_t>(i)].coprime(lt)});

    for (auto& a : cands) {
      if (a.dead) continue;
      for (auto& b : cands) {
        if (a.i == b.i || b.dead) continue;
        if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.dead = true;
          break;
        }
      }
    }
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (cands[x].dead) continue;
      bool coprime_class = cands[x].coprime;
      for (std::size_t y = x + 1; y < cands.size(); ++y) {
        if (!cands[y].dead && cands[y].lcm == cands[x].lcm) {
          coprime_class = coprime_class || cands[y].coprime;
          cands[y].dead = true;
        }
      }
      if (coprime_class) cands[x].dead = true;
    }
    for (const auto& cand : cands) {
      if (cand.dead) continue;
      const auto ci = static_cast<std::size_t>(cand.i);
      int su = std::max(basis[ci].sugar +
                            static_cast<int>(cand.lcm.deg - leads[ci].deg),
                        h.sugar + static_cast<int>(cand.lcm.deg - lt.deg));
      pairs.push_back(Pair{cand.i, t, cand.lcm, su});
    }

    leads.push_back(lt);
    lead_coeffs.push_back(h.terms.front().c);
    basis.push_back(std::move(h));
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    auto key = [&](const Pair& p) {
      return std::make_tuple(p.sugar, static_cast<int>(p.lcm.deg), p.j, p.i);
    };
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (key(pairs[k]) < key(pairs[best])) best = k;
    return best;
  }

  WorkPoly s_poly(const Pair& pr) {
    const auto i = static_cast<std::size_t>(pr.i);
    const auto j = static_cast<std::size_t>(pr.j);
    const WorkPoly& f = basis[i];
    const WorkPoly& g = basis[j];
    Monomial uf = pr.lcm.div(leads[i]);
    Monomial ug = pr.lcm.div(leads[j]);
    Fe cf = ring.fp.inv(lead_coeffs[i]);
    Fe cg = ring.fp.inv(lead_coeffs[j]);
    // (1/lc_f) uf f - (1/lc_g) ug g, skipping the cancelling leads.
    Terms out;
    out.reserve(f.terms.size() + g.terms.size());
    std::size_t a = 1, b = 1;
    while (a < f.terms.size() && b < g.terms.size()) {
      Monomial ma = f.terms[a].m.mul(uf);
      Monomial mb = g.terms[b].m.mul(ug);
      int cc = ord.cmp(ma, mb, nvars);
      if (cc > 0) {
        out.push_back(Term{ma, ring.fp.mul(f.terms[a].c, cf)});
        ++a;
      } else if (cc < 0) {
        out.push_back(Term{mb, ring.fp.neg(ring.fp.mul(g.terms[b].c, cg))});
        ++b;
      } else {
        Fe v = ring.fp.sub(ring.fp.mul(f.terms[a].c, cf),
                           ring.fp.mul(g.terms[b].c, cg));
        if (v != 0) out.push_back(Term{ma, v});
        ++a;
        ++b;
      }
    }
    for (; a < f.terms.size(); ++a)
      out.push_back(
          Term{f.terms[a].m.mul(uf), ring.fp.mul(f.terms[a].c, cf)});
    for (; b < g.terms.size(); ++b)
      out.push_back(Term{g.terms[b].m.mul(ug),
                         ring.fp.neg(ring.fp.mul(g.terms[b].c, cg))});
    WorkPoly s;
    s.terms = std::move(out);
    s.sugar = std::max(f.sugar + static_cast<int>(uf.deg),
                       g.sugar + static_cast<int>(ug.deg));
    return s;
  }

  static int total_degree(const MultiPoly& f) {
    int d = 0;
    for (const auto& t : f.terms())
      d = std::max(d, static_cast<int>(t.m.deg));
    return d;
  }

  void run(const std::vector<MultiPoly>& gens) {
    std::vector<WorkPoly> input;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      WorkPoly w;
      w.terms = sorted_under(ring.fp, g, ord);
      w.sugar = total_degree(g);
      input.push_back(std::move(w));
    }
    std::sort(input.begin(), input.end(),
              [&](const WorkPoly& a, const WorkPoly& b) {
                int c = ord.cmp(a.terms.front().m, b.terms.front().m, nvars);
                if (c != 0) return c < 0;
                return a.terms.size() < b.terms.size();
              });
    for (auto& w : input) {
      reduce_full(w);
      if (!w.terms.empty()) add_element(std::move(w));
    }
    while (!pairs.empty()) {
      std::size_t k = select_pair();
      Pair pr = pairs[k];
      pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
      WorkPoly s = s_poly(pr);
      reduce_full(s);
      if (!s.terms.empty()) add_element(std::move(s));
    }
  }

  GroebnerBasis finish() {
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
        if (i == j || !keep[j]) continue;
        if (leads[j].divides(leads[i]) &&
            (!(leads[j] == leads[i]) || j < i))
          keep[i] = false;
      }
    }
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (keep[i]) sel.push_back(i);
    std::sort(sel.begin(), sel.end(), [&](std::size_t a, std::size_t b) {
      return ord.cmp(leads[a], leads[b], nvars) < 0;
    });

    GroebnerBasis out;
    out.order = ord;
    out.nvars = nvars;
    for (std::size_t idx : sel) {
      Terms work = basis[idx].terms;
      Terms result;
      std::size_t start = 0;
      bool lead_done = false;
      while (start < work.size()) {
        const Monomial lm = work[start].m;
        int red = -1;
        if (lead_done) {  // never reduce the element's own lead
          for (std::size_t other : sel) {
            if (other != idx && leads[other].divides(lm)) {
              red = static_cast<int>(other);
              break;
            }
          }
        }
        if (red < 0) {
          result.push_back(work[start]);
          ++start;
          lead_done = true;
          continue;
        }
        const auto r = static_cast<std::size_t>(red);
        Fe c = ring.fp.mul(work[start].c, ring.fp.inv(lead_coeffs[r]));
        Monomial q = lm.div(leads[r]);
        merge_sub(ring.fp, work, start + 1, c, q, basis[r].terms, 1, ord,
                  nvars, scratch);
        work.swap(scratch);
        start = 0;
      }
      Fe inv = ring.fp.inv(result.front().c);
      for (auto& t : result) t.c = ring.fp.mul(t.c, inv);
      out.elems.emplace_back(nvars, std::move(result));
    }
    return out;
  }
};

MultiPoly canonical_poly(const Fp& fp, int nvars, Terms terms) {
  return mp_from_terms(fp, nvars, std::move(terms));
}

}  // namespace

GroebnerBasis buchberger(const Ring& ring, const std::vector<MultiPoly>& gens,
                         const MonomialOrder& ord) {
  Engine e(ring, ord);
  e.run(gens);
  return e.finish();
}

std::shared_ptr<const GroebnerBasis> gb_for(const Ideal& I,
                                            const MonomialOrder& ord) {
  if (auto hit = I.cached_basis(ord)) return hit;
  auto gb =
      std::make_shared<GroebnerBasis>(buchberger(I.ring(), I.gens(), ord));
  I.store_basis(ord, gb);
  return gb;
}

MultiPoly normal_form(const Fp& fp, const MultiPoly& f,
                      const GroebnerBasis& gb) {
  Terms work = f.terms();
  normalize_terms(fp, work, gb.order, f.nvars());
  Terms result, scratch;
  std::size_t start = 0;
  while (start < work.size()) {
    const Monomial lm = work[start].m;
    int red = -1;
    for (std::size_t k = 0; k < gb.elems.size(); ++k) {
      if (gb.elems[k].terms().front().m.divides(lm)) {
        red = static_cast<int>(k);
        break;
      }
    }
    if (red < 0) {
      result.push_back(work[start]);
      ++start;
      continue;
    }
    const auto& g = gb.elems[static_cast<std::size_t>(red)].terms();
    Monomial q = lm.div(g.front().m);
    Fe c = work[start].c;  // basis elements are monic
    merge_sub(fp, work, start + 1, c, q, g, 1, gb.order, f.nvars(), scratch);
    work.swap(scratch);
    start = 0;
  }
  return mp_from_terms(fp, f.nvars(), std::move(result));
}

bool in_ideal(const MultiPoly& f, const Ideal& I) {
  if (f.is_zero()) return true;
  auto gb = gb_for(I, MonomialOrder::degrevlex());
  return normal_form(I.fp(), f, *gb).is_zero();
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
  for (const auto& g : small.gens())
    if (!in_ideal(g, big)) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  auto ga = gb_for(a);
  auto gbb = gb_for(b);
  return *ga == *gbb;
}

MultiPoly divide_exact(const Fp& fp, const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const int n = f.nvars();
  const MonomialOrder ord = MonomialOrder::degrevlex();
  Terms work = f.terms();
  Terms quot, scratch;
  const Terms& gt = g.terms();
  const Fe lc_inv = fp.inv(gt.front().c);
  while (!work.empty()) {
    const Monomial lm = work.front().m;
    if (!gt.front().m.divides(lm))
      throw std::domain_error("divide_exact: not divisible");
    Monomial q = lm.div(gt.front().m);
    Fe c = fp.mul(work.front().c, lc_inv);
    quot.push_back(Term{q, c});
    merge_sub(fp, work, 1, c, q, gt, 1, ord, n, scratch);
    work.swap(scratch);
  }
  return mp_from_terms(fp, n, std::move(quot));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring()))
    throw std::invalid_argument("intersection: ring mismatch");
  const int n = I.nvars();
  if (n + 1 > kMaxVars)
    throw std::invalid_argument("intersection: arity cap exceeded");
  Ring ext{I.fp(), n + 1};
  const MultiPoly t = mp_var(n + 1, n);
  std::vector<MultiPoly> gens;
  for (const auto& f : I.gens())
    gens.push_back(mp_mul(ext.fp, mp_extend_vars(f, n + 1), t));
  for (const auto& g : J.gens()) {
    MultiPoly ge = mp_extend_vars(g, n + 1);
    gens.push_back(mp_sub(ext.fp, ge, mp_mul(ext.fp, ge, t)));
  }
  GroebnerBasis gb = buchberger(ext, gens, MonomialOrder::elim_last(1));
  std::vector<MultiPoly> out;
  for (const auto& e : gb.elems) {
    if (e.terms().front().m.e[n] == 0)
      out.push_back(
          mp_restrict_vars(canonical_poly(I.fp(), n + 1, e.terms()), n));
  }
  return Ideal(I.ring(), std::move(out));
}

Ideal principal_quotient(const Ideal& I, const MultiPoly& g) {
  if (g.is_zero()) throw std::domain_error("quotient by zero");
  if (g.degree() == 0) return I;
  Ideal K = ideal_intersection(I, Ideal(I.ring(), {g}));
  std::vector<MultiPoly> out;
  for (const auto& k : K.gens()) out.push_back(divide_exact(I.fp(), k, g));
  return Ideal(I.ring(), std::move(out));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  if (J.gens().empty()) throw std::domain_error("quotient by zero ideal");
  auto gbI = gb_for(I, MonomialOrder::degrevlex());
  bool have = false;
  Ideal Q = Ideal::zero(I.ring());
  for (const auto& g : J.gens()) {
    if (have) {
      bool subset = true;
      for (const auto& q : Q.gens()) {
        if (!normal_form(I.fp(), mp_mul(I.fp(), q, g), *gbI).is_zero()) {
          subset = false;
          break;
        }
      }
      // Q*g ⊆ I means Q ⊆ (I : g); no further cut from this divisor.
      if (subset) continue;
    }
    Ideal Qg = principal_quotient(I, g);
    Q = have ? ideal_intersection(Q, Qg) : std::move(Qg);
    have = true;
  }
  return Q;
}

Ideal saturate_variable(const Ideal& I, int var) {
  const int n = I.nvars();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::swap(perm[static_cast<std::size_t>(var)],
            perm[static_cast<std::size_t>(n - 1)]);
  std::vector<MultiPoly> permuted;
  for (const auto& g : I.gens())
    permuted.push_back(mp_permute_vars(g, perm, n));
  GroebnerBasis gb =
      buchberger(I.ring(), permuted, MonomialOrder::degrevlex());
  std::vector<MultiPoly> out;
  for (const auto& e : gb.elems) {
    std::uint8_t k = 255;
    for (const auto& t : e.terms()) k = std::min(k, t.m.e[n - 1]);
    MultiPoly g = e;
    if (k > 0) {
      Monomial div = Monomial::var(n - 1, k);
      std::vector<Term> terms = e.terms();
      for (auto& t : terms) t.m = t.m.div(div);
      g = mp_from_terms(I.fp(), n, std::move(terms));
    }
    out.push_back(mp_permute_vars(g, perm, n));
  }
  return Ideal(I.ring(), std::move(out));
}

namespace {

bool is_irrelevant_ideal(const Ideal& J) {
  if (J.gens().empty()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(J.nvars()), false);
  for (const auto& g : J.gens()) {
    if (g.terms().size() != 1 || g.lead().m.deg != 1) return false;
    for (int i = 0; i < J.nvars(); ++i)
      if (g.lead().m.e[i]) seen[static_cast<std::size_t>(i)] = true;
  }
  for (bool b : seen)
    if (!b) return false;
  return true;
}

}  // namespace

Ideal saturate(const Ideal& I, const Ideal& J) {
  if (J.gens().empty()) throw std::domain_error("saturation by zero ideal");
  if (I.gens().empty()) return I;
  if (I.is_unit_marker()) return Ideal::unit(I.ring());

  if (is_irrelevant_ideal(J) && I.is_homogeneous()) {
    // (I : m^inf) = ∩_i (I : x_i^inf). If any single-variable saturation
    // leaves I unchanged, I was saturated all along (the intersection is
    // squeezed between I and that factor).
    const int n = I.nvars();
    std::vector<Ideal> factors;
    factors.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      Ideal Sv = saturate_variable(I, v);
      if (ideal_contains(I, Sv)) return I;  // (I : x_v^inf) = I
      factors.push_back(std::move(Sv));
    }
    Ideal S = std::move(factors.front());
    for (std::size_t v = 1; v < factors.size(); ++v) {
      const Ideal& Sv = factors[v];
      if (ideal_contains(Sv, S)) continue;
      if (ideal_contains(S, Sv)) {
        S = Sv;
        continue;
      }
      S = ideal_intersection(S, Sv);
    }
    return S;
  }

  Ideal cur = I;
  for (int round = 0; round < 50; ++round) {
    Ideal next = ideal_quotient(cur, J);
    if (ideal_equal(next, cur)) return cur;
    cur = std::move(next);
  }
  throw std::runtime_error("saturation did not stabilize within 50 rounds");
}

Ideal elimination_ideal(const Ideal& I, int keep) {
  const int n = I.nvars();
  if (keep < 0 || keep > n)
    throw std::invalid_argument("elimination: bad variable count");
  if (keep == n) return I;
  GroebnerBasis gb =
      buchberger(I.ring(), I.gens(), MonomialOrder::elim_last(n - keep));
  std::vector<MultiPoly> out;
  for (const auto& e : gb.elems) {
    bool free = true;
    for (int i = keep; i < n; ++i)
      if (e.terms().front().m.e[i]) {
        free = false;
        break;
      }
    if (free)
      out.push_back(
          mp_restrict_vars(canonical_poly(I.fp(), n, e.terms()), keep));
  }
  return Ideal(Ring{I.fp(), keep}, std::move(out));
}

}  // namespace liaison
