#include "liaison/geometry.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "liaison/matrix.hpp"

namespace liaison {

ProjPoint normalize_proj(const Fp& fp, ProjPoint p) {
  for (auto& c : p) {
    if (c != 0) {
      Fe inv = fp.inv(c);
      for (auto& x : p) x = fp.mul(x, inv);
      break;
    }
  }
  return p;
}

Fe eval_at(const Fp& fp, const MultiPoly& f, const ProjPoint& p) {
  return mp_evaluate(fp, f, std::span<const Fe>(p.data(), p.size()));
}

bool on_variety(const Ideal& I, const ProjPoint& p) {
  for (const auto& g : I.gens())
    if (eval_at(I.fp(), g, p) != 0) return false;
  return true;
}

std::vector<MultiPoly> interpolate_ideal(
    const Fp& fp, int nvars, int d,
    const std::function<ProjPoint()>& sample) {
  auto monos = monomials_of_degree(nvars, d);
  const std::size_t cols = monos.size();
  const std::size_t n_points = 2 * cols;

  Matrix m(n_points, cols);
  for (std::size_t r = 0; r < n_points; ++r) {
    ProjPoint p = sample();
    for (std::size_t c = 0; c < cols; ++c) {
      MultiPoly mono(nvars, {Term{monos[c], 1}});
      m.at(r, c) = eval_at(fp, mono, p);
    }
  }
  auto kernel = kernel_basis(fp, m);
  std::vector<MultiPoly> forms;
  forms.reserve(kernel.size());
  for (const auto& v : kernel) forms.push_back(mp_from_dense(fp, nvars, monos, v));

  for (std::size_t r = 0; r < n_points; ++r) {
    ProjPoint p = sample();
    for (const auto& f : forms) {
      if (eval_at(fp, f, p) != 0)
        throw UnluckySampleError(
            "interpolated form fails fresh verification batch");
    }
  }
  return forms;
}

std::function<ProjPoint()> curve_image_sampler(const Fp& fp,
                                               const MultiPoly& plane_curve,
                                               const ParametrizedSurface& map,
                                               Rng rng) {
  struct State {
    Fp fp;
    MultiPoly curve;
    ParametrizedSurface map;
    Rng rng;
    std::vector<ProjPoint> queue;
    std::set<ProjPoint> seen;
    std::uint64_t batch = 0;
  };
  auto st = std::make_shared<State>(
      State{fp, plane_curve, map, rng, {}, {}, 0});
  return [st]() -> ProjPoint {
    for (;;) {
      if (!st->queue.empty()) {
        ProjPoint p = std::move(st->queue.back());
        st->queue.pop_back();
        return p;
      }
      auto pts = plane_curve_points(st->fp, st->curve, 192,
                                    st->rng.child(st->batch));
      ++st->batch;
      for (const auto& q : pts) {
        ProjPoint image(st->map.components.size());
        bool zero = true;
        for (std::size_t i = 0; i < image.size(); ++i) {
          image[i] = mp_evaluate(st->fp, st->map.components[i],
                                 std::span<const Fe>(q.data(), 3));
          if (image[i] != 0) zero = false;
        }
        if (zero) continue;  // base point of the map
        image = normalize_proj(st->fp, image);
        if (st->seen.insert(image).second) st->queue.push_back(image);
      }
      if (st->batch > 512)
        throw UnluckySampleError("curve sampler exhausted its line budget");
    }
  };
}

std::vector<MultiPoly> minimal_generators(const Ideal& I) {
  std::vector<const MultiPoly*> gens;
  for (const auto& g : I.gens()) gens.push_back(&g);
  std::sort(gens.begin(), gens.end(),
            [](const MultiPoly* a, const MultiPoly* b) {
              return a->degree() < b->degree();
            });
  std::vector<MultiPoly> chosen;
  std::size_t idx = 0;
  while (idx < gens.size()) {
    const int d = gens[idx]->degree();
    auto monos = monomials_of_degree(I.nvars(), d);
    std::map<Monomial, std::size_t,
             bool (*)(const Monomial&, const Monomial&)>
        index([](const Monomial& a, const Monomial& b) {
          return cmp_degrevlex(a, b, kMaxVars) > 0;
        });
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    RowReducer red(I.fp(), monos.size());
    for (const auto& g : chosen) {
      for (const auto& m : monomials_of_degree(I.nvars(), d - g.degree())) {
        std::vector<Fe> row(monos.size(), 0);
        for (const auto& t : g.terms()) row[index.at(t.m.mul(m))] = t.c;
        red.add_row(std::move(row));
      }
    }
    while (idx < gens.size() && gens[idx]->degree() == d) {
      std::vector<Fe> row(monos.size(), 0);
      for (const auto& t : gens[idx]->terms()) row[index.at(t.m)] = t.c;
      if (red.add_row(std::move(row))) chosen.push_back(*gens[idx]);
      ++idx;
    }
  }
  return chosen;
}

namespace {

std::vector<std::vector<MultiPoly>> jacobian_matrix(
    const Fp& fp, const std::vector<MultiPoly>& gens) {
  std::vector<std::vector<MultiPoly>> jac;
  jac.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<MultiPoly> row;
    row.reserve(static_cast<std::size_t>(g.nvars()));
    for (int v = 0; v < g.nvars(); ++v)
      row.push_back(mp_derivative(fp, g, v));
    jac.push_back(std::move(row));
  }
  return jac;
}

// Determinant of the square polynomial matrix rows x cols by subset DP.
MultiPoly poly_det(const Fp& fp, int nvars,
                   const std::vector<std::vector<MultiPoly>>& jac,
                   const std::vector<int>& rows,
                   const std::vector<int>& cols) {
  const std::size_t k = rows.size();
  // dp over column subsets: after using the first i rows, dp[mask] with
  // popcount(mask) == i is the signed minor determinant.
  std::vector<std::map<std::uint32_t, MultiPoly>> dp(k + 1);
  dp[0].emplace(0u, mp_constant(nvars, 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& [mask, minor] : dp[i]) {
      int sign_toggle = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (mask & (1u << j)) {
          ++sign_toggle;
          continue;
        }
        const MultiPoly& entry =
            jac[static_cast<std::size_t>(rows[i])]
               [static_cast<std::size_t>(cols[j])];
        if (entry.is_zero()) continue;
        MultiPoly contrib = mp_mul(fp, minor, entry);
        if (sign_toggle % 2 != 0) contrib = mp_neg(fp, contrib);
        std::uint32_t next = mask | (1u << j);
        auto it = dp[i + 1].find(next);
        if (it == dp[i + 1].end())
          dp[i + 1].emplace(next, std::move(contrib));
        else
          it->second = mp_add(fp, it->second, contrib);
      }
    }
    dp[i].clear();
  }
  std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
  auto it = dp[k].find(full);
  return it == dp[k].end() ? MultiPoly(nvars) : it->second;
}

void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets_rec(n, k, 0, cur, out);
  return out;
}

}  // namespace

bool certified_empty(const Ideal& I, int extra_degrees) {
  if (I.gens().empty()) return false;
  if (I.is_unit_marker()) return true;
  int d0 = 0;
  for (const auto& g : I.gens()) d0 = std::max(d0, g.degree());
  const int n = I.nvars();
  for (int d = d0; d <= d0 + extra_degrees; ++d) {
    auto monos = monomials_of_degree(n, d);
    if (monos.size() > 9000) return false;
    std::map<Monomial, std::size_t,
             bool (*)(const Monomial&, const Monomial&)>
        index([](const Monomial& a, const Monomial& b) {
          return cmp_degrevlex(a, b, kMaxVars) > 0;
        });
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    RowReducer red(I.fp(), monos.size());
    for (const auto& g : I.gens()) {
      if (g.degree() > d) continue;
      for (const auto& m : monomials_of_degree(n, d - g.degree())) {
        std::vector<Fe> row(monos.size(), 0);
        for (const auto& t : g.terms()) row[index.at(t.m.mul(m))] = t.c;
        red.add_row(std::move(row));
        if (red.full_rank()) return true;
      }
    }
  }
  return false;
}

Ideal singular_scheme(const Ideal& I, int codim) {
  auto mins = minimal_generators(I);
  auto jac = jacobian_matrix(I.fp(), mins);
  const int n = I.nvars();
  auto row_subsets = subsets(static_cast<int>(mins.size()), codim);
  auto col_subsets = subsets(n, codim);

  std::vector<MultiPoly> gens = I.gens();
  for (const auto& rs : row_subsets) {
    for (const auto& cs : col_subsets) {
      MultiPoly det = poly_det(I.fp(), n, jac, rs, cs);
      if (!det.is_zero()) gens.push_back(std::move(det));
    }
  }
  Ideal J(I.ring(), std::move(gens));
  if (certified_empty(J)) return Ideal::unit(I.ring());
  return saturate(J, Ideal::irrelevant(I.ring()));
}

bool is_smooth(const Ideal& I, int codim) {
  auto mins = minimal_generators(I);
  auto jac = jacobian_matrix(I.fp(), mins);
  const int n = I.nvars();
  const int m = static_cast<int>(mins.size());
  if (m < codim) return false;

  auto row_subsets = subsets(m, codim);
  auto col_subsets = subsets(n, codim);
  // Order row subsets by the total degree of the resulting minors so low
  // degree certificates come first.
  std::sort(row_subsets.begin(), row_subsets.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              int da = 0, db = 0;
              for (int i : a) da += mins[static_cast<std::size_t>(i)].degree();
              for (int i : b) db += mins[static_cast<std::size_t>(i)].degree();
              if (da != db) return da < db;
              return a < b;
            });

  int max_gen_deg = 0;
  for (const auto& g : mins) max_gen_deg = std::max(max_gen_deg, g.degree());
  int min_minor_deg = 0;
  for (int i : row_subsets.front())
    min_minor_deg += mins[static_cast<std::size_t>(i)].degree() - 1;

  int d0 = std::max(max_gen_deg, min_minor_deg);
  std::map<std::pair<std::size_t, std::size_t>, MultiPoly> det_cache;

  for (int d = d0; d <= d0 + 2; ++d) {
    auto monos = monomials_of_degree(n, d);
    if (monos.size() > 9000) break;
    std::map<Monomial, std::size_t,
             bool (*)(const Monomial&, const Monomial&)>
        index([](const Monomial& a, const Monomial& b) {
          return cmp_degrevlex(a, b, kMaxVars) > 0;
        });
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    RowReducer red(I.fp(), monos.size());
    auto add_form = [&](const MultiPoly& g) {
      if (g.is_zero() || g.degree() > d) return false;
      for (const auto& mo : monomials_of_degree(n, d - g.degree())) {
        std::vector<Fe> row(monos.size(), 0);
        for (const auto& t : g.terms()) row[index.at(t.m.mul(mo))] = t.c;
        red.add_row(std::move(row));
        if (red.full_rank()) return true;
      }
      return false;
    };
    bool done = false;
    for (const auto& g : I.gens())
      if ((done = add_form(g))) break;
    for (std::size_t ri = 0; ri < row_subsets.size() && !done; ++ri) {
      for (std::size_t ci = 0; ci < col_subsets.size() && !done; ++ci) {
        auto key = std::make_pair(ri, ci);
        auto it = det_cache.find(key);
        if (it == det_cache.end()) {
          it = det_cache
                   .emplace(key, poly_det(I.fp(), n, jac, row_subsets[ri],
                                          col_subsets[ci]))
                   .first;
        }
        done = add_form(it->second);
      }
    }
    if (done || red.full_rank()) return true;
  }
  // Inconclusive: fall back to the exact singular scheme.
  Ideal sing = singular_scheme(I, codim);
  return sing.is_unit_marker();
}

namespace {

MultiPoly subst_first_var(const Fp& fp, const MultiPoly& f, Fe value) {
  const int m = f.nvars();
  std::vector<MultiPoly> images;
  images.reserve(static_cast<std::size_t>(m));
  images.push_back(mp_constant(m - 1, value));
  for (int i = 1; i < m; ++i) images.push_back(mp_var(m - 1, i - 1));
  return mp_substitute(fp, f, images, m - 1);
}

void solve_affine(const Fp& fp, const std::vector<MultiPoly>& gens, int m,
                  std::vector<Fe>& partial,
                  std::vector<std::vector<Fe>>& out) {
  if (m == 0) {
    for (const auto& g : gens)
      if (!g.is_zero()) return;
    out.push_back(partial);
    return;
  }
  bool all_zero = true;
  for (const auto& g : gens)
    if (!g.is_zero()) all_zero = false;
  if (all_zero)
    throw std::domain_error(
        "rational_points_dim0: positive-dimensional input");

  Ideal I(Ring{fp, m}, gens);
  Ideal uni = elimination_ideal(I, 1);
  UniPoly acc;
  for (const auto& g : uni.gens()) {
    std::vector<Fe> coeffs(static_cast<std::size_t>(g.degree()) + 1, 0);
    for (const auto& t : g.terms()) coeffs[t.m.e[0]] = t.c;
    UniPoly u(std::move(coeffs));
    acc = acc.is_zero() ? u : uni_gcd(fp, acc, u);
  }
  if (acc.is_zero())
    throw std::domain_error(
        "rational_points_dim0: positive-dimensional input");
  if (acc.degree() == 0) return;  // no solution on this branch

  for (Fe root : uni_roots(fp, acc, Rng(0x517e))) {
    std::vector<MultiPoly> next;
    next.reserve(gens.size());
    for (const auto& g : gens) next.push_back(subst_first_var(fp, g, root));
    partial.push_back(root);
    solve_affine(fp, next, m - 1, partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<ProjPoint> rational_points_dim0(const Ideal& I) {
  const int n = I.nvars();
  std::set<ProjPoint> found;
  for (int chart = 0; chart < n; ++chart) {
    std::vector<MultiPoly> affine;
    std::vector<MultiPoly> images;
    for (int i = 0; i < n; ++i) {
      if (i == chart)
        images.push_back(mp_constant(n - 1, 1));
      else
        images.push_back(mp_var(n - 1, i < chart ? i : i - 1));
    }
    for (const auto& g : I.gens())
      affine.push_back(mp_substitute(I.fp(), g, images, n - 1));
    std::vector<std::vector<Fe>> sols;
    std::vector<Fe> partial;
    solve_affine(I.fp(), affine, n - 1, partial, sols);
    for (const auto& s : sols) {
      ProjPoint p(static_cast<std::size_t>(n), 0);
      p[static_cast<std::size_t>(chart)] = 1;
      for (int i = 0, k = 0; i < n; ++i) {
        if (i == chart) continue;
        p[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(k++)];
      }
      if (on_variety(I, p)) found.insert(normalize_proj(I.fp(), p));
    }
  }
  return {found.begin(), found.end()};
}

Ideal project_from_point(const Ideal& I, const ProjPoint& center) {
  const int n = I.nvars();
  if (static_cast<int>(center.size()) != n)
    throw std::invalid_argument("projection center arity mismatch");
  int j = -1;
  for (int i = 0; i < n; ++i) {
    if (center[static_cast<std::size_t>(i)] != 0) {
      j = i;
      break;
    }
  }
  if (j < 0) throw std::invalid_argument("projection center is zero");

  // x = B y with column n-1 of B the center and the others the standard
  // basis vectors skipping e_j.
  std::vector<std::vector<Fe>> B(static_cast<std::size_t>(n),
                                 std::vector<Fe>(static_cast<std::size_t>(n),
                                                 0));
  int col = 0;
  for (int k = 0; k < n; ++k) {
    if (k == j) continue;
    B[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] = 1;
    ++col;
  }
  for (int k = 0; k < n; ++k)
    B[static_cast<std::size_t>(k)][static_cast<std::size_t>(n - 1)] =
        center[static_cast<std::size_t>(k)];

  std::vector<MultiPoly> changed;
  for (const auto& g : I.gens())
    changed.push_back(mp_linear_change(I.fp(), g, B));
  Ideal moved(I.ring(), std::move(changed));
  Ideal eliminated = elimination_ideal(moved, n - 1);
  return saturate(eliminated, Ideal::irrelevant(eliminated.ring()));
}

int jacobian_rank_at(const Ideal& I, const ProjPoint& p) {
  auto mins = minimal_generators(I);
  const int n = I.nvars();
  Matrix m(mins.size(), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < mins.size(); ++i)
    for (int v = 0; v < n; ++v)
      m.at(i, static_cast<std::size_t>(v)) =
          eval_at(I.fp(), mp_derivative(I.fp(), mins[i], v), p);
  return static_cast<int>(rref(I.fp(), m).rank);
}

NodeCheck ordinary_node_at(const Ideal& I, const ProjPoint& p, int codim) {
  NodeCheck out;
  const Fp& fp = I.fp();
  const int n = I.nvars();
  auto mins = minimal_generators(I);

  out.jacobian_rank = jacobian_rank_at(I, p);
  if (out.jacobian_rank != codim - 1) {
    out.reason = "jacobian corank is not 1";
    return out;
  }

  int chart = -1;
  for (int i = 0; i < n; ++i)
    if (p[static_cast<std::size_t>(i)] != 0) {
      chart = i;
      break;
    }
  ProjPoint q = normalize_proj(fp, p);

  // Affine chart with the point moved to the origin.
  const int m = n - 1;
  std::vector<MultiPoly> images;
  for (int i = 0; i < n; ++i) {
    if (i == chart) {
      images.push_back(mp_constant(m, 1));
    } else {
      int k = i < chart ? i : i - 1;
      MultiPoly img = mp_add(
          fp, mp_var(m, k),
          mp_constant(m, q[static_cast<std::size_t>(i)]));
      images.push_back(img);
    }
  }
  std::vector<MultiPoly> affine;
  for (const auto& g : mins)
    affine.push_back(mp_substitute(fp, g, images, m));

  // Split into linear rows and quadratic parts.
  auto part_of_degree = [&](const MultiPoly& f, int d) {
    std::vector<Term> keep;
    for (const auto& t : f.terms())
      if (t.m.deg == d) keep.push_back(t);
    return MultiPoly(m, std::move(keep));
  };
  Matrix lin(affine.size(), static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < affine.size(); ++i) {
    for (const auto& t : affine[i].terms()) {
      if (t.m.deg == 0) {
        out.reason = "point is not on the scheme";
        return out;
      }
      if (t.m.deg == 1)
        for (int v = 0; v < m; ++v)
          if (t.m.e[v]) lin.at(i, static_cast<std::size_t>(v)) = t.c;
    }
  }
  RrefResult lr = rref(fp, lin);
  out.tangent_dim = m - static_cast<int>(lr.rank);
  if (static_cast<int>(lr.rank) != codim - 1) {
    out.reason = "affine tangent rank mismatch";
    return out;
  }
  auto tangent = kernel_basis(fp, lin);
  if (tangent.size() != 2) {
    out.reason = "tangent cone ambient is not a plane";
    return out;
  }

  // Augmented elimination on the linear rows: rows that reduce to zero in
  // the linear block record a constant combination of the generators with
  // vanishing linear part; its quadratic part cuts the tangent cone.
  const std::size_t g_count = affine.size();
  std::vector<std::vector<Fe>> pivot_rows;  // each of length m + g_count
  std::vector<int> pivot_col;
  std::vector<std::vector<Fe>> null_combos;  // combination parts only
  for (std::size_t i = 0; i < g_count; ++i) {
    std::vector<Fe> row(static_cast<std::size_t>(m) + g_count, 0);
    for (int v = 0; v < m; ++v)
      row[static_cast<std::size_t>(v)] =
          lin.at(i, static_cast<std::size_t>(v));
    row[static_cast<std::size_t>(m) + i] = 1;
    for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
      Fe c = row[static_cast<std::size_t>(pivot_col[k])];
      if (c == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j)
        row[j] = fp.sub(row[j], fp.mul(c, pivot_rows[k][j]));
    }
    int pc = -1;
    for (int v = 0; v < m; ++v)
      if (row[static_cast<std::size_t>(v)] != 0) {
        pc = v;
        break;
      }
    if (pc >= 0) {
      Fe inv = fp.inv(row[static_cast<std::size_t>(pc)]);
      for (auto& x : row) x = fp.mul(x, inv);
      pivot_rows.push_back(std::move(row));
      pivot_col.push_back(pc);
    } else {
      null_combos.emplace_back(row.begin() + m, row.end());
    }
  }

  std::vector<Fe> s11s, s12s, s22s;
  const auto& v1 = tangent[0];
  const auto& v2 = tangent[1];
  std::vector<Fe> v12(v1.size());
  for (std::size_t k = 0; k < v1.size(); ++k)
    v12[k] = fp.add(v1[k], v2[k]);
  for (const auto& combo : null_combos) {
    MultiPoly quad(m);
    for (std::size_t i = 0; i < g_count; ++i) {
      if (combo[i] == 0) continue;
      quad = mp_add(fp, quad,
                    mp_scale(fp, part_of_degree(affine[i], 2), combo[i]));
    }
    if (quad.is_zero()) continue;
    auto qval = [&](const std::vector<Fe>& v) {
      return mp_evaluate(fp, quad, std::span<const Fe>(v.data(), v.size()));
    };
    Fe a = qval(v1);
    Fe c = qval(v2);
    Fe b = fp.sub(fp.sub(qval(v12), a), c);
    if (a == 0 && b == 0 && c == 0) continue;
    s11s.push_back(a);
    s12s.push_back(b);
    s22s.push_back(c);
  }
  if (s11s.empty()) {
    out.reason = "no quadratic cone equation found";
    return out;
  }
  Matrix span(s11s.size(), 3);
  for (std::size_t i = 0; i < s11s.size(); ++i) {
    span.at(i, 0) = s11s[i];
    span.at(i, 1) = s12s[i];
    span.at(i, 2) = s22s[i];
  }
  RrefResult sr = rref(fp, span);
  if (sr.rank != 1) {
    out.reason = "tangent cone is not a single conic";
    return out;
  }
  Fe a = sr.matrix.at(0, 0), b = sr.matrix.at(0, 1), c = sr.matrix.at(0, 2);
  // rank-2 binary quadratic: discriminant b^2 - 4ac nonzero
  Fe disc = fp.sub(fp.mul(b, b), fp.mul(4 % fp.modulus(), fp.mul(a, c)));
  if (disc == 0) {
    out.reason = "quadratic cone is degenerate";
    return out;
  }
  out.ok = true;
  return out;
}

std::vector<MultiPoly> pluecker_relations_g26(const Fp& fp) {
  auto idx = [](int i, int j) {
    // lexicographic pair index for 0 <= i < j < 6
    int k = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        if (a == i && b == j) return k;
        ++k;
      }
    return -1;
  };
  std::vector<MultiPoly> rels;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = i + 1; k < 6; ++k)
        for (int l = k + 1; l < 6; ++l) {
          if (!(i < j && j < k && k < l)) continue;
          // p_ij p_kl - p_ik p_jl + p_il p_jk
          std::vector<Term> terms;
          auto add = [&](int a, int b, int c, int d, Fe coef) {
            Monomial m = Monomial::var(idx(a, b)).mul(Monomial::var(idx(c, d)));
            terms.push_back(Term{m, coef});
          };
          add(i, j, k, l, 1);
          add(i, k, j, l, fp.neg(1));
          add(i, l, j, k, 1);
          rels.push_back(mp_from_terms(fp, 15, std::move(terms)));
        }
  return rels;
}

std::vector<Fe> pluecker_coords_g26(const Fp& fp, const std::vector<Fe>& row0,
                                    const std::vector<Fe>& row1) {
  std::vector<Fe> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      out.push_back(fp.sub(
          fp.mul(row0[static_cast<std::size_t>(i)],
                 row1[static_cast<std::size_t>(j)]),
          fp.mul(row0[static_cast<std::size_t>(j)],
                 row1[static_cast<std::size_t>(i)])));
  return out;
}

GrassmannSlice grassmann_slice(const Fp& fp, Rng rng) {
  const int kAmbient = 8;  // P^7
  // Random 15x8 substitution of full rank.
  std::vector<std::vector<Fe>> M;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 8) throw RetryError("grassmann_slice", "substitution rank");
    M.assign(15, std::vector<Fe>(kAmbient, 0));
    Matrix chk(15, kAmbient);
    for (std::size_t r = 0; r < 15; ++r)
      for (std::size_t c = 0; c < kAmbient; ++c) {
        M[r][c] = rng.fe(fp);
        chk.at(r, c) = M[r][c];
      }
    if (rref(fp, chk).rank == static_cast<std::size_t>(kAmbient)) break;
  }
  std::vector<MultiPoly> images;
  for (int r = 0; r < 15; ++r) {
    std::vector<Term> t;
    for (int c = 0; c < kAmbient; ++c)
      if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0)
        t.push_back(Term{
            Monomial::var(c),
            M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]});
    images.push_back(mp_from_terms(fp, kAmbient, std::move(t)));
  }
  std::vector<MultiPoly> quadrics;
  for (const auto& rel : pluecker_relations_g26(fp))
    quadrics.push_back(mp_substitute(fp, rel, images, kAmbient));

  Ring ring{fp, kAmbient};
  Ideal raw(ring, std::move(quadrics));
  Ideal I = saturate(raw, Ideal::irrelevant(ring));
  GrassmannSlice out{std::move(I), 0};
  out.quadric_count = graded_piece_dim(out.curve, 2).dim;
  HilbertProfile prof = hilbert_profile(out.curve);
  if (prof.dimension != 1)
    throw RetryError("grassmann_slice", "slice is not 1-dimensional");
  return out;
}

K3WithCurve k3_with_curve(const Fp& fp, Rng rng) {
  // Smooth plane quartic.
  auto monos4 = monomials_of_degree(3, 4);
  MultiPoly quartic;
  {
    std::vector<Term> t;
    for (const auto& m : monos4) t.push_back(Term{m, rng.fe(fp)});
    quartic = mp_from_terms(fp, 3, std::move(t));
  }
  {
    std::vector<MultiPoly> jac{quartic};
    for (int v = 0; v < 3; ++v) jac.push_back(mp_derivative(fp, quartic, v));
    if (!certified_empty(Ideal(Ring{fp, 3}, jac), 3))
      throw RetryError("k3_quartic", "random quartic is singular");
  }

  // Two points and the six defining cubics.
  auto base_pts = plane_curve_points(fp, quartic, 2, rng.child("basepts"));
  auto monos3 = monomials_of_degree(3, 3);
  Matrix cond(2, monos3.size());
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < monos3.size(); ++c) {
      MultiPoly mono(3, {Term{monos3[c], 1}});
      cond.at(r, c) = mp_evaluate(
          fp, mono, std::span<const Fe>(base_pts[r].data(), 3));
    }
  auto ker = kernel_basis(fp, cond);
  std::vector<MultiPoly> cubics_through;
  for (const auto& v : ker)
    cubics_through.push_back(mp_from_dense(fp, 3, monos3, v));
  Rng sub_rng = rng.child("map");
  auto map6 = random_subspace(fp, cubics_through, 6, sub_rng);

  ParametrizedSurface embed{map6};
  auto sampler = curve_image_sampler(fp, quartic, embed, rng.child("sample"));

  std::vector<MultiPoly> quads;
  std::vector<MultiPoly> cubs;
  try {
    quads = interpolate_ideal(fp, 6, 2, sampler);
    cubs = interpolate_ideal(fp, 6, 3, sampler);
  } catch (const UnluckySampleError& e) {
    throw RetryError("k3_interpolate", e.what());
  }
  if (quads.size() != 3)
    throw RetryError("k3_quadrics",
                     "expected 3 quadrics through the embedded curve");

  Ring ring{fp, 6};
  std::vector<MultiPoly> curve_gens = quads;
  for (const auto& c : cubs) curve_gens.push_back(c);
  Ideal IL = saturate(Ideal(ring, std::move(curve_gens)),
                      Ideal::irrelevant(ring));
  HilbertProfile lp = hilbert_profile(IL);
  if (lp.dimension != 1 || lp.degree != 10 || lp.pa != 3)
    throw RetryError("k3_curve_profile",
                     "embedded curve invariants are off");
  if (!is_smooth(IL, 4))
    throw RetryError("k3_curve_smooth", "embedded curve is singular");

  Ideal IX(ring, quads);
  HilbertProfile xp = hilbert_profile(IX);
  if (xp.dimension != 2 || xp.degree != 8)
    throw RetryError("k3_surface_profile", "quadric intersection is not a "
                                           "degree-8 surface");
  if (!is_smooth(IX, 3))
    throw RetryError("k3_surface_smooth", "quadric intersection is singular");

  K3WithCurve out{quartic, std::move(IX), std::move(IL), map6};
  return out;
}

std::vector<MultiPoly> random_subspace(const Fp& fp,
                                       const std::vector<MultiPoly>& basis,
                                       std::size_t k, Rng& rng) {
  if (k > basis.size())
    throw std::invalid_argument("random_subspace: k exceeds basis size");
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix coef(k, basis.size());
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < basis.size(); ++c)
        coef.at(r, c) = rng.fe(fp);
    Matrix copy = coef;
    if (rref(fp, copy).rank != k) continue;
    std::vector<MultiPoly> out;
    for (std::size_t r = 0; r < k; ++r) {
      MultiPoly acc(basis.front().nvars());
      for (std::size_t c = 0; c < basis.size(); ++c)
        acc = mp_add(fp, acc, mp_scale(fp, basis[c], coef.at(r, c)));
      out.push_back(std::move(acc));
    }
    return out;
  }
  throw RetryError("random_subspace", "could not draw a full-rank subspace");
}

std::vector<MultiPoly> random_linear_forms(const Ring& ring, std::size_t k,
                                           Rng& rng) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Term> t;
    for (int v = 0; v < ring.nvars; ++v) {
      Fe c = rng.fe(ring.fp);
      if (c != 0) t.push_back(Term{Monomial::var(v), c});
    }
    out.push_back(mp_from_terms(ring.fp, ring.nvars, std::move(t)));
  }
  return out;
}

}  // namespace liaison
