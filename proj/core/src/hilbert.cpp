#include "liaison/hilbert.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace liaison {

GradedPieceDim graded_piece_dim(const Ideal& I, int d) {
  const int n = I.nvars();
  auto basis = monomials_of_degree(n, d);
  const std::size_t cols = basis.size();
  std::map<Monomial, std::size_t,
           bool (*)(const Monomial&, const Monomial&)>
      index([](const Monomial& a, const Monomial& b) {
        return cmp_degrevlex(a, b, kMaxVars) > 0;
      });
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  RowReducer red(I.fp(), cols);
  for (const auto& g : I.gens()) {
    int gd = g.degree();
    if (gd > d || g.is_zero()) continue;
    for (const auto& m : monomials_of_degree(n, d - gd)) {
      std::vector<Fe> row(cols, 0);
      for (const auto& t : g.terms()) row[index.at(t.m.mul(m))] = t.c;
      red.add_row(std::move(row));
      if (red.full_rank()) break;
    }
    if (red.full_rank()) break;
  }
  GradedPieceDim out;
  out.dim = static_cast<int>(red.rank());
  out.codim = static_cast<int>(cols) - out.dim;
  return out;
}

std::vector<MultiPoly> graded_piece_basis(const Ideal& I, int d) {
  const int n = I.nvars();
  auto basis = monomials_of_degree(n, d);
  const std::size_t cols = basis.size();
  std::map<Monomial, std::size_t,
           bool (*)(const Monomial&, const Monomial&)>
      index([](const Monomial& a, const Monomial& b) {
        return cmp_degrevlex(a, b, kMaxVars) > 0;
      });
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  RowReducer red(I.fp(), cols);
  for (const auto& g : I.gens()) {
    int gd = g.degree();
    if (gd > d || g.is_zero()) continue;
    for (const auto& m : monomials_of_degree(n, d - gd)) {
      std::vector<Fe> row(cols, 0);
      for (const auto& t : g.terms()) row[index.at(t.m.mul(m))] = t.c;
      red.add_row(std::move(row));
    }
  }
  Matrix rows = red.basis_matrix();
  std::vector<MultiPoly> out;
  out.reserve(rows.rows());
  for (std::size_t r = 0; r < rows.rows(); ++r)
    out.push_back(mp_from_dense(I.fp(), n, basis, rows.row(r)));
  return out;
}

namespace {

// Truncated Hilbert series of R/(monomial ideal), coefficients 0..cap.
// Splits off one generator at a time:
//   HS(R/(M+q)) = HS(R/M) - t^deg(q) HS(R/(M:q))
// with memoization and a closed form once only pure variable powers
// remain.
struct SeriesCounter {
  int nvars;
  int cap;
  std::vector<long long> free_series;  // HF of the free ring
  std::map<std::vector<std::uint64_t>, std::vector<long long>> memo;

  explicit SeriesCounter(int n, int c) : nvars(n), cap(c) {
    free_series.resize(static_cast<std::size_t>(cap) + 1);
    for (int d = 0; d <= cap; ++d)
      free_series[static_cast<std::size_t>(d)] =
          static_cast<long long>(binomial(
              static_cast<std::uint64_t>(nvars - 1 + d),
              static_cast<std::uint64_t>(d)));
  }

  static void minimalize(std::vector<Monomial>& M) {
    std::sort(M.begin(), M.end(),
              [](const Monomial& a, const Monomial& b) {
                if (a.deg != b.deg) return a.deg < b.deg;
                return cmp_degrevlex(a, b, kMaxVars) < 0;
              });
    std::vector<Monomial> out;
    for (const auto& m : M) {
      bool dominated = false;
      for (const auto& k : out) {
        if (k.divides(m)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) out.push_back(m);
    }
    M.swap(out);
  }

  std::vector<long long> count(std::vector<Monomial> M) {
    minimalize(M);
    return count_minimal(std::move(M));
  }

 private:
  static std::vector<std::uint64_t> key_of(const std::vector<Monomial>& M) {
    std::vector<std::uint64_t> key;
    key.reserve(M.size() * 2);
    for (const auto& m : M) {
      key.push_back(m.w0());
      key.push_back(m.w1());
    }
    return key;
  }

  bool pure_powers(const std::vector<Monomial>& M) const {
    for (const auto& m : M) {
      int nz = 0;
      for (int i = 0; i < nvars; ++i)
        if (m.e[i]) ++nz;
      if (nz > 1) return false;
    }
    return true;
  }

  // HS = free * prod (1 - t^{a_i}) for pure powers x_i^{a_i}.
  std::vector<long long> pure_power_series(
      const std::vector<Monomial>& M) const {
    std::vector<long long> num(static_cast<std::size_t>(cap) + 1, 0);
    num[0] = 1;
    for (const auto& m : M) {
      int a = m.deg;
      for (int d = cap; d >= a; --d)
        num[static_cast<std::size_t>(d)] -=
            num[static_cast<std::size_t>(d - a)];
    }
    std::vector<long long> out(static_cast<std::size_t>(cap) + 1, 0);
    for (int d = 0; d <= cap; ++d) {
      long long acc = 0;
      for (int k = 0; k <= d; ++k)
        acc += num[static_cast<std::size_t>(k)] *
               free_series[static_cast<std::size_t>(d - k)];
      out[static_cast<std::size_t>(d)] = acc;
    }
    return out;
  }

  std::vector<long long> count_minimal(std::vector<Monomial> M) {
    if (M.empty()) return free_series;
    if (M.front().deg == 0)
      return std::vector<long long>(static_cast<std::size_t>(cap) + 1, 0);
    if (pure_powers(M)) return pure_power_series(M);
    auto key = key_of(M);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Monomial q = M.back();
    M.pop_back();
    std::vector<Monomial> colon;
    colon.reserve(M.size());
    for (const auto& m : M) {
      Monomial r;
      std::uint16_t deg = 0;
      for (int i = 0; i < nvars; ++i) {
        r.e[i] = static_cast<std::uint8_t>(
            m.e[i] > q.e[i] ? m.e[i] - q.e[i] : 0);
        deg = static_cast<std::uint16_t>(deg + r.e[i]);
      }
      r.deg = deg;
      colon.push_back(r);
    }
    minimalize(colon);
    std::vector<long long> a = count_minimal(std::move(M));
    std::vector<long long> b = count(std::move(colon));
    std::vector<long long> out(a);
    for (int d = q.deg; d <= cap; ++d)
      out[static_cast<std::size_t>(d)] -=
          b[static_cast<std::size_t>(d - q.deg)];
    memo.emplace(std::move(key), out);
    return out;
  }
};

}  // namespace

std::vector<long long> hilbert_values(const Ideal& I, int from, int to) {
  auto gb = gb_for(I, MonomialOrder::degrevlex());
  std::vector<Monomial> leads;
  leads.reserve(gb->elems.size());
  for (const auto& e : gb->elems) leads.push_back(e.terms().front().m);
  SeriesCounter counter(I.nvars(), to);
  std::vector<long long> all = counter.count(std::move(leads));
  std::vector<long long> out;
  for (int d = from; d <= to; ++d)
    out.push_back(all[static_cast<std::size_t>(d)]);
  return out;
}

HilbertProfile hilbert_profile(const Ideal& I) {
  int maxdeg = 0;
  for (const auto& g : I.gens()) maxdeg = std::max(maxdeg, g.degree());
  return hilbert_profile(I, maxdeg + 1, maxdeg + 6);
}

HilbertProfile hilbert_profile(const Ideal& I, int from, int to) {
  if (from < 0 || to < from)
    throw std::invalid_argument("hilbert_profile: bad degree range");
  HilbertProfile prof;
  std::vector<long long> vals = hilbert_values(I, from, to);
  for (int d = from; d <= to; ++d)
    prof.values.emplace_back(d, vals[static_cast<std::size_t>(d - from)]);

  // Fit the longest stable suffix with an integer-valued polynomial of
  // degree <= 2 (binomial basis), requiring at least 4 matched values.
  const int count = to - from + 1;
  if (count < 4)
    throw RegularityError("hilbert_profile: window shorter than 4 values",
                          prof.values);
  for (int start = 0; count - start >= 4; ++start) {
    long long t0 = from + start;
    long long v0 = vals[static_cast<std::size_t>(start)];
    long long v1 = vals[static_cast<std::size_t>(start) + 1];
    long long v2 = vals[static_cast<std::size_t>(start) + 2];
    long long d1 = v1 - v0, d2 = v2 - v1;
    long long c2 = d2 - d1;
    long long c1 = d1 - c2 * t0;
    long long c0 = v0 - c2 * (t0 * (t0 - 1) / 2) - c1 * t0;
    HilbertProfile cand = prof;
    cand.c2 = c2;
    cand.c1 = c1;
    cand.c0 = c0;
    bool ok = true;
    for (int i = start; i < count; ++i) {
      if (cand.hp_at(from + i) != vals[static_cast<std::size_t>(i)]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (c2 != 0) {
      cand.dimension = 2;
      cand.degree = c2;
      cand.pa = cand.hp_at(0) - 1;
    } else if (c1 != 0) {
      cand.dimension = 1;
      cand.degree = c1;
      cand.pa = 1 - c0;
    } else if (c0 != 0) {
      cand.dimension = 0;
      cand.degree = c0;
      cand.pa = 0;
    } else {
      cand.dimension = -1;
      cand.degree = 0;
      cand.pa = 0;
    }
    if (cand.degree < 0)
      throw RegularityError("hilbert_profile: negative leading coefficient",
                            prof.values);
    return cand;
  }
  throw RegularityError(
      "hilbert_profile: regularity not reached in the window", prof.values);
}

GenerationCheck generated_in_degree(const Ideal& I, int f) {
  GenerationCheck out;
  auto piece = graded_piece_basis(I, f);
  out.dim_f = static_cast<int>(piece.size());
  out.dim_f1 = graded_piece_dim(I, f + 1).dim;

  // rank of R_1 (x) I_f -> I_{f+1} by row reduction
  const int n = I.nvars();
  auto basis1 = monomials_of_degree(n, f + 1);
  std::map<Monomial, std::size_t,
           bool (*)(const Monomial&, const Monomial&)>
      index([](const Monomial& a, const Monomial& b) {
        return cmp_degrevlex(a, b, kMaxVars) > 0;
      });
  for (std::size_t i = 0; i < basis1.size(); ++i)
    index.emplace(basis1[i], i);
  RowReducer red(I.fp(), basis1.size());
  for (const auto& q : piece) {
    for (int v = 0; v < n; ++v) {
      std::vector<Fe> row(basis1.size(), 0);
      for (const auto& t : q.terms())
        row[index.at(t.m.mul(Monomial::var(v)))] = t.c;
      red.add_row(std::move(row));
    }
  }
  out.mu_rank = static_cast<int>(red.rank());

  // Generated in degrees <= f iff the subideal generated by pieces of
  // degree <= f equals I. Compare reduced bases.
  std::vector<MultiPoly> low;
  for (const auto& g : I.gens())
    if (g.degree() <= f) low.push_back(g);
  for (auto& q : piece) low.push_back(std::move(q));
  Ideal trunc(I.ring(), std::move(low));
  out.generated = ideal_equal(trunc, I);
  return out;
}

std::string HilbertProfile::to_json() const {
  std::ostringstream os;
  os << "{\"hf\": [";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    os << "[" << values[i].first << ", " << values[i].second << "]";
  }
  os << "], \"dim\": " << dimension << ", \"degree\": " << degree
     << ", \"pa\": " << pa << "}";
  return os.str();
}

}  // namespace liaison
