#include "liaison/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace liaison {

void normalize_terms(const Fp& fp, std::vector<Term>& terms,
                     const MonomialOrder& ord, int nvars) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.cmp(a.m, b.m, nvars) > 0;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Monomial m = terms[i].m;
    std::uint64_t acc = 0;
    while (i < terms.size() && terms[i].m == m) {
      acc += terms[i].c;
      if (acc >= (1ull << 62)) acc = fp.reduce(acc);
      ++i;
    }
    Fe c = fp.reduce(acc);
    if (c != 0) terms[out++] = Term{m, c};
  }
  terms.resize(out);
}

MultiPoly mp_from_terms(const Fp& fp, int nvars, std::vector<Term> terms) {
  normalize_terms(fp, terms, MonomialOrder::degrevlex(), nvars);
  return MultiPoly(nvars, std::move(terms));
}

MultiPoly mp_constant(int nvars, Fe c) {
  if (c == 0) return MultiPoly(nvars);
  return MultiPoly(nvars, {Term{Monomial::one(), c}});
}

MultiPoly mp_var(int nvars, int i) {
  return MultiPoly(nvars, {Term{Monomial::var(i), 1}});
}

MultiPoly mp_add(const Fp& fp, const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial arity mismatch");
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  const int n = a.nvars();
  std::size_t i = 0, j = 0;
  while (i < a.terms().size() && j < b.terms().size()) {
    int c = cmp_degrevlex(a.terms()[i].m, b.terms()[j].m, n);
    if (c > 0) {
      out.push_back(a.terms()[i++]);
    } else if (c < 0) {
      out.push_back(b.terms()[j++]);
    } else {
      Fe s = fp.add(a.terms()[i].c, b.terms()[j].c);
      if (s != 0) out.push_back(Term{a.terms()[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms().size(); ++i) out.push_back(a.terms()[i]);
  for (; j < b.terms().size(); ++j) out.push_back(b.terms()[j]);
  return MultiPoly(n, std::move(out));
}

MultiPoly mp_neg(const Fp& fp, const MultiPoly& a) {
  std::vector<Term> out(a.terms());
  for (auto& t : out) t.c = fp.neg(t.c);
  return MultiPoly(a.nvars(), std::move(out));
}

MultiPoly mp_sub(const Fp& fp, const MultiPoly& a, const MultiPoly& b) {
  return mp_add(fp, a, mp_neg(fp, b));
}

MultiPoly mp_scale(const Fp& fp, const MultiPoly& a, Fe c) {
  if (c == 0) return MultiPoly(a.nvars());
  std::vector<Term> out(a.terms());
  for (auto& t : out) t.c = fp.mul(t.c, c);
  return MultiPoly(a.nvars(), std::move(out));
}

MultiPoly mp_mul_term(const Fp& fp, const MultiPoly& a, const Monomial& m,
                      Fe c) {
  if (c == 0) return MultiPoly(a.nvars());
  std::vector<Term> out(a.terms());
  for (auto& t : out) {
    t.m = t.m.mul(m);
    t.c = fp.mul(t.c, c);
  }
  return MultiPoly(a.nvars(), std::move(out));
}

MultiPoly mp_mul(const Fp& fp, const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial arity mismatch");
  std::vector<Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      out.push_back(Term{ta.m.mul(tb.m), fp.mul(ta.c, tb.c)});
  return mp_from_terms(fp, a.nvars(), std::move(out));
}

MultiPoly mp_monic(const Fp& fp, const MultiPoly& a) {
  if (a.is_zero()) return a;
  return mp_scale(fp, a, fp.inv(a.lead().c));
}

MultiPoly mp_pow(const Fp& fp, const MultiPoly& a, int e) {
  MultiPoly acc = mp_constant(a.nvars(), 1);
  for (int i = 0; i < e; ++i) acc = mp_mul(fp, acc, a);
  return acc;
}

Fe mp_evaluate(const Fp& fp, const MultiPoly& f, std::span<const Fe> point) {
  if (static_cast<int>(point.size()) != f.nvars())
    throw std::invalid_argument("evaluation point arity mismatch");
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    Fe v = t.c;
    for (int i = 0; i < f.nvars(); ++i) {
      if (t.m.e[i]) v = fp.mul(v, fp.pow(point[i], t.m.e[i]));
    }
    acc += v;
    if (acc >= (1ull << 62)) acc = fp.reduce(acc);
  }
  return fp.reduce(acc);
}

MultiPoly mp_derivative(const Fp& fp, const MultiPoly& f, int var) {
  if (var < 0 || var >= f.nvars())
    throw std::invalid_argument("derivative variable out of range");
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    if (t.m.e[var] == 0) continue;
    Fe c = fp.mul(t.c, t.m.e[var] % fp.modulus());
    if (c == 0) continue;
    Term nt;
    nt.m = t.m.div(Monomial::var(var));
    nt.c = c;
    out.push_back(nt);
  }
  return MultiPoly(f.nvars(), std::move(out));
}

bool mp_is_homogeneous(const MultiPoly& f) {
  for (const auto& t : f.terms())
    if (t.m.deg != f.terms().front().m.deg) return false;
  return true;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

namespace {

void enumerate_rec(int nvars, int var, int rem, Monomial& cur,
                   std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.e[var] = static_cast<std::uint8_t>(rem);
    cur.deg = 0;
    for (int i = 0; i < nvars; ++i)
      cur.deg = static_cast<std::uint16_t>(cur.deg + cur.e[i]);
    out.push_back(cur);
    cur.e[var] = 0;
    return;
  }
  for (int k = rem; k >= 0; --k) {
    cur.e[var] = static_cast<std::uint8_t>(k);
    enumerate_rec(nvars, var + 1, rem - k, cur, out);
  }
  cur.e[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  if (d > 120) throw std::invalid_argument("degree exceeds exponent cap");
  std::vector<Monomial> out;
  out.reserve(binomial(nvars - 1 + d, d));
  Monomial cur;
  enumerate_rec(nvars, 0, d, cur, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return cmp_degrevlex(a, b, nvars) > 0;
  });
  return out;
}

MultiPoly mp_substitute(const Fp& fp, const MultiPoly& f,
                        std::span<const MultiPoly> images,
                        int target_nvars) {
  if (static_cast<int>(images.size()) != f.nvars())
    throw std::invalid_argument("substitution image count mismatch");
  // Cache small powers per variable.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](int var, int e) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(mp_constant(target_nvars, 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(mp_mul(fp, cache.back(), images[var]));
    return cache[e];
  };
  MultiPoly acc(target_nvars);
  for (const auto& t : f.terms()) {
    MultiPoly prod = mp_constant(target_nvars, t.c);
    for (int i = 0; i < f.nvars(); ++i) {
      if (t.m.e[i]) prod = mp_mul(fp, prod, power(i, t.m.e[i]));
    }
    acc = mp_add(fp, acc, prod);
  }
  return acc;
}

MultiPoly mp_linear_change(const Fp& fp, const MultiPoly& f,
                           const std::vector<std::vector<Fe>>& A) {
  std::vector<MultiPoly> images;
  images.reserve(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < f.nvars(); ++j) {
      if (A[i][j] != 0) terms.push_back(Term{Monomial::var(j), A[i][j]});
    }
    images.push_back(mp_from_terms(fp, f.nvars(), std::move(terms)));
  }
  return mp_substitute(fp, f, images, f.nvars());
}

MultiPoly mp_permute_vars(const MultiPoly& f, std::span<const int> perm,
                          int new_nvars) {
  std::vector<Term> out(f.terms());
  for (auto& t : out) {
    Monomial m;
    for (int i = 0; i < f.nvars(); ++i) m.e[perm[i]] = t.m.e[i];
    m.deg = t.m.deg;
    t.m = m;
  }
  MultiPoly g(new_nvars, std::move(out));
  std::sort(g.terms_mut().begin(), g.terms_mut().end(),
            [&](const Term& a, const Term& b) {
              return cmp_degrevlex(a.m, b.m, new_nvars) > 0;
            });
  return g;
}

MultiPoly mp_extend_vars(const MultiPoly& f, int new_nvars) {
  MultiPoly g(new_nvars, f.terms());
  std::sort(g.terms_mut().begin(), g.terms_mut().end(),
            [&](const Term& a, const Term& b) {
              return cmp_degrevlex(a.m, b.m, new_nvars) > 0;
            });
  return g;
}

MultiPoly mp_restrict_vars(const MultiPoly& f, int new_nvars) {
  for (const auto& t : f.terms())
    for (int i = new_nvars; i < f.nvars(); ++i)
      if (t.m.e[i] != 0)
        throw std::invalid_argument("restrict_vars: variable in use");
  MultiPoly g(new_nvars, f.terms());
  std::sort(g.terms_mut().begin(), g.terms_mut().end(),
            [&](const Term& a, const Term& b) {
              return cmp_degrevlex(a.m, b.m, new_nvars) > 0;
            });
  return g;
}

std::vector<Fe> mp_dense_coeffs(const MultiPoly& f,
                                const std::vector<Monomial>& basis) {
  std::vector<Fe> out(basis.size(), 0);
  std::size_t idx = 0;
  // both f.terms() and basis are degrevlex descending
  for (const auto& t : f.terms()) {
    while (idx < basis.size() && !(basis[idx] == t.m)) ++idx;
    if (idx == basis.size())
      throw std::invalid_argument("term outside monomial basis");
    out[idx] = t.c;
  }
  return out;
}

MultiPoly mp_from_dense(const Fp& fp, int nvars,
                        const std::vector<Monomial>& basis,
                        std::span<const Fe> coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] != 0) terms.push_back(Term{basis[i], coeffs[i]});
  }
  return mp_from_terms(fp, nvars, std::move(terms));
}

std::string mp_print(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) s += " + ";
    first = false;
    s += std::to_string(t.c);
    for (int i = 0; i < f.nvars(); ++i) {
      if (t.m.e[i] == 0) continue;
      s += "*x" + std::to_string(i);
      if (t.m.e[i] > 1) s += "^" + std::to_string(static_cast<int>(t.m.e[i]));
    }
  }
  return s;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
  std::uint64_t number() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("polynomial parse error: number expected");
    std::uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (v > (1ull << 60))
        throw std::invalid_argument("polynomial parse error: number too big");
      ++i;
    }
    return v;
  }
};

}  // namespace

MultiPoly mp_parse(const Fp& fp, int nvars, const std::string& text) {
  Parser p{text};
  std::vector<Term> terms;
  if (p.eof()) throw std::invalid_argument("empty polynomial text");
  for (;;) {
    // one term: factors joined by '*'
    Fe coef = 1;
    Monomial mon;
    bool saw_factor = false;
    for (;;) {
      if (p.eof()) break;
      char c = p.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef = fp.mul(coef, fp.reduce(p.number() % fp.modulus()));
        saw_factor = true;
      } else if (c == 'x') {
        ++p.i;
        std::uint64_t var = p.number();
        if (var >= static_cast<std::uint64_t>(nvars))
          throw std::invalid_argument("variable index out of range");
        std::uint64_t e = 1;
        if (!p.eof() && p.peek() == '^') {
          ++p.i;
          e = p.number();
          if (e > 120)
            throw std::invalid_argument("exponent exceeds cap");
        }
        mon.e[var] = static_cast<std::uint8_t>(mon.e[var] + e);
        mon.deg = static_cast<std::uint16_t>(mon.deg + e);
        saw_factor = true;
      } else {
        break;
      }
      if (!p.eof() && p.peek() == '*') {
        ++p.i;
        continue;
      }
      break;
    }
    if (!saw_factor)
      throw std::invalid_argument("polynomial parse error: term expected");
    terms.push_back(Term{mon, coef});
    if (p.eof()) break;
    if (p.peek() != '+')
      throw std::invalid_argument("polynomial parse error: '+' expected");
    ++p.i;
  }
  return mp_from_terms(fp, nvars, std::move(terms));
}

}  // namespace liaison
