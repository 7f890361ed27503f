#include "liaison/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace liaison {

UniPoly UniPoly::x() { return UniPoly({0, 1}); }

UniPoly UniPoly::constant(Fe v) {
  return v == 0 ? UniPoly() : UniPoly({v});
}

UniPoly uni_add(const Fp& fp, const UniPoly& a, const UniPoly& b) {
  std::vector<Fe> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = fp.add(a.coeff(i), b.coeff(i));
  return UniPoly(std::move(c));
}

UniPoly uni_sub(const Fp& fp, const UniPoly& a, const UniPoly& b) {
  std::vector<Fe> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = fp.sub(a.coeff(i), b.coeff(i));
  return UniPoly(std::move(c));
}

UniPoly uni_mul(const Fp& fp, const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<std::uint64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      acc[i + j] += static_cast<std::uint64_t>(a.coeff(i)) * b.coeff(j);
      if (acc[i + j] >= (1ull << 62)) acc[i + j] = fp.reduce(acc[i + j]);
    }
  }
  std::vector<Fe> c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = fp.reduce(acc[i]);
  return UniPoly(std::move(c));
}

UniPoly uni_scale(const Fp& fp, const UniPoly& a, Fe s) {
  std::vector<Fe> c(a.coeffs());
  for (auto& v : c) v = fp.mul(v, s);
  return UniPoly(std::move(c));
}

UniPoly uni_monic(const Fp& fp, const UniPoly& a) {
  if (a.is_zero()) return a;
  return uni_scale(fp, a, fp.inv(a.coeffs().back()));
}

Fe uni_eval(const Fp& fp, const UniPoly& a, Fe x) {
  Fe acc = 0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    acc = fp.add(fp.mul(acc, x), a.coeff(i));
  return acc;
}

UniPoly uni_mod(const Fp& fp, const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Fe> r(a.coeffs());
  const auto& d = b.coeffs();
  const Fe lead_inv = fp.inv(d.back());
  while (r.size() >= d.size()) {
    Fe top = r.back();
    if (top != 0) {
      Fe q = fp.mul(top, lead_inv);
      std::size_t off = r.size() - d.size();
      for (std::size_t i = 0; i < d.size(); ++i)
        r[off + i] = fp.sub(r[off + i], fp.mul(q, d[i]));
    }
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UniPoly(std::move(r));
}

UniPoly uni_gcd(const Fp& fp, UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = uni_mod(fp, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return uni_monic(fp, a);
}

UniPoly uni_powmod(const Fp& fp, const UniPoly& base, std::uint64_t e,
                   const UniPoly& f) {
  UniPoly acc = UniPoly::constant(1);
  UniPoly b = uni_mod(fp, base, f);
  while (e) {
    if (e & 1) acc = uni_mod(fp, uni_mul(fp, acc, b), f);
    b = uni_mod(fp, uni_mul(fp, b, b), f);
    e >>= 1;
  }
  return acc;
}

namespace {

// Splits a monic squarefree product of distinct linear factors into roots.
void split_linear_product(const Fp& fp, const UniPoly& g, Rng& rng,
                          std::vector<Fe>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    // monic x + c -> root -c
    out.push_back(fp.neg(g.coeff(0)));
    return;
  }
  const std::uint32_t p = fp.modulus();
  if (p <= 3) {
    for (Fe a = 0; a < p; ++a)
      if (uni_eval(fp, g, a) == 0) out.push_back(a);
    return;
  }
  for (;;) {
    Fe c = rng.fe(fp);
    UniPoly shift({c, 1});  // x + c
    UniPoly h = uni_powmod(fp, shift, (p - 1) / 2, g);
    h = uni_sub(fp, h, UniPoly::constant(1));
    UniPoly d = uni_gcd(fp, h, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      // g / d by long division (exact since d | g)
      std::vector<Fe> q(g.coeffs().size() - d.coeffs().size() + 1, 0);
      std::vector<Fe> r(g.coeffs());
      const Fe li = fp.inv(d.coeffs().back());
      for (std::size_t k = q.size(); k-- > 0;) {
        Fe top = r[k + d.coeffs().size() - 1];
        if (top != 0) {
          Fe qq = fp.mul(top, li);
          q[k] = qq;
          for (std::size_t i = 0; i < d.coeffs().size(); ++i)
            r[k + i] = fp.sub(r[k + i], fp.mul(qq, d.coeff(i)));
        }
      }
      split_linear_product(fp, d, rng, out);
      split_linear_product(fp, UniPoly(std::move(q)), rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Fe> uni_roots(const Fp& fp, const UniPoly& f, Rng rng) {
  if (f.is_zero())
    throw std::domain_error("uni_roots: zero polynomial");
  if (f.degree() == 0) return {};
  const std::uint32_t p = fp.modulus();
  // g = gcd(f, x^p - x) via x^p mod f
  UniPoly xp = uni_powmod(fp, UniPoly::x(), p, f);
  UniPoly g = uni_gcd(fp, uni_sub(fp, xp, UniPoly::x()), f);
  std::vector<Fe> roots;
  split_linear_product(fp, g, rng, roots);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace liaison
