#include "liaison/monomial.hpp"

namespace liaison {

int cmp_degrevlex(const Monomial& a, const Monomial& b, int nvars) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = nvars - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

namespace {

int cmp_degrevlex_range(const Monomial& a, const Monomial& b, int lo,
                        int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b,
                       int nvars) const {
  if (kind == Kind::DegRevLex) return cmp_degrevlex(a, b, nvars);
  int split = nvars - elim;
  if (int c = cmp_degrevlex_range(a, b, split, nvars)) return c;
  return cmp_degrevlex_range(a, b, 0, split);
}

std::string MonomialOrder::describe() const {
  if (kind == Kind::DegRevLex) return "degrevlex";
  return "elim:" + std::to_string(elim);
}

}  // namespace liaison
