#ifndef LIAISON_MULTIPOLY_HPP
#define LIAISON_MULTIPOLY_HPP

#include <span>
#include <string>
#include <vector>

#include "liaison/fp.hpp"
#include "liaison/monomial.hpp"

namespace liaison {

struct Term {
  Monomial m;
  Fe c = 0;
};

/// Sparse multivariate polynomial in k[x0..x_{nvars-1}]. Terms are kept
/// sorted strictly descending and carry no zero coefficients; the sort
/// order is degrevlex at every public boundary (the Groebner engine resorts
/// internally when it works under another order).
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  MultiPoly(int nvars, std::vector<Term> terms)
      : nvars_(nvars), terms_(std::move(terms)) {}

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& terms_mut() { return terms_; }

  const Term& lead() const { return terms_.front(); }

  /// Total degree of the leading term (max total degree for homogeneous).
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }

  bool operator==(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c)
        return false;
    }
    return true;
  }

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
};

/// Sort descending under `ord`, combine equal monomials, drop zeros.
void normalize_terms(const Fp& fp, std::vector<Term>& terms,
                     const MonomialOrder& ord, int nvars);

MultiPoly mp_from_terms(const Fp& fp, int nvars, std::vector<Term> terms);
MultiPoly mp_constant(int nvars, Fe c);
MultiPoly mp_var(int nvars, int i);

MultiPoly mp_add(const Fp& fp, const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_sub(const Fp& fp, const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_neg(const Fp& fp, const MultiPoly& a);
MultiPoly mp_scale(const Fp& fp, const MultiPoly& a, Fe c);
MultiPoly mp_mul(const Fp& fp, const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_mul_term(const Fp& fp, const MultiPoly& a, const Monomial& m,
                      Fe c);
MultiPoly mp_monic(const Fp& fp, const MultiPoly& a);
MultiPoly mp_pow(const Fp& fp, const MultiPoly& a, int e);

Fe mp_evaluate(const Fp& fp, const MultiPoly& f, std::span<const Fe> point);
MultiPoly mp_derivative(const Fp& fp, const MultiPoly& f, int var);

bool mp_is_homogeneous(const MultiPoly& f);

/// All monomials of total degree d in nvars variables, degrevlex
/// descending. Count is C(nvars-1+d, d).
std::vector<Monomial> monomials_of_degree(int nvars, int d);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// f(g_0, ..., g_{nvars-1}) where images live in a ring with
/// `target_nvars` variables.
MultiPoly mp_substitute(const Fp& fp, const MultiPoly& f,
                        std::span<const MultiPoly> images, int target_nvars);

/// Apply the linear change of coordinates x_i -> sum_j A[i][j] x_j.
MultiPoly mp_linear_change(const Fp& fp, const MultiPoly& f,
                           const std::vector<std::vector<Fe>>& A);

MultiPoly mp_permute_vars(const MultiPoly& f, std::span<const int> perm,
                          int new_nvars);
MultiPoly mp_extend_vars(const MultiPoly& f, int new_nvars);
/// Drop trailing variables; every term must have zero exponents there.
MultiPoly mp_restrict_vars(const MultiPoly& f, int new_nvars);

/// Coefficient vector of a homogeneous degree-d form in the canonical
/// monomial basis from monomials_of_degree.
std::vector<Fe> mp_dense_coeffs(const MultiPoly& f,
                                const std::vector<Monomial>& basis);
MultiPoly mp_from_dense(const Fp& fp, int nvars,
                        const std::vector<Monomial>& basis,
                        std::span<const Fe> coeffs);

/// Text format: terms joined by '+', each term `c*x0^a*x1^b...` with
/// decimal residue coefficients; whitespace insignificant.
std::string mp_print(const MultiPoly& f);
MultiPoly mp_parse(const Fp& fp, int nvars, const std::string& text);

}  // namespace liaison

#endif
