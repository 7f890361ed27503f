#ifndef LIAISON_GROEBNER_HPP
#define LIAISON_GROEBNER_HPP

#include <memory>
#include <vector>

#include "liaison/ideal.hpp"

namespace liaison {

/// Reduced Groebner basis. Elements are monic, no lead divides another,
/// tails fully reduced; element terms are sorted descending under `order`
/// and elements ascending by lead, so equal ideals produce identical
/// objects.
struct GroebnerBasis {
  MonomialOrder order;
  int nvars = 0;
  std::vector<MultiPoly> elems;

  bool operator==(const GroebnerBasis& o) const {
    return order == o.order && nvars == o.nvars && elems == o.elems;
  }
};

/// Buchberger with the Gebauer-Moeller pair criteria and sugar selection.
GroebnerBasis buchberger(const Ring& ring, const std::vector<MultiPoly>& gens,
                         const MonomialOrder& ord);

/// Cached reduced basis of an ideal under `ord`.
std::shared_ptr<const GroebnerBasis> gb_for(const Ideal& I,
                                            const MonomialOrder& ord =
                                                MonomialOrder::degrevlex());

/// Remainder of multivariate division by the basis; zero iff f lies in the
/// ideal. Output terms are degrevlex-canonical.
MultiPoly normal_form(const Fp& fp, const MultiPoly& f,
                      const GroebnerBasis& gb);

bool in_ideal(const MultiPoly& f, const Ideal& I);
bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideal_equal(const Ideal& a, const Ideal& b);

/// Exact division f / g; throws if g does not divide f.
MultiPoly divide_exact(const Fp& fp, const MultiPoly& f, const MultiPoly& g);

/// I ∩ J by tag-variable elimination on t*I + (1-t)*J.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

/// (I : g) = (I ∩ (g)) / g.
Ideal principal_quotient(const Ideal& I, const MultiPoly& g);

/// (I : J) as the intersection of the principal quotients (I : g_j).
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

/// (I : J^infinity). For the irrelevant maximal ideal this uses the
/// degrevlex divide-out shortcut per variable and intersects; otherwise it
/// iterates ideal_quotient until stabilization (error past 50 rounds).
Ideal saturate(const Ideal& I, const Ideal& J);

/// I ∩ k[x_0..x_{keep-1}] via an elimination-order basis.
Ideal elimination_ideal(const Ideal& I, int keep);

/// (I : x_var^infinity) via the degrevlex divide-out trick; I homogeneous.
Ideal saturate_variable(const Ideal& I, int var);

}  // namespace liaison

#endif
