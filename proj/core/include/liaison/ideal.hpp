#ifndef LIAISON_IDEAL_HPP
#define LIAISON_IDEAL_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "liaison/multipoly.hpp"

namespace liaison {

struct Ring {
  Fp fp;
  int nvars;

  bool operator==(const Ring& o) const {
    return fp.modulus() == o.fp.modulus() && nvars == o.nvars;
  }
};

struct GroebnerBasis;

/// Homogeneous ideal given by generators, with cached reduced Groebner
/// bases per monomial order. The cache is write-once per order and guarded
/// by a mutex so ideals can be shared across pipeline jobs.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<MultiPoly> gens);

  const Ring& ring() const { return ring_; }
  const Fp& fp() const { return ring_.fp; }
  int nvars() const { return ring_.nvars; }
  const std::vector<MultiPoly>& gens() const { return gens_; }

  bool is_homogeneous() const;

  /// The irrelevant maximal ideal (x_0, ..., x_{n-1}).
  static Ideal irrelevant(const Ring& ring);
  static Ideal unit(const Ring& ring);
  static Ideal zero(const Ring& ring);

  bool is_unit_marker() const;  // generated by a nonzero constant

  std::shared_ptr<const GroebnerBasis> cached_basis(
      const MonomialOrder& ord) const;
  void store_basis(const MonomialOrder& ord,
                   std::shared_ptr<const GroebnerBasis> gb) const;

 private:
  struct CacheBox {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::shared_ptr<const GroebnerBasis>> map;
  };

  Ring ring_;
  std::vector<MultiPoly> gens_;
  // Copies of an Ideal share the cache; the generators are immutable.
  std::shared_ptr<CacheBox> cache_ = std::make_shared<CacheBox>();
};

/// Ideal file format: header `ring p=<prime> vars=<n>`, then one
/// polynomial per line in the text format; `#` starts a comment.
std::string ideal_to_text(const Ideal& I);
Ideal ideal_from_text(const std::string& text);
void ideal_save(const Ideal& I, const std::string& path);
Ideal ideal_load(const std::string& path);

}  // namespace liaison

#endif
