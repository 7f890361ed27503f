#ifndef LIAISON_LINKAGE_HPP
#define LIAISON_LINKAGE_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "liaison/geometry.hpp"

namespace liaison {

using json = nlohmann::ordered_json;

/// Complete-intersection linkage data: r-1 forms of degrees f_i (with
/// multiplicity k_i) cutting B = C ∪ D in P^r.
struct SigmaPart {
  int degree = 0;  // f_i
  int count = 0;   // k_i
};

struct LiaisonSpec {
  int r = 0;  // ambient projective dimension
  std::vector<SigmaPart> sigma;
  long long d = 0, g = 0;  // invariants of the input curve

  void validate() const;  // sum k_i = r-1, positive entries
  int forms_total() const;
  long long sigma_weight() const;  // sum k_i f_i
  long long ci_degree() const;     // prod f_i^{k_i}
  bool single_block() const { return sigma.size() == 1; }
};

LiaisonSpec parse_sigma(int r, long long d, long long g,
                        const std::string& text);  // "2^5" or "3^3,2^1"

struct LiaisonNumerics {
  long long d_prime = 0;
  long long g_prime = 0;
  long long nodes = 0;
  // (fH - C)^2 on the abstract linking surface, single-block case only;
  // positive means the residual is connected.
  std::optional<long long> residual_self_intersection;
};

/// Exact evaluation of the degree/genus/node-count identities of a
/// complete-intersection linkage. Throws on non-integral genus or a
/// negative node count.
LiaisonNumerics liaison_numerics(const LiaisonSpec& spec);

/// Expected dim H^0(I(m)) for a nonspecially embedded smooth curve of
/// degree d and genus g in P^r with surjective restriction in degree m.
long long expected_ideal_dim(int r, int m, long long d, long long g);

struct LinkOptions {
  bool check_smooth = true;
  bool check_nondegenerate = true;
  bool check_dim_f = true;   // dim (I_D)_f = r-1
  bool check_nodes = true;   // deg Sing(B) = n
  std::optional<std::vector<MultiPoly>> fixed_subspace;
};

struct LinkageResult {
  std::vector<MultiPoly> subspace;  // the r-1 chosen forms
  Ideal IB;
  Ideal ID;
  LiaisonNumerics expected;
  long long measured_degree = 0;
  long long measured_pa = 0;
  int dim_ID_1 = 0;
  int dim_ID_f = 0;
  long long node_degree = -1;
  bool smooth = false;
};

/// Draws the subspaces, forms the complete intersection, computes the
/// residual by ideal quotient plus saturation, and runs the verification
/// battery. Throws RetryError naming the first failed claim.
LinkageResult link(const Ideal& I_C, const LiaisonSpec& spec, Rng rng,
                   const LinkOptions& opts = {});

struct PetriRank {
  int rank = 0;
  bool full = false;
  int dim_source = 0;
  int dim_target = 0;
};

/// Rank of R_1 (x) I_f -> I_{f+1}; full rank certifies the Petri-map rank
/// condition for the residual pair. Requires f(r-2) = r+2.
PetriRank petri_rank(const Ideal& I_C, int f);

struct UninodalSubspace {
  std::vector<MultiPoly> forms;  // 3 cubics
  int dim_Ix = 0;                // expected 5
  int dim_I2x = 0;               // expected 1
};

/// Subspace of cubics through the curve, all vanishing at x, exactly one
/// singular there; the linked residual then acquires a node at x.
UninodalSubspace uninodal_subspace(const Ideal& I_C, const ProjPoint& x,
                                   Rng rng);

struct Claim {
  std::string name;
  json expected;
  json computed;
  bool pass = false;
};

struct Certificate {
  std::string pipeline;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  int retry_budget = 0;
  int retries = 0;  // total extra attempts across stages
  std::vector<std::pair<std::string, int>> retry_log;  // (stage, attempts)
  std::vector<Claim> claims;
  bool pass = false;
  std::string caveat = "characteristic-0 transfer not certified";

  void add(const std::string& name, json expected, json computed);
  void recompute_pass();
  json to_json() const;
  std::string serialize() const;  // canonical bytes
  static Certificate from_json(const json& j);
  static Certificate load(const std::string& path);
  void save(const std::string& path) const;
};

}  // namespace liaison

#endif
