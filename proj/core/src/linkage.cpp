#include "liaison/linkage.hpp"

#include <fstream>
#include <sstream>

namespace liaison {

void LiaisonSpec::validate() const {
  if (r < 3) throw std::invalid_argument("liaison: ambient dimension < 3");
  long long total = 0;
  for (const auto& p : sigma) {
    if (p.degree < 1 || p.count < 1)
      throw std::invalid_argument("liaison: malformed sigma");
    total += p.count;
  }
  if (total != r - 1)
    throw std::invalid_argument("liaison: sum of k_i must be r-1");
  if (d <= 0 || g < 0)
    throw std::invalid_argument("liaison: bad curve invariants");
}

int LiaisonSpec::forms_total() const {
  int t = 0;
  for (const auto& p : sigma) t += p.count;
  return t;
}

long long LiaisonSpec::sigma_weight() const {
  long long t = 0;
  for (const auto& p : sigma)
    t += static_cast<long long>(p.degree) * p.count;
  return t;
}

long long LiaisonSpec::ci_degree() const {
  long long t = 1;
  for (const auto& p : sigma)
    for (int i = 0; i < p.count; ++i) t *= p.degree;
  return t;
}

LiaisonSpec parse_sigma(int r, long long d, long long g,
                        const std::string& text) {
  LiaisonSpec spec;
  spec.r = r;
  spec.d = d;
  spec.g = g;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) {
    auto caret = part.find('^');
    SigmaPart p;
    if (caret == std::string::npos) {
      p.degree = std::stoi(part);
      p.count = 1;
    } else {
      p.degree = std::stoi(part.substr(0, caret));
      p.count = std::stoi(part.substr(caret + 1));
    }
    spec.sigma.push_back(p);
  }
  spec.validate();
  return spec;
}

LiaisonNumerics liaison_numerics(const LiaisonSpec& spec) {
  spec.validate();
  LiaisonNumerics out;
  const long long w = spec.sigma_weight();
  const long long excess = w - spec.r - 1;
  out.d_prime = spec.ci_degree() - spec.d;
  long long twice_gdiff = excess * (spec.d - out.d_prime);
  if (twice_gdiff % 2 != 0)
    throw std::invalid_argument("liaison numerics: non-integral genus");
  out.g_prime = spec.g - twice_gdiff / 2;
  out.nodes = excess * spec.d + 2 - 2 * spec.g;
  if (out.nodes < 0)
    throw std::invalid_argument("liaison numerics: negative node count");
  if (spec.single_block()) {
    const long long f = spec.sigma.front().degree;
    long long deg_s = 1;
    for (int i = 0; i < spec.r - 2; ++i) deg_s *= f;
    const long long kcoef = (spec.r - 2) * f - spec.r - 1;
    const long long c2 = 2 * spec.g - 2 - kcoef * spec.d;
    out.residual_self_intersection = f * f * deg_s - 2 * f * spec.d + c2;
  }
  return out;
}

long long expected_ideal_dim(int r, int m, long long d, long long g) {
  long long total = static_cast<long long>(
      binomial(static_cast<std::uint64_t>(r + m), static_cast<std::uint64_t>(m)));
  return total - (m * d + 1 - g);
}

LinkageResult link(const Ideal& I_C, const LiaisonSpec& spec, Rng rng,
                   const LinkOptions& opts) {
  spec.validate();
  const Ring& ring = I_C.ring();
  if (ring.nvars != spec.r + 1)
    throw std::invalid_argument("link: ring does not match spec ambient");
  LinkageResult res{{},
                    Ideal::zero(ring),
                    Ideal::zero(ring),
                    liaison_numerics(spec)};

  // Draw the subspaces.
  if (opts.fixed_subspace) {
    res.subspace = *opts.fixed_subspace;
    if (static_cast<int>(res.subspace.size()) != spec.forms_total())
      throw std::invalid_argument("link: fixed subspace has wrong size");
  } else {
    Rng draw = rng.child("subspace");
    for (const auto& part : spec.sigma) {
      auto basis = graded_piece_basis(I_C, part.degree);
      if (static_cast<int>(basis.size()) < part.count)
        throw RetryError("link/subspace",
                         "curve has too few forms of the required degree");
      auto chosen = random_subspace(I_C.fp(), basis,
                                    static_cast<std::size_t>(part.count),
                                    draw);
      for (auto& f : chosen) res.subspace.push_back(std::move(f));
    }
  }

  res.IB = Ideal(ring, res.subspace);
  {
    HilbertProfile bp = hilbert_profile(res.IB);
    if (bp.dimension != 1 || bp.degree != spec.ci_degree())
      throw RetryError("link/complete-intersection",
                       "chosen forms do not cut a curve of the right degree");
  }

  Ideal quotient = ideal_quotient(res.IB, I_C);
  res.ID = saturate(quotient, Ideal::irrelevant(ring));

  HilbertProfile dp = hilbert_profile(res.ID);
  res.measured_degree = dp.dimension == 1 ? dp.degree : -1;
  res.measured_pa = dp.dimension == 1 ? dp.pa : 0;
  if (dp.dimension != 1)
    throw RetryError("link/residual-dimension", "residual is not a curve");
  if (res.measured_degree != res.expected.d_prime)
    throw RetryError("link/residual-degree", "degree of D is off");
  if (res.measured_pa != res.expected.g_prime)
    throw RetryError("link/residual-genus", "arithmetic genus of D is off");

  res.dim_ID_1 = graded_piece_dim(res.ID, 1).dim;
  if (opts.check_nondegenerate && res.dim_ID_1 != 0)
    throw RetryError("link/nondegenerate", "residual lies in a hyperplane");

  if (opts.check_dim_f) {
    if (!spec.single_block())
      throw std::invalid_argument(
          "link: dim_f check needs a single-degree sigma");
    res.dim_ID_f =
        graded_piece_dim(res.ID, spec.sigma.front().degree).dim;
    if (res.dim_ID_f != spec.r - 1)
      throw RetryError("link/dim-f",
                       "h^0(I_D(f)) differs from r-1");
  } else if (spec.single_block()) {
    res.dim_ID_f =
        graded_piece_dim(res.ID, spec.sigma.front().degree).dim;
  }

  if (opts.check_smooth) {
    res.smooth = is_smooth(res.ID, spec.r - 1);
    if (!res.smooth)
      throw RetryError("link/smooth", "residual curve is singular");
  }

  if (opts.check_nodes) {
    Ideal sing = singular_scheme(res.IB, spec.r - 1);
    if (sing.is_unit_marker())
      throw RetryError("link/nodes", "complete intersection is smooth, "
                                     "expected nodes");
    HilbertProfile sp = hilbert_profile(sing);
    if (sp.dimension != 0)
      throw RetryError("link/nodes", "singular scheme is not 0-dimensional");
    res.node_degree = sp.degree;
    if (res.node_degree != res.expected.nodes)
      throw RetryError("link/nodes", "node count differs from the linkage "
                                     "formula");
  }
  return res;
}

PetriRank petri_rank(const Ideal& I_C, int f) {
  const int r = I_C.nvars() - 1;
  if (f * (r - 2) != r + 2)
    throw std::domain_error(
        "petri_rank: requires hypersurface degree f = (r+2)/(r-2)");
  GenerationCheck gen = generated_in_degree(I_C, f);
  PetriRank out;
  out.rank = gen.mu_rank;
  out.dim_source = (r + 1) * gen.dim_f;
  out.dim_target = gen.dim_f1;
  out.full = out.rank == std::min(out.dim_source, out.dim_target);
  return out;
}

UninodalSubspace uninodal_subspace(const Ideal& I_C, const ProjPoint& x,
                                   Rng rng) {
  const Fp& fp = I_C.fp();
  const int n = I_C.nvars();
  auto basis = graded_piece_basis(I_C, 3);
  const std::size_t b = basis.size();

  // I_x: forms vanishing at x.
  Matrix val(1, b);
  for (std::size_t j = 0; j < b; ++j) val.at(0, j) = eval_at(fp, basis[j], x);
  auto ker_x = kernel_basis(fp, val);
  UninodalSubspace out;
  out.dim_Ix = static_cast<int>(ker_x.size());
  if (out.dim_Ix != static_cast<int>(b) - 1)
    throw RetryError("uninodal/Ix", "point fails to impose one condition");

  std::vector<MultiPoly> Ix;
  for (const auto& v : ker_x) {
    MultiPoly acc(n);
    for (std::size_t j = 0; j < b; ++j)
      if (v[j] != 0) acc = mp_add(fp, acc, mp_scale(fp, basis[j], v[j]));
    Ix.push_back(std::move(acc));
  }

  // I_{2,x}: gradient vanishes as well.
  Matrix grad(static_cast<std::size_t>(n), Ix.size());
  for (std::size_t j = 0; j < Ix.size(); ++j)
    for (int v = 0; v < n; ++v)
      grad.at(static_cast<std::size_t>(v), j) =
          eval_at(fp, mp_derivative(fp, Ix[j], v), x);
  auto ker_2 = kernel_basis(fp, grad);
  out.dim_I2x = static_cast<int>(ker_2.size());
  if (out.dim_I2x != 1)
    throw RetryError("uninodal/I2x",
                     "singular-at-x subspace is not a line");

  MultiPoly singular_form(n);
  for (std::size_t j = 0; j < Ix.size(); ++j)
    if (ker_2[0][j] != 0)
      singular_form =
          mp_add(fp, singular_form, mp_scale(fp, Ix[j], ker_2[0][j]));

  // Two random forms of I_x completing a 3-dimensional space.
  Rng draw = rng.child("lift");
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<MultiPoly> forms{singular_form};
    Rng local = draw.child(static_cast<std::uint64_t>(attempt));
    for (int pick = 0; pick < 2; ++pick) {
      MultiPoly acc(n);
      for (std::size_t j = 0; j < Ix.size(); ++j)
        acc = mp_add(fp, acc, mp_scale(fp, Ix[j], local.fe(fp)));
      forms.push_back(std::move(acc));
    }
    // Verify independence inside the degree-3 piece.
    auto monos = monomials_of_degree(n, 3);
    Matrix chk(3, monos.size());
    for (std::size_t r = 0; r < 3; ++r) {
      auto dense = mp_dense_coeffs(forms[r], monos);
      for (std::size_t c = 0; c < monos.size(); ++c) chk.at(r, c) = dense[c];
    }
    if (rref(fp, chk).rank == 3) {
      out.forms = std::move(forms);
      return out;
    }
  }
  throw RetryError("uninodal/lift", "could not complete the subspace");
}

void Certificate::add(const std::string& name, json expected, json computed) {
  Claim c;
  c.name = name;
  c.pass = expected == computed;
  c.expected = std::move(expected);
  c.computed = std::move(computed);
  claims.push_back(std::move(c));
}

void Certificate::recompute_pass() {
  pass = true;
  for (const auto& c : claims) pass = pass && c.pass;
}

json Certificate::to_json() const {
  json j;
  j["pipeline"] = pipeline;
  j["prime"] = prime;
  j["seed"] = seed;
  j["retry_budget"] = retry_budget;
  j["retries"] = retries;
  json log = json::array();
  for (const auto& [stage, attempts] : retry_log) {
    json entry;
    entry["stage"] = stage;
    entry["attempts"] = attempts;
    log.push_back(entry);
  }
  j["retry_log"] = log;
  json cl = json::array();
  for (const auto& c : claims) {
    json entry;
    entry["name"] = c.name;
    entry["expected"] = c.expected;
    entry["computed"] = c.computed;
    entry["pass"] = c.pass;
    cl.push_back(entry);
  }
  j["claims"] = cl;
  j["pass"] = pass;
  j["caveat"] = caveat;
  return j;
}

std::string Certificate::serialize() const { return to_json().dump(2) + "\n"; }

Certificate Certificate::from_json(const json& j) {
  Certificate c;
  c.pipeline = j.at("pipeline").get<std::string>();
  c.prime = j.at("prime").get<std::uint32_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.retry_budget = j.value("retry_budget", 0);
  c.retries = j.at("retries").get<int>();
  for (const auto& entry : j.at("retry_log"))
    c.retry_log.emplace_back(entry.at("stage").get<std::string>(),
                             entry.at("attempts").get<int>());
  for (const auto& entry : j.at("claims")) {
    Claim cl;
    cl.name = entry.at("name").get<std::string>();
    cl.expected = entry.at("expected");
    cl.computed = entry.at("computed");
    cl.pass = entry.at("pass").get<bool>();
    c.claims.push_back(std::move(cl));
  }
  c.pass = j.at("pass").get<bool>();
  c.caveat = j.value("caveat", "");
  return c;
}

Certificate Certificate::load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open certificate: " + path);
  json j = json::parse(is);
  return from_json(j);
}

void Certificate::save(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write certificate: " + path);
  os << serialize();
}

}  // namespace liaison
