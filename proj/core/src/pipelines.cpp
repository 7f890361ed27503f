#include "liaison/pipelines.hpp"

#include <algorithm>
#include <set>

namespace liaison {

namespace {

struct StageFailure : std::runtime_error {
  std::string stage;
  StageFailure(std::string stage_, const std::string& what)
      : std::runtime_error(what), stage(std::move(stage_)) {}
};

// Runs fn with fresh sub-seeds until it stops throwing retryable errors,
// recording the attempt count; genericity failures past the budget abort
// the pipeline with the failed condition attached.
template <typename F>
auto with_retries(Certificate& cert, const std::string& name, Rng base,
                  int budget, F&& fn) -> decltype(fn(base)) {
  std::string last;
  for (int attempt = 0; attempt < budget; ++attempt) {
    try {
      auto result = fn(base.child(static_cast<std::uint64_t>(attempt)));
      cert.retry_log.emplace_back(name, attempt + 1);
      cert.retries += attempt;
      return result;
    } catch (const RetryError& e) {
      last = e.what();
    } catch (const UnluckySampleError& e) {
      last = e.what();
    } catch (const RegularityError& e) {
      last = e.what();
    }
  }
  cert.retry_log.emplace_back(name, budget);
  cert.retries += budget - 1;
  throw StageFailure(name, last);
}

json jb(bool v) { return json(v); }
json ji(long long v) { return json(v); }

void fail_certificate(Certificate& cert, const StageFailure& e) {
  cert.add("stage " + e.stage, json("success"), json(e.what()));
}

Fp make_fp(const PipelineConfig& cfg) { return Fp(cfg.prime); }

void init_cert(Certificate& cert, const PipelineConfig& cfg,
               const std::string& name) {
  cert.pipeline = name;
  cert.prime = cfg.prime;
  cert.seed = cfg.seed;
  cert.retry_budget = cfg.retries;
}

// ---------------------------------------------------------------------
// The surface X: blow-up of the plane in 11 points, embedded by sextics.
// ---------------------------------------------------------------------

Fe det3(const Fp& fp, const PlanePoint& a, const PlanePoint& b,
        const PlanePoint& c) {
  Fe t0 = fp.mul(a[0], fp.sub(fp.mul(b[1], c[2]), fp.mul(b[2], c[1])));
  Fe t1 = fp.mul(a[1], fp.sub(fp.mul(b[0], c[2]), fp.mul(b[2], c[0])));
  Fe t2 = fp.mul(a[2], fp.sub(fp.mul(b[0], c[1]), fp.mul(b[1], c[0])));
  return fp.add(fp.sub(t0, t1), t2);
}

// Determinant of the symmetric matrix of a ternary conic.
Fe conic_det(const Fp& fp, const MultiPoly& conic) {
  auto coeff = [&](int i, int j) {
    Monomial m = Monomial::var(i).mul(Monomial::var(j));
    for (const auto& t : conic.terms())
      if (t.m == m) return t.c;
    return Fe{0};
  };
  const Fe two_inv = fp.inv(2 % fp.modulus());
  Fe a = coeff(0, 0), b = coeff(1, 1), c = coeff(2, 2);
  Fe d = fp.mul(coeff(0, 1), two_inv);
  Fe e = fp.mul(coeff(0, 2), two_inv);
  Fe f = fp.mul(coeff(1, 2), two_inv);
  // det [[a,d,e],[d,b,f],[e,f,c]]
  Fe t0 = fp.mul(a, fp.sub(fp.mul(b, c), fp.mul(f, f)));
  Fe t1 = fp.mul(d, fp.sub(fp.mul(d, c), fp.mul(f, e)));
  Fe t2 = fp.mul(e, fp.sub(fp.mul(d, f), fp.mul(b, e)));
  return fp.add(fp.sub(t0, t1), t2);
}

}  // namespace

DivisorClass surface_x_hyperplane() {
  return DivisorClass::plane_blowup(6, {2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1});
}
DivisorClass surface_x_canonical() { return DivisorClass::canonical(11); }
DivisorClass surface_x_pencil_r() {
  return DivisorClass::plane_blowup(2, {1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0});
}
DivisorClass surface_x_d1() {
  return DivisorClass::plane_blowup(2, {1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1});
}

SurfaceX build_surface_x(const Fp& fp, Rng rng) {
  SurfaceX X;
  std::set<PlanePoint> used;
  auto draw_point = [&](Rng& r) {
    for (;;) {
      PlanePoint p{r.fe(fp), r.fe(fp), r.fe(fp)};
      if ((p[0] | p[1] | p[2]) == 0) continue;
      p = normalize_point(fp, p);
      if (used.insert(p).second) return p;
    }
  };
  Rng draw = rng.child("points");
  for (int i = 0; i < 5; ++i) X.l_points.push_back(draw_point(draw));
  for (int i = 0; i < 6; ++i) X.e_points.push_back(draw_point(draw));

  // The genericity facts the construction consumes explicitly.
  if (det3(fp, X.l_points[2], X.l_points[3], X.l_points[4]) == 0)
    throw RetryError("surface_x", "l3, l4, l5 are collinear");

  {
    // The pencil of conics through l1, l2, e1, e2 must be a pencil.
    std::vector<PointWithMultiplicity> base{
        {X.l_points[0], 1}, {X.l_points[1], 1}, {X.e_points[0], 1},
        {X.e_points[1], 1}};
    PlaneLinearSystem pencil = plane_system_basis(fp, 2, base, 2);
    if (pencil.basis.size() != 2)
      throw RetryError("surface_x", "conics through l1,l2,e1,e2 are not a "
                                    "pencil");
  }
  {
    // The conic through l1, l2, e1, e2, e6 must be unique and irreducible.
    std::vector<PointWithMultiplicity> base{
        {X.l_points[0], 1}, {X.l_points[1], 1}, {X.e_points[0], 1},
        {X.e_points[1], 1}, {X.e_points[5], 1}};
    PlaneLinearSystem sys = plane_system_basis(fp, 2, base, 1);
    if (sys.basis.size() != 1)
      throw RetryError("surface_x", "conic through l1,l2,e1,e2,e6 is not "
                                    "unique");
    if (conic_det(fp, sys.basis.front()) == 0)
      throw RetryError("surface_x", "conic through l1,l2,e1,e2,e6 is "
                                    "reducible");
    X.d1_conic = sys.basis.front();
  }

  std::vector<PointWithMultiplicity> cond;
  for (const auto& p : X.l_points) cond.push_back({p, 2});
  for (const auto& p : X.e_points) cond.push_back({p, 1});
  X.sextics = plane_system_basis(fp, 6, cond, 7);
  if (X.sextics.basis.size() != 7)
    throw RetryError("surface_x", "sextic system has unexpected dimension");
  return X;
}

namespace {

// Shared by the genus-14 and genus-12 pipelines: a smooth curve in the
// class 2H - subtrahend on X, interpolated in the listed form degrees.
struct EmbeddedCurve {
  Ideal ideal;
  ClassInvariants ci;
};

EmbeddedCurve build_curve_on_x(const Fp& fp, Certificate& cert, Rng root,
                               int budget, const SurfaceX& X,
                               const DivisorClass& curve_class,
                               const std::vector<int>& form_degrees) {
  const DivisorClass K = surface_x_canonical();
  const DivisorClass H = surface_x_hyperplane();
  ClassInvariants ci = class_invariants(curve_class, K, H);
  const long long sys_dim = expected_system_dim(curve_class, K);
  const int r = 6;
  Ring ring{fp, r + 1};

  MultiPoly plane_model = with_retries(
      cert, "curve_system", root.child("curve"), budget, [&](Rng rg) {
        std::vector<PointWithMultiplicity> cond;
        for (std::size_t i = 0; i < 5; ++i)
          cond.push_back({X.l_points[i],
                          static_cast<int>(curve_class.c[1 + i])});
        for (std::size_t j = 0; j < 6; ++j)
          cond.push_back({X.e_points[j],
                          static_cast<int>(curve_class.c[6 + j])});
        PlaneLinearSystem sys = plane_system_basis(
            fp, static_cast<int>(curve_class.c[0]), cond, sys_dim);
        if (static_cast<long long>(sys.basis.size()) != sys_dim)
          throw RetryError("curve_system",
                           "plane system has unexpected dimension");
        return random_subspace(fp, sys.basis, 1, rg).front();
      });

  ParametrizedSurface phi{X.sextics.basis};
  Ideal I_C = with_retries(
      cert, "interpolate_curve", root.child("interpolate"), budget,
      [&](Rng rg) {
        auto sampler = curve_image_sampler(fp, plane_model, phi, rg);
        std::vector<MultiPoly> gens;
        for (int d : form_degrees) {
          auto forms = interpolate_ideal(fp, r + 1, d, sampler);
          if (static_cast<long long>(forms.size()) !=
              expected_ideal_dim(r, d, ci.degree, ci.pa))
            throw RetryError("interpolate_curve",
                             "form count differs from Riemann-Roch");
          for (auto& f : forms) gens.push_back(std::move(f));
        }
        Ideal I = saturate(Ideal(ring, std::move(gens)),
                           Ideal::irrelevant(ring));
        HilbertProfile p = hilbert_profile(I);
        if (p.dimension != 1 || p.degree != ci.degree || p.pa != ci.pa)
          throw RetryError("interpolate_curve",
                           "interpolated curve has wrong invariants");
        return I;
      });
  return EmbeddedCurve{std::move(I_C), ci};
}

void curve_claims(Certificate& cert, const std::string& who, const Ideal& I,
                  long long exp_degree, long long exp_pa, int smooth_codim) {
  HilbertProfile p = hilbert_profile(I);
  cert.add("degree of " + who, ji(exp_degree), ji(p.degree));
  cert.add("pa of " + who, ji(exp_pa), ji(p.pa));
  cert.add(who + " nondegenerate", ji(0), ji(graded_piece_dim(I, 1).dim));
  cert.add(who + " smooth", jb(true), jb(is_smooth(I, smooth_codim)));
}

void link_claims(Certificate& cert, const LiaisonSpec& spec,
                 const LiaisonNumerics& num, const LinkageResult& L) {
  cert.add("degree of D", ji(num.d_prime), ji(L.measured_degree));
  cert.add("pa of D", ji(num.g_prime), ji(L.measured_pa));
  cert.add("dim I_D in degree " +
               std::to_string(spec.sigma.front().degree),
           ji(spec.r - 1), ji(L.dim_ID_f));
  cert.add("dim R/I_D in degree 1", ji(spec.r + 1),
           ji(spec.r + 1 - L.dim_ID_1));
  cert.add("D nondegenerate", ji(0), ji(L.dim_ID_1));
  cert.add("D smooth", jb(true), jb(L.smooth));
  if (num.residual_self_intersection)
    cert.add("D connected (D^2 > 0 on linking surface)", jb(true),
             jb(*num.residual_self_intersection > 0));
  cert.add("nodes of C union D", ji(num.nodes), ji(L.node_degree));
}

PipelineOutput run_genus14_12(const PipelineConfig& cfg, bool genus14) {
  PipelineOutput out;
  Certificate& cert = out.cert;
  init_cert(cert, cfg, genus14 ? "genus14" : "genus12");
  Fp fp = make_fp(cfg);
  Rng root(cfg.seed);
  try {
    SurfaceX X = with_retries(cert, "surface_x", root.child("X"),
                              cfg.retries,
                              [&](Rng r) { return build_surface_x(fp, r); });

    const DivisorClass H = surface_x_hyperplane();
    const DivisorClass K = surface_x_canonical();
    const DivisorClass sub =
        genus14 ? surface_x_pencil_r() : surface_x_d1();
    const DivisorClass curve_class = H.scaled(2).minus(sub);
    const std::vector<int> degrees = genus14 ? std::vector<int>{2}
                                             : std::vector<int>{2, 3};

    EmbeddedCurve C =
        build_curve_on_x(fp, cert, root, cfg.retries, X, curve_class,
                         degrees);
    out.ideals.emplace("I_C", C.ideal);

    cert.add("C connected (C^2 > 0 on X)", jb(true),
             jb(C.ci.self_intersection > 0));
    curve_claims(cert, "C", C.ideal, C.ci.degree, C.ci.pa, 5);
    cert.add("dim I_C in degree 2",
             ji(expected_ideal_dim(6, 2, C.ci.degree, C.ci.pa)),
             ji(graded_piece_dim(C.ideal, 2).dim));
    cert.add("dim I_C in degree 3",
             ji(expected_ideal_dim(6, 3, C.ci.degree, C.ci.pa)),
             ji(graded_piece_dim(C.ideal, 3).dim));

    if (genus14) {
      GenerationCheck gen = generated_in_degree(C.ideal, 2);
      cert.add("I_C generated by quadrics", jb(true), jb(gen.generated));
      PetriRank pr = petri_rank(C.ideal, 2);
      long long target = expected_ideal_dim(6, 3, C.ci.degree, C.ci.pa);
      cert.add("mu_C rank", ji(std::min<long long>(7 * gen.dim_f, target)),
               ji(pr.rank));
      cert.add("mu_C full rank", jb(true), jb(pr.full));
    }

    LiaisonSpec spec{6, {{2, 5}}, C.ci.degree, C.ci.pa};
    LiaisonNumerics num = liaison_numerics(spec);
    LinkageResult L =
        with_retries(cert, "link", root.child("link"), cfg.retries,
                     [&](Rng r) { return link(C.ideal, spec, r); });
    out.ideals.emplace("I_B", L.IB);
    out.ideals.emplace("I_D", L.ID);
    link_claims(cert, spec, num, L);
  } catch (const StageFailure& e) {
    fail_certificate(cert, e);
  }
  cert.recompute_pass();
  return out;
}

// K3 material shared by the genus-11 and genus-13 pipelines.
struct K3Stage {
  K3WithCurve k3;
  ProjPoint e;
};

K3Stage build_k3_stage(const Fp& fp, Certificate& cert, Rng root,
                       int budget) {
  K3Stage st{
      with_retries(cert, "k3", root.child("k3"), budget,
                   [&](Rng r) { return k3_with_curve(fp, r); }),
      {}};
  Ring ring{fp, 6};
  st.e = with_retries(
      cert, "pick_e", root.child("slice"), budget, [&](Rng r) {
        auto lines = random_linear_forms(ring, 2, r);
        std::vector<MultiPoly> gens = st.k3.surface.gens();
        for (auto& l : lines) gens.push_back(std::move(l));
        std::vector<ProjPoint> pts;
        try {
          pts = rational_points_dim0(Ideal(ring, std::move(gens)));
        } catch (const std::domain_error& e) {
          throw RetryError("pick_e", e.what());
        }
        for (const auto& p : pts)
          if (!on_variety(st.k3.curve, p)) return p;
        throw RetryError("pick_e", "no rational slice point off the curve");
      });
  return st;
}

// Cubic section of X' through L' with prescribed behaviour at e; returns
// the residual curve in |3H' - L'|.
Ideal residual_cubic_section(const Fp& fp, const K3Stage& st, Rng rg,
                             bool nodal_at_e) {
  Ring ring{fp, 6};
  auto basis = graded_piece_basis(st.k3.curve, 3);
  const std::size_t b = basis.size();
  std::size_t rows = nodal_at_e ? 7 : 1;
  Matrix cond(rows, b);
  for (std::size_t j = 0; j < b; ++j) {
    cond.at(0, j) = eval_at(fp, basis[j], st.e);
    if (nodal_at_e)
      for (int v = 0; v < 6; ++v)
        cond.at(1 + static_cast<std::size_t>(v), j) =
            eval_at(fp, mp_derivative(fp, basis[j], v), st.e);
  }
  auto ker = kernel_basis(fp, cond);
  if (ker.empty()) throw RetryError("cubic_section", "no cubic satisfies "
                                                     "the conditions at e");
  std::vector<MultiPoly> pool;
  for (const auto& v : ker) {
    MultiPoly acc(6);
    for (std::size_t j = 0; j < b; ++j)
      if (v[j] != 0) acc = mp_add(fp, acc, mp_scale(fp, basis[j], v[j]));
    pool.push_back(std::move(acc));
  }
  MultiPoly F = random_subspace(fp, pool, 1, rg).front();

  std::vector<MultiPoly> bgens = st.k3.surface.gens();
  bgens.push_back(F);
  Ideal IB(ring, std::move(bgens));
  Ideal residual = saturate(ideal_quotient(IB, st.k3.curve),
                            Ideal::irrelevant(ring));
  HilbertProfile p = hilbert_profile(residual);
  // class 3H' - L' on the K3: degree 3*8-10, genus (3H-L)^2/2 + 1 = 9
  if (p.dimension != 1 || p.degree != 14 || p.pa != 9)
    throw RetryError("cubic_section", "residual has wrong invariants");
  if (!on_variety(residual, st.e))
    throw RetryError("cubic_section", "residual misses e");
  return residual;
}

PipelineOutput run_genus11_impl(const PipelineConfig& cfg) {
  PipelineOutput out;
  Certificate& cert = out.cert;
  init_cert(cert, cfg, "genus11");
  Fp fp = make_fp(cfg);
  Rng root(cfg.seed);
  try {
    K3Stage st = build_k3_stage(fp, cert, root, cfg.retries);
    out.ideals.emplace("I_Lprime", st.k3.curve);
    out.ideals.emplace("I_Xprime", st.k3.surface);

    {
      HilbertProfile lp = hilbert_profile(st.k3.curve);
      cert.add("degree of L'", ji(3 * 4 - 2), ji(lp.degree));
      cert.add("pa of L'", ji((4 - 1) * (4 - 2) / 2), ji(lp.pa));
      cert.add("dim I_L' in degree 2",
               ji(expected_ideal_dim(5, 2, lp.degree, lp.pa)),
               ji(graded_piece_dim(st.k3.curve, 2).dim));
      cert.add("X' smooth", jb(true), jb(is_smooth(st.k3.surface, 3)));
      cert.add("X' contains L'", jb(true),
               jb(ideal_contains(st.k3.curve, st.k3.surface)));
    }

    // Projected septic surface X and its cubics.
    Ideal IX4 = project_from_point(st.k3.surface, st.e);
    out.ideals.emplace("I_X", IX4);
    cert.add("dim I_X in degree 2", ji(0), ji(graded_piece_dim(IX4, 2).dim));
    cert.add("dim I_X in degree 3", ji(3), ji(graded_piece_dim(IX4, 3).dim));
    cert.add("I_X generated by cubics", jb(true),
             jb(generated_in_degree(IX4, 3).generated));

    Ideal IC5 = with_retries(
        cert, "cubic_section", root.child("section"), cfg.retries,
        [&](Rng r) { return residual_cubic_section(fp, st, r, false); });
    curve_claims(cert, "C'", IC5, 14, 9, 4);
    cert.add("e on C'", jb(true), jb(on_variety(IC5, st.e)));

    Ideal IC = project_from_point(IC5, st.e);
    out.ideals.emplace("I_C", IC);
    ClassInvariants cinv;
    cinv.degree = 13;
    cinv.pa = 9;
    curve_claims(cert, "C", IC, cinv.degree, cinv.pa, 3);
    cert.add("dim I_C in degree 3",
             ji(expected_ideal_dim(4, 3, cinv.degree, cinv.pa)),
             ji(graded_piece_dim(IC, 3).dim));

    LiaisonSpec spec{4, {{3, 3}}, cinv.degree, cinv.pa};
    LiaisonNumerics num = liaison_numerics(spec);
    LinkageResult L =
        with_retries(cert, "link", root.child("link"), cfg.retries,
                     [&](Rng r) { return link(IC, spec, r); });
    out.ideals.emplace("I_B", L.IB);
    out.ideals.emplace("I_D", L.ID);
    link_claims(cert, spec, num, L);
  } catch (const StageFailure& e) {
    fail_certificate(cert, e);
  }
  cert.recompute_pass();
  return out;
}

PipelineOutput run_genus13_impl(const PipelineConfig& cfg) {
  PipelineOutput out;
  Certificate& cert = out.cert;
  init_cert(cert, cfg, "genus13");
  Fp fp = make_fp(cfg);
  Rng root(cfg.seed);
  try {
    K3Stage st = build_k3_stage(fp, cert, root, cfg.retries);

    // Nodal cubic section through L' and the uninodal residual A'.
    Ideal IA5 = with_retries(
        cert, "nodal_section", root.child("section"), cfg.retries,
        [&](Rng r) {
          Ideal cand = residual_cubic_section(fp, st, r, true);
          Ideal sing = singular_scheme(cand, 4);
          if (sing.is_unit_marker())
            throw RetryError("nodal_section", "residual is smooth, "
                                              "expected a node at e");
          HilbertProfile sp = hilbert_profile(sing);
          if (sp.dimension != 0 || sp.degree != 1)
            throw RetryError("nodal_section",
                             "singular scheme is not a single point");
          auto pts = rational_points_dim0(sing);
          if (pts.size() != 1 ||
              pts.front() != normalize_proj(fp, st.e))
            throw RetryError("nodal_section", "node is not at e");
          return cand;
        });
    out.ideals.emplace("I_Aprime", IA5);
    curve_claims(cert, "A'", IA5, 14, 9, 4);
    cert.add("A' singular scheme degree", ji(1), ji(1));

    Ideal IA = with_retries(
        cert, "project_a", root.child("project"), cfg.retries, [&](Rng) {
          Ideal I = project_from_point(IA5, st.e);
          HilbertProfile p = hilbert_profile(I);
          if (p.dimension != 1 || p.degree != 12 || p.pa != 8)
            throw RetryError("project_a",
                             "projected curve has wrong invariants");
          if (!is_smooth(I, 3))
            throw RetryError("project_a", "projected curve is singular");
          return I;
        });
    out.ideals.emplace("I_C", IA);
    curve_claims(cert, "A", IA, 12, 8, 3);
    cert.add("dim I_A in degree 3", ji(expected_ideal_dim(4, 3, 12, 8)),
             ji(graded_piece_dim(IA, 3).dim));

    // Prescribed node location x and the uninodal subspace.
    struct NodePlan {
      ProjPoint x;
      UninodalSubspace V;
    };
    NodePlan plan = with_retries(
        cert, "uninodal", root.child("uninodal"), cfg.retries, [&](Rng r) {
          for (int tries = 0; tries < 32; ++tries) {
            ProjPoint x{r.fe(fp), r.fe(fp), r.fe(fp), r.fe(fp), r.fe(fp)};
            bool zero = true;
            for (Fe c : x)
              if (c) zero = false;
            if (zero || on_variety(IA, x)) continue;
            x = normalize_proj(fp, x);
            return NodePlan{x, uninodal_subspace(IA, x, r)};
          }
          throw RetryError("uninodal", "no usable point found");
        });
    cert.add("dim I_x", ji(expected_ideal_dim(4, 3, 12, 8) - 1),
             ji(plan.V.dim_Ix));
    cert.add("dim I_2x", ji(1), ji(plan.V.dim_I2x));

    LiaisonSpec spec{4, {{3, 3}}, 12, 8};
    LiaisonNumerics num = liaison_numerics(spec);
    struct Linked {
      LinkageResult L;
      std::vector<ProjPoint> sing_points;
      NodeCheck node;
      long long sing_degree = -1;
    };
    Linked linked = with_retries(
        cert, "link", root.child("link"), cfg.retries, [&](Rng r) {
          LinkOptions opts;
          opts.check_smooth = false;
          opts.check_dim_f = false;
          opts.check_nodes = false;
          opts.fixed_subspace = plan.V.forms;
          Linked res{link(IA, spec, r, opts), {}, {}, -1};
          Ideal sing = singular_scheme(res.L.ID, 3);
          if (sing.is_unit_marker())
            throw RetryError("link/uninodal",
                             "residual is smooth, expected one node");
          HilbertProfile sp = hilbert_profile(sing);
          if (sp.dimension != 0)
            throw RetryError("link/uninodal",
                             "singular scheme is not 0-dimensional");
          res.sing_degree = sp.degree;
          res.sing_points = rational_points_dim0(sing);
          res.node = ordinary_node_at(res.L.ID, plan.x, 3);
          if (res.sing_degree != 1 || res.sing_points.size() != 1 ||
              res.sing_points.front() != plan.x || !res.node.ok)
            throw RetryError("link/uninodal",
                             "residual node is not the prescribed ordinary "
                             "node");
          return res;
        });
    out.ideals.emplace("I_B", linked.L.IB);
    out.ideals.emplace("I_D", linked.L.ID);

    cert.add("degree of D", ji(num.d_prime), ji(linked.L.measured_degree));
    cert.add("pa of D", ji(num.g_prime), ji(linked.L.measured_pa));
    cert.add("D nondegenerate", ji(0), ji(linked.L.dim_ID_1));
    cert.add("singular scheme degree", ji(1), ji(linked.sing_degree));
    cert.add("singular point is the prescribed x", jb(true),
             jb(linked.sing_points.size() == 1 &&
                linked.sing_points.front() == plan.x));
    cert.add("ordinary node (corank 1, cone rank 2)", jb(true),
             jb(linked.node.ok));
    cert.add("geometric genus of D", ji(num.g_prime - 1),
             ji(linked.L.measured_pa - linked.sing_degree));
    if (num.residual_self_intersection)
      cert.add("D connected (D^2 > 0 on linking surface)", jb(true),
               jb(*num.residual_self_intersection > 0));
  } catch (const StageFailure& e) {
    fail_certificate(cert, e);
  }
  cert.recompute_pass();
  return out;
}

PipelineOutput run_grassmann8_impl(const PipelineConfig& cfg) {
  PipelineOutput out;
  Certificate& cert = out.cert;
  init_cert(cert, cfg, "grassmann8");
  Fp fp = make_fp(cfg);
  Rng root(cfg.seed);
  try {
    GrassmannSlice slice = with_retries(
        cert, "grassmann", root.child("grassmann"), cfg.retries,
        [&](Rng r) { return grassmann_slice(fp, r); });
    out.ideals.emplace("I_C", slice.curve);

    const long long genus = 8;
    const long long degree = 2 * genus - 2;
    HilbertProfile p = hilbert_profile(slice.curve);
    cert.add("degree", ji(degree), ji(p.degree));
    cert.add("pa", ji(genus), ji(p.pa));
    cert.add("quadrics through slice",
             ji(expected_ideal_dim(7, 2, degree, genus)),
             ji(slice.quadric_count));
    cert.add("nondegenerate", ji(0),
             ji(graded_piece_dim(slice.curve, 1).dim));
    cert.add("smooth", jb(true), jb(is_smooth(slice.curve, 6)));
  } catch (const StageFailure& e) {
    fail_certificate(cert, e);
  }
  cert.recompute_pass();
  return out;
}

}  // namespace

PipelineOutput run_genus14(const PipelineConfig& cfg) {
  return run_genus14_12(cfg, true);
}
PipelineOutput run_genus12(const PipelineConfig& cfg) {
  return run_genus14_12(cfg, false);
}
PipelineOutput run_genus11(const PipelineConfig& cfg) {
  return run_genus11_impl(cfg);
}
PipelineOutput run_genus13(const PipelineConfig& cfg) {
  return run_genus13_impl(cfg);
}
PipelineOutput run_grassmann8(const PipelineConfig& cfg) {
  return run_grassmann8_impl(cfg);
}

PipelineOutput run_pipeline(const PipelineConfig& cfg) {
  if (cfg.pipeline == "genus14") return run_genus14(cfg);
  if (cfg.pipeline == "genus12") return run_genus12(cfg);
  if (cfg.pipeline == "genus11") return run_genus11(cfg);
  if (cfg.pipeline == "genus13") return run_genus13(cfg);
  if (cfg.pipeline == "grassmann8") return run_grassmann8(cfg);
  throw std::invalid_argument("unknown pipeline: " + cfg.pipeline);
}

std::vector<std::string> pipeline_names() {
  return {"genus14", "genus13", "genus12", "genus11", "grassmann8"};
}

}  // namespace liaison
