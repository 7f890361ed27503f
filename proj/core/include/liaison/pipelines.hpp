#ifndef LIAISON_PIPELINES_HPP
#define LIAISON_PIPELINES_HPP

#include <map>

#include "liaison/divisor.hpp"
#include "liaison/linkage.hpp"

namespace liaison {

struct PipelineConfig {
  std::string pipeline;  // genus14 | genus13 | genus12 | genus11 | grassmann8
  std::uint32_t prime = 10007;
  std::uint64_t seed = 0;
  int retries = 5;  // retry budget per randomized stage
};

struct PipelineOutput {
  Certificate cert;
  std::map<std::string, Ideal> ideals;  // dumps keyed by stage name
};

PipelineOutput run_genus14(const PipelineConfig& cfg);
PipelineOutput run_genus12(const PipelineConfig& cfg);
PipelineOutput run_genus11(const PipelineConfig& cfg);
PipelineOutput run_genus13(const PipelineConfig& cfg);
PipelineOutput run_grassmann8(const PipelineConfig& cfg);

/// Dispatch on cfg.pipeline; throws std::invalid_argument for unknown ids.
PipelineOutput run_pipeline(const PipelineConfig& cfg);

std::vector<std::string> pipeline_names();

/// The rational surface shared by the genus-14 and genus-12 pipelines:
/// the blow-up of the plane in 11 points embedded by sextics with five
/// double and six simple base points.
struct SurfaceX {
  std::vector<PlanePoint> l_points;  // 5 double points
  std::vector<PlanePoint> e_points;  // 6 simple points
  PlaneLinearSystem sextics;         // dim 7, the embedding system
  MultiPoly d1_conic;  // the conic through l1, l2, e1, e2, e6
};

SurfaceX build_surface_x(const Fp& fp, Rng rng);

/// Standard divisor classes on Pic X (order: P; L1..L5; E1..E6).
DivisorClass surface_x_hyperplane();
DivisorClass surface_x_canonical();
DivisorClass surface_x_pencil_r();  // conics through l1,l2,e1,e2
DivisorClass surface_x_d1();        // conic through l1,l2,e1,e2,e6

}  // namespace liaison

#endif
