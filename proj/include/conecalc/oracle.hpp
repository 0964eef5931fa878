#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conecalc/opspace.hpp"
#include "conecalc/space.hpp"

namespace conecalc {
namespace oracle {

// Definition-level disjointness: {v1+v2, -v1-v2} and {v1-v2, v2-v1} have
// the same upper bounds. Decided by vertex/ray enumeration of the two
// upper-bound polyhedra.
bool disjoint_by_definition(const OrderedSpace& s, const RatVector& v1,
                            const RatVector& v2);

// Same check inside the operator space, with the dd-computed facet rows
// of the operator cone as the dual determining set.
bool disjoint_by_definition_ops(const OperatorSpaceCtx& ctx,
                                const Operator& t1, const Operator& t2);

struct ExtremalityReport {
  bool passed = false;
  std::size_t sprime_count = 0;
  std::size_t dd_ray_count = 0;
  std::vector<RatVector> sprime_not_extremal;  // rows missing from dd rays
  std::vector<RatVector> extra_dd_rays;        // dd rays not in S'
};

// Recomputes the extremal rays of the dual operator cone by double
// description and matches them two-sidedly against the S' rows.
ExtremalityReport extremality_audit(const OperatorSpaceCtx& ctx);

struct DensityFailure {
  std::uint64_t sample = 0;
  std::size_t atom = 0;
  RatVector w;
  bool unbounded = false;
  Rational attained_min;  // meaningful when !unbounded
};

struct DensityReport {
  bool passed = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<DensityFailure> failures;
};

// Order density of the functional representation: for sampled integer
// vectors w over S', the infimum of coordinate k over all Phi-images
// dominating w must equal w_k, for every k. Decided by vertex
// enumeration of {z : phi_matrix z >= w}.
DensityReport order_density_spot_check(const OperatorSpaceCtx& ctx,
                                       std::size_t samples,
                                       std::uint64_t seed);

}  // namespace oracle
}  // namespace conecalc
