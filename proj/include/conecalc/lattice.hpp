#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conecalc/opspace.hpp"
#include "conecalc/space.hpp"

namespace conecalc {

// A band of the operator space in its functional representation:
// the subspace {T : phi_a(T) = 0 for every atom a outside support}.
struct BandDescriptor {
  std::vector<std::size_t> support;   // sorted atom indices
  std::vector<RatVector> basis;       // vectorized operators
};

bool disjoint_ops(const OperatorSpaceCtx& ctx, const Operator& t1,
                  const Operator& t2);

// {T : T disjoint from every element of ops}, as a band-shaped subspace.
BandDescriptor disjoint_complement(const OperatorSpaceCtx& ctx,
                                   const std::vector<Operator>& ops);
BandDescriptor disjoint_complement_span(const OperatorSpaceCtx& ctx,
                                        const std::vector<RatVector>& span);

BandDescriptor band_closure(const OperatorSpaceCtx& ctx,
                            const std::vector<Operator>& ops);
bool is_band(const OperatorSpaceCtx& ctx, const std::vector<Operator>& ops);

struct BandEnumeration {
  std::vector<BandDescriptor> bands;
  bool truncated = false;
};

// All bands, i.e. all fixed points of the double disjoint-complement map.
// Walks the closure lattice of achievable supports instead of raw subset
// enumeration; `limit` caps the number of explored supports.
BandEnumeration enumerate_bands(const OperatorSpaceCtx& ctx,
                                std::size_t limit = kDefaultSubsetCap);

struct ModulusResult {
  Operator modulus;
  Operator positive_part;   // T1 = (M+T)/2
  Operator negative_part;   // T2 = (M-T)/2
};

// Modulus via the pointwise absolute value of Phi(T); nullopt when
// |Phi(T)| is not in the range of Phi.
std::optional<ModulusResult> modulus(const OperatorSpaceCtx& ctx,
                                     const Operator& t);

struct BandModulusResult {
  BandDescriptor band;
  Operator positive_part;  // b in B
  Operator negative_part;  // c in B^d
};

// Modulus route through bands: searches for a band B with T = b - c,
// b in B_+, c in (B^d)_+.
std::optional<BandModulusResult> modulus_via_bands(
    const OperatorSpaceCtx& ctx, const Operator& t,
    const std::vector<BandDescriptor>& bands);

enum class VerdictMode { kCompositional, kDirect };

struct OpVerdict {
  bool value = false;
  std::optional<std::pair<Operator, Operator>> witness;
};

// C(X,Y) is an anti-lattice iff X' and Y are (compositional mode); the
// direct mode applies the pairwise-support criterion to the dd-computed
// extremal rays of the operator cone.
OpVerdict op_anti_lattice_verdict(const OperatorSpaceCtx& ctx,
                                  VerdictMode mode,
                                  std::size_t max_subsets = kDefaultSubsetCap);

// No nonzero disjoint operator pair; the direct mode decides it through
// the band lattice (a nonzero disjoint pair exists iff some band is
// neither {0} nor the whole space).
OpVerdict op_no_disjoint_verdict(const OperatorSpaceCtx& ctx, VerdictMode mode,
                                 std::size_t max_subsets = kDefaultSubsetCap);

}  // namespace conecalc
