#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "conecalc/cone.hpp"
#include "conecalc/rational.hpp"

namespace conecalc {

inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 20;

// A finite-dimensional vector space ordered by a pointed polyhedral cone,
// with the extremal rays of the cone and of its dual precomputed.
struct OrderedSpace {
  std::size_t dim = 0;
  ConeRep cone;
  ConeRep dual;
  std::vector<RatVector> ext_primal;  // extremal rays of cone
  std::vector<RatVector> ext_dual;    // extremal rays of the dual cone
};

// Builds the space from a cone; rejects non-pointed cones.
OrderedSpace make_space(const ConeRep& cone);
OrderedSpace space_from_generators(std::size_t dim,
                                   const std::vector<RatVector>& generators);
OrderedSpace space_from_inequalities(std::size_t dim,
                                     const std::vector<RatVector>& ineqs);

// The dual space (X', dual cone) as an ordered space of its own.
OrderedSpace dual_space(const OrderedSpace& s);

bool leq(const OrderedSpace& s, const RatVector& x, const RatVector& y);

bool is_order_unit(const OrderedSpace& s, const RatVector& v);

// max over dual extremal rays phi of |<phi,x>| / <phi,v>; the order unit
// norm of x with respect to v.
Rational order_unit_norm(const OrderedSpace& s, const RatVector& v,
                         const RatVector& x);

// True iff {x : <f,x> >= 0 for all f in fs} equals the cone of s.
bool determines_positivity(const OrderedSpace& s,
                           const std::vector<RatVector>& fs);

bool disjoint_vectors(const OrderedSpace& s, const RatVector& z1,
                      const RatVector& z2);

struct AntiLatticeVerdict {
  bool is_anti_lattice = false;
  std::optional<std::pair<RatVector, RatVector>> witness;
};

// Anti-lattice test via pairwise supports of the extremal rays on the
// dual extremal rays; a false verdict carries a disjoint positive pair.
AntiLatticeVerdict anti_lattice_verdict(const OrderedSpace& s);

struct NoDisjointVerdict {
  bool holds = false;
  std::optional<std::pair<RatVector, RatVector>> witness;
};

// Searches subsets A of the dual extremal rays for a pair of nonzero
// vectors with complementary supports. Throws CapExceeded if 2^|ext_dual|
// exceeds max_subsets.
NoDisjointVerdict no_disjoint_pair_verdict(
    const OrderedSpace& s, std::size_t max_subsets = kDefaultSubsetCap);

}  // namespace conecalc
