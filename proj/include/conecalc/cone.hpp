#pragma once

#include <cstddef>
#include <vector>

#include "conecalc/rational.hpp"

namespace conecalc {

// Polyhedral cone carrying both descriptions. generators are the extremal
// rays, inequalities the facet normals ({x : <a,x> >= 0} per normal a);
// both lists canonicalized and lex-sorted. For cones that are not
// full-dimensional the inequality list also carries the +-pairs cutting
// out the linear span, so membership stays a pure inequality check.
struct ConeRep {
  std::size_t dim = 0;
  std::vector<RatVector> generators;
  std::vector<RatVector> inequalities;
  std::vector<RatVector> lineality;  // nonempty iff not pointed
  bool pointed = true;
  bool full_dimensional = false;
};

struct DDRays {
  std::vector<RatVector> rays;
  std::vector<RatVector> lineality;
};

// Caps the number of intermediate rays kept by double description;
// exceeding it raises CapExceeded. 0 restores the default (no cap).
void set_dd_row_cap(std::size_t cap);

// Extremal rays and lineality basis of {x : <a,x> >= 0 for all a}.
// Incremental double description with the rank-based adjacency test.
DDRays rays_from_inequalities(std::size_t dim,
                              const std::vector<RatVector>& ineqs);

ConeRep dd_v_to_h(std::size_t dim, const std::vector<RatVector>& generators);
ConeRep dd_h_to_v(std::size_t dim, const std::vector<RatVector>& inequalities);

ConeRep dual_cone(const ConeRep& c);

bool membership(const ConeRep& c, const RatVector& x);
bool is_extremal_ray(const ConeRep& c, const RatVector& x);

struct HalfSpace {
  RatVector normal;
  Rational offset;  // <normal, x> >= offset
};

struct PolyhedronRep {
  std::size_t dim = 0;
  bool empty = false;
  std::vector<RatVector> vertices;
  std::vector<RatVector> rays;
  std::vector<HalfSpace> inequalities;
};

// Vertices and extremal recession rays of the intersection of half-spaces,
// via homogenization to a cone in dim+1. Lines in the polyhedron show up
// as a +- ray pair.
PolyhedronRep poly_generators(std::size_t dim,
                              const std::vector<HalfSpace>& halfspaces);

bool poly_contains(const PolyhedronRep& p, const RatVector& x);
bool poly_equal(const PolyhedronRep& p, const PolyhedronRep& q);

}  // namespace conecalc
