#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conecalc/cone.hpp"
#include "conecalc/rational.hpp"
#include "conecalc/space.hpp"

namespace conecalc {

// A linear operator T : X -> Y as a dim(Y) x dim(X) matrix.
struct Operator {
  RatMatrix matrix;

  bool operator==(const Operator& o) const = default;
};

// One normalized extremal functional y' (x) x on the operator space:
// T |-> scale * <y'_j, T x_i> with scale = 1/(<y'_j, y0> <x0', x_i>).
struct SPrimeAtom {
  std::size_t i = 0;  // index into X.ext_primal
  std::size_t j = 0;  // index into Y.ext_dual
  Rational scale;
};

struct OperatorSpaceCtx {
  OrderedSpace X;
  OrderedSpace Y;
  std::size_t op_dim = 0;       // dim(X) * dim(Y)
  ConeRep op_cone;              // over vectorized operators
  RatVector x0_dual;            // interior point of X'_+
  RatVector y0;                 // interior point of Y_+
  std::vector<SPrimeAtom> sprime;
  RatMatrix phi_matrix;         // |S'| x op_dim, scaled rows
  Operator interior_witness;    // y0 (x) x0'
};

// vec(T) stacks the columns of T: entry T(r,k) lands at index
// k*dim(Y) + r.
RatVector vectorize(const Operator& t);
Operator unvectorize(const RatVector& v, std::size_t dim_y, std::size_t dim_x);

struct InteriorVerdict {
  bool nonempty = false;
  std::optional<Operator> witness;
};

// Interior of the positive-operator cone: nonempty iff Y's cone is
// full-dimensional and X's dual cone is nondegenerate (X full-dimensional
// keeps the dual pointed). When nonempty the rank-1 witness y0 (x) x0' is
// returned, verified to be an order unit of the operator cone.
InteriorVerdict interior_verdict(const OrderedSpace& x, const OrderedSpace& y);

OperatorSpaceCtx build_ctx(const OrderedSpace& x, const OrderedSpace& y);

// Phi(T): entry per atom, lambda_ij * <y'_j, T x_i>.
RatVector phi(const OperatorSpaceCtx& ctx, const Operator& t);

// The unique preimage when w lies in the column space of phi_matrix.
std::optional<Operator> phi_preimage(const OperatorSpaceCtx& ctx,
                                     const RatVector& w);

// Unscaled vectorized rank-1 functionals y'_j (x) x_i, canonicalized;
// row (i,j) applied to vec(T) gives <y'_j, T x_i>.
RatVector sprime_row_unscaled(const OrderedSpace& x, const OrderedSpace& y,
                              std::size_t i, std::size_t j);

}  // namespace conecalc
