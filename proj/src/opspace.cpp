#include "conecalc/opspace.hpp"

#include "conecalc/linalg.hpp"

namespace conecalc {

RatVector vectorize(const Operator& t) {
  const std::size_t dy = t.matrix.rows, dx = t.matrix.cols;
  RatVector v(dx * dy);
  for (std::size_t k = 0; k < dx; ++k) {
    for (std::size_t r = 0; r < dy; ++r) {
      v[k * dy + r] = t.matrix(r, k);
    }
  }
  return v;
}

Operator unvectorize(const RatVector& v, std::size_t dim_y,
                     std::size_t dim_x) {
  if (v.size() != dim_x * dim_y) throw InputError("unvectorize: bad length");
  Operator t;
  t.matrix = RatMatrix(dim_y, dim_x);
  for (std::size_t k = 0; k < dim_x; ++k) {
    for (std::size_t r = 0; r < dim_y; ++r) {
      t.matrix(r, k) = v[k * dim_y + r];
    }
  }
  return t;
}

RatVector sprime_row_unscaled(const OrderedSpace& x, const OrderedSpace& y,
                              std::size_t i, std::size_t j) {
  const RatVector& xi = x.ext_primal[i];
  const RatVector& yj = y.ext_dual[j];
  RatVector row(x.dim * y.dim);
  for (std::size_t k = 0; k < x.dim; ++k) {
    for (std::size_t r = 0; r < y.dim; ++r) {
      row[k * y.dim + r] = xi[k] * yj[r];
    }
  }
  return canonicalize_ray(row);
}

InteriorVerdict interior_verdict(const OrderedSpace& x,
                                 const OrderedSpace& y) {
  if (!x.cone.pointed || !y.cone.pointed) {
    throw InputError("interior_verdict: cones must be pointed");
  }
  // X not full-dimensional leaves the dual cone with a lineality space,
  // so no additive equivalent norm exists; Y without interior points has
  // no candidate y0.
  if (!y.cone.full_dimensional || !x.cone.full_dimensional) {
    return {false, std::nullopt};
  }

  RatVector y0(y.dim, Rational(0));
  for (const auto& g : y.ext_primal) y0 = vec_add(y0, g);
  RatVector x0d(x.dim, Rational(0));
  for (const auto& f : x.ext_dual) x0d = vec_add(x0d, f);

  Operator w;
  w.matrix = RatMatrix(y.dim, x.dim);
  for (std::size_t r = 0; r < y.dim; ++r) {
    for (std::size_t k = 0; k < x.dim; ++k) {
      w.matrix(r, k) = y0[r] * x0d[k];
    }
  }
  // Order unit check: strictly positive against every facet functional
  // y'_j (x) x_i of the operator cone.
  for (std::size_t i = 0; i < x.ext_primal.size(); ++i) {
    for (std::size_t j = 0; j < y.ext_dual.size(); ++j) {
      const Rational v = dot(y.ext_dual[j], mat_vec(w.matrix, x.ext_primal[i]));
      if (v <= 0) throw InternalError("interior witness not an order unit");
    }
  }
  return {true, w};
}

OperatorSpaceCtx build_ctx(const OrderedSpace& x, const OrderedSpace& y) {
  auto verdict = interior_verdict(x, y);
  if (!verdict.nonempty) {
    throw InputError("build_ctx: positive-operator cone has empty interior");
  }

  OperatorSpaceCtx ctx;
  ctx.X = x;
  ctx.Y = y;
  ctx.op_dim = x.dim * y.dim;
  ctx.interior_witness = *verdict.witness;

  ctx.y0.assign(y.dim, Rational(0));
  for (const auto& g : y.ext_primal) ctx.y0 = vec_add(ctx.y0, g);
  ctx.x0_dual.assign(x.dim, Rational(0));
  for (const auto& f : x.ext_dual) ctx.x0_dual = vec_add(ctx.x0_dual, f);

  const std::size_t nx = x.ext_primal.size();
  const std::size_t ny = y.ext_dual.size();
  ctx.phi_matrix = RatMatrix(nx * ny, ctx.op_dim);
  std::vector<RatVector> rows;
  rows.reserve(nx * ny);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      SPrimeAtom atom;
      atom.i = i;
      atom.j = j;
      const Rational norm =
          dot(y.ext_dual[j], ctx.y0) * dot(ctx.x0_dual, x.ext_primal[i]);
      if (norm <= 0) throw InternalError("build_ctx: bad normalization");
      atom.scale = 1 / norm;

      const std::size_t a = ctx.sprime.size();
      for (std::size_t k = 0; k < x.dim; ++k) {
        for (std::size_t r = 0; r < y.dim; ++r) {
          ctx.phi_matrix(a, k * y.dim + r) =
              atom.scale * x.ext_primal[i][k] * y.ext_dual[j][r];
        }
      }
      rows.push_back(sprime_row_unscaled(x, y, i, j));
      ctx.sprime.push_back(std::move(atom));
    }
  }

  if (rank(ctx.phi_matrix) != ctx.op_dim) {
    throw InternalError("build_ctx: phi matrix is rank deficient");
  }

  ctx.op_cone = dd_h_to_v(ctx.op_dim, rows);
  if (!ctx.op_cone.pointed || !ctx.op_cone.full_dimensional) {
    throw InternalError("build_ctx: operator cone degenerate");
  }
  // The dd-reduced facet list must reproduce exactly the S' rows.
  std::vector<RatVector> expected = rows;
  sort_canonical(expected);
  if (ctx.op_cone.inequalities != expected) {
    throw InternalError("build_ctx: facet list does not match S'");
  }
  if (!membership(ctx.op_cone, vectorize(ctx.interior_witness))) {
    throw InternalError("build_ctx: witness outside operator cone");
  }
  return ctx;
}

RatVector phi(const OperatorSpaceCtx& ctx, const Operator& t) {
  if (t.matrix.rows != ctx.Y.dim || t.matrix.cols != ctx.X.dim) {
    throw InputError("phi: operator shape mismatch");
  }
  return mat_vec(ctx.phi_matrix, vectorize(t));
}

std::optional<Operator> phi_preimage(const OperatorSpaceCtx& ctx,
                                     const RatVector& w) {
  if (w.size() != ctx.sprime.size()) {
    throw InputError("phi_preimage: wrong index set");
  }
  auto sol = solve(ctx.phi_matrix, w);
  if (!sol) return std::nullopt;
  if (!sol->homogeneous_basis.empty()) {
    throw InternalError("phi_preimage: phi not injective");
  }
  return unvectorize(sol->particular, ctx.Y.dim, ctx.X.dim);
}

}  // namespace conecalc
