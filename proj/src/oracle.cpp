#include "conecalc/oracle.hpp"

#include <algorithm>
#include <random>

#include "conecalc/linalg.hpp"

namespace conecalc {
namespace oracle {

namespace {

// Upper-bound polyhedron of {a, b} relative to a dual determining set:
// {u : <phi,u> >= max(<phi,a>, <phi,b>)}.
PolyhedronRep upper_bound_set(const std::vector<RatVector>& duals,
                              std::size_t dim, const RatVector& a,
                              const RatVector& b) {
  std::vector<HalfSpace> hs;
  hs.reserve(duals.size());
  for (const auto& phi : duals) {
    hs.push_back({phi, std::max(dot(phi, a), dot(phi, b))});
  }
  return poly_generators(dim, hs);
}

bool disjoint_via_upper_bounds(const std::vector<RatVector>& duals,
                               std::size_t dim, const RatVector& v1,
                               const RatVector& v2) {
  const RatVector sum = vec_add(v1, v2);
  const RatVector diff = vec_sub(v1, v2);
  const RatVector neg_sum = vec_scale(Rational(-1), sum);
  const RatVector neg_diff = vec_scale(Rational(-1), diff);
  const PolyhedronRep u1 = upper_bound_set(duals, dim, sum, neg_sum);
  const PolyhedronRep u2 = upper_bound_set(duals, dim, diff, neg_diff);
  return poly_equal(u1, u2);
}

}  // namespace

bool disjoint_by_definition(const OrderedSpace& s, const RatVector& v1,
                            const RatVector& v2) {
  if (!s.cone.pointed || !s.cone.full_dimensional) {
    throw InputError("disjoint_by_definition: need pointed full-dim cone");
  }
  return disjoint_via_upper_bounds(s.ext_dual, s.dim, v1, v2);
}

bool disjoint_by_definition_ops(const OperatorSpaceCtx& ctx,
                                const Operator& t1, const Operator& t2) {
  return disjoint_via_upper_bounds(ctx.op_cone.inequalities, ctx.op_dim,
                                   vectorize(t1), vectorize(t2));
}

ExtremalityReport extremality_audit(const OperatorSpaceCtx& ctx) {
  ExtremalityReport rep;

  std::vector<RatVector> sprime_rows;
  for (const auto& atom : ctx.sprime) {
    sprime_rows.push_back(
        sprime_row_unscaled(ctx.X, ctx.Y, atom.i, atom.j));
  }
  sort_canonical(sprime_rows);
  rep.sprime_count = sprime_rows.size();

  // Independent dd run: extremal rays of the dual operator cone from the
  // generator description of the operator cone.
  DDRays dual = rays_from_inequalities(ctx.op_dim, ctx.op_cone.generators);
  std::vector<RatVector> dd_rays = dual.rays;
  sort_canonical(dd_rays);
  rep.dd_ray_count = dd_rays.size();

  for (const auto& r : sprime_rows) {
    if (!std::binary_search(dd_rays.begin(), dd_rays.end(), r, lex_less)) {
      rep.sprime_not_extremal.push_back(r);
    }
  }
  for (const auto& r : dd_rays) {
    if (!std::binary_search(sprime_rows.begin(), sprime_rows.end(), r,
                            lex_less)) {
      rep.extra_dd_rays.push_back(r);
    }
  }
  rep.passed = !dual.lineality.empty() ? false
                                       : rep.sprime_not_extremal.empty() &&
                                             rep.extra_dd_rays.empty();
  return rep;
}

DensityReport order_density_spot_check(const OperatorSpaceCtx& ctx,
                                       std::size_t samples,
                                       std::uint64_t seed) {
  DensityReport rep;
  rep.seed = seed;
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 3);

  const std::size_t n = ctx.sprime.size();
  for (std::uint64_t sample = 0; sample < samples; ++sample) {
    RatVector w(n);
    for (auto& e : w) e = entry(rng);

    // Dominating set {z : phi_matrix z >= w} in representation space.
    std::vector<HalfSpace> hs;
    for (std::size_t a = 0; a < n; ++a) {
      hs.push_back({ctx.phi_matrix.row(a), w[a]});
    }
    const PolyhedronRep dom = poly_generators(ctx.op_dim, hs);
    if (dom.empty) {
      // The dominating set always contains large multiples of the
      // interior witness, so emptiness is a failure outright.
      rep.failures.push_back({sample, 0, w, true, Rational(0)});
      continue;
    }

    for (std::size_t k = 0; k < n; ++k) {
      const RatVector row = ctx.phi_matrix.row(k);
      bool unbounded = false;
      for (const auto& r : dom.rays) {
        if (dot(row, r) < 0) unbounded = true;
      }
      if (unbounded) {
        rep.failures.push_back({sample, k, w, true, Rational(0)});
        continue;
      }
      Rational best;
      bool first = true;
      for (const auto& v : dom.vertices) {
        const Rational val = dot(row, v);
        if (first || val < best) {
          best = val;
          first = false;
        }
      }
      if (best != w[k]) {
        rep.failures.push_back({sample, k, w, false, best});
      }
    }
  }
  rep.passed = rep.failures.empty();
  return rep;
}

}  // namespace oracle
}  // namespace conecalc
