// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion re-checks a theorem-level claim of the library
// against an independent, definition-level computation.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "conecalc/cone.hpp"
#include "conecalc/lattice.hpp"
#include "conecalc/opspace.hpp"
#include "conecalc/oracle.hpp"
#include "conecalc/space.hpp"

using namespace conecalc;

namespace {

RatVector vec_of(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<RatVector> vecs_of(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> out;
  for (const auto& r : rows) out.push_back(vec_of(r));
  return out;
}

OrderedSpace quadrant() {
  return space_from_generators(2, vecs_of({{1, 0}, {0, 1}}));
}

OrderedSpace four_ray() {
  return space_from_generators(
      3, vecs_of({{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}}));
}

OrderedSpace pentagon() {
  return space_from_generators(
      3, vecs_of({{2, 0, 1}, {1, 2, 1}, {-1, 2, 1}, {-2, 0, 1}, {0, -2, 1}}));
}

Operator random_op(std::mt19937_64& rng, std::size_t dy, std::size_t dx,
                   long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  Operator t;
  t.matrix = RatMatrix(dy, dx);
  for (auto& e : t.matrix.a) e = d(rng);
  return t;
}

Operator op_add(const Operator& a, const Operator& b, long sign_b) {
  Operator r = a;
  for (std::size_t i = 0; i < r.matrix.a.size(); ++i)
    r.matrix.a[i] += Rational(sign_b) * b.matrix.a[i];
  return r;
}

std::vector<Operator> band_ops(const OperatorSpaceCtx& ctx,
                               const BandDescriptor& b) {
  std::vector<Operator> ops;
  for (const RatVector& v : b.basis)
    ops.push_back(unvectorize(v, ctx.Y.dim, ctx.X.dim));
  return ops;
}

struct Gate {
  int failures = 0;

  void criterion(int n, const char* name, const std::function<bool()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      std::printf("FAIL [%d] %s: exception: %s\n", n, name, e.what());
      ++failures;
      return;
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    std::printf("%s [%d] %s (%.1fs)\n", ok ? "PASS" : "FAIL", n, name, secs);
    if (!ok) ++failures;
  }
};

}  // namespace

int main() {
  Gate gate;

  const OrderedSpace q = quadrant();
  const OrderedSpace f = four_ray();
  const OrderedSpace p = pentagon();
  const OperatorSpaceCtx qq = build_ctx(q, q);
  const OperatorSpaceCtx qf = build_ctx(q, f);
  const OperatorSpaceCtx pp = build_ctx(p, p);
  const std::vector<const OperatorSpaceCtx*> contexts = {&qq, &qf, &pp};

  gate.criterion(1, "extremal functionals match double description", [&] {
    const std::size_t expected[] = {4, 8, 25};
    for (std::size_t c = 0; c < contexts.size(); ++c) {
      oracle::ExtremalityReport r = oracle::extremality_audit(*contexts[c]);
      if (!r.passed || r.sprime_count != expected[c] ||
          r.dd_ray_count != expected[c])
        return false;
    }
    return true;
  });

  gate.criterion(2, "disjointness criterion equals the definition", [&] {
    std::mt19937_64 rng(101);
    for (const OperatorSpaceCtx* ctx : contexts) {
      for (int k = 0; k < 100; ++k) {
        Operator t1 = random_op(rng, ctx->Y.dim, ctx->X.dim);
        Operator t2 = random_op(rng, ctx->Y.dim, ctx->X.dim);
        if (disjoint_ops(*ctx, t1, t2) !=
            oracle::disjoint_by_definition_ops(*ctx, t1, t2))
          return false;
      }
    }
    // Exhaustive vector-level agreement, entries in {-2..2}.
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        for (long c = -2; c <= 2; ++c)
          for (long d = -2; d <= 2; ++d) {
            const RatVector v1 = vec_of({a, b});
            const RatVector v2 = vec_of({c, d});
            if (oracle::disjoint_by_definition(q, v1, v2) !=
                disjoint_vectors(q, v1, v2))
              return false;
          }
    std::vector<RatVector> grid3;
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        for (long c = -2; c <= 2; ++c) grid3.push_back(vec_of({a, b, c}));
    for (const OrderedSpace* s : {&f, &p})
      for (std::size_t i = 0; i < grid3.size(); ++i)
        for (std::size_t j = i; j < grid3.size(); ++j)
          if (oracle::disjoint_by_definition(*s, grid3[i], grid3[j]) !=
              disjoint_vectors(*s, grid3[i], grid3[j]))
            return false;
    return true;
  });

  gate.criterion(3, "modulus via Phi equals modulus via bands", [&] {
    std::mt19937_64 rng(103);
    for (const OperatorSpaceCtx* ctx : contexts) {
      BandEnumeration bands = enumerate_bands(*ctx);
      if (bands.truncated) return false;
      for (int k = 0; k < 100; ++k) {
        Operator t = random_op(rng, ctx->Y.dim, ctx->X.dim);
        std::optional<ModulusResult> m = modulus(*ctx, t);
        std::optional<BandModulusResult> mb =
            modulus_via_bands(*ctx, t, bands.bands);
        if (bool(m) != bool(mb)) return false;
        if (!m) continue;
        const Operator band_m =
            op_add(mb->positive_part, mb->negative_part, +1);
        if (!(band_m == m->modulus)) return false;
        if (!membership(ctx->op_cone, vectorize(op_add(m->modulus, t, -1))))
          return false;
        if (!membership(ctx->op_cone, vectorize(op_add(m->modulus, t, +1))))
          return false;
        if (!membership(ctx->op_cone, vectorize(m->positive_part)) ||
            !membership(ctx->op_cone, vectorize(m->negative_part)))
          return false;
        if (!disjoint_ops(*ctx, m->positive_part, m->negative_part))
          return false;
        if (!(op_add(m->positive_part, m->negative_part, -1) == t))
          return false;
      }
    }
    return true;
  });

  gate.criterion(4, "band lattices: 16 on the quadrant pair, trivial on the "
                    "pentagon pair", [&] {
    BandEnumeration bq = enumerate_bands(qq);
    if (bq.truncated || bq.bands.size() != 16) return false;
    for (const BandDescriptor& b : bq.bands)
      if (!is_band(qq, band_ops(qq, b))) return false;
    BandEnumeration bp = enumerate_bands(pp);
    if (bp.truncated || bp.bands.size() != 2) return false;
    if (!bp.bands.front().support.empty()) return false;
    if (bp.bands.back().basis.size() != pp.op_dim) return false;
    return true;
  });

  gate.criterion(5, "interior of the operator cone with order-unit witness",
                 [&] {
    for (const OperatorSpaceCtx* ctx : contexts) {
      InteriorVerdict v = interior_verdict(ctx->X, ctx->Y);
      if (!v.nonempty || !v.witness) return false;
      OrderedSpace op_space = make_space(ctx->op_cone);
      if (!is_order_unit(op_space, vectorize(*v.witness))) return false;
    }
    OrderedSpace ray = space_from_generators(2, vecs_of({{1, 0}}));
    if (interior_verdict(q, ray).nonempty) return false;   // Y a ray
    if (interior_verdict(ray, q).nonempty) return false;   // X' degenerate
    return true;
  });

  gate.criterion(6, "anti-lattice and no-disjoint verdicts, both modes", [&] {
    for (const OperatorSpaceCtx* ctx : contexts) {
      OpVerdict ac = op_anti_lattice_verdict(*ctx, VerdictMode::kCompositional);
      OpVerdict ad = op_anti_lattice_verdict(*ctx, VerdictMode::kDirect);
      if (ac.value != ad.value) return false;
      OpVerdict nc = op_no_disjoint_verdict(*ctx, VerdictMode::kCompositional);
      OpVerdict nd = op_no_disjoint_verdict(*ctx, VerdictMode::kDirect);
      if (nc.value != nd.value) return false;
      for (const OpVerdict* v : {&ac, &ad, &nc, &nd}) {
        if (v->value) continue;
        if (!v->witness) return false;
        const Operator& t1 = v->witness->first;
        const Operator& t2 = v->witness->second;
        if (is_zero(vectorize(t1)) || is_zero(vectorize(t2))) return false;
        if (!disjoint_ops(*ctx, t1, t2)) return false;
      }
    }
    // The pentagon pairing satisfies both corollaries, the quadrant
    // pairings neither.
    if (!op_anti_lattice_verdict(pp, VerdictMode::kCompositional).value)
      return false;
    if (!op_no_disjoint_verdict(pp, VerdictMode::kCompositional).value)
      return false;
    if (op_anti_lattice_verdict(qq, VerdictMode::kCompositional).value)
      return false;
    if (op_no_disjoint_verdict(qq, VerdictMode::kCompositional).value)
      return false;
    return true;
  });

  gate.criterion(7, "order density of the vector lattice cover", [&] {
    const std::uint64_t seeds[] = {107, 109, 113};
    for (std::size_t c = 0; c < contexts.size(); ++c) {
      oracle::DensityReport r =
          oracle::order_density_spot_check(*contexts[c], 50, seeds[c]);
      if (!r.passed || r.samples != 50) return false;
    }
    return true;
  });

  gate.criterion(8, "geometry kernel round trip and duality involution", [&] {
    std::vector<ConeRep> cones = {q.cone, f.cone, p.cone, q.dual, p.dual,
                                  qq.op_cone, pp.op_cone};
    std::mt19937_64 rng(127);
    for (int k = 0; k < 50; ++k) {
      const std::size_t dim = 2 + k % 3;
      const std::size_t nrays = dim + 1 + k % 4;
      std::uniform_int_distribution<long> d(-3, 3);
      std::vector<RatVector> rays;
      for (std::size_t r = 0; r < nrays; ++r) {
        RatVector v(dim);
        for (std::size_t i = 0; i + 1 < dim; ++i) v[i] = d(rng);
        v[dim - 1] = 1;  // positive last coordinate keeps the cone pointed
        rays.push_back(std::move(v));
      }
      cones.push_back(dd_v_to_h(dim, rays));
    }
    for (const ConeRep& c : cones) {
      ConeRep round = dd_h_to_v(c.dim, c.inequalities);
      if (round.generators != c.generators) return false;
      ConeRep vh = dd_v_to_h(c.dim, c.generators);
      if (vh.inequalities != c.inequalities) return false;
      ConeRep dd = dual_cone(dual_cone(c));
      if (dd.generators != c.generators ||
          dd.inequalities != c.inequalities)
        return false;
    }
    return true;
  });

  if (gate.failures > 0) {
    std::printf("acceptance: %d criterion(s) failed\n", gate.failures);
    return 1;
  }
  std::printf("acceptance: all 8 criteria passed\n");
  return 0;
}
