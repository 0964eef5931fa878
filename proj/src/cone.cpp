#include "conecalc/cone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "conecalc/linalg.hpp"

namespace conecalc {

namespace {

std::size_t g_dd_row_cap = SIZE_MAX;

}  // namespace

void set_dd_row_cap(std::size_t cap) {
  g_dd_row_cap = cap == 0 ? SIZE_MAX : cap;
}

namespace {

std::vector<RatVector> canonical_list(const std::vector<RatVector>& vs) {
  std::vector<RatVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    RatVector c = canonicalize_ray(v);
    if (!is_zero(c)) out.push_back(std::move(c));
  }
  sort_canonical(out);
  return out;
}

// Basis of the row space, taken from the reduced echelon form.
std::vector<RatVector> rowspace_basis(const std::vector<RatVector>& rows,
                                      std::size_t dim) {
  std::vector<RatVector> basis;
  for (const auto& r : rows) {
    basis.push_back(r);
    if (rank_of_rows(basis, dim) < basis.size()) basis.pop_back();
  }
  return basis;
}

using BitMask = std::vector<std::uint64_t>;

struct Ray {
  RatVector v;                 // canonical
  std::vector<Rational> vals;  // values of every inequality on v
  BitMask active;              // bit i set iff vals[i] == 0
};

BitMask make_mask(std::size_t bits) { return BitMask((bits + 63) / 64, 0); }

void set_bit(BitMask& m, std::size_t i) { m[i / 64] |= std::uint64_t(1) << (i % 64); }

void fill_ray_values(Ray& ray, const std::vector<RatVector>& ineqs) {
  ray.vals.resize(ineqs.size());
  ray.active = make_mask(ineqs.size());
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    ray.vals[i] = dot(ineqs[i], ray.v);
    if (ray.vals[i] == 0) set_bit(ray.active, i);
  }
}

// Double description for the pointed case: the inequality rows span R^dim.
std::vector<RatVector> dd_pointed(std::size_t dim,
                                  const std::vector<RatVector>& ineqs) {
  // Initial simplicial cone from dim independent rows.
  std::vector<std::size_t> init;
  std::vector<RatVector> chosen;
  for (std::size_t i = 0; i < ineqs.size() && chosen.size() < dim; ++i) {
    chosen.push_back(ineqs[i]);
    if (rank_of_rows(chosen, dim) < chosen.size()) {
      chosen.pop_back();
    } else {
      init.push_back(i);
    }
  }
  if (chosen.size() != dim) throw InternalError("dd_pointed: rows do not span");

  RatMatrix r0 = RatMatrix::from_rows(chosen);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RatVector e(dim, Rational(0));
    e[j] = 1;
    auto sol = solve(r0, e);
    if (!sol) throw InternalError("dd_pointed: singular initial matrix");
    Ray ray;
    ray.v = canonicalize_ray(sol->particular);
    fill_ray_values(ray, ineqs);
    rays.push_back(std::move(ray));
  }

  BitMask processed = make_mask(ineqs.size());
  for (std::size_t i : init) set_bit(processed, i);
  const std::size_t words = processed.size();
  std::vector<std::size_t> pending;
  for (std::size_t t = 0; t < ineqs.size(); ++t) {
    if (std::find(init.begin(), init.end(), t) == init.end()) {
      pending.push_back(t);
    }
  }
  while (!pending.empty()) {
    // Pick the pending inequality that cuts off the fewest rays; this
    // keeps the intermediate ray counts small on degenerate inputs.
    std::size_t best = 0;
    std::size_t best_neg = 0;
    bool have = false;
    for (std::size_t c = 0; c < pending.size(); ++c) {
      std::size_t nneg = 0;
      for (const Ray& r : rays) {
        if (sgn(r.vals[pending[c]]) < 0) ++nneg;
      }
      if (!have || nneg > best_neg) {
        best_neg = nneg;
        best = c;
        have = true;
      }
    }
    const std::size_t t = pending[best];
    pending.erase(pending.begin() + best);

    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      const int s = sgn(rays[k].vals[t]);
      if (s > 0) pos.push_back(k);
      else if (s < 0) neg.push_back(k);
      else zero.push_back(k);
    }
    std::vector<Ray> next;
    for (std::size_t k : pos) next.push_back(rays[k]);
    for (std::size_t k : zero) next.push_back(rays[k]);
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        // Combinatorial adjacency: the common active set has at least
        // dim-2 members and is contained in no third ray's active set.
        BitMask common(words);
        std::size_t count = 0;
        for (std::size_t w = 0; w < words; ++w) {
          common[w] = rays[p].active[w] & rays[q].active[w] & processed[w];
          count += std::size_t(std::popcount(common[w]));
        }
        if (count + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          bool contains = true;
          for (std::size_t w = 0; w < words; ++w) {
            if (common[w] & ~rays[k].active[w]) {
              contains = false;
              break;
            }
          }
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        const Rational vp = rays[p].vals[t];
        const Rational vq = rays[q].vals[t];
        Ray nr;
        nr.v = canonicalize_ray(
            vec_sub(vec_scale(vp, rays[q].v), vec_scale(vq, rays[p].v)));
        bool dup = false;
        for (const Ray& ex : next) {
          if (ex.v == nr.v) {
            dup = true;
            break;
          }
        }
        if (dup) continue;
        fill_ray_values(nr, ineqs);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
    if (rays.size() > g_dd_row_cap)
      throw CapExceeded("double description exceeded the row cap of " +
                        std::to_string(g_dd_row_cap) + " intermediate rays");
    set_bit(processed, t);
#ifdef CONECALC_DD_TRACE
    std::fprintf(stderr, "dd: dim=%zu ineq %zu/%zu rays=%zu\n", dim, t + 1,
                 ineqs.size(), rays.size());
#endif
  }

  std::vector<RatVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  sort_canonical(out);
  return out;
}

}  // namespace

DDRays rays_from_inequalities(std::size_t dim,
                              const std::vector<RatVector>& ineqs_in) {
  for (const auto& a : ineqs_in) {
    if (a.size() != dim) throw InputError("inequality of wrong dimension");
  }
  const std::vector<RatVector> ineqs = canonical_list(ineqs_in);
  if (ineqs.empty()) {
    DDRays out;
    for (std::size_t i = 0; i < dim; ++i) {
      RatVector e(dim, Rational(0));
      e[i] = 1;
      out.lineality.push_back(std::move(e));
    }
    return out;
  }

  const std::vector<RatVector> lin = nullspace(RatMatrix::from_rows(ineqs));
  if (lin.empty()) {
    return DDRays{dd_pointed(dim, ineqs), {}};
  }

  // Split off the lineality: work in the row space of the inequalities,
  // where the restricted cone is pointed.
  const std::vector<RatVector> basis = rowspace_basis(ineqs, dim);
  const std::size_t r = basis.size();
  std::vector<RatVector> reduced;
  reduced.reserve(ineqs.size());
  for (const auto& a : ineqs) {
    RatVector row(r);
    for (std::size_t k = 0; k < r; ++k) row[k] = dot(a, basis[k]);
    reduced.push_back(std::move(row));
  }
  DDRays sub = rays_from_inequalities(r, reduced);
  if (!sub.lineality.empty()) {
    throw InternalError("reduced cone not pointed");
  }
  DDRays out;
  out.lineality = lin;
  for (const auto& c : sub.rays) {
    RatVector x(dim, Rational(0));
    for (std::size_t k = 0; k < r; ++k) {
      x = vec_add(x, vec_scale(c[k], basis[k]));
    }
    out.rays.push_back(canonicalize_ray(x));
  }
  sort_canonical(out.rays);
  return out;
}

ConeRep dd_v_to_h(std::size_t dim, const std::vector<RatVector>& generators) {
  if (generators.empty()) throw InputError("dd_v_to_h: no generators");
  for (const auto& g : generators) {
    if (g.size() != dim) throw InputError("generator of wrong dimension");
    if (is_zero(g)) throw InputError("zero vector among generators");
  }
  // Dual side first: extremal rays of {a : <a,g> >= 0 for all g}.
  DDRays dual = rays_from_inequalities(dim, generators);
  std::vector<RatVector> ineqs = dual.rays;
  for (const auto& l : dual.lineality) {
    ineqs.push_back(l);
    RatVector neg = vec_scale(Rational(-1), l);
    ineqs.push_back(canonicalize_ray(neg));
  }
  sort_canonical(ineqs);

  ConeRep c;
  c.dim = dim;
  c.inequalities = std::move(ineqs);
  DDRays primal = rays_from_inequalities(dim, c.inequalities);
  c.generators = std::move(primal.rays);
  c.lineality = std::move(primal.lineality);
  c.pointed = c.lineality.empty();
  c.full_dimensional = rank_of_rows(generators, dim) == dim;
  return c;
}

ConeRep dd_h_to_v(std::size_t dim, const std::vector<RatVector>& inequalities) {
  for (const auto& a : inequalities) {
    if (a.size() != dim) throw InputError("inequality of wrong dimension");
  }
  ConeRep c;
  c.dim = dim;
  DDRays primal = rays_from_inequalities(dim, inequalities);
  c.generators = primal.rays;
  c.lineality = primal.lineality;
  c.pointed = c.lineality.empty();

  if (!c.pointed || c.generators.empty()) {
    // Keep the given system (canonicalized) for non-pointed or trivial
    // cones; higher layers reject these anyway.
    if (c.generators.empty() && c.pointed) {
      // The cone {0}: pin it down by +- coordinate pairs.
      for (std::size_t i = 0; i < dim; ++i) {
        RatVector e(dim, Rational(0));
        e[i] = 1;
        c.inequalities.push_back(e);
        e[i] = -1;
        c.inequalities.push_back(e);
      }
      sort_canonical(c.inequalities);
      c.full_dimensional = (dim == 0);
    } else {
      for (const auto& a : inequalities) {
        RatVector ca = canonicalize_ray(a);
        if (!is_zero(ca)) c.inequalities.push_back(std::move(ca));
      }
      sort_canonical(c.inequalities);
      std::vector<RatVector> span = c.generators;
      span.insert(span.end(), c.lineality.begin(), c.lineality.end());
      c.full_dimensional = rank_of_rows(span, dim) == dim;
    }
    return c;
  }

  DDRays facets = rays_from_inequalities(dim, c.generators);
  c.inequalities = facets.rays;
  for (const auto& l : facets.lineality) {
    c.inequalities.push_back(l);
    c.inequalities.push_back(canonicalize_ray(vec_scale(Rational(-1), l)));
  }
  sort_canonical(c.inequalities);
  c.full_dimensional = rank_of_rows(c.generators, dim) == dim;
  return c;
}

ConeRep dual_cone(const ConeRep& c) {
  if (c.inequalities.empty()) {
    // Dual of the whole space is {0}.
    return dd_h_to_v(c.dim, {});
  }
  return dd_v_to_h(c.dim, c.inequalities);
}

bool membership(const ConeRep& c, const RatVector& x) {
  if (x.size() != c.dim) throw InputError("membership: dimension mismatch");
  for (const auto& a : c.inequalities) {
    if (dot(a, x) < 0) return false;
  }
  return true;
}

bool is_extremal_ray(const ConeRep& c, const RatVector& x) {
  if (!membership(c, x) || is_zero(x)) return false;
  std::vector<RatVector> active;
  for (const auto& a : c.inequalities) {
    if (dot(a, x) == 0) active.push_back(a);
  }
  return rank_of_rows(active, c.dim) + 1 == c.dim;
}

PolyhedronRep poly_generators(std::size_t dim,
                              const std::vector<HalfSpace>& halfspaces) {
  std::vector<RatVector> homog;
  homog.reserve(halfspaces.size() + 1);
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim) {
      throw InputError("poly_generators: dimension mismatch");
    }
    RatVector row = h.normal;
    row.push_back(-h.offset);
    homog.push_back(std::move(row));
  }
  RatVector last(dim + 1, Rational(0));
  last[dim] = 1;
  homog.push_back(std::move(last));

  DDRays cone = rays_from_inequalities(dim + 1, homog);

  PolyhedronRep p;
  p.dim = dim;
  p.inequalities = halfspaces;
  for (const auto& r : cone.rays) {
    const Rational& t = r[dim];
    RatVector head(r.begin(), r.begin() + dim);
    if (t > 0) {
      p.vertices.push_back(vec_scale(1 / t, head));
    } else {
      p.rays.push_back(canonicalize_ray(head));
    }
  }
  for (const auto& l : cone.lineality) {
    // Lineality directions have homogenizing coordinate 0.
    RatVector head(l.begin(), l.begin() + dim);
    p.rays.push_back(canonicalize_ray(head));
    p.rays.push_back(canonicalize_ray(vec_scale(Rational(-1), head)));
  }
  sort_canonical(p.rays);
  std::sort(p.vertices.begin(), p.vertices.end(), lex_less);
  p.empty = p.vertices.empty();
  if (p.empty) p.rays.clear();
  return p;
}

bool poly_contains(const PolyhedronRep& p, const RatVector& x) {
  for (const auto& h : p.inequalities) {
    if (dot(h.normal, x) < h.offset) return false;
  }
  return true;
}

namespace {

bool generators_inside(const PolyhedronRep& p, const PolyhedronRep& q) {
  for (const auto& v : p.vertices) {
    if (!poly_contains(q, v)) return false;
  }
  for (const auto& r : p.rays) {
    for (const auto& h : q.inequalities) {
      if (dot(h.normal, r) < 0) return false;
    }
  }
  return true;
}

}  // namespace

bool poly_equal(const PolyhedronRep& p, const PolyhedronRep& q) {
  if (p.empty || q.empty) return p.empty == q.empty;
  return generators_inside(p, q) && generators_inside(q, p);
}

}  // namespace conecalc
