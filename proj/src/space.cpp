#include "conecalc/space.hpp"

#include "conecalc/linalg.hpp"

namespace conecalc {

namespace {

void require_full_dimensional(const OrderedSpace& s, const char* what) {
  if (!s.cone.full_dimensional) {
    throw InputError(std::string(what) + ": cone is not full-dimensional");
  }
}

// Support of x on the dual extremal rays.
std::vector<bool> dual_support(const OrderedSpace& s, const RatVector& x) {
  std::vector<bool> supp(s.ext_dual.size());
  for (std::size_t k = 0; k < s.ext_dual.size(); ++k) {
    supp[k] = dot(s.ext_dual[k], x) != 0;
  }
  return supp;
}

}  // namespace

OrderedSpace make_space(const ConeRep& cone) {
  if (!cone.pointed) throw InputError("make_space: cone is not pointed");
  if (cone.generators.empty()) {
    throw InputError("make_space: trivial cone {0}");
  }
  OrderedSpace s;
  s.dim = cone.dim;
  s.cone = cone;
  s.dual = dual_cone(cone);
  s.ext_primal = s.cone.generators;
  s.ext_dual = s.dual.generators;
  return s;
}

OrderedSpace space_from_generators(std::size_t dim,
                                   const std::vector<RatVector>& generators) {
  return make_space(dd_v_to_h(dim, generators));
}

OrderedSpace space_from_inequalities(std::size_t dim,
                                     const std::vector<RatVector>& ineqs) {
  return make_space(dd_h_to_v(dim, ineqs));
}

OrderedSpace dual_space(const OrderedSpace& s) { return make_space(s.dual); }

bool leq(const OrderedSpace& s, const RatVector& x, const RatVector& y) {
  return membership(s.cone, vec_sub(y, x));
}

bool is_order_unit(const OrderedSpace& s, const RatVector& v) {
  require_full_dimensional(s, "is_order_unit");
  for (const auto& phi : s.ext_dual) {
    if (dot(phi, v) <= 0) return false;
  }
  return true;
}

Rational order_unit_norm(const OrderedSpace& s, const RatVector& v,
                         const RatVector& x) {
  if (!is_order_unit(s, v)) {
    throw InputError("order_unit_norm: v is not an order unit");
  }
  Rational best = 0;
  for (const auto& phi : s.ext_dual) {
    Rational r = abs(dot(phi, x)) / dot(phi, v);
    if (r > best) best = r;
  }
  return best;
}

bool determines_positivity(const OrderedSpace& s,
                           const std::vector<RatVector>& fs) {
  for (const auto& f : fs) {
    if (!membership(s.dual, f)) {
      throw InputError("determines_positivity: functional outside dual cone");
    }
  }
  const ConeRep described = dd_h_to_v(s.dim, fs);
  return described.generators == s.cone.generators &&
         described.lineality == s.cone.lineality;
}

bool disjoint_vectors(const OrderedSpace& s, const RatVector& z1,
                      const RatVector& z2) {
  require_full_dimensional(s, "disjoint_vectors");
  for (const auto& phi : s.ext_dual) {
    if (dot(phi, z1) != 0 && dot(phi, z2) != 0) return false;
  }
  return true;
}

AntiLatticeVerdict anti_lattice_verdict(const OrderedSpace& s) {
  require_full_dimensional(s, "anti_lattice_verdict");
  std::vector<std::vector<bool>> supports;
  supports.reserve(s.ext_primal.size());
  for (const auto& ray : s.ext_primal) {
    supports.push_back(dual_support(s, ray));
  }
  for (std::size_t i = 0; i < supports.size(); ++i) {
    for (std::size_t j = i + 1; j < supports.size(); ++j) {
      bool meet = false;
      for (std::size_t k = 0; k < s.ext_dual.size(); ++k) {
        if (supports[i][k] && supports[j][k]) {
          meet = true;
          break;
        }
      }
      if (!meet) {
        return {false, std::pair{s.ext_primal[i], s.ext_primal[j]}};
      }
    }
  }
  return {true, std::nullopt};
}

NoDisjointVerdict no_disjoint_pair_verdict(const OrderedSpace& s,
                                           std::size_t max_subsets) {
  require_full_dimensional(s, "no_disjoint_pair_verdict");
  const std::size_t m = s.ext_dual.size();
  if (m >= 63 || (std::size_t{1} << m) > max_subsets) {
    throw CapExceeded("no_disjoint_pair_verdict: subset cap exceeded");
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<RatVector> inside, outside;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (std::uint64_t{1} << k)) {
        inside.push_back(s.ext_dual[k]);
      } else {
        outside.push_back(s.ext_dual[k]);
      }
    }
    // z1 supported inside the subset, z2 outside of it.
    auto n1 = nullspace(RatMatrix::from_rows(outside));
    if (outside.empty()) {
      n1.clear();
      for (std::size_t i = 0; i < s.dim; ++i) {
        RatVector e(s.dim, Rational(0));
        e[i] = 1;
        n1.push_back(e);
      }
    }
    if (n1.empty()) continue;
    auto n2 = nullspace(RatMatrix::from_rows(inside));
    if (inside.empty()) {
      n2.clear();
      for (std::size_t i = 0; i < s.dim; ++i) {
        RatVector e(s.dim, Rational(0));
        e[i] = 1;
        n2.push_back(e);
      }
    }
    if (n2.empty()) continue;
    return {false, std::pair{n1.front(), n2.front()}};
  }
  return {true, std::nullopt};
}

}  // namespace conecalc
