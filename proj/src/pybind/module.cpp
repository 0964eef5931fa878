#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "conecalc/cli.hpp"
#include "conecalc/lattice.hpp"
#include "conecalc/opspace.hpp"
#include "conecalc/oracle.hpp"
#include "conecalc/rational.hpp"
#include "conecalc/space.hpp"

namespace py = pybind11;
using namespace conecalc;

namespace {

// Rationals cross the boundary as canonical strings; plain ints are
// accepted on the way in.
Rational rat_in(const py::handle& h) {
  if (py::isinstance<py::int_>(h))
    return rat_from_string(py::str(h).cast<std::string>());
  return rat_from_string(h.cast<std::string>());
}

RatVector vec_in(const py::sequence& seq) {
  RatVector v;
  for (const py::handle& h : seq) v.push_back(rat_in(h));
  return v;
}

py::list vec_out(const RatVector& v) {
  py::list out;
  for (const Rational& r : v) out.append(rat_to_string(r));
  return out;
}

py::list vecs_out(const std::vector<RatVector>& vs) {
  py::list out;
  for (const RatVector& v : vs) out.append(vec_out(v));
  return out;
}

std::vector<RatVector> vecs_in(const py::sequence& seq) {
  std::vector<RatVector> out;
  for (const py::handle& h : seq) out.push_back(vec_in(h.cast<py::sequence>()));
  return out;
}

Operator op_in(const py::sequence& rows) {
  std::vector<RatVector> m = vecs_in(rows);
  if (m.empty()) throw InputError("operator matrix must be non-empty");
  Operator t;
  t.matrix = RatMatrix(m.size(), m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != t.matrix.cols)
      throw InputError("operator matrix rows differ in length");
    for (std::size_t k = 0; k < t.matrix.cols; ++k) t.matrix(i, k) = m[i][k];
  }
  return t;
}

py::list op_out(const Operator& t) {
  py::list rows;
  for (std::size_t i = 0; i < t.matrix.rows; ++i)
    rows.append(vec_out(t.matrix.row(i)));
  return rows;
}

py::object pair_out(const std::optional<std::pair<RatVector, RatVector>>& w) {
  if (!w) return py::none();
  return py::make_tuple(vec_out(w->first), vec_out(w->second));
}

py::object op_pair_out(const std::optional<std::pair<Operator, Operator>>& w) {
  if (!w) return py::none();
  return py::make_tuple(op_out(w->first), op_out(w->second));
}

VerdictMode mode_in(const std::string& mode) {
  if (mode == "compositional") return VerdictMode::kCompositional;
  if (mode == "direct") return VerdictMode::kDirect;
  throw InputError("mode must be 'compositional' or 'direct'");
}

py::dict band_out(const OperatorSpaceCtx& ctx, const BandDescriptor& b) {
  py::dict d;
  d["support"] = b.support;
  py::list basis;
  for (const RatVector& v : b.basis)
    basis.append(op_out(unvectorize(v, ctx.Y.dim, ctx.X.dim)));
  d["basis"] = basis;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact calculus of positive operators between finite-dimensional "
      "spaces ordered by polyhedral cones";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<OrderedSpace>(m, "OrderedSpace")
      .def_readonly("dim", &OrderedSpace::dim)
      .def_property_readonly(
          "generators",
          [](const OrderedSpace& s) { return vecs_out(s.cone.generators); })
      .def_property_readonly(
          "inequalities",
          [](const OrderedSpace& s) { return vecs_out(s.cone.inequalities); })
      .def_property_readonly(
          "ext_primal",
          [](const OrderedSpace& s) { return vecs_out(s.ext_primal); })
      .def_property_readonly(
          "ext_dual",
          [](const OrderedSpace& s) { return vecs_out(s.ext_dual); });

  m.def("space_from_generators",
        [](std::size_t dim, const py::sequence& gens) {
          return space_from_generators(dim, vecs_in(gens));
        },
        py::arg("dim"), py::arg("generators"));
  m.def("space_from_inequalities",
        [](std::size_t dim, const py::sequence& ineqs) {
          return space_from_inequalities(dim, vecs_in(ineqs));
        },
        py::arg("dim"), py::arg("inequalities"));
  m.def("dual_space", &dual_space);

  m.def("leq",
        [](const OrderedSpace& s, const py::sequence& x,
           const py::sequence& y) { return leq(s, vec_in(x), vec_in(y)); });
  m.def("disjoint_vectors",
        [](const OrderedSpace& s, const py::sequence& a,
           const py::sequence& b) {
          return disjoint_vectors(s, vec_in(a), vec_in(b));
        });
  m.def("order_unit_norm",
        [](const OrderedSpace& s, const py::sequence& unit,
           const py::sequence& x) {
          return rat_to_string(order_unit_norm(s, vec_in(unit), vec_in(x)));
        },
        py::arg("space"), py::arg("unit"), py::arg("x"));
  m.def("anti_lattice_verdict", [](const OrderedSpace& s) {
    AntiLatticeVerdict v = anti_lattice_verdict(s);
    py::dict d;
    d["is_anti_lattice"] = v.is_anti_lattice;
    d["witness"] = pair_out(v.witness);
    return d;
  });
  m.def("no_disjoint_pair_verdict",
        [](const OrderedSpace& s, std::size_t max_subsets) {
          NoDisjointVerdict v = no_disjoint_pair_verdict(s, max_subsets);
          py::dict d;
          d["holds"] = v.holds;
          d["witness"] = pair_out(v.witness);
          return d;
        },
        py::arg("space"), py::arg("max_subsets") = kDefaultSubsetCap);

  py::class_<OperatorSpaceCtx>(m, "OperatorSpaceCtx")
      .def_readonly("X", &OperatorSpaceCtx::X)
      .def_readonly("Y", &OperatorSpaceCtx::Y)
      .def_readonly("op_dim", &OperatorSpaceCtx::op_dim)
      .def_property_readonly(
          "sprime",
          [](const OperatorSpaceCtx& ctx) {
            py::list out;
            for (const SPrimeAtom& a : ctx.sprime) {
              py::dict d;
              d["i"] = a.i;
              d["j"] = a.j;
              d["x"] = vec_out(ctx.X.ext_primal[a.i]);
              d["yprime"] = vec_out(ctx.Y.ext_dual[a.j]);
              d["scale"] = rat_to_string(a.scale);
              out.append(d);
            }
            return out;
          })
      .def_property_readonly("interior_witness",
                             [](const OperatorSpaceCtx& ctx) {
                               return op_out(ctx.interior_witness);
                             });

  m.def("interior_verdict",
        [](const OrderedSpace& x, const OrderedSpace& y) {
          InteriorVerdict v = interior_verdict(x, y);
          py::dict d;
          d["nonempty"] = v.nonempty;
          d["witness"] = v.witness ? py::object(op_out(*v.witness))
                                   : py::object(py::none());
          return d;
        });
  m.def("build_ctx", &build_ctx, py::arg("X"), py::arg("Y"));

  m.def("phi", [](const OperatorSpaceCtx& ctx, const py::sequence& t) {
    return vec_out(phi(ctx, op_in(t)));
  });
  m.def("phi_preimage",
        [](const OperatorSpaceCtx& ctx, const py::sequence& w) {
          std::optional<Operator> t = phi_preimage(ctx, vec_in(w));
          return t ? py::object(op_out(*t)) : py::object(py::none());
        });

  m.def("disjoint_ops",
        [](const OperatorSpaceCtx& ctx, const py::sequence& a,
           const py::sequence& b) {
          return disjoint_ops(ctx, op_in(a), op_in(b));
        });
  m.def("modulus", [](const OperatorSpaceCtx& ctx, const py::sequence& t) {
    std::optional<ModulusResult> r = modulus(ctx, op_in(t));
    if (!r) return py::object(py::none());
    py::dict d;
    d["modulus"] = op_out(r->modulus);
    d["positive_part"] = op_out(r->positive_part);
    d["negative_part"] = op_out(r->negative_part);
    return py::object(d);
  });
  m.def("enumerate_bands",
        [](const OperatorSpaceCtx& ctx, std::size_t limit) {
          BandEnumeration e = enumerate_bands(ctx, limit);
          py::dict d;
          py::list bands;
          for (const BandDescriptor& b : e.bands)
            bands.append(band_out(ctx, b));
          d["bands"] = bands;
          d["truncated"] = e.truncated;
          return d;
        },
        py::arg("ctx"), py::arg("limit") = kDefaultSubsetCap);
  m.def("op_anti_lattice_verdict",
        [](const OperatorSpaceCtx& ctx, const std::string& mode,
           std::size_t max_subsets) {
          OpVerdict v =
              op_anti_lattice_verdict(ctx, mode_in(mode), max_subsets);
          py::dict d;
          d["is_anti_lattice"] = v.value;
          d["witness"] = op_pair_out(v.witness);
          return d;
        },
        py::arg("ctx"), py::arg("mode") = "compositional",
        py::arg("max_subsets") = kDefaultSubsetCap);
  m.def("op_no_disjoint_verdict",
        [](const OperatorSpaceCtx& ctx, const std::string& mode,
           std::size_t max_subsets) {
          OpVerdict v = op_no_disjoint_verdict(ctx, mode_in(mode), max_subsets);
          py::dict d;
          d["holds"] = v.value;
          d["witness"] = op_pair_out(v.witness);
          return d;
        },
        py::arg("ctx"), py::arg("mode") = "compositional",
        py::arg("max_subsets") = kDefaultSubsetCap);

  m.def("disjoint_by_definition",
        [](const OrderedSpace& s, const py::sequence& a,
           const py::sequence& b) {
          return oracle::disjoint_by_definition(s, vec_in(a), vec_in(b));
        });
  m.def("extremality_audit", [](const OperatorSpaceCtx& ctx) {
    oracle::ExtremalityReport r = oracle::extremality_audit(ctx);
    py::dict d;
    d["passed"] = r.passed;
    d["sprime_count"] = r.sprime_count;
    d["dd_ray_count"] = r.dd_ray_count;
    return d;
  });
  m.def("order_density_spot_check",
        [](const OperatorSpaceCtx& ctx, std::size_t samples,
           std::uint64_t seed) {
          oracle::DensityReport r =
              oracle::order_density_spot_check(ctx, samples, seed);
          py::dict d;
          d["passed"] = r.passed;
          d["samples"] = r.samples;
          d["seed"] = r.seed;
          d["failures"] = r.failures.size();
          return d;
        },
        py::arg("ctx"), py::arg("samples"), py::arg("seed"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
