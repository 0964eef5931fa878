#include "conecalc/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace conecalc {
namespace json_io {

using nlohmann::json;

namespace {

Rational rat_from_json(const json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer())
    return rat_from_string(std::to_string(j.get<long long>()));
  throw InputError("expected a rational string, got " + j.dump());
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols; ++k)
      row.push_back(rat_to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RatVector> vec_list_from_json(const json& j, std::size_t dim,
                                          const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<RatVector> out;
  for (const json& e : j) {
    RatVector v = vec_from_json(e);
    if (v.size() != dim)
      throw InputError(std::string(what) + ": vector of length " +
                       std::to_string(v.size()) + ", expected " +
                       std::to_string(dim));
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t dim_from_json(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned() || j[key] == 0)
    throw InputError(std::string("missing or invalid \"") + key + "\"");
  return j[key].get<std::size_t>();
}

}  // namespace

json vec_to_json(const RatVector& v) {
  json out = json::array();
  for (const Rational& r : v) out.push_back(rat_to_string(r));
  return out;
}

RatVector vec_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a vector array");
  RatVector v;
  for (const json& e : j) v.push_back(rat_from_json(e));
  return v;
}

json cone_to_json(const ConeRep& c) {
  json out;
  out["dim"] = c.dim;
  json gens = json::array();
  for (const RatVector& g : c.generators) gens.push_back(vec_to_json(g));
  out["generators"] = std::move(gens);
  json ineqs = json::array();
  for (const RatVector& a : c.inequalities) ineqs.push_back(vec_to_json(a));
  out["inequalities"] = std::move(ineqs);
  if (!c.lineality.empty()) {
    json lin = json::array();
    for (const RatVector& l : c.lineality) lin.push_back(vec_to_json(l));
    out["lineality"] = std::move(lin);
  }
  return out;
}

ConeRep cone_from_json(const json& j) {
  if (!j.is_object()) throw InputError("cone document must be an object");
  const std::size_t dim = dim_from_json(j, "dim");
  const bool has_g = j.contains("generators");
  const bool has_h = j.contains("inequalities");
  if (!has_g && !has_h)
    throw InputError("cone document needs \"generators\" or \"inequalities\"");
  ConeRep c;
  if (has_g) {
    c = dd_v_to_h(dim, vec_list_from_json(j["generators"], dim, "generators"));
    if (has_h) {
      ConeRep from_h = dd_h_to_v(
          dim, vec_list_from_json(j["inequalities"], dim, "inequalities"));
      if (from_h.generators != c.generators ||
          from_h.lineality != c.lineality)
        throw InputError(
            "generators and inequalities describe different cones");
    }
  } else {
    c = dd_h_to_v(dim,
                  vec_list_from_json(j["inequalities"], dim, "inequalities"));
  }
  return c;
}

json space_to_json(const OrderedSpace& s) {
  json out;
  out["dim"] = s.dim;
  out["cone"] = cone_to_json(s.cone);
  return out;
}

OrderedSpace space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cone"))
    throw InputError("space document must be an object with a \"cone\"");
  const std::size_t dim = dim_from_json(j, "dim");
  ConeRep c = cone_from_json(j["cone"]);
  if (c.dim != dim)
    throw InputError("space dim disagrees with cone dim");
  return make_space(c);
}

json operator_to_json(const Operator& t) {
  json out;
  out["rows"] = t.matrix.rows;
  out["cols"] = t.matrix.cols;
  out["entries"] = matrix_to_json(t.matrix);
  return out;
}

Operator operator_from_json(const json& j) {
  if (!j.is_object()) throw InputError("operator document must be an object");
  const std::size_t rows = dim_from_json(j, "rows");
  const std::size_t cols = dim_from_json(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array() ||
      j["entries"].size() != rows)
    throw InputError("operator \"entries\" must be an array of rows");
  Operator t;
  t.matrix = RatMatrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j["entries"][i];
    if (!row.is_array() || row.size() != cols)
      throw InputError("operator row of wrong length");
    for (std::size_t k = 0; k < cols; ++k)
      t.matrix(i, k) = rat_from_json(row[k]);
  }
  return t;
}

json sprime_to_json(const OperatorSpaceCtx& ctx) {
  json out = json::array();
  for (const SPrimeAtom& a : ctx.sprime) {
    json e;
    e["i"] = a.i;
    e["j"] = a.j;
    e["x"] = vec_to_json(ctx.X.ext_primal[a.i]);
    e["yprime"] = vec_to_json(ctx.Y.ext_dual[a.j]);
    e["scale"] = rat_to_string(a.scale);
    out.push_back(std::move(e));
  }
  return out;
}

json band_to_json(const OperatorSpaceCtx& ctx, const BandDescriptor& band) {
  json out;
  out["support"] = band.support;
  json basis = json::array();
  for (const RatVector& v : band.basis)
    basis.push_back(operator_to_json(unvectorize(v, ctx.Y.dim, ctx.X.dim)));
  out["basis"] = std::move(basis);
  return out;
}

json extremality_report_to_json(const oracle::ExtremalityReport& r) {
  json out;
  out["check"] = "extremality";
  out["passed"] = r.passed;
  out["sprime_count"] = r.sprime_count;
  out["dd_ray_count"] = r.dd_ray_count;
  json failures = json::array();
  for (const RatVector& v : r.sprime_not_extremal)
    failures.push_back({{"kind", "sprime_row_not_extremal"},
                        {"row", vec_to_json(v)}});
  for (const RatVector& v : r.extra_dd_rays)
    failures.push_back({{"kind", "extremal_ray_outside_sprime"},
                        {"row", vec_to_json(v)}});
  out["failures"] = std::move(failures);
  return out;
}

json density_report_to_json(const oracle::DensityReport& r) {
  json out;
  out["check"] = "order_density";
  out["passed"] = r.passed;
  out["seed"] = r.seed;
  out["samples"] = r.samples;
  json failures = json::array();
  for (const oracle::DensityFailure& f : r.failures) {
    json e;
    e["sample"] = f.sample;
    e["atom"] = f.atom;
    e["w"] = vec_to_json(f.w);
    e["unbounded"] = f.unbounded;
    if (!f.unbounded) e["attained_min"] = rat_to_string(f.attained_min);
    failures.push_back(std::move(e));
  }
  out["failures"] = std::move(failures);
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace json_io
}  // namespace conecalc
