#include "conecalc/cli.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "conecalc/json_io.hpp"
#include "conecalc/lattice.hpp"
#include "conecalc/opspace.hpp"
#include "conecalc/oracle.hpp"
#include "conecalc/rational.hpp"
#include "conecalc/space.hpp"

namespace conecalc {
namespace cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitAudit = 4;

struct Settings {
  std::uint64_t seed = 1;
  std::size_t max_subsets = kDefaultSubsetCap;
  std::size_t max_dd_rows = 0;  // 0 = uncapped
  bool report = false;
};

RatVector vec_from_csv(const std::string& s) {
  RatVector v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(rat_from_string(item));
  if (v.empty()) throw InputError("empty vector argument");
  return v;
}

json pair_witness(const std::optional<std::pair<RatVector, RatVector>>& w) {
  if (!w) return nullptr;
  return json::array({json_io::vec_to_json(w->first),
                      json_io::vec_to_json(w->second)});
}

json op_pair_witness(const std::optional<std::pair<Operator, Operator>>& w) {
  if (!w) return nullptr;
  return json::array({json_io::operator_to_json(w->first),
                      json_io::operator_to_json(w->second)});
}

VerdictMode parse_mode(const std::string& mode) {
  if (mode == "compositional") return VerdictMode::kCompositional;
  if (mode == "direct") return VerdictMode::kDirect;
  throw InputError("mode must be 'compositional' or 'direct'");
}

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  Settings st;
  int exit_code = kExitOk;

  void emit(const json& j) { out << json_io::dump(j); }

  void prose(const std::string& text) {
    if (st.report) err << text << "\n";
  }
};

ConeRep load_cone(const Ctx& c, const std::string& path) {
  set_dd_row_cap(c.st.max_dd_rows);
  return json_io::cone_from_json(json_io::load_file(path));
}

OrderedSpace load_space(const Ctx& c, const std::string& path) {
  set_dd_row_cap(c.st.max_dd_rows);
  return json_io::space_from_json(json_io::load_file(path));
}

Operator load_operator(const std::string& path) {
  return json_io::operator_from_json(json_io::load_file(path));
}

OperatorSpaceCtx load_op_ctx(const Ctx& c, const std::string& x_path,
                             const std::string& y_path) {
  OrderedSpace x = load_space(c, x_path);
  OrderedSpace y = load_space(c, y_path);
  if (!interior_verdict(x, y).nonempty)
    throw InputError(
        "the positive-operator cone has empty interior for these spaces");
  return build_ctx(x, y);
}

void check_shape(const OperatorSpaceCtx& ctx, const Operator& t) {
  if (t.matrix.rows != ctx.Y.dim || t.matrix.cols != ctx.X.dim)
    throw InputError("operator shape does not match the spaces");
}

// ---- cone ----------------------------------------------------------------

void add_cone_commands(CLI::App& app, Ctx& c) {
  CLI::App* cone = app.add_subcommand("cone", "Polyhedral cone utilities");
  cone->require_subcommand(1);

  auto in = std::make_shared<std::string>();

  CLI::App* convert =
      cone->add_subcommand("convert", "Fill in the missing representation");
  convert->add_option("input", *in, "cone document")->required();
  convert->callback([&c, in] {
    ConeRep rep = load_cone(c, *in);
    c.prose(
        "Double description converts between the generator and inequality "
        "descriptions of the cone; the output carries both, canonically "
        "sorted and irredundant.");
    c.emit(json_io::cone_to_json(rep));
  });

  CLI::App* dual = cone->add_subcommand("dual", "Emit the dual cone");
  dual->add_option("input", *in, "cone document")->required();
  dual->callback([&c, in] {
    ConeRep rep = load_cone(c, *in);
    c.prose(
        "The dual cone {f : <f,x> >= 0 on the cone} swaps the roles of "
        "generators and facet normals.");
    c.emit(json_io::cone_to_json(dual_cone(rep)));
  });

  CLI::App* check =
      cone->add_subcommand("check", "Report pointedness and dimensions");
  check->add_option("input", *in, "cone document")->required();
  check->callback([&c, in] {
    ConeRep rep = load_cone(c, *in);
    json j;
    j["pointed"] = rep.pointed;
    j["full_dimensional"] = rep.full_dimensional;
    j["extremal_rays"] = rep.generators.size();
    j["facets"] = rep.inequalities.size();
    j["lineality_dim"] = rep.lineality.size();
    c.prose(
        "A cone is pointed when it contains no line; ordered vector "
        "spaces require a pointed cone, and interior-point arguments "
        "additionally require full dimension.");
    c.emit(j);
  });
}

// ---- space ---------------------------------------------------------------

void add_space_commands(CLI::App& app, Ctx& c) {
  CLI::App* space = app.add_subcommand("space", "Ordered vector spaces");
  space->require_subcommand(1);

  auto in = std::make_shared<std::string>();

  CLI::App* check = space->add_subcommand("check", "Validate a space");
  check->add_option("input", *in, "space document")->required();
  check->callback([&c, in] {
    OrderedSpace s = load_space(c, *in);
    json j;
    j["dim"] = s.dim;
    j["pointed"] = true;
    j["full_dimensional"] = s.cone.full_dimensional;
    j["extremal_rays"] = s.ext_primal.size();
    j["dual_extremal_rays"] = s.ext_dual.size();
    c.emit(j);
  });

  CLI::App* anti =
      space->add_subcommand("anti-lattice", "Anti-lattice verdict");
  anti->add_option("input", *in, "space document")->required();
  anti->callback([&c, in] {
    OrderedSpace s = load_space(c, *in);
    AntiLatticeVerdict v = anti_lattice_verdict(s);
    json j;
    j["is_anti_lattice"] = v.is_anti_lattice;
    j["witness"] = pair_witness(v.witness);
    c.prose(
        "A space is an anti-lattice exactly when no two nonzero positive "
        "elements are disjoint; a false verdict carries such a pair as "
        "witness.");
    c.emit(j);
  });

  CLI::App* nodis =
      space->add_subcommand("no-disjoint", "No nonzero disjoint pair");
  nodis->add_option("input", *in, "space document")->required();
  nodis->callback([&c, in] {
    OrderedSpace s = load_space(c, *in);
    NoDisjointVerdict v = no_disjoint_pair_verdict(s, c.st.max_subsets);
    json j;
    j["holds"] = v.holds;
    j["witness"] = pair_witness(v.witness);
    c.prose(
        "Searches complementary supports on the dual extremal rays for a "
        "nonzero disjoint pair of (not necessarily positive) vectors.");
    c.emit(j);
  });

  auto unit = std::make_shared<std::string>();
  auto vecarg = std::make_shared<std::string>();
  CLI::App* norm = space->add_subcommand("norm", "Order-unit norm");
  norm->add_option("input", *in, "space document")->required();
  norm->add_option("--unit", *unit, "order unit, comma-separated rationals")
      ->required();
  norm->add_option("--vec", *vecarg, "vector, comma-separated rationals")
      ->required();
  norm->callback([&c, in, unit, vecarg] {
    OrderedSpace s = load_space(c, *in);
    RatVector u = vec_from_csv(*unit);
    RatVector x = vec_from_csv(*vecarg);
    if (u.size() != s.dim || x.size() != s.dim)
      throw InputError("vector length does not match the space dimension");
    if (!is_order_unit(s, u)) throw InputError("--unit is not an order unit");
    json j;
    j["norm"] = rat_to_string(order_unit_norm(s, u, x));
    c.prose(
        "The order-unit norm of x is the least t with -t*u <= x <= t*u; "
        "over a polyhedral cone it is a maximum over the dual extremal "
        "rays.");
    c.emit(j);
  });
}

// ---- opspace -------------------------------------------------------------

void add_opspace_commands(CLI::App& app, Ctx& c) {
  CLI::App* os = app.add_subcommand("opspace", "Spaces of positive operators");
  os->require_subcommand(1);

  auto xf = std::make_shared<std::string>();
  auto yf = std::make_shared<std::string>();
  auto add_xy = [&](CLI::App* sub) {
    sub->add_option("X", *xf, "domain space document")->required();
    sub->add_option("Y", *yf, "target space document")->required();
  };

  CLI::App* interior =
      os->add_subcommand("interior", "Interior of the operator cone");
  add_xy(interior);
  interior->callback([&c, xf, yf] {
    OrderedSpace x = load_space(c, *xf);
    OrderedSpace y = load_space(c, *yf);
    InteriorVerdict v = interior_verdict(x, y);
    json j;
    j["nonempty"] = v.nonempty;
    j["witness"] =
        v.witness ? json_io::operator_to_json(*v.witness) : json(nullptr);
    c.prose(
        "The cone of positive operators has nonempty interior exactly "
        "when the target cone is full-dimensional and the domain carries "
        "an additive norm, i.e. its dual cone is full-dimensional; the "
        "witness is the rank-one order unit y0 (x) x0'.");
    c.emit(j);
  });

  CLI::App* sprime =
      os->add_subcommand("sprime", "Extremal functionals of the dual cone");
  add_xy(sprime);
  sprime->callback([&c, xf, yf] {
    OperatorSpaceCtx ctx = load_op_ctx(c, *xf, *yf);
    c.prose(
        "Each atom is a normalized rank-one functional y' (x) x built "
        "from extremal rays of the domain cone and of the target dual "
        "cone; together they are exactly the extremal rays of the dual "
        "operator cone and determine positivity.");
    c.emit(json_io::sprime_to_json(ctx));
  });

  auto opf = std::make_shared<std::string>();
  auto wcsv = std::make_shared<std::string>();
  CLI::App* phi_cmd =
      os->add_subcommand("phi", "Functional representation and its inverse");
  add_xy(phi_cmd);
  CLI::Option* phi_op = phi_cmd->add_option("--op", *opf, "operator document");
  CLI::Option* phi_pre = phi_cmd->add_option(
      "--preimage", *wcsv, "target vector, comma-separated rationals");
  phi_op->excludes(phi_pre);
  phi_cmd->callback([&c, xf, yf, opf, wcsv, phi_op, phi_pre] {
    OperatorSpaceCtx ctx = load_op_ctx(c, *xf, *yf);
    if (phi_op->count()) {
      Operator t = load_operator(*opf);
      check_shape(ctx, t);
      json j;
      j["phi"] = json_io::vec_to_json(phi(ctx, t));
      c.prose(
          "Phi(T) lists the normalized values <y', T x> over the atoms; "
          "Phi is linear, injective and bipositive, embedding the "
          "operator space into a vector lattice that covers it.");
      c.emit(j);
    } else if (phi_pre->count()) {
      RatVector w = vec_from_csv(*wcsv);
      if (w.size() != ctx.sprime.size())
        throw InputError("--preimage length must equal the atom count");
      std::optional<Operator> t = phi_preimage(ctx, w);
      json j;
      j["exists"] = bool(t);
      j["operator"] = t ? json_io::operator_to_json(*t) : json(nullptr);
      c.emit(j);
    } else {
      throw InputError("phi needs --op or --preimage");
    }
  });

  auto t1f = std::make_shared<std::string>();
  auto t2f = std::make_shared<std::string>();
  CLI::App* disjoint = os->add_subcommand("disjoint", "Disjointness test");
  add_xy(disjoint);
  disjoint->add_option("T1", *t1f, "operator document")->required();
  disjoint->add_option("T2", *t2f, "operator document")->required();
  auto use_def = std::make_shared<bool>(false);
  disjoint->add_flag("--definition", *use_def,
                     "use the upper-bound-set definition instead of the "
                     "support criterion");
  disjoint->callback([&c, xf, yf, t1f, t2f, use_def] {
    OperatorSpaceCtx ctx = load_op_ctx(c, *xf, *yf);
    Operator t1 = load_operator(*t1f);
    Operator t2 = load_operator(*t2f);
    check_shape(ctx, t1);
    check_shape(ctx, t2);
    json j;
    j["disjoint"] = *use_def ? oracle::disjoint_by_definition_ops(ctx, t1, t2)
                             : disjoint_ops(ctx, t1, t2);
    c.prose(
        "Two operators are disjoint exactly when at every atom at least "
        "one of the two functional values vanishes; this reduces the "
        "upper-bound-set definition to finitely many equality checks.");
    c.emit(j);
  });

  CLI::App* modulus_cmd =
      os->add_subcommand("modulus", "Modulus and disjoint decomposition");
  add_xy(modulus_cmd);
  modulus_cmd->add_option("T", *t1f, "operator document")->required();
  auto via_bands = std::make_shared<bool>(false);
  modulus_cmd->add_flag("--via-bands", *via_bands,
                        "search the band lattice instead of inverting Phi");
  modulus_cmd->callback([&c, xf, yf, t1f, via_bands] {
    OperatorSpaceCtx ctx = load_op_ctx(c, *xf, *yf);
    Operator t = load_operator(*t1f);
    check_shape(ctx, t);
    json j;
    if (*via_bands) {
      BandEnumeration bands = enumerate_bands(ctx, c.st.max_subsets);
      if (bands.truncated)
        throw CapExceeded("band enumeration hit the --max-subsets cap of " +
                          std::to_string(c.st.max_subsets));
      std::optional<BandModulusResult> r =
          modulus_via_bands(ctx, t, bands.bands);
      j["exists"] = bool(r);
      if (r) {
        Operator m{r->positive_part.matrix};
        for (std::size_t i = 0; i < m.matrix.a.size(); ++i)
          m.matrix.a[i] += r->negative_part.matrix.a[i];
        j["modulus"] = json_io::operator_to_json(m);
        j["positive_part"] = json_io::operator_to_json(r->positive_part);
        j["negative_part"] = json_io::operator_to_json(r->negative_part);
        j["band_support"] = r->band.support;
      }
    } else {
      std::optional<ModulusResult> r = modulus(ctx, t);
      j["exists"] = bool(r);
      if (r) {
        j["modulus"] = json_io::operator_to_json(r->modulus);
        j["positive_part"] = json_io::operator_to_json(r->positive_part);
        j["negative_part"] = json_io::operator_to_json(r->negative_part);
      }
    }
    c.prose(
        "T has a modulus exactly when the pointwise absolute value of "
        "Phi(T) is again a Phi-image; the modulus then splits T into a "
        "difference of disjoint positive operators, equivalently T lies "
        "in B - B^d for some band B.");
    c.emit(j);
  });

  CLI::App* bands_cmd = os->add_subcommand("bands", "Enumerate all bands");
  add_xy(bands_cmd);
  bands_cmd->callback([&c, xf, yf] {
    OperatorSpaceCtx ctx = load_op_ctx(c, *xf, *yf);
    BandEnumeration e = enumerate_bands(ctx, c.st.max_subsets);
    if (e.truncated)
      throw CapExceeded("band enumeration hit the --max-subsets cap of " +
                        std::to_string(c.st.max_subsets));
    json j;
    j["count"] = e.bands.size();
    json list = json::array();
    for (const BandDescriptor& b : e.bands)
      list.push_back(json_io::band_to_json(ctx, b));
    j["bands"] = std::move(list);
    c.prose(
        "A band is a subspace equal to its double disjoint-complement; "
        "every band is the common zero set of the atoms outside its "
        "support.");
    c.emit(j);
  });

  auto mode = std::make_shared<std::string>("compositional");
  CLI::App* anti = os->add_subcommand("anti-lattice",
                                      "Anti-lattice verdict for C(X,Y)");
  add_xy(anti);
  anti->add_option("--mode", *mode, "compositional|direct");
  anti->callback([&c, xf, yf, mode] {
    OperatorSpaceCtx ctx = load_op_ctx(c, *xf, *yf);
    OpVerdict v =
        op_anti_lattice_verdict(ctx, parse_mode(*mode), c.st.max_subsets);
    json j;
    j["is_anti_lattice"] = v.value;
    j["witness"] = op_pair_witness(v.witness);
    c.prose(
        "C(X,Y) is an anti-lattice exactly when both the domain dual "
        "space and the target space are anti-lattices; direct mode "
        "re-derives the verdict from the extremal rays of the operator "
        "cone.");
    c.emit(j);
  });

  CLI::App* nodis = os->add_subcommand(
      "no-disjoint", "No nonzero disjoint operator pair");
  add_xy(nodis);
  nodis->add_option("--mode", *mode, "compositional|direct");
  nodis->callback([&c, xf, yf, mode] {
    OperatorSpaceCtx ctx = load_op_ctx(c, *xf, *yf);
    OpVerdict v =
        op_no_disjoint_verdict(ctx, parse_mode(*mode), c.st.max_subsets);
    json j;
    j["holds"] = v.value;
    j["witness"] = op_pair_witness(v.witness);
    c.prose(
        "C(X,Y) has no nonzero disjoint pair exactly when the same holds "
        "in the domain dual space and in the target space; direct mode "
        "decides it through the band lattice.");
    c.emit(j);
  });

  auto samples = std::make_shared<std::size_t>(50);
  CLI::App* audit = os->add_subcommand(
      "audit", "Cross-check fast paths against definition-level oracles");
  add_xy(audit);
  audit->add_option("--samples", *samples, "sample count per check");
  audit->callback([&c, xf, yf, samples] {
    OperatorSpaceCtx ctx = load_op_ctx(c, *xf, *yf);
    auto base = [](const std::string& p) {
      const std::size_t k = p.find_last_of('/');
      return k == std::string::npos ? p : p.substr(k + 1);
    };
    const std::string ctx_name = base(*xf) + " x " + base(*yf);

    oracle::ExtremalityReport ext = oracle::extremality_audit(ctx);
    oracle::DensityReport den =
        oracle::order_density_spot_check(ctx, *samples, c.st.seed);

    json dis;
    dis["check"] = "disjointness_definition_vs_support";
    dis["context"] = ctx_name;
    dis["samples"] = *samples;
    json mismatches = json::array();
    std::mt19937_64 rng(c.st.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long> d(-3, 3);
    for (std::size_t n = 0; n < *samples; ++n) {
      Operator t1, t2;
      t1.matrix = RatMatrix(ctx.Y.dim, ctx.X.dim);
      t2.matrix = RatMatrix(ctx.Y.dim, ctx.X.dim);
      for (auto& e : t1.matrix.a) e = d(rng);
      for (auto& e : t2.matrix.a) e = d(rng);
      if (disjoint_ops(ctx, t1, t2) !=
          oracle::disjoint_by_definition_ops(ctx, t1, t2)) {
        mismatches.push_back(
            json::array({json_io::operator_to_json(t1),
                         json_io::operator_to_json(t2)}));
      }
    }
    dis["passed"] = mismatches.empty();
    dis["mismatches"] = std::move(mismatches);

    json ext_j = json_io::extremality_report_to_json(ext);
    json den_j = json_io::density_report_to_json(den);
    ext_j["context"] = ctx_name;
    den_j["context"] = ctx_name;

    json j;
    j["seed"] = c.st.seed;
    j["checks"] = json::array({ext_j, den_j, dis});
    const bool passed =
        ext.passed && den.passed && dis["passed"].get<bool>();
    j["passed"] = passed;
    c.prose(
        "The audit recomputes the extremal functionals by double "
        "description, spot-checks order density of the functional "
        "representation, and compares the finite disjointness criterion "
        "against the upper-bound-set definition on random pairs.");
    c.emit(j);
    if (!passed) c.exit_code = kExitAudit;
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact calculus of positive operators between polyhedrally "
               "ordered spaces"};
  app.name("conecalc");
  app.require_subcommand(1);
  app.fallthrough();

  Ctx c{out, err, Settings{}, kExitOk};
  app.add_option("--seed", c.st.seed, "seed for sampled checks");
  app.add_option("--max-subsets", c.st.max_subsets,
                 "cap for subset/band enumeration");
  app.add_option("--max-dd-rows", c.st.max_dd_rows,
                 "cap on intermediate double-description rows (0 = none)");
  app.add_flag("--report", c.st.report,
               "explain the result in prose on stderr");

  add_cone_commands(app, c);
  add_space_commands(app, c);
  add_opspace_commands(app, c);
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands(nullptr)) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  set_dd_row_cap(0);
  return c.exit_code;
}

}  // namespace cli
}  // namespace conecalc
