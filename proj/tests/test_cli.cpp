#include "conecalc/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

const std::string kRoot = CONECALC_SOURCE_DIR;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = conecalc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return read_file(kRoot + "/data/golden/" + name);
}

std::string space(const std::string& name) {
  return kRoot + "/data/spaces/" + name;
}

std::string cone(const std::string& name) {
  return kRoot + "/data/cones/" + name;
}

std::string op(const std::string& name) {
  return kRoot + "/data/operators/" + name;
}

void check_golden(std::vector<std::string> args, const std::string& name) {
  CAPTURE(name);
  CliResult r = run_cli(std::move(args));
  CHECK(r.code == 0);
  CHECK(r.out == golden(name));
}

}  // namespace

TEST_CASE("cone subcommands against golden files") {
  check_golden({"cone", "convert", cone("quadrant2.json")},
               "cone_convert_quadrant2.json");
  check_golden({"cone", "dual", cone("four_ray3.json")},
               "cone_dual_four_ray3.json");
  check_golden({"cone", "check", cone("halfplane2.json")},
               "cone_check_halfplane2.json");
  check_golden({"cone", "check", cone("pentagon3.json")},
               "cone_check_pentagon3.json");
}

TEST_CASE("space subcommands against golden files") {
  check_golden({"space", "check", space("four_ray3.json")},
               "space_check_four_ray3.json");
  check_golden({"space", "anti-lattice", space("pentagon3.json")},
               "space_anti_lattice_pentagon3.json");
  check_golden({"space", "anti-lattice", space("quadrant2.json")},
               "space_anti_lattice_quadrant2.json");
  check_golden({"space", "no-disjoint", space("pentagon3.json")},
               "space_no_disjoint_pentagon3.json");
  check_golden({"space", "norm", space("quadrant2.json"), "--unit", "1,1",
                "--vec", "3,-2"},
               "space_norm_quadrant2.json");
}

TEST_CASE("opspace subcommands against golden files") {
  const std::string q = space("quadrant2.json");
  check_golden({"opspace", "interior", q, q}, "opspace_interior_qq.json");
  check_golden({"opspace", "interior", q, space("ray2.json")},
               "opspace_interior_qray.json");
  check_golden({"opspace", "sprime", q, q}, "opspace_sprime_qq.json");
  check_golden({"opspace", "phi", q, q, "--op", op("split_2x2.json")},
               "opspace_phi_split_qq.json");
  check_golden({"opspace", "disjoint", q, q, op("e11_2x2.json"),
                op("e22_2x2.json")},
               "opspace_disjoint_qq.json");
  check_golden({"opspace", "modulus", q, q, op("split_2x2.json")},
               "opspace_modulus_split_qq.json");
  check_golden({"opspace", "bands", q, q}, "opspace_bands_qq.json");
  check_golden({"opspace", "anti-lattice", "--mode", "direct", q, q},
               "opspace_anti_lattice_qq_direct.json");
}

TEST_CASE("pentagon operator space has no nonzero disjoint pair") {
  const std::string p = space("pentagon3.json");
  check_golden({"opspace", "no-disjoint", "--mode", "direct", p, p},
               "opspace_no_disjoint_pp_direct.json");
}

TEST_CASE("audit command passes on the quadrant pairing") {
  const std::string q = space("quadrant2.json");
  check_golden({"opspace", "audit", "--samples", "10", q, q},
               "opspace_audit_qq.json");
}

TEST_CASE("definition-level disjointness agrees through the CLI") {
  const std::string q = space("quadrant2.json");
  CliResult fast = run_cli(
      {"opspace", "disjoint", q, q, op("e11_2x2.json"), op("identity_2x2.json")});
  CliResult def = run_cli({"opspace", "disjoint", "--definition", q, q,
                           op("e11_2x2.json"), op("identity_2x2.json")});
  CHECK(fast.code == 0);
  CHECK(def.code == 0);
  CHECK(fast.out == def.out);
  CHECK(fast.out.find("false") != std::string::npos);
}

TEST_CASE("phi --preimage inverts the representation") {
  const std::string q = space("quadrant2.json");
  CliResult r = run_cli({"opspace", "phi", q, q, "--preimage", "1,3,2,4"});
  CHECK(r.code == 0);
  // Atoms read (T11, T21, T12, T22).
  CHECK(r.out.find("\"exists\": true") != std::string::npos);
  const std::string expected =
      "[\n      [\n        \"1\",\n        \"2\"\n      ],\n      [\n"
      "        \"3\",\n        \"4\"\n      ]\n    ]";
  CHECK(r.out.find(expected) != std::string::npos);
}

TEST_CASE("reruns are byte-identical") {
  const std::string q = space("quadrant2.json");
  CliResult a = run_cli({"opspace", "bands", q, q});
  CliResult b = run_cli({"opspace", "bands", q, q});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run_cli({"space", "check", "/nonexistent/file.json"}).code == 2);
  CHECK(run_cli({"space", "check", space("halfplane2.json")}).code == 2);
  CHECK(run_cli({"bogus-command"}).code == 2);
  CHECK(run_cli({"space", "norm", space("quadrant2.json"), "--unit", "0,1",
                 "--vec", "1,1"})
            .code == 2);  // not an order unit

  {
    std::ofstream f("/tmp/conecalc_bad.json");
    f << "{ not json";
  }
  CHECK(run_cli({"cone", "check", "/tmp/conecalc_bad.json"}).code == 2);
}

TEST_CASE("resource caps exit with code 3") {
  const std::string q = space("quadrant2.json");
  CHECK(run_cli({"--max-subsets", "4", "opspace", "bands", q, q}).code == 3);
  CHECK(run_cli({"--max-dd-rows", "3", "cone", "convert",
                 cone("pentagon3.json")})
            .code == 3);
}

TEST_CASE("help exits cleanly") {
  CliResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("opspace") != std::string::npos);
}

TEST_CASE("report prose goes to stderr, JSON stays on stdout") {
  const std::string q = space("quadrant2.json");
  CliResult plain = run_cli({"opspace", "interior", q, q});
  CliResult reported = run_cli({"--report", "opspace", "interior", q, q});
  CHECK(reported.code == 0);
  CHECK(reported.out == plain.out);
  CHECK(plain.err.empty());
  CHECK(reported.err.find("order unit") != std::string::npos);
}
