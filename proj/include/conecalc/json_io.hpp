#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "conecalc/cone.hpp"
#include "conecalc/lattice.hpp"
#include "conecalc/opspace.hpp"
#include "conecalc/oracle.hpp"
#include "conecalc/rational.hpp"
#include "conecalc/space.hpp"

namespace conecalc {
namespace json_io {

// All rationals serialize as canonical strings ("p/q" or "p"); integer
// JSON numbers are accepted on input. Malformed documents raise
// InputError.

nlohmann::json vec_to_json(const RatVector& v);
RatVector vec_from_json(const nlohmann::json& j);

// {"dim": n, "generators": [[...]], "inequalities": [[...]]}. Input may
// carry either list (the other is reconstructed); when both are present
// they must describe the same cone. Output always carries both, plus
// "lineality" for non-pointed cones.
nlohmann::json cone_to_json(const ConeRep& c);
ConeRep cone_from_json(const nlohmann::json& j);

// {"dim": n, "cone": <cone doc>}
nlohmann::json space_to_json(const OrderedSpace& s);
OrderedSpace space_from_json(const nlohmann::json& j);

// {"rows": dimY, "cols": dimX, "entries": [[...]]}, row-major.
nlohmann::json operator_to_json(const Operator& t);
Operator operator_from_json(const nlohmann::json& j);

// [{"i":, "j":, "x": [...], "yprime": [...], "scale": "..."}...]
nlohmann::json sprime_to_json(const OperatorSpaceCtx& ctx);

// {"support": [...], "basis": [<operator doc>...]}
nlohmann::json band_to_json(const OperatorSpaceCtx& ctx,
                            const BandDescriptor& band);

nlohmann::json extremality_report_to_json(const oracle::ExtremalityReport& r);
nlohmann::json density_report_to_json(const oracle::DensityReport& r);

// Canonical dump: keys sorted (nlohmann default object ordering),
// 2-space indent, trailing newline. Byte-identical across runs.
std::string dump(const nlohmann::json& j);

// Reads and parses a file; wraps parse errors in InputError.
nlohmann::json load_file(const std::string& path);

}  // namespace json_io
}  // namespace conecalc
