#pragma once

#include <variant>

#include <json.hpp>

#include "qm/chow.hpp"
#include "qm/stability.hpp"
#include "qm/systems.hpp"

namespace qm {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text);

// Matrices travel as arrays of rows of rational strings ("p/q" or "p");
// integer JSON numbers are accepted on input.
Json matrix_to_json(const Matrix<Rat>& m);
Matrix<Rat> matrix_rat_from_json(const Json& j, int rows, int cols);
Json matrix_fp_to_json(const Matrix<Fp>& m);
Matrix<Fp> matrix_fp_from_json(const Json& j, int rows, int cols, std::uint32_t q);

using SystemAny = std::variant<SigmaSystem, LomadzeSystem, HelmkeSystem>;

Json system_to_json(const SigmaSystem& s);
Json system_to_json(const LomadzeSystem& s);
Json system_to_json(const HelmkeSystem& s);
SystemAny system_from_json(const Json& j);

Json quiver_to_json(const MarkedQuiver& mq);
MarkedQuiver quiver_from_json(const Json& j);

Json representation_to_json(const Representation<Fp>& rep);
Representation<Fp> representation_fp_from_json(const Json& j);
/// Character stored alongside a representation ("character": [ints]).
Character character_from_json(const Json& j, std::size_t arity);

Json chamber_to_json(const ChamberLocation& loc);
Json witness_to_json(const SubrepWitness<Fp>& w);
Json verdict_to_json(const StabilityVerdict& v);

Json presentation_to_json(const GradedPresentation& pres);
GradedPresentation presentation_from_json(const Json& j);
Json rank_report_to_json(const RankReport& r);

Json generator_to_json(const GeneratorDescriptor& d, const MarkedQuiver& mq);

}  // namespace qm
