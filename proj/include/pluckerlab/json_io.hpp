#pragma once

#include <json.hpp>

#include "pluckerlab/diagram.hpp"
#include "pluckerlab/index_tuple.hpp"
#include "pluckerlab/inequality.hpp"
#include "pluckerlab/matrix.hpp"
#include "pluckerlab/prematching.hpp"
#include "pluckerlab/tnn_gen.hpp"
#include "pluckerlab/weak_separation.hpp"

namespace pluckerlab {

using Json = nlohmann::json;  // object keys stay sorted

// All serializers emit sorted keys and "p/q" decimal-string rationals so
// fixtures are byte-diffable.
Json to_json(const IndexTuple& t);
IndexTuple tuple_from_json(const Json& j);

Json to_json(const SymDiffLayout& lay);

Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json to_json(const KauffmanDiagram& k);
KauffmanDiagram diagram_from_json(const Json& j);

// Stable map key for a diagram: canonical edges as "a-b" joined by commas.
std::string diagram_key(const KauffmanDiagram& k);

Json to_json(const Certificate& c);
Json to_json(const ViolationWitness& w);
Json to_json(const Report& r);
Json to_json(const InequalitySystem& sys);
Json to_json(const ColoredPrematching& pm);

Json to_json(const GeneratorConfig& c);
GeneratorConfig config_from_json(const Json& j);

// Two-space indented dump with trailing newline.
std::string dump_json(const Json& j);

}  // namespace pluckerlab
