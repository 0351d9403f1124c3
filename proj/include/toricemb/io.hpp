// io.hpp: serialization of cones, systems and weight data, both as JSON
// documents and as the compact inline flag syntax used by the CLI
// ("1,0,0;0,1,0" for ray lists, "1,1,0,0@4" for a congruence row).
#pragma once

#include "toricemb/cone.hpp"
#include "toricemb/exact.hpp"
#include "toricemb/quotient.hpp"
#include "toricemb/semigroup.hpp"
#include "toricemb/sl2.hpp"

#include <json.hpp>

namespace toricemb {

using Json = nlohmann::json;

// Raised for malformed input; the CLI maps it to the input_error status.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& token);
Integer integer_from_json(const Json& j);  // accepts numbers and strings
Json integer_to_json(const Integer& x);    // number when it fits, else string

IntVector vector_from_json(const Json& j);
Json vector_to_json(const IntVector& v);

Json to_json(const RayCone& c);
RayCone cone_from_json(const Json& j);

Json to_json(const DiophantineSystem& s);
DiophantineSystem system_from_json(const Json& j);

Json to_json(const WeightData& w);
WeightData weights_from_json(const Json& j);

Json to_json(const HilbertBasis& b);
Json to_json(const FgAbelianGroup& g);
Json to_json(const VerifyReport& r);

// Inline formats: "1,0,-2" for a vector, ';' between vectors, "row@mod" for
// a congruence.
IntVector parse_int_vector(const std::string& s);
std::vector<IntVector> parse_vector_list(const std::string& s);
CongruenceRow parse_congruence(const std::string& s);
std::vector<CongruenceRow> parse_congruence_list(const std::string& s);

std::string render_vector(const IntVector& v);
std::string render_vector_list(const std::vector<IntVector>& vs);

}  // namespace toricemb
