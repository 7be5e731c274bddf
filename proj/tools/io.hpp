#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "limitlab/clopen_set.hpp"
#include "limitlab/complexity.hpp"
#include "limitlab/covers.hpp"
#include "limitlab/families.hpp"
#include "limitlab/frequency.hpp"
#include "limitlab/low_basis.hpp"

namespace limitlab::io {

using Json = nlohmann::ordered_json;

using Presentation =
    std::variant<SetFamilyPresentation, SemimeasureFamilyPresentation, OpenFamilyPresentation>;

// Event logs are JSON Lines. The first non-blank line is a header naming the
// family kind and its parameters; every further line is one event:
//
//   {"family":"set","k":2,"universe":["0","1"]}
//   {"family":"semimeasure","tree":false}
//   {"family":"open","epsilon":"1/2","granularity":[{"n":0,"c":3}]}
//
//   {"stage":0,"spec":"tail","index":2,"element":"01"}
//   {"stage":0,"spec":"single","index":3,"element":"1","value":"1/4"}
//   {"stage":1,"spec":"tail","index":0,"interval":"0"}
Presentation read_presentation(std::istream& in);
void write_presentation(std::ostream& out, const Presentation& p);
std::string family_name(const Presentation& p);

// {"initialU":["0"],"queries":[{"label":"T1","T":["1"]}]}
ForcingInstance read_instance(std::istream& in);
// {"prefix":[5,null],"period":[1,1,2,null]}
PartialTrace read_trace(std::istream& in);
// Lines "bits condition value" ("-" is the empty word, '#' starts a comment,
// an optional first line "mode plain|conditional"), or the JSON emitted by
// complexity_to_json.
ComplexityTable read_table(std::istream& in);

BinaryString parse_bits(const Json& j);
Rational parse_rational_field(const Json& j);
std::vector<Rational> parse_grid(const std::string& text);  // "0,1/8,1/4"

Json to_json(const Rational& r);
Json to_json(const ClopenSet& s);
Json to_json(const ElementSet& s);
Json to_json(const ValueTable& t);
Json to_json(const ValidationReport& report);
Json to_json(const CoverSet& cover);
Json to_json(const CoverSemimeasure& cover);
Json to_json(const CoverOpenSet& cover);
Json to_json(const ForcingOutcome& outcome);
Json to_json(const FrequencyTable& table);
Json to_json(const ComplexityTable& table);
Json to_json(const DeficiencyReport& report);
Json to_json(const RandomnessReport& report);
Json to_json(const ComplexityBounds& bounds);

// Inverse of the accepted-operation logs inside the cover JSON.
std::vector<SetOperation> set_log_from_json(const Json& cover);
std::vector<IncreaseOperation> increase_log_from_json(const Json& cover);
std::vector<IntervalOperation> interval_log_from_json(const Json& cover);

}  // namespace limitlab::io
