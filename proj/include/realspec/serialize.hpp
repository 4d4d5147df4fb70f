#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "realspec/curvette.hpp"
#include "realspec/roots.hpp"

namespace realspec {

using Json = nlohmann::json;

Json to_json(const Rat& r);
Json to_json(const GroupVec& g);
Json to_json(const Poly& p);
Json to_json(const GenSeries& s);
Json to_json(const SignChar& sc);
Json to_json(const SemiCurvette& c);
Json to_json(const BinomialRoot& q);
Json to_json(const GenMonomial& m);
Json to_json(const StandardForm& f);

Rat rat_from_json(const Json& j);
GroupVec group_vec_from_json(const Json& j);
Poly poly_from_json(const Json& j, std::size_t n);
GenSeries series_from_json(const Json& j, std::size_t k);
SignChar sign_char_from_json(const Json& j, long denominator = 1);
SemiCurvette curvette_from_json(const Json& j);
BinomialRoot root_from_json(const Json& j);
GenMonomial genmon_from_json(const Json& j);
StandardForm standard_form_from_json(const Json& j);

/// 64-bit FNV-1a of a string, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& data);
/// Hash of the canonical dump of a JSON value.
std::string json_hash(const Json& j);

}  // namespace realspec
