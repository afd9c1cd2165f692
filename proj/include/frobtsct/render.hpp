#pragma once

#include <string>

#include <json.hpp>

#include "frobtsct/oracle.hpp"
#include "frobtsct/tsct.hpp"

namespace frobtsct {

using Json = nlohmann::ordered_json;

// schema "frobtsct/1"; all character values are atom strings, all key orders
// are fixed, so serialization is byte-deterministic
Json spec_json(const FrobSpec& spec);
Json chartab_json(const CharTable& X);
Json dec_json(const DecMatrix& dec);
Json tsct_json(const TSCT& t);
Json report_json(const Report& rep);

// wraps a body with {"schema", "kind", "spec", ...body}
Json document_json(const std::string& kind, const FrobSpec& spec, const Json& body);

std::string json_string(const Json& j); // 2-space indent, trailing newline

std::string chartab_csv(const CharTable& X);
std::string dec_csv(const DecMatrix& dec);
std::string tsct_csv(const TSCT& t);
std::string report_text(const Report& rep);

std::string chartab_latex(const CharTable& X);
std::string dec_latex(const DecMatrix& dec);
std::string tsct_latex(const TSCT& t);

// \zeta_n^k rendering of a value at its minimal conductor
std::string latex_value(const Cyclotomic& x);

} // namespace frobtsct
