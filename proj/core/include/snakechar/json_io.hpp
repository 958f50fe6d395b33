#pragma once

/// @file json_io.hpp
/// @brief Deterministic JSON, CSV and pretty-text serialization for the
///        library types.
///
/// All emitters produce byte-stable output: object keys appear in the
/// documented order and multisets in their canonical key order.
/// Multiplicities that fit in 64 bits are written as JSON numbers,
/// anything larger as a decimal string; parsers accept both.

#include <string>
#include <utility>
#include <vector>

#include "snakechar/bigint.hpp"
#include "snakechar/duality.hpp"
#include "snakechar/lattice.hpp"
#include "snakechar/monomial.hpp"
#include "snakechar/paths.hpp"

namespace snakechar {

/// {"family":"A"|"B"|"TW","coeffs":[...]}
std::string weight_to_json(const Weight& w);
Weight weight_from_json(const std::string& text);

/// {"family":...,"rank":...,"terms":[[[coeffs],mult],...]} sorted by key.
std::string character_to_json(const Character& c);
Character character_from_json(const std::string& text);

/// One CSV row per term: coeff_1,...,coeff_rank,multiplicity.
std::string character_to_csv(const Character& c);

/// {"m":...,"i":...,"k":...,"ys":[...]}
std::string path_to_json(const PathA& p);
PathA patha_from_json(const std::string& text);

/// {"n":...,"i":...,"k":...,"ys":[...,[a,b]],"zs":[...,[a,b]]} where
/// entries below the last are plain integers and the last is the EpsInt
/// pair [a,b].
std::string path_to_json(const PathB& p);
PathB pathb_from_json(const std::string& text);

/// [[index,sign,power,exponent],...] sorted by key.
std::string monomial_to_json(const YMonomial& m);
std::string monomial_to_json(const ZMonomial& m);
YMonomial ymonomial_from_json(const std::string& text);
ZMonomial zmonomial_from_json(const std::string& text);

/// [[monomial,mult],...] sorted by monomial.
std::string qchar_to_json(const YQChar& q);
std::string qchar_to_json(const ZQChar& q);

/// One labeled report shape for every verifier:
/// {"theorem":...,"params":{...},"equal":...,"lhs_mass":...,
///  "rhs_mass":...,"difference":[[[coeffs],diff],...]}.
std::string report_to_json(const std::string& theorem,
                           const std::vector<std::pair<std::string, std::string>>& params,
                           bool equal, const Character& lhs, const Character& rhs);

/// Human-readable forms used by the pretty output mode.
std::string weight_pretty(const Weight& w);
std::string character_pretty(const Character& c);
std::string monomial_pretty(const YMonomial& m, char letter = 'Y');
std::string monomial_pretty(const ZMonomial& m, char letter = 'Z');
std::string path_pretty(const PathA& p);
std::string path_pretty(const PathB& p);

}  // namespace snakechar
