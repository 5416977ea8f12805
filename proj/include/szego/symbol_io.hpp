#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "szego/symbol.hpp"

namespace szego {

// "p/q" or "p" -> pi * p / q
std::optional<double> parse_theta_over_pi(const std::string &text);

// Parses {"factors": [...], "regular": {"p": [...], "q": [...]}}.
// Every problem found is appended to errors, prefixed with path.
std::optional<FHSymbol> parse_symbol(const nlohmann::json &j, std::vector<std::string> &errors,
                                     const std::string &path = "symbol");

nlohmann::json symbol_to_json(const FHSymbol &s);

} // namespace szego
