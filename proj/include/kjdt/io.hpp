#pragma once

// Text and JSON forms of partitions, tableaux and coefficient records, and
// the append-only JSON-lines coefficient cache.
//
// Grid text: one row per line ('/' also separates rows), cells separated by
// spaces. '.' marks an inner box, 'X' a mark, '{a,b}' a set-valued cell.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "kjdt/coefficients.hpp"

namespace kjdt {

/// Malformed input. line() and column() are 1-based; 0 when unknown.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Two cache records disagree on the value of one key.
class CacheConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCacheEnvVar = "KJDT_CACHE";

Partition parse_partition(const std::string& text);
/// "k1,n1,k2,n2", brackets optional.
DirectSumFrame parse_frame(const std::string& text);

using AnyTableau = std::variant<IncreasingTableau, AugmentedTableau, SetValuedTableau>;

/// Grid or JSON text. Grids with braces are set-valued, grids with X are
/// augmented, anything else is an increasing tableau.
AnyTableau parse_tableau(const std::string& text);
IncreasingTableau parse_increasing(const std::string& text);
AugmentedTableau parse_augmented(const std::string& text);
SetValuedTableau parse_set_valued(const std::string& text);

/// Grid text that parse_tableau maps back to the same value. Set-valued
/// cells always carry braces.
std::string format_tableau(const AnyTableau& t);
std::string format_tableau(const IncreasingTableau& t);

nlohmann::json to_json(const Partition& p);
/// {"outer", "inner", "cells": [[row, col, value], ...]} with value an
/// integer, "X", or a list of integers.
nlohmann::json to_json(const AnyTableau& t);
nlohmann::json to_json(const IncreasingTableau& t);
AnyTableau tableau_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CoefficientRecord& r);
CoefficientRecord record_from_json(const nlohmann::json& j);

/// "D [2] [2,1] [3,1]".
std::string record_key(const CoefficientRecord& r);

using CoefficientTable = std::map<std::string, CoefficientRecord>;

/// Appends one line with a single write on a descriptor opened for append.
void cache_append(const std::string& path, const CoefficientRecord& record);
/// Missing files load as empty. Throws CacheConflict on disagreeing values
/// and ParseError on malformed lines.
CoefficientTable cache_load(const std::string& path);

/// The path named by KJDT_CACHE, if set and nonempty.
std::optional<std::string> default_cache_path();

}  // namespace kjdt
