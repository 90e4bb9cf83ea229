#include "kjdt/io.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

namespace kjdt {
namespace {

using nlohmann::json;

struct Token {
  enum Kind { kDot, kMark, kNumber, kSet } kind = kNumber;
  std::vector<int> values;
  int line = 0;
  int column = 0;
};

using TokenRows = std::vector<std::vector<Token>>;

int parse_positive(const std::string& digits, int line, int column) {
  if (digits.empty() || digits.size() > 9 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    throw ParseError("expected a positive integer, got '" + digits + "'", line, column);
  const int v = std::stoi(digits);
  if (v <= 0) throw ParseError("labels must be positive", line, column);
  return v;
}

TokenRows tokenize_grid(const std::string& text) {
  TokenRows rows(1);
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n' || ch == '/') {
      rows.emplace_back();
      advance();
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      advance();
    } else if (ch == '.') {
      rows.back().push_back({Token::kDot, {}, line, column});
      advance();
    } else if (ch == 'X' || ch == 'x') {
      rows.back().push_back({Token::kMark, {}, line, column});
      advance();
    } else if (ch == '{') {
      Token tok{Token::kSet, {}, line, column};
      advance();
      std::string digits;
      int start_col = column;
      for (;;) {
        if (i >= text.size() || text[i] == '\n')
          throw ParseError("unterminated '{'", tok.line, tok.column);
        const char c = text[i];
        if (c == ',' || c == '}') {
          while (!digits.empty() && digits.back() == ' ') digits.pop_back();
          tok.values.push_back(parse_positive(digits, line, start_col));
          digits.clear();
          advance();
          start_col = column;
          if (c == '}') break;
        } else if (c == ' ' && digits.empty()) {
          advance();
          start_col = column;
        } else {
          digits += c;
          advance();
        }
      }
      rows.back().push_back(std::move(tok));
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      Token tok{Token::kNumber, {}, line, column};
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i];
        advance();
      }
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '/')
        throw ParseError(std::string("unexpected character '") + text[i] + "'", line, column);
      tok.values.push_back(parse_positive(digits, tok.line, tok.column));
      rows.back().push_back(std::move(tok));
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", line, column);
    }
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return rows;
}

// Shared layout of increasing and augmented grids: leading dots, then values.
std::pair<SkewShape, std::vector<std::vector<int>>> skew_layout(const TokenRows& rows, bool allow_marks) {
  std::vector<int> inner;
  std::vector<int> outer;
  std::vector<std::vector<int>> values;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int dots = 0;
    std::vector<int> row;
    for (const Token& tok : rows[r]) {
      switch (tok.kind) {
        case Token::kDot:
          if (!row.empty()) throw ParseError("inner boxes '.' must start the row", tok.line, tok.column);
          ++dots;
          break;
        case Token::kMark:
          if (!allow_marks) throw TableauError("X marks need an augmented tableau");
          row.push_back(AugmentedTableau::kMark);
          break;
        case Token::kNumber:
          row.push_back(tok.values.front());
          break;
        case Token::kSet:
          throw TableauError("set-valued cell in a single-valued tableau");
      }
    }
    if (rows[r].empty()) throw ParseError("empty row", static_cast<int>(r) + 1, 1);
    inner.push_back(dots);
    outer.push_back(dots + static_cast<int>(row.size()));
    values.push_back(std::move(row));
  }
  Partition outer_p(outer);
  Partition inner_p(inner);
  values.resize(static_cast<std::size_t>(outer_p.length()));
  return {SkewShape(outer_p, inner_p), std::move(values)};
}

std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool looks_like_json(const std::string& text) {
  const std::string t = trimmed(text);
  if (t.empty() || t.front() != '{') return false;
  const auto next = t.find_first_not_of(" \t\r\n", 1);
  return next != std::string::npos && t[next] == '"';
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(std::string("malformed JSON: ") + e.what(), line, column);
  }
}

Partition partition_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string("field '") + field + "' must be a list of integers", 0, 0);
  std::vector<int> parts;
  for (const json& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + field + "' must hold integers", 0, 0);
    parts.push_back(v.get<int>());
  }
  return Partition(parts);
}

const json& require(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) throw ParseError(std::string("missing field '") + field + "'", 0, 0);
  return j.at(field);
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string t = trimmed(text);
  int offset = 1;
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw ParseError("missing ']'", 1, static_cast<int>(t.size()));
    t = t.substr(1, t.size() - 2);
    offset = 2;
  }
  std::vector<int> out;
  if (trimmed(t).empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = t.find(',', pos);
    const std::string item = trimmed(t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (item.empty() || item.size() > 9 ||
        !std::all_of(item.begin(), item.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw ParseError("expected a nonnegative integer, got '" + item + "'", 1, offset + static_cast<int>(pos));
    out.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& what, int line, int column)
    : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what
                                     : what),
      line_(line),
      column_(column) {}

Partition parse_partition(const std::string& text) { return Partition(parse_int_list(text)); }

DirectSumFrame parse_frame(const std::string& text) {
  const std::vector<int> v = parse_int_list(text);
  if (v.size() != 4) throw ParseError("a frame needs four integers k1,n1,k2,n2", 1, 1);
  return {v[0], v[1], v[2], v[3]};
}

IncreasingTableau parse_increasing(const std::string& text) {
  if (looks_like_json(text)) {
    AnyTableau t = tableau_from_json(parse_json_text(text));
    if (auto* inc = std::get_if<IncreasingTableau>(&t)) return *inc;
    throw TableauError("expected an increasing tableau");
  }
  auto [shape, rows] = skew_layout(tokenize_grid(text), false);
  return {std::move(shape), std::move(rows)};
}

AugmentedTableau parse_augmented(const std::string& text) {
  if (looks_like_json(text)) {
    AnyTableau t = tableau_from_json(parse_json_text(text));
    if (auto* aug = std::get_if<AugmentedTableau>(&t)) return *aug;
    if (auto* inc = std::get_if<IncreasingTableau>(&t)) return {inc->shape(), inc->rows()};
    throw TableauError("expected an augmented tableau");
  }
  auto [shape, rows] = skew_layout(tokenize_grid(text), true);
  return {std::move(shape), std::move(rows)};
}

SetValuedTableau parse_set_valued(const std::string& text) {
  if (looks_like_json(text)) {
    AnyTableau t = tableau_from_json(parse_json_text(text));
    if (auto* sv = std::get_if<SetValuedTableau>(&t)) return *sv;
    throw TableauError("expected a set-valued tableau");
  }
  std::vector<std::vector<SetValuedTableau::Cell>> cells;
  for (const auto& row : tokenize_grid(text)) {
    if (row.empty()) throw ParseError("empty row", 0, 0);
    std::vector<SetValuedTableau::Cell> out;
    for (const Token& tok : row) {
      if (tok.kind == Token::kDot || tok.kind == Token::kMark)
        throw TableauError("set-valued tableaux have straight shape and no marks (line " + std::to_string(tok.line) +
                           ", column " + std::to_string(tok.column) + ")");
      out.push_back(tok.values);
    }
    cells.push_back(std::move(out));
  }
  return SetValuedTableau(std::move(cells));
}

AnyTableau parse_tableau(const std::string& text) {
  if (looks_like_json(text)) return tableau_from_json(parse_json_text(text));
  const TokenRows rows = tokenize_grid(text);
  bool sets = false;
  bool marks = false;
  for (const auto& row : rows)
    for (const Token& tok : row) {
      sets = sets || tok.kind == Token::kSet;
      marks = marks || tok.kind == Token::kMark;
    }
  if (sets) return parse_set_valued(text);
  if (marks) return parse_augmented(text);
  return parse_increasing(text);
}

std::string format_tableau(const IncreasingTableau& t) { return t.to_string(); }

std::string format_tableau(const AnyTableau& t) {
  if (const auto* sv = std::get_if<SetValuedTableau>(&t)) {
    std::ostringstream os;
    const auto& rows = sv->rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r > 0) os << '\n';
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (c > 0) os << ' ';
        os << '{';
        for (std::size_t i = 0; i < rows[r][c].size(); ++i) os << (i ? "," : "") << rows[r][c][i];
        os << '}';
      }
    }
    return os.str();
  }
  return std::visit([](const auto& x) { return x.to_string(); }, t);
}

nlohmann::json to_json(const Partition& p) { return p.vec(); }

nlohmann::json to_json(const IncreasingTableau& t) { return to_json(AnyTableau(t)); }

nlohmann::json to_json(const AnyTableau& t) {
  json cells = json::array();
  Partition outer;
  Partition inner;
  if (const auto* sv = std::get_if<SetValuedTableau>(&t)) {
    outer = sv->shape();
    for (const Box& b : outer.boxes()) cells.push_back({b.row, b.col, sv->at(b)});
  } else if (const auto* aug = std::get_if<AugmentedTableau>(&t)) {
    outer = aug->shape().outer();
    inner = aug->shape().inner();
    for (const Box& b : aug->shape().boxes()) {
      if (aug->is_mark(b))
        cells.push_back({b.row, b.col, "X"});
      else
        cells.push_back({b.row, b.col, aug->at(b)});
    }
  } else {
    const auto& inc = std::get<IncreasingTableau>(t);
    outer = inc.shape().outer();
    inner = inc.shape().inner();
    for (const auto& [b, v] : inc.entries()) cells.push_back({b.row, b.col, v});
  }
  static const char* const kTypes[] = {"increasing", "augmented", "set-valued"};
  return {{"type", kTypes[t.index()]}, {"outer", to_json(outer)}, {"inner", to_json(inner)}, {"cells", cells}};
}

AnyTableau tableau_from_json(const nlohmann::json& j) {
  const Partition outer = partition_from_json(require(j, "outer"), "outer");
  const Partition inner = j.contains("inner") ? partition_from_json(j.at("inner"), "inner") : Partition{};
  const SkewShape shape(outer, inner);
  const json& cells = require(j, "cells");
  if (!cells.is_array()) throw ParseError("field 'cells' must be a list", 0, 0);

  std::map<Box, json> values;
  bool sets = false;
  bool marks = false;
  for (const json& cell : cells) {
    if (!cell.is_array() || cell.size() != 3 || !cell[0].is_number_integer() || !cell[1].is_number_integer())
      throw ParseError("each cell must be [row, col, value]", 0, 0);
    const Box b{cell[0].get<int>(), cell[1].get<int>()};
    if (!shape.contains(b)) throw TableauError("cell (" + std::to_string(b.row) + "," + std::to_string(b.col) + ") lies outside the shape");
    if (!values.emplace(b, cell[2]).second)
      throw TableauError("cell (" + std::to_string(b.row) + "," + std::to_string(b.col) + ") appears twice");
    sets = sets || cell[2].is_array();
    marks = marks || (cell[2].is_string() && cell[2].get<std::string>() == "X");
    if (!cell[2].is_array() && !cell[2].is_number_integer() && !(cell[2].is_string() && cell[2].get<std::string>() == "X"))
      throw ParseError("cell values must be integers, \"X\" or lists of integers", 0, 0);
  }
  if (static_cast<int>(values.size()) != shape.size()) throw TableauError("some boxes of the shape have no cell");
  std::string type;
  if (j.contains("type")) {
    if (!j.at("type").is_string()) throw ParseError("field 'type' must be a string", 0, 0);
    type = j.at("type").get<std::string>();
    if (type != "increasing" && type != "augmented" && type != "set-valued")
      throw ParseError("unknown tableau type '" + type + "'", 0, 0);
    if (type != "set-valued" && sets) throw TableauError("set-valued cell in a single-valued tableau");
    if (type == "increasing" && marks) throw TableauError("X marks need an augmented tableau");
    if (type == "set-valued") sets = true;
    if (type == "augmented") marks = true;
  }

  if (sets) {
    if (!inner.empty() || marks) throw TableauError("set-valued tableaux have straight shape and no marks");
    std::vector<std::vector<SetValuedTableau::Cell>> rows;
    for (int len : outer.parts()) rows.emplace_back(static_cast<std::size_t>(len));
    for (const auto& [b, v] : values) {
      SetValuedTableau::Cell cell;
      if (v.is_array()) {
        for (const json& x : v) {
          if (!x.is_number_integer()) throw ParseError("set-valued cells hold integers", 0, 0);
          cell.push_back(x.get<int>());
        }
      } else {
        cell.push_back(v.get<int>());
      }
      rows[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)] = std::move(cell);
    }
    return SetValuedTableau(std::move(rows));
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(outer.length()));
  for (const auto& [b, v] : values)
    rows[static_cast<std::size_t>(b.row - 1)].push_back(v.is_string() ? AugmentedTableau::kMark : v.get<int>());
  if (marks) return AugmentedTableau(shape, std::move(rows));
  return IncreasingTableau(shape, std::move(rows));
}

nlohmann::json to_json(const CoefficientRecord& r) {
  json checks = json::array();
  for (const auto& [name, ok] : r.checks) checks.push_back({name, ok});
  return {{"kind", kind_name(r.kind)}, {"lambda", to_json(r.lambda)}, {"mu", to_json(r.mu)},
          {"nu", to_json(r.nu)},       {"value", r.value},             {"method", r.method},
          {"checks", checks}};
}

CoefficientRecord record_from_json(const nlohmann::json& j) {
  CoefficientRecord r;
  const json& kind = require(j, "kind");
  if (!kind.is_string()) throw ParseError("field 'kind' must be a string", 0, 0);
  try {
    r.kind = parse_kind(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, 0);
  }
  r.lambda = partition_from_json(require(j, "lambda"), "lambda");
  r.mu = partition_from_json(require(j, "mu"), "mu");
  r.nu = partition_from_json(require(j, "nu"), "nu");
  const json& value = require(j, "value");
  if (!value.is_number_integer()) throw ParseError("field 'value' must be an integer", 0, 0);
  r.value = value.get<Coefficient>();
  if (j.contains("method") && j.at("method").is_string()) r.method = j.at("method").get<std::string>();
  if (j.contains("checks"))
    for (const json& c : j.at("checks")) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_boolean())
        throw ParseError("checks must be [name, bool] pairs", 0, 0);
      r.checks.push_back({c[0].get<std::string>(), c[1].get<bool>()});
    }
  return r;
}

std::string record_key(const CoefficientRecord& r) {
  return kind_name(r.kind) + " " + r.lambda.to_string() + " " + r.mu.to_string() + " " + r.nu.to_string();
}

void cache_append(const std::string& path, const CoefficientRecord& record) {
  json j = to_json(record);
  j["timestamp"] = utc_timestamp();
  j["version"] = kToolVersion;
  const std::string line = j.dump() + "\n";
  const int fd = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) throw std::runtime_error("cannot open cache " + path + ": " + std::strerror(errno));
  const ssize_t written = ::write(fd, line.data(), line.size());
  const int saved = errno;
  ::close(fd);
  if (written != static_cast<ssize_t>(line.size()))
    throw std::runtime_error("short write to cache " + path + ": " + std::strerror(saved));
}

CoefficientTable cache_load(const std::string& path) {
  CoefficientTable table;
  std::ifstream in(path);
  if (!in) return table;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (trimmed(text).empty()) continue;
    CoefficientRecord rec;
    try {
      rec = record_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed cache record: ") + e.what(), line_no, 1);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, 1);
    } catch (const ShapeError& e) {
      throw ParseError(e.what(), line_no, 1);
    }
    const std::string key = record_key(rec);
    auto [it, fresh] = table.emplace(key, rec);
    if (fresh) continue;
    if (it->second.value != rec.value)
      throw CacheConflict("conflicting cached values for " + key + ": " + std::to_string(it->second.value) +
                          " and " + std::to_string(rec.value) + " (line " + std::to_string(line_no) + ")");
    for (const auto& check : rec.checks)
      if (std::find(it->second.checks.begin(), it->second.checks.end(), check) == it->second.checks.end())
        it->second.checks.push_back(check);
  }
  return table;
}

std::optional<std::string> default_cache_path() {
  const char* env = std::getenv(kCacheEnvVar);
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::string(env);
}

}  // namespace kjdt
