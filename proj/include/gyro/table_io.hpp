#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gyro/errors.hpp"
#include "gyro/gyro_table.hpp"

namespace gyro {

enum class TableFormat { json, text };

namespace detail {

// Finds the two-sided identity of a Latin square; returns n if there is none.
inline std::size_t find_identity(std::size_t n, const std::vector<Element>& cells) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = cells[e * n + x] == x && cells[x * n + e] == x;
    }
    if (ok) return e;
  }
  return n;
}

// Validates the Latin shell, moves the identity to index 0, and checks that
// every element has a two-sided inverse.
inline GyroTable finish_load(std::size_t n, std::vector<Element> cells, std::vector<std::string> symbols) {
  validate_latin(n, cells);
  const std::size_t e = find_identity(n, cells);
  if (e == n) throw StructureError("no two-sided identity element");
  if (e != 0) {
    // Relabel by the transposition (0 e); symbols keep the file's labels.
    auto swap = [e](Element x) -> Element { return x == 0 ? static_cast<Element>(e) : x == e ? 0 : x; };
    std::vector<Element> relabeled(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        relabeled[swap(static_cast<Element>(a)) * n + swap(static_cast<Element>(b))] = swap(cells[a * n + b]);
      }
    }
    cells = std::move(relabeled);
    if (symbols.empty()) {
      symbols.resize(n);
      for (std::size_t i = 0; i < n; ++i) symbols[i] = std::to_string(i);
    }
    std::swap(symbols[0], symbols[e]);
  }
  GyroTable table(n, std::move(cells), std::move(symbols));
  for (Element a = 0; a < n; ++a) {
    if (table.sum(a, table.inv(a)) != 0) {
      throw StructureError("element " + std::to_string(a) + " has no two-sided inverse", table.inv(a), a);
    }
  }
  return table;
}

inline GyroTable parse_json_table(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("table") || !doc["table"].is_array()) {
    throw ParseError("expected an object with a \"table\" array");
  }
  const auto& rows = doc["table"];
  const std::size_t n = rows.size();
  if (doc.contains("order")) {
    if (!doc["order"].is_number_unsigned()) throw ParseError("\"order\" must be a non-negative integer");
    if (doc["order"].get<std::size_t>() != n) {
      throw StructureError("\"order\" is " + std::to_string(doc["order"].get<std::size_t>()) + " but table has " +
                           std::to_string(n) + " rows");
    }
  }

  std::vector<std::string> symbols;
  std::map<std::string, Element> index;
  if (doc.contains("symbols")) {
    if (!doc["symbols"].is_array() || doc["symbols"].size() != n) throw ParseError("\"symbols\" must list n names");
    for (const auto& s : doc["symbols"]) {
      if (!s.is_string()) throw ParseError("symbol names must be strings");
      auto [it, fresh] = index.emplace(s.get<std::string>(), static_cast<Element>(symbols.size()));
      if (!fresh) throw ParseError("duplicate symbol \"" + it->first + "\"");
      symbols.push_back(it->first);
    }
  }

  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array()) throw ParseError("row " + std::to_string(r) + " is not an array");
    if (rows[r].size() != n) {
      throw StructureError("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                               ", expected " + std::to_string(n),
                           r);
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto& v = rows[r][c];
      if (v.is_number_unsigned()) {
        cells.push_back(v.get<Element>());
      } else if (v.is_string() && !symbols.empty()) {
        auto it = index.find(v.get<std::string>());
        if (it == index.end()) throw ParseError("unknown symbol \"" + v.get<std::string>() + "\"");
        cells.push_back(it->second);
      } else {
        throw ParseError("cell (" + std::to_string(r) + "," + std::to_string(c) + ") is not an element");
      }
    }
  }
  return finish_load(n, std::move(cells), std::move(symbols));
}

inline GyroTable parse_text_table(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n <= 0) throw ParseError("text table must start with a positive order");
  std::vector<Element> cells;
  cells.reserve(static_cast<std::size_t>(n * n));
  for (long long i = 0; i < n * n; ++i) {
    long long v = 0;
    if (!(in >> v)) throw ParseError("expected " + std::to_string(n * n) + " cells, got " + std::to_string(i));
    if (v < 0) throw StructureError("negative cell value", static_cast<std::size_t>(i / n), static_cast<std::size_t>(i % n));
    cells.push_back(static_cast<Element>(v));
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing data after " + std::to_string(n * n) + " cells");
  return finish_load(static_cast<std::size_t>(n), std::move(cells), {});
}

}  // namespace detail

inline GyroTable load_table(std::istream& source, TableFormat format) {
  std::string text((std::istreambuf_iterator<char>(source)), std::istreambuf_iterator<char>());
  return format == TableFormat::json ? detail::parse_json_table(text) : detail::parse_text_table(text);
}

inline GyroTable load_table(const std::string& text, TableFormat format) {
  std::istringstream in(text);
  return load_table(in, format);
}

// JSON when the first non-blank character is '{', text otherwise.
inline GyroTable load_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto it = std::find_if(text.begin(), text.end(), [](unsigned char ch) { return !std::isspace(ch); });
  const bool json = it != text.end() && *it == '{';
  return json ? detail::parse_json_table(text) : detail::parse_text_table(text);
}

// {"order": n, "table": [[...], ...]} on one line, newline-terminated.
inline std::string to_json_text(const GyroTable& g) {
  std::ostringstream out;
  const std::size_t n = g.order();
  out << "{\"order\": " << n << ", \"table\": [";
  for (std::size_t r = 0; r < n; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < n; ++c) out << (c ? ", " : "") << g.cells()[r * n + c];
    out << ']';
  }
  out << "]}\n";
  return out.str();
}

// First line n, then n rows of space-separated cells.
inline std::string to_plain_text(const GyroTable& g) {
  std::ostringstream out;
  const std::size_t n = g.order();
  out << n << '\n';
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out << (c ? " " : "") << g.cells()[r * n + c];
    out << '\n';
  }
  return out.str();
}

}  // namespace gyro
