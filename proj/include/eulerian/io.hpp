#pragma once

// Serialization for triangles and check reports: CSV (one comment line
// `# kind=<X> n=<row>` per row block, then the row values), JSON (all
// integers as decimal strings so arbitrary precision survives any
// consumer) and right-aligned pretty tables with the row labels
// "n = 2", "n = 3", ... used by the reference tables.

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerian/check.hpp"
#include "eulerian/triangle.hpp"

namespace eulerian {

inline constexpr const char* kVersion = "1.0.0";

inline TriangleKind parse_kind(const std::string& s) {
  if (s == "A") return TriangleKind::A;
  if (s == "B") return TriangleKind::B;
  if (s == "C") return TriangleKind::C;
  if (s == "D") return TriangleKind::D;
  throw std::invalid_argument("unknown triangle kind '" + s + "' (expected A, B, C or D)");
}

namespace detail {

inline BigInt parse_bigint(const std::string& s) {
  try {
    if (s.empty()) throw std::runtime_error("empty");
    return BigInt(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("'" + s + "' is not a decimal integer");
  }
}

// Minimal CSV quoting for report fields, whose names routinely contain
// commas like "B(6,1) = B(6,4)". Plain triangle values never need it.
inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

inline std::string triangle_to_csv(const Triangle& t, int first_row = 1) {
  if (first_row < 1 || first_row > t.n_max()) throw std::invalid_argument("first row out of range");
  std::string out;
  for (int n = first_row; n <= t.n_max(); ++n) {
    out += "# kind=";
    out += kind_letter(t.kind());
    out += " n=" + std::to_string(n) + "\n";
    const auto& row = t.row(n);
    for (size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ',';
      out += row[k].str();
    }
    out += '\n';
  }
  return out;
}

/// Inverse of triangle_to_csv. Row blocks must carry one kind and strictly
/// increasing contiguous n; rows below the first block stay zero.
inline Triangle triangle_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int expect_n = 0;  // 0 until the first block header fixes the start
  int first_n = 0;
  char kind_ch = 0;
  std::vector<std::vector<BigInt>> rows;
  bool want_values = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (want_values) throw std::invalid_argument("row block for n = " + std::to_string(expect_n) + " has no values");
      std::istringstream hdr(line);
      std::string hash, kind_tok, n_tok;
      hdr >> hash >> kind_tok >> n_tok;
      if (kind_tok.rfind("kind=", 0) != 0 || n_tok.rfind("n=", 0) != 0)
        throw std::invalid_argument("malformed block header: " + line);
      const std::string kind_s = kind_tok.substr(5);
      if (kind_s.size() != 1) throw std::invalid_argument("malformed kind in header: " + line);
      if (kind_ch == 0) kind_ch = kind_s[0];
      if (kind_ch != kind_s[0]) throw std::invalid_argument("mixed kinds in one table: " + line);
      const int n = std::stoi(n_tok.substr(2));
      if (expect_n == 0) {
        expect_n = n;
        first_n = n;
      }
      if (n != expect_n)
        throw std::invalid_argument("row blocks must be contiguous: expected n = " + std::to_string(expect_n) +
                                    ", got " + std::to_string(n));
      want_values = true;
      continue;
    }
    if (!want_values) throw std::invalid_argument("values before any block header: " + line);
    std::vector<BigInt> row;
    std::string tok;
    std::istringstream cells(line);
    while (std::getline(cells, tok, ',')) row.push_back(detail::parse_bigint(tok));
    if (static_cast<int>(row.size()) != expect_n)
      throw std::invalid_argument("row n = " + std::to_string(expect_n) + " has " + std::to_string(row.size()) +
                                  " cells, expected " + std::to_string(expect_n));
    rows.push_back(std::move(row));
    ++expect_n;
    want_values = false;
  }
  if (want_values) throw std::invalid_argument("row block for n = " + std::to_string(expect_n) + " has no values");
  if (rows.empty()) throw std::invalid_argument("no row blocks found");
  Triangle t(parse_kind(std::string(1, kind_ch)), first_n + static_cast<int>(rows.size()) - 1);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t k = 0; k < rows[i].size(); ++k)
      t.set(first_n + static_cast<int>(i), static_cast<int>(k), std::move(rows[i][k]));
  return t;
}

/// Right-aligned table with a k-index header row and "n = <n>" labels.
inline std::string triangle_to_pretty(const Triangle& t, int first_row = 1) {
  if (first_row < 1 || first_row > t.n_max()) throw std::invalid_argument("first row out of range");
  const int cols = t.n_max();
  std::vector<size_t> width(static_cast<size_t>(cols));
  for (int k = 0; k < cols; ++k) width[static_cast<size_t>(k)] = std::to_string(k).size();
  for (int n = first_row; n <= t.n_max(); ++n)
    for (int k = 0; k < n; ++k)
      width[static_cast<size_t>(k)] = std::max(width[static_cast<size_t>(k)], t.at(n, k).str().size());
  const std::string last_label = "n = " + std::to_string(t.n_max());
  const size_t label_w = last_label.size();

  std::string out;
  const auto pad = [&out](const std::string& s, size_t w) { out += std::string(w - s.size(), ' ') + s; };
  pad("", label_w);
  for (int k = 0; k < cols; ++k) {
    out += "  ";
    pad(std::to_string(k), width[static_cast<size_t>(k)]);
  }
  out += '\n';
  for (int n = first_row; n <= t.n_max(); ++n) {
    pad("n = " + std::to_string(n), label_w);
    for (int k = 0; k < n; ++k) {
      out += "  ";
      pad(t.at(n, k).str(), width[static_cast<size_t>(k)]);
    }
    out += '\n';
  }
  return out;
}

/// Document envelope shared by every command: artifact version, the
/// command name and its effective parameters.
inline nlohmann::json make_meta(const std::string& command, nlohmann::json parameters) {
  return nlohmann::json{{"version", kVersion}, {"command", command}, {"parameters", std::move(parameters)}};
}

inline nlohmann::json triangle_to_json(const Triangle& t, nlohmann::json meta, int first_row = 1) {
  if (first_row < 1 || first_row > t.n_max()) throw std::invalid_argument("first row out of range");
  nlohmann::json rows = nlohmann::json::array();
  for (int n = first_row; n <= t.n_max(); ++n) {
    nlohmann::json values = nlohmann::json::array();
    for (const BigInt& v : t.row(n)) values.push_back(v.str());
    rows.push_back({{"n", n}, {"values", std::move(values)}});
  }
  return nlohmann::json{{"meta", std::move(meta)}, {"rows", std::move(rows)}};
}

/// Inverse of triangle_to_json; the kind is read from meta.parameters.
inline Triangle triangle_from_json(const nlohmann::json& doc) {
  if (!doc.contains("meta") || !doc.contains("rows")) throw std::invalid_argument("document needs meta and rows");
  const TriangleKind kind = parse_kind(doc["meta"]["parameters"]["kind"].get<std::string>());
  const auto& rows = doc["rows"];
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("rows must be a non-empty array");
  const int last_n = rows.back()["n"].get<int>();
  Triangle t(kind, last_n);
  int expect_n = rows.front()["n"].get<int>();
  for (const auto& row : rows) {
    const int n = row["n"].get<int>();
    if (n != expect_n++) throw std::invalid_argument("rows must be contiguous at n = " + std::to_string(n));
    const auto& values = row["values"];
    if (static_cast<int>(values.size()) != n)
      throw std::invalid_argument("row n = " + std::to_string(n) + " has " + std::to_string(values.size()) + " values");
    for (int k = 0; k < n; ++k) t.set(n, k, detail::parse_bigint(values[static_cast<size_t>(k)].get<std::string>()));
  }
  return t;
}

/// JSON violation report: only the failing checks are listed.
inline nlohmann::json report_to_json(const CheckReport& report, nlohmann::json meta) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& r : failures(report)) violations.push_back({{"name", r.name}, {"detail", r.detail}});
  return nlohmann::json{{"meta", std::move(meta)}, {"violations", std::move(violations)}};
}

/// Full audit in text form: one PASS/FAIL line per identity instance
/// checked, then a summary line.
inline std::string report_to_pretty(const CheckReport& report) {
  std::string out;
  for (const auto& r : report) {
    out += r.pass ? "PASS  " : "FAIL  ";
    out += r.name;
    if (!r.pass) out += "  [" + r.detail + "]";
    out += '\n';
  }
  const size_t bad = failures(report).size();
  out += std::to_string(report.size()) + " checks, " + std::to_string(bad) + " failure" + (bad == 1 ? "" : "s") + "\n";
  return out;
}

inline std::string report_to_csv(const CheckReport& report) {
  std::string out = "name,pass,detail\n";
  for (const auto& r : report)
    out += detail::csv_escape(r.name) + "," + (r.pass ? "true" : "false") + "," + detail::csv_escape(r.detail) + "\n";
  return out;
}

}  // namespace eulerian
