/**
 * @file io.hpp
 * @brief JSON, CSV and Markdown renderings of verification reports and character tables.
 */
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "tqg/characters.hpp"
#include "tqg/correspondence.hpp"

namespace tqg {

using ordered_json = nlohmann::ordered_json;

enum class Format { json, csv, md };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "md") return Format::md;
  throw ParameterError("unknown format " + s);
}

inline ordered_json to_json(const VerificationReport& r, bool timings = false) {
  ordered_json j;
  j["schema_version"] = VerificationReport::schema_version;
  j["p"] = r.config.p;
  if (r.config.s) j["s"] = *r.config.s;
  j["cutoff"] = r.config.cutoff;
  j["fock_trunc"] = r.config.fock_trunc;
  j["fock_trunc_used"] = r.fock_trunc_used;
  j["seed"] = r.config.seed;
  j["assoc_samples"] = r.config.assoc_samples;
  j["global_pass"] = r.global_pass();
  ordered_json rows = ordered_json::array();
  for (const auto& c : r.rows) {
    ordered_json x;
    x["id"] = c.id;
    x["group"] = c.group;
    x["anchor"] = c.anchor;
    x["computed"] = c.computed;
    x["expected"] = c.expected;
    x["basis"] = c.basis;
    x["status"] = status_name(c.status);
    if (timings) x["runtime_ms"] = c.runtime_ms;
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\r\n";
}

inline std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

inline std::string md_row(const std::vector<std::string>& fields) {
  std::string out = "|";
  for (const auto& f : fields) out += " " + md_cell(f) + " |";
  return out + "\n";
}

inline std::string md_rule(size_t n) {
  std::string out = "|";
  for (size_t i = 0; i < n; ++i) out += "---|";
  return out + "\n";
}

inline std::vector<std::string> report_header(bool timings) {
  std::vector<std::string> h{"id", "group", "anchor", "computed", "expected", "basis", "status"};
  if (timings) h.push_back("runtime_ms");
  return h;
}

inline std::vector<std::string> report_fields(const CheckRow& c, bool timings) {
  std::vector<std::string> f{c.id, c.group, c.anchor, c.computed, c.expected, c.basis, status_name(c.status)};
  if (timings) f.push_back(std::to_string(c.runtime_ms));
  return f;
}

inline std::string render(const VerificationReport& r, Format fmt, bool timings = false) {
  switch (fmt) {
    case Format::json: return to_json(r, timings).dump(2) + "\n";
    case Format::csv: {
      std::string out = csv_line(report_header(timings));
      for (const auto& c : r.rows) out += csv_line(report_fields(c, timings));
      return out;
    }
    default: {
      std::string out = "# Verification report, p = " + std::to_string(r.config.p) + "\n\n";
      out += "cutoff " + std::to_string(r.config.cutoff) + ", Fock truncation " + std::to_string(r.fock_trunc_used) +
             ", seed " + std::to_string(r.config.seed) + ", global pass: " + (r.global_pass() ? "yes" : "no") + "\n\n";
      auto h = report_header(timings);
      out += md_row(h) + md_rule(h.size());
      for (const auto& c : r.rows) out += md_row(report_fields(c, timings));
      return out;
    }
  }
}

/// Character tables for one (p, s): named q-series plus the identity rows.
struct CharacterTable {
  int p = 0, s = 0, cutoff = 0;
  std::vector<std::pair<std::string, QSeries>> series;
  std::vector<IdentityCheck> identities;
  std::vector<Rational> weight_chain;  // h_{p-1}(1) > ... > h_0(0) > ... > h_p(0)
};

inline CharacterTable character_table(int p, int s, int N) {
  if (p < 2) throw ParameterError("p must be at least 2");
  if (s < 1 || s > p) throw ParameterError("s must satisfy 1 <= s <= p");
  CharacterTable t;
  t.p = p;
  t.s = s;
  t.cutoff = N;
  ModelParams mp(p);
  t.series.push_back({"M(h_s(0))", verma_char(h_value(p, s, 0), N)});
  t.series.push_back({"L(h_s(0))", irr_char(p, s, 0, N)});
  t.series.push_back({"F(lambda_s(0))", fock_char(Momentum::lambda(p, s, 0), mp, N)});
  for (Sign e : {Sign::plus, Sign::minus}) {
    std::string tag(1, sign_char(e));
    t.series.push_back({"V" + tag, lattice_char(p, s, e, N)});
    t.series.push_back({"X" + tag, wp_simple_char(p, s, e, N)});
  }
  if (s < p) t.series.push_back({"P", projective_char(p, s, N)});
  t.identities = character_identities(p, s, N);
  t.weight_chain = WeightTable(p, 1).ordered_chain();
  return t;
}

inline std::vector<std::string> coeff_strings(const QSeries& q) {
  std::vector<std::string> out;
  for (const auto& c : q.coeffs) out.push_back(c.get_str());
  return out;
}

inline std::string render(const CharacterTable& t, Format fmt) {
  switch (fmt) {
    case Format::json: {
      ordered_json j;
      j["schema_version"] = 1;
      j["p"] = t.p;
      j["s"] = t.s;
      j["cutoff"] = t.cutoff;
      ordered_json chain = ordered_json::array();
      for (const auto& h : t.weight_chain) chain.push_back(h.get_str());
      j["weight_chain"] = chain;
      ordered_json ser = ordered_json::object();
      for (const auto& [name, q] : t.series) {
        ordered_json x;
        x["offset"] = q.offset.get_str();
        x["coeffs"] = coeff_strings(q);
        ser[name] = x;
      }
      j["series"] = ser;
      ordered_json ids = ordered_json::array();
      for (const auto& i : t.identities) ids.push_back({{"identity", i.name}, {"status", i.holds ? "pass" : "fail"}});
      j["identities"] = ids;
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::vector<std::string> h{"series", "offset"};
      for (int d = 0; d <= t.cutoff; ++d) h.push_back("d" + std::to_string(d));
      std::string out = csv_line(h);
      for (const auto& [name, q] : t.series) {
        std::vector<std::string> f{name, q.offset.get_str()};
        auto c = coeff_strings(q);
        f.insert(f.end(), c.begin(), c.end());
        out += csv_line(f);
      }
      for (const auto& i : t.identities) out += csv_line({"identity: " + i.name, i.holds ? "pass" : "fail"});
      return out;
    }
    default: {
      std::string out = "# Characters, p = " + std::to_string(t.p) + ", s = " + std::to_string(t.s) + "\n\n";
      out += "## Lowest weights\n\n";
      out += md_row({"rank", "h"}) + md_rule(2);
      for (size_t i = 0; i < t.weight_chain.size(); ++i)
        out += md_row({std::to_string(i + 1), t.weight_chain[i].get_str()});
      out += "\n## Series\n\n";
      std::vector<std::string> h{"series", "offset"};
      for (int d = 0; d <= t.cutoff; ++d) h.push_back(std::to_string(d));
      out += md_row(h) + md_rule(h.size());
      for (const auto& [name, q] : t.series) {
        std::vector<std::string> f{name, q.offset.get_str()};
        auto c = coeff_strings(q);
        f.insert(f.end(), c.begin(), c.end());
        out += md_row(f);
      }
      out += "\n## Identities\n\n" + md_row({"identity", "status"}) + md_rule(2);
      for (const auto& i : t.identities) out += md_row({i.name, i.holds ? "pass" : "fail"});
      return out;
    }
  }
}

}  // namespace tqg
