// Copyright 2026 The Factualis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "factualis/convert.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "factualis/core.hpp"

namespace factualis {

namespace {

// RFC-4180-ish record reader: quoted fields may contain commas, doubled
// quotes and newlines.
bool read_record(std::istream &in, std::vector<std::string> &fields,
                 std::size_t &lines_consumed) {
  fields.clear();
  lines_consumed = 0;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  int c;
  while ((c = in.get()) != EOF) {
    any = true;
    char ch = static_cast<char>(c);
    if (in_quotes) {
      if (ch == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get();
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') ++lines_consumed;
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      in_quotes = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      ++lines_consumed;
      break;
    } else if (ch != '\r') {
      field += ch;
    }
  }
  if (!any) return false;
  fields.push_back(std::move(field));
  if (lines_consumed == 0) lines_consumed = 1;  // final record without newline
  return true;
}

std::string trim(std::string s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  std::size_t e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// "0,9|n" -> "0.9|n", ".9|N" -> "0.9|n", "na" -> "NA"; unparseable cells
// pass through unchanged.
std::string normalize_signature_cell(const std::string &raw) {
  std::string cell = trim(raw);
  if (cell.empty()) return "NA";
  std::string low = lower(cell);
  if (low == "na") return "NA";
  if (low == "ungr") return "UNGR";
  std::string candidate;
  candidate.reserve(cell.size());
  for (char ch : cell) candidate += ch == ',' ? '.' : ch;
  try {
    return parse_signature(candidate).str();
  } catch (const ParseError &) {
    return cell;
  }
}

std::string normalize_list(const std::string &raw, bool events) {
  std::string out;
  std::string token;
  auto flush = [&] {
    token = trim(token);
    if (token.empty()) return;
    if (events) {
      std::string low = lower(token);
      if (low == "clause") token = "clause";
      else if (low == "eventnp") token = "eventNP";
    }
    if (!out.empty()) out += '+';
    out += token;
    token.clear();
  };
  for (char ch : raw) {
    if (ch == '+' || ch == ',' || ch == ';' || ch == ' ' || ch == '\t') flush();
    else token += ch;
  }
  flush();
  return out;
}

std::string normalize_sip(const std::string &raw) {
  std::string low = lower(trim(raw));
  if (low == "true" || low == "yes" || low == "1" || low == "x" || low == "sip")
    return "true";
  if (low == "false" || low == "no" || low == "0" || low.empty()) return "false";
  return trim(raw);  // validate will flag it
}

std::string normalize_source(const std::string &raw) {
  std::string up = trim(raw);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (up == "LVF" || up == "LGLEX" || up == "MERGED") return up;
  return trim(raw);
}

constexpr std::array<std::string_view, 13> kCsvHeaders = {
    "lemma",        "reading",        "source",  "translation", "sip",
    "frames",       "pfv_anim",       "pfv_inanim", "imp",
    "cog_pfv_anim", "cog_pfv_inanim", "cog_imp", "events"};

}  // namespace

std::vector<ConvertIssue> convert_sheet_csv(std::istream &in, std::ostream &out) {
  if (!in) throw Error("unreadable CSV stream");

  std::vector<std::string> fields;
  std::size_t consumed = 0;
  std::size_t lineno = 0;

  if (!read_record(in, fields, consumed)) throw Error("empty CSV input (no header row)");
  lineno += consumed;

  std::array<int, kCsvHeaders.size()> col;
  col.fill(-1);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::string name = lower(trim(fields[i]));
    if (!name.empty() && name.compare(0, 3, "\xEF\xBB\xBF") == 0) name.erase(0, 3);
    for (std::size_t c = 0; c < kCsvHeaders.size(); ++c) {
      if (name == kCsvHeaders[c]) col[c] = static_cast<int>(i);
    }
  }
  for (std::size_t c = 0; c < 9; ++c) {
    if (col[c] < 0)
      throw Error("CSV header is missing column \"" + std::string(kCsvHeaders[c]) + "\"");
  }

  out << "lemma\treading_id\tsource\tgloss\tsip\tsubcat\tsig_pfv_anim\t"
         "sig_pfv_inanim\tsig_imp\tcog_pfv_anim\tcog_pfv_inanim\tcog_imp\t"
         "event_kinds\n";

  std::vector<ConvertIssue> issues;
  auto get = [&](std::size_t c) -> std::string {
    int idx = col[c];
    if (idx < 0 || static_cast<std::size_t>(idx) >= fields.size()) return "";
    return fields[static_cast<std::size_t>(idx)];
  };

  while (read_record(in, fields, consumed)) {
    std::size_t row_line = lineno + 1;
    lineno += consumed;
    bool blank = std::all_of(fields.begin(), fields.end(),
                             [](const std::string &f) { return trim(f).empty(); });
    if (blank) continue;

    std::string lemma = trim(get(0));
    std::string reading = trim(get(1));
    if (lemma.empty() || reading.empty()) {
      issues.push_back({row_line, "missing lemma or reading, row skipped"});
      continue;
    }
    for (char ch : lemma + reading) {
      if (ch == '\t') {
        issues.push_back({row_line, "tab character inside cell"});
        break;
      }
    }

    out << lemma << '\t' << reading << '\t' << normalize_source(get(2)) << '\t'
        << trim(get(3)) << '\t' << normalize_sip(get(4)) << '\t'
        << normalize_list(get(5), false);
    for (std::size_t c = 6; c <= 8; ++c) out << '\t' << normalize_signature_cell(get(c));
    for (std::size_t c = 9; c <= 11; ++c) {
      out << '\t';
      std::string cell = trim(get(c));
      if (!cell.empty()) out << normalize_signature_cell(cell);
    }
    out << '\t' << normalize_list(get(12), true) << '\n';
  }
  return issues;
}

std::vector<ConvertIssue> convert_sheet_csv_file(const std::string &src,
                                                 const std::string &dst) {
  std::ifstream in(src, std::ios::binary);
  if (!in) throw Error("cannot open CSV file " + src);
  std::ofstream out(dst);
  if (!out) throw Error("cannot write TSV file " + dst);
  auto issues = convert_sheet_csv(in, out);
  if (!out.good()) throw Error("I/O error while writing " + dst);
  return issues;
}

}  // namespace factualis
