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

#include "factualis/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

namespace factualis {

std::string_view subcat_name(SubcatFrame f) {
  switch (f) {
    case SubcatFrame::a_inf: return "aInf";
    case SubcatFrame::de_inf: return "deInf";
    case SubcatFrame::inf: return "inf";
    case SubcatFrame::que: return "que";
  }
  throw Error("invalid subcat frame");
}

SubcatFrame subcat_from_name(std::string_view name) {
  if (name == "aInf") return SubcatFrame::a_inf;
  if (name == "deInf") return SubcatFrame::de_inf;
  if (name == "inf") return SubcatFrame::inf;
  if (name == "que") return SubcatFrame::que;
  throw ParseError("unknown subcat frame \"" + std::string(name) + "\"", 0);
}

std::string_view source_name(Source s) {
  switch (s) {
    case Source::lvf: return "LVF";
    case Source::lglex: return "LGLEX";
    case Source::merged: return "MERGED";
  }
  throw Error("invalid source");
}

Source source_from_name(std::string_view name) {
  if (name == "LVF") return Source::lvf;
  if (name == "LGLEX") return Source::lglex;
  if (name == "MERGED") return Source::merged;
  throw ParseError("unknown source \"" + std::string(name) + "\"", 0);
}

std::string_view event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::clause: return "clause";
    case EventKind::event_np: return "eventNP";
  }
  throw Error("invalid event kind");
}

std::string Reading::key() const {
  return lemma + " " + reading_id + " (" + std::string(source_name(source)) + ")";
}

Lexicon::Lexicon(std::vector<Reading> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_[entries_[i].lemma].push_back(i);
  }
}

std::vector<const Reading *> Lexicon::find(std::string_view lemma) const {
  std::vector<const Reading *> out;
  auto it = index_.find(lemma);
  if (it == index_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t i : it->second) out.push_back(&entries_[i]);
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

bool id_matches(const Reading &r, std::string_view id) {
  if (r.reading_id == id) return true;
  if (r.source != Source::merged) return false;
  for (std::string_view part : split(r.reading_id, '+')) {
    if (part == id) return true;
  }
  return false;
}

}  // namespace

const Reading *Lexicon::resolve(std::string_view lemma,
                                std::string_view reading_id) const {
  const Reading *found = nullptr;
  for (const Reading *r : find(lemma)) {
    if (!id_matches(*r, reading_id)) continue;
    if (found != nullptr) {
      throw Error("ambiguous reading " + std::string(lemma) + ":" +
                  std::string(reading_id) + " (" + found->key() + " vs " +
                  r->key() + ")");
    }
    found = r;
  }
  return found;
}

namespace {

constexpr std::array<std::string_view, 13> kColumns = {
    "lemma",        "reading_id",     "source",        "gloss",
    "sip",          "subcat",         "sig_pfv_anim",  "sig_pfv_inanim",
    "sig_imp",      "cog_pfv_anim",   "cog_pfv_inanim", "cog_imp",
    "event_kinds"};

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

bool parse_bool(std::string_view s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseError("invalid boolean \"" + std::string(s) + "\"", 0);
}

std::set<SubcatFrame> parse_subcat(std::string_view s) {
  std::set<SubcatFrame> out;
  if (s.empty()) return out;
  for (std::string_view tok : split(s, '+')) out.insert(subcat_from_name(tok));
  return out;
}

std::set<EventKind> parse_event_kinds(std::string_view s) {
  if (s.empty()) return {EventKind::clause};
  std::set<EventKind> out;
  for (std::string_view tok : split(s, '+')) {
    if (tok == "clause") out.insert(EventKind::clause);
    else if (tok == "eventNP") out.insert(EventKind::event_np);
    else throw ParseError("unknown event kind \"" + std::string(tok) + "\"", 0);
  }
  return out;
}

// Field lookup by header position; absent trailing fields read as empty.
struct Row {
  const std::vector<std::string> &fields;
  const std::array<int, kColumns.size()> &col;

  std::string_view get(std::size_t column) const {
    int idx = col[column];
    if (idx < 0 || static_cast<std::size_t>(idx) >= fields.size()) return {};
    return fields[static_cast<std::size_t>(idx)];
  }
};

Reading parse_row(const Row &row) {
  Reading r;
  r.lemma = std::string(row.get(0));
  r.reading_id = std::string(row.get(1));
  if (r.lemma.empty()) throw ParseError("empty lemma", 0);
  if (r.reading_id.empty()) throw ParseError("empty reading_id", 0);
  r.source = source_from_name(row.get(2));
  r.gloss = std::string(row.get(3));
  r.sip = parse_bool(row.get(4));
  r.subcat = parse_subcat(row.get(5));
  for (std::size_t i = 0; i < 3; ++i) {
    r.slots[i] = parse_signature(row.get(6 + i));
  }
  bool any_cog = false;
  std::array<SignatureSlot, 3> cog;
  for (std::size_t i = 0; i < 3; ++i) {
    std::string_view cell = row.get(9 + i);
    if (cell.empty()) {
      cog[i] = SignatureSlot::na();
    } else {
      cog[i] = parse_signature(cell);
      any_cog = true;
    }
  }
  if (any_cog) r.cogniser_slots = cog;
  r.event_kinds = parse_event_kinds(row.get(12));

  if (any_cog && !r.sip)
    throw ParseError("cogniser slots on a non-SIP reading", 0);
  bool any_sig = false;
  for (const auto &slot : r.slots) any_sig = any_sig || slot.is_signature();
  if (!any_sig) throw ParseError("all slots unannotated (NA/UNGR)", 0);
  return r;
}

}  // namespace

LoadResult load_tsv(std::istream &in) {
  if (!in) throw Error("unreadable lexicon stream");

  LoadResult result;
  std::vector<Reading> entries;
  std::string line;
  std::size_t lineno = 0;

  // Header row; column order is free but names are fixed.
  std::array<int, kColumns.size()> col;
  col.fill(-1);
  if (!std::getline(in, line)) throw Error("empty lexicon input (no header row)");
  ++lineno;
  line = strip_cr(line);
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  {
    auto headers = split(line, '\t');
    for (std::size_t i = 0; i < headers.size(); ++i) {
      for (std::size_t c = 0; c < kColumns.size(); ++c) {
        if (headers[i] == kColumns[c]) col[c] = static_cast<int>(i);
      }
    }
    for (std::size_t c = 0; c < 9; ++c) {  // columns through sig_imp are required
      if (col[c] < 0)
        throw Error("lexicon header is missing column \"" + std::string(kColumns[c]) + "\"");
    }
  }

  std::set<std::string> seen_keys;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto raw = split(line, '\t');
    std::vector<std::string> fields;
    fields.reserve(raw.size());
    for (auto f : raw) fields.emplace_back(f);
    try {
      Reading r = parse_row(Row{fields, col});
      std::string key = r.key();
      if (!seen_keys.insert(key).second) {
        result.errors.push_back({lineno, "duplicate entry key " + key});
        continue;
      }
      entries.push_back(std::move(r));
    } catch (const ParseError &e) {
      result.errors.push_back({lineno, e.what()});
    }
  }
  if (in.bad()) throw Error("I/O error while reading lexicon");

  result.lexicon = Lexicon(std::move(entries));
  return result;
}

LoadResult load_tsv_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file " + path);
  return load_tsv(in);
}

namespace {

std::string join_subcat(const std::set<SubcatFrame> &subcat) {
  std::string out;
  for (SubcatFrame f : subcat) {
    if (!out.empty()) out += '+';
    out += subcat_name(f);
  }
  return out;
}

std::string join_event_kinds(const std::set<EventKind> &kinds) {
  std::string out;
  for (EventKind k : kinds) {
    if (!out.empty()) out += '+';
    out += event_kind_name(k);
  }
  return out;
}

std::vector<const Reading *> sorted_entries(const Lexicon &lex) {
  std::vector<const Reading *> order;
  order.reserve(lex.size());
  for (const Reading &r : lex.entries()) order.push_back(&r);
  std::sort(order.begin(), order.end(), [](const Reading *a, const Reading *b) {
    return std::tie(a->lemma, a->reading_id, a->source) <
           std::tie(b->lemma, b->reading_id, b->source);
  });
  return order;
}

}  // namespace

void write_tsv(const Lexicon &lex, std::ostream &out) {
  for (std::size_t c = 0; c < kColumns.size(); ++c) {
    if (c) out << '\t';
    out << kColumns[c];
  }
  out << '\n';
  for (const Reading *r : sorted_entries(lex)) {
    out << r->lemma << '\t' << r->reading_id << '\t' << source_name(r->source)
        << '\t' << r->gloss << '\t' << (r->sip ? "true" : "false") << '\t'
        << join_subcat(r->subcat);
    for (const auto &slot : r->slots) out << '\t' << slot.str();
    for (std::size_t i = 0; i < 3; ++i) {
      out << '\t';
      if (r->cogniser_slots) out << (*r->cogniser_slots)[i].str();
    }
    out << '\t' << join_event_kinds(r->event_kinds) << '\n';
  }
}

std::string to_tsv(const Lexicon &lex) {
  std::ostringstream out;
  write_tsv(lex, out);
  return out.str();
}

std::vector<Reading> merge_duplicates(std::vector<Reading> entries) {
  std::sort(entries.begin(), entries.end(), [](const Reading &a, const Reading &b) {
    return std::tie(a.lemma, a.reading_id, a.source) <
           std::tie(b.lemma, b.reading_id, b.source);
  });

  // Group key: everything that must be identical for two entries to merge.
  auto merge_key = [](const Reading &r) {
    std::string k = r.lemma;
    k += '\x1f';
    k += join_subcat(r.subcat);
    k += '\x1f';
    k += r.sip ? '1' : '0';
    for (const auto &slot : r.slots) {
      k += '\x1f';
      k += slot.str();
    }
    for (std::size_t i = 0; i < 3; ++i) {
      k += '\x1f';
      if (r.cogniser_slots) k += (*r.cogniser_slots)[i].str();
    }
    return k;
  };

  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    groups[merge_key(entries[i])].push_back(i);
  }

  std::vector<Reading> out;
  out.reserve(groups.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto &group = groups[merge_key(entries[i])];
    if (group.front() != i) continue;  // emit each group once, at first member
    if (group.size() == 1) {
      out.push_back(entries[i]);
      continue;
    }
    Reading merged = entries[i];
    merged.source = Source::merged;
    std::string joined;
    std::set<std::string> seen_ids;
    for (std::size_t j : group) {
      if (!seen_ids.insert(entries[j].reading_id).second) continue;
      if (!joined.empty()) joined += '+';
      joined += entries[j].reading_id;
      merged.event_kinds.insert(entries[j].event_kinds.begin(),
                                entries[j].event_kinds.end());
      if (merged.gloss.empty()) merged.gloss = entries[j].gloss;
    }
    merged.reading_id = joined;
    out.push_back(std::move(merged));
  }

  std::sort(out.begin(), out.end(), [](const Reading &a, const Reading &b) {
    return std::tie(a.lemma, a.reading_id, a.source) <
           std::tie(b.lemma, b.reading_id, b.source);
  });
  return out;
}

namespace {

Signature require_signature(const Reading &r, ContextKey key) {
  const SignatureSlot &slot = r.slot(key);
  switch (slot.kind()) {
    case SignatureSlot::Kind::signature:
      return slot.signature();
    case SignatureSlot::Kind::na:
      throw SlotError(SlotError::Reason::not_annotated, key,
                      r.key() + ": context " + std::string(context_name(key)) +
                          " not annotated (NA)");
    case SignatureSlot::Kind::ungr:
      throw SlotError(SlotError::Reason::ungrammatical, key,
                      r.key() + ": context " + std::string(context_name(key)) +
                          " is ungrammatical (UNGR)");
  }
  throw Error("invalid slot kind");
}

}  // namespace

Signature select_slot(const Reading &r, Aspect aspect, Animacy animacy,
                      PfvUnknownPolicy policy) {
  if (aspect == Aspect::imp) return require_signature(r, ContextKey::imp);
  if (animacy == Animacy::anim) return require_signature(r, ContextKey::pfv_anim);
  if (animacy == Animacy::inanim) return require_signature(r, ContextKey::pfv_inanim);

  // PFV with unknown animacy.
  const SignatureSlot &anim = r.slot(ContextKey::pfv_anim);
  const SignatureSlot &inanim = r.slot(ContextKey::pfv_inanim);
  if (anim.is_signature() && !inanim.is_signature()) return anim.signature();
  if (inanim.is_signature() && !anim.is_signature()) return inanim.signature();
  if (!anim.is_signature() && !inanim.is_signature()) {
    throw SlotError(anim.kind() == SignatureSlot::Kind::ungr
                        ? SlotError::Reason::ungrammatical
                        : SlotError::Reason::not_annotated,
                    ContextKey::pfv_anim,
                    r.key() + ": no perfective slot carries a signature (" +
                        anim.str() + "/" + inanim.str() + ")");
  }
  if (anim.signature() == inanim.signature()) return anim.signature();
  if (policy == PfvUnknownPolicy::error) {
    throw SlotError(SlotError::Reason::ambiguous_animacy, ContextKey::pfv_anim,
                    r.key() + ": perfective slots differ (" + anim.str() + " vs " +
                        inanim.str() + ") and animacy is unknown");
  }
  switch (compare_strength(anim.signature(), inanim.signature())) {
    case StrengthOrder::weaker: return anim.signature();
    case StrengthOrder::stronger: return inanim.signature();
    case StrengthOrder::equal:
    case StrengthOrder::incomparable:
      throw SlotError(SlotError::Reason::ambiguous_animacy, ContextKey::pfv_anim,
                      r.key() + ": perfective slots " + anim.str() + " and " +
                          inanim.str() + " have no weaker side");
  }
  throw Error("invalid strength order");
}

std::optional<Signature> classing_signature(const Reading &r, ClassingSlot pref) {
  ContextKey first = pref == ClassingSlot::anim_first ? ContextKey::pfv_anim
                                                      : ContextKey::pfv_inanim;
  ContextKey second = pref == ClassingSlot::anim_first ? ContextKey::pfv_inanim
                                                       : ContextKey::pfv_anim;
  if (r.slot(first).is_signature()) return r.slot(first).signature();
  if (r.slot(second).is_signature()) return r.slot(second).signature();
  return std::nullopt;
}

std::vector<const Reading *> query(const Lexicon &lex, std::string_view lemma,
                                   const QueryFilter &filter) {
  std::vector<const Reading *> out;
  for (const Reading *r : lex.find(lemma)) {
    if (filter.sip && r->sip != *filter.sip) continue;
    if (filter.subcat && r->subcat.count(*filter.subcat) == 0) continue;
    if (filter.cls) {
      auto sig = classing_signature(*r, ClassingSlot::anim_first);
      if (!sig || classify(*sig) != *filter.cls) continue;
    }
    out.push_back(r);
  }
  return out;
}

int ValidationReport::count(Severity s) const {
  int n = 0;
  for (const auto &issue : issues) n += issue.severity == s;
  return n;
}

std::string ValidationReport::render() const {
  std::ostringstream out;
  for (const auto &issue : issues) {
    switch (issue.severity) {
      case Severity::error: out << "error: "; break;
      case Severity::warning: out << "warning: "; break;
      case Severity::info: out << "info: "; break;
    }
    if (!issue.entry.empty()) out << issue.entry << ": ";
    out << issue.message << '\n';
  }
  out << "slot counts (signature/NA/UNGR):\n";
  for (ContextKey key : kContextKeys) {
    const auto &c = slot_counts[context_index(key)];
    out << "  " << context_name(key) << ": " << c[0] << '/' << c[1] << '/'
        << c[2] << '\n';
  }
  out << count(Severity::error) << " error(s), " << count(Severity::warning)
      << " warning(s)\n";
  return out.str();
}

ValidationReport validate(const Lexicon &lex) {
  ValidationReport report;
  std::set<std::string> keys;
  for (const Reading &r : lex.entries()) {
    bool any_sig = false;
    for (ContextKey key : kContextKeys) {
      const SignatureSlot &slot = r.slot(key);
      auto &counts = report.slot_counts[context_index(key)];
      switch (slot.kind()) {
        case SignatureSlot::Kind::signature: ++counts[0]; any_sig = true; break;
        case SignatureSlot::Kind::na: ++counts[1]; break;
        case SignatureSlot::Kind::ungr: ++counts[2]; break;
      }
    }
    if (!any_sig) {
      report.issues.push_back({Severity::error, r.key(), "all slots unannotated (NA/UNGR)"});
    }
    if (r.cogniser_slots && !r.sip) {
      report.issues.push_back({Severity::error, r.key(), "cogniser slots on a non-SIP reading"});
    }
    if (!keys.insert(r.key()).second) {
      report.issues.push_back({Severity::error, r.key(), "duplicate entry key"});
    }
    if (r.slot(ContextKey::imp).is_signature() &&
        !r.slot(ContextKey::pfv_anim).is_signature() &&
        !r.slot(ContextKey::pfv_inanim).is_signature()) {
      report.issues.push_back(
          {Severity::warning, r.key(),
           "imperfective slot annotated but both perfective slots are NA/UNGR"});
    }
  }
  return report;
}

}  // namespace factualis
