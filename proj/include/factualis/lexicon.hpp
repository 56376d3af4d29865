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

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "factualis/algebra.hpp"
#include "factualis/core.hpp"

namespace factualis {

// Types of infinitival and finite embedded clauses a reading accepts.
enum class SubcatFrame { a_inf, de_inf, inf, que };

std::string_view subcat_name(SubcatFrame f);          // "aInf", "deInf", "inf", "que"
SubcatFrame subcat_from_name(std::string_view name);  // throws ParseError

enum class Source { lvf, lglex, merged };

std::string_view source_name(Source s);
Source source_from_name(std::string_view name);  // throws ParseError

enum class EventKind { clause, event_np };

std::string_view event_kind_name(EventKind k);  // "clause", "eventNP"

enum class Aspect { pfv, imp };
enum class Animacy { anim, inanim, unknown };

// One verb-sense/valence entry: three annotation-context slots plus, for
// source-introducing readings, an optional parallel set of cogniser slots.
struct Reading {
  std::string lemma;
  std::string reading_id;
  Source source = Source::lvf;
  std::string gloss;
  bool sip = false;
  std::set<SubcatFrame> subcat;
  std::array<SignatureSlot, 3> slots;  // indexed by ContextKey
  std::optional<std::array<SignatureSlot, 3>> cogniser_slots;
  std::set<EventKind> event_kinds = {EventKind::clause};

  const SignatureSlot &slot(ContextKey key) const {
    return slots[context_index(key)];
  }
  SignatureSlot &slot(ContextKey key) { return slots[context_index(key)]; }

  // (lemma, reading_id, source) identifies an entry.
  std::string key() const;
};

// Raised when a slot needed for a query carries no signature.
class SlotError : public Error {
 public:
  enum class Reason { not_annotated, ungrammatical, ambiguous_animacy };

  SlotError(Reason reason, ContextKey key, const std::string &msg)
      : Error(msg), reason_(reason), key_(key) {}

  Reason reason() const { return reason_; }
  ContextKey key() const { return key_; }

 private:
  Reason reason_;
  ContextKey key_;
};

struct LineError {
  std::size_t line;  // 1-based
  std::string message;
};

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<Reading> entries);

  const std::vector<Reading> &entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // All entries for a lemma, in entry order; empty when unknown.
  std::vector<const Reading *> find(std::string_view lemma) const;

  // Entry with the given reading id. For MERGED entries any "+"-joined
  // component of the stored id matches. nullptr when absent; throws Error
  // when ambiguous.
  const Reading *resolve(std::string_view lemma, std::string_view reading_id) const;

 private:
  std::vector<Reading> entries_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> index_;
};

struct LoadResult {
  Lexicon lexicon;
  std::vector<LineError> errors;
};

// Reads the tab-separated lexicon format. Well-formed rows become entries;
// malformed rows are reported with line number and reason, never silently
// dropped. Throws Error only when the stream itself is unreadable.
LoadResult load_tsv(std::istream &in);
LoadResult load_tsv_file(const std::string &path);

// Canonical column order, rows sorted by (lemma, reading_id, source).
void write_tsv(const Lexicon &lex, std::ostream &out);
std::string to_tsv(const Lexicon &lex);

// Collapses entries that agree on lemma, subcat set, sip flag and all slots
// into one MERGED entry whose reading_id concatenates the originals'.
// Output is sorted by (lemma, reading_id, source).
std::vector<Reading> merge_duplicates(std::vector<Reading> entries);

enum class PfvUnknownPolicy { weaker, error };

// Signature for an (aspect, animacy) occurrence. IMP ignores animacy.
// PFV with unknown animacy falls back per policy: the unique annotated slot,
// the shared value, or the weaker of two differing slots. Throws SlotError
// when the selected slot is NA/UNGR or no weaker slot is determined.
Signature select_slot(const Reading &r, Aspect aspect, Animacy animacy,
                      PfvUnknownPolicy policy = PfvUnknownPolicy::weaker);

// Which perfective slot classifies a reading when both are annotated.
enum class ClassingSlot { anim_first, inanim_first };

// The perfective signature used to class a reading: the preferred slot when
// annotated, else the other one, else nullopt.
std::optional<Signature> classing_signature(const Reading &r, ClassingSlot pref);

struct QueryFilter {
  std::optional<InferentialClass> cls;
  std::optional<SubcatFrame> subcat;
  std::optional<bool> sip;
};

// Entries matching lemma and all supplied filters. The class filter applies
// to the perfective slot that exists (PFV+anim preferred when both do).
std::vector<const Reading *> query(const Lexicon &lex, std::string_view lemma,
                                   const QueryFilter &filter = {});

enum class Severity { error, warning, info };

struct ValidationIssue {
  Severity severity;
  std::string entry;  // "lemma reading_id (SOURCE)", empty for corpus-level
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  // [context][0]=signatures, [1]=NA, [2]=UNGR
  std::array<std::array<int, 3>, 3> slot_counts{};

  int count(Severity s) const;
  bool ok() const { return count(Severity::error) == 0; }
  std::string render() const;
};

// Entry invariants plus corpus-level sanity checks.
ValidationReport validate(const Lexicon &lex);

}  // namespace factualis
