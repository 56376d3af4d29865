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
//
// Independent reference evaluators used to cross-check the library:
//  - a chain-of-grids projection evaluator that walks an embedding chain
//    cell-by-cell through precomputed grid rows, with its own value
//    encoding and its own marker arithmetic;
//  - brute-force recounts of every lexicon-level report, written against
//    raw slot components rather than the algebra module.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factualis/algebra.hpp"
#include "factualis/lexicon.hpp"
#include "factualis/projection.hpp"
#include "factualis/stats.hpp"

namespace testsupport {
namespace oracle {

// ---------------------------------------------------------------------------
// Chain-of-grids projection evaluator.

// Degrees and polarities as plain table indices: deg 0=CT 1=PR 2=PS 3=U,
// pol 0=+ 1=- 2=u. Column index into a 12-cell grid row is deg*3+pol.
struct Val {
  int deg;
  int pol;
  bool operator==(const Val &) const = default;
};

inline Val from_value(const factualis::FactualityValue &v) {
  int deg = 3 - static_cast<int>(v.degree());
  int pol = v.polarity() == factualis::Polarity::positive   ? 0
            : v.polarity() == factualis::Polarity::negative ? 1
                                                            : 2;
  return Val{deg, pol};
}

inline Val uu() { return Val{3, 2}; }

// One embedding step of a test chain.
struct NodeSpec {
  std::string lemma;
  std::string reading_id;
  factualis::Aspect aspect = factualis::Aspect::pfv;
  factualis::Animacy animacy = factualis::Animacy::anim;
  bool negated = false;
  factualis::CertaintyDegree modality = factualis::CertaintyDegree::ct;
};

// Grid rows for one reading, one per annotation context, plus the cogniser
// rows when present. Rows are only populated for signature slots.
struct GridRows {
  std::optional<std::array<Val, 12>> anchor[3];
  std::optional<std::array<Val, 12>> cogniser[3];
  bool sip = false;
};

inline std::array<Val, 12> to_row(const factualis::Signature &sig,
                                  const factualis::DegreeMapping &mapping) {
  auto grid = factualis::generate_grid(sig, mapping);
  std::array<Val, 12> row;
  for (std::size_t i = 0; i < 12; ++i) row[i] = from_value(grid[i]);
  return row;
}

inline GridRows grids_for(const factualis::Reading &r,
                          const factualis::DegreeMapping &mapping) {
  GridRows rows;
  rows.sip = r.sip;
  for (std::size_t i = 0; i < 3; ++i) {
    if (r.slots[i].is_signature())
      rows.anchor[i] = to_row(r.slots[i].signature(), mapping);
    if (r.cogniser_slots && (*r.cogniser_slots)[i].is_signature())
      rows.cogniser[i] = to_row((*r.cogniser_slots)[i].signature(), mapping);
  }
  return rows;
}

inline std::size_t slot_index(const NodeSpec &spec) {
  if (spec.aspect == factualis::Aspect::imp) return 2;
  return spec.animacy == factualis::Animacy::anim ? 0 : 1;
}

inline Val combine(Val ctx, const NodeSpec &spec) {
  int pol = ctx.pol;
  if (pol != 2 && spec.negated) pol = pol == 0 ? 1 : 0;
  int mod = spec.modality == factualis::CertaintyDegree::ct   ? 0
            : spec.modality == factualis::CertaintyDegree::pr ? 1
                                                              : 2;
  int deg = std::max(ctx.deg, mod);
  if (deg == 3) return uu();
  return Val{deg, pol};
}

inline Val cell(const std::array<Val, 12> &row, Val ctx) {
  if (ctx.deg == 3) return row[11];
  return row[static_cast<std::size_t>(ctx.deg * 3 + ctx.pol)];
}

struct ChainVal {
  std::vector<std::string> labels;
  Val val;
};

// Per-node assignments for an embedding chain followed by a leaf event.
// assignments[k] holds the values active at node k (the leaf is the last).
struct Eval {
  std::vector<std::vector<ChainVal>> assignments;
};

inline Eval evaluate_chain(const factualis::Lexicon &lex,
                           const std::vector<NodeSpec> &specs,
                           const factualis::DegreeMapping &mapping) {
  std::map<std::string, GridRows> cache;
  Eval eval;
  std::vector<ChainVal> active = {ChainVal{{"author"}, Val{0, 0}}};  // CT+
  for (const NodeSpec &spec : specs) {
    std::string key = spec.lemma + ":" + spec.reading_id;
    auto it = cache.find(key);
    if (it == cache.end()) {
      const factualis::Reading *r = lex.resolve(spec.lemma, spec.reading_id);
      if (r == nullptr) throw factualis::Error("oracle: unknown reading " + key);
      it = cache.emplace(key, grids_for(*r, mapping)).first;
    }
    const GridRows &rows = it->second;
    std::size_t slot = slot_index(spec);
    if (!rows.anchor[slot]) throw factualis::Error("oracle: slot without signature");

    std::vector<ChainVal> here;
    std::vector<ChainVal> next;
    for (const ChainVal &c : active) {
      Val combined = combine(c.val, spec);
      here.push_back({c.labels, combined});
      next.push_back({c.labels, cell(*rows.anchor[slot], combined)});
    }
    if (rows.sip) {
      for (const ChainVal &c : active) {
        Val combined = combine(c.val, spec);
        std::vector<std::string> labels = c.labels;
        labels.push_back("subject");
        Val v = rows.cogniser[slot] ? cell(*rows.cogniser[slot], combined) : uu();
        next.push_back({std::move(labels), v});
      }
    }
    eval.assignments.push_back(std::move(here));
    active = std::move(next);
  }
  eval.assignments.push_back(active);  // leaf
  return eval;
}

// True when the library's profiles agree with the oracle on every node and
// every source chain.
inline bool matches(const Eval &eval,
                    const std::vector<factualis::FactualityProfile> &profiles) {
  if (eval.assignments.size() != profiles.size()) return false;
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const auto &expect = eval.assignments[k];
    const auto &got = profiles[k].assignments;
    if (expect.size() != got.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (expect[i].labels != got[i].first.labels) return false;
      if (!(expect[i].val == from_value(got[i].second))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Brute-force recounts of the lexicon reports, from raw slot components.

inline int mag10(const factualis::InferenceValue &v) { return v.magnitude_tenths(); }

inline int recount_level(const factualis::SignatureSlot &slot) {
  if (!slot.is_signature()) return 0;
  int p = mag10(slot.signature().pos);
  int n = mag10(slot.signature().neg);
  if (p == 10 && n == 10) return 5;
  if (p == 10 || n == 10) return 4;
  if (p == 9 && n == 9) return 3;
  if (p == 9 || n == 9) return 2;
  return 1;
}

inline bool recount_factive(const factualis::Signature &s) {
  bool both_pos = s.pos.sign() == 1 && s.neg.sign() == 1;
  bool both_neg = s.pos.sign() == -1 && s.neg.sign() == -1;
  return mag10(s.pos) == 10 && mag10(s.neg) == 10 && (both_pos || both_neg);
}

inline bool recount_implicative(const factualis::Signature &s) {
  if (recount_factive(s)) return false;
  return mag10(s.pos) == 10 || mag10(s.neg) == 10;
}

// -1 weaker, +1 stronger, 0 equal, 2 incomparable
inline int recount_compare(const factualis::Signature &a, const factualis::Signature &b) {
  int ap = mag10(a.pos), an = mag10(a.neg), bp = mag10(b.pos), bn = mag10(b.neg);
  if (ap == bp && an == bn) return 0;
  if (ap <= bp && an <= bn) return -1;
  if (ap >= bp && an >= bn) return 1;
  return 2;
}

inline std::optional<factualis::Signature> recount_classing(
    const factualis::Reading &r, factualis::ClassingSlot pref) {
  const auto &anim = r.slots[0];
  const auto &inanim = r.slots[1];
  const auto &first = pref == factualis::ClassingSlot::anim_first ? anim : inanim;
  const auto &second = pref == factualis::ClassingSlot::anim_first ? inanim : anim;
  if (first.is_signature()) return first.signature();
  if (second.is_signature()) return second.signature();
  return std::nullopt;
}

inline factualis::stats::StrengthHistogram recount_histogram(const factualis::Lexicon &lex) {
  factualis::stats::StrengthHistogram h;
  for (const auto &r : lex.entries()) {
    for (std::size_t i = 0; i < 3; ++i) {
      int level = recount_level(r.slots[i]);
      ++h.per_context[i][static_cast<std::size_t>(level)];
      ++h.overall[static_cast<std::size_t>(level)];
    }
  }
  return h;
}

inline factualis::stats::AspectDependenceReport recount_aspect(
    const factualis::Lexicon &lex, factualis::ClassingSlot pref) {
  factualis::stats::AspectDependenceReport out;
  out.classing = pref;
  for (const auto &r : lex.entries()) {
    if (!r.slots[2].is_signature()) continue;
    auto pfv = recount_classing(r, pref);
    if (!pfv) continue;
    bool changed = !(r.slots[2].signature() == *pfv);
    if (recount_factive(*pfv)) {
      ++out.factive.n_with_both;
      out.factive.n_changed += changed;
    } else if (recount_implicative(*pfv)) {
      ++out.implicative.n_with_both;
      out.implicative.n_changed += changed;
    }
  }
  auto pct = [](int part, int whole) { return whole ? 100.0 * part / whole : 0.0; };
  out.factive.pct_changed = pct(out.factive.n_changed, out.factive.n_with_both);
  out.implicative.pct_changed = pct(out.implicative.n_changed, out.implicative.n_with_both);
  return out;
}

inline factualis::stats::WeakeningReport recount_weakening(
    const factualis::Lexicon &lex, factualis::ClassingSlot pref) {
  factualis::stats::WeakeningReport out;
  out.classing = pref;
  for (const auto &r : lex.entries()) {
    if (!r.slots[2].is_signature()) continue;
    auto pfv = recount_classing(r, pref);
    if (!pfv || !recount_implicative(*pfv)) continue;
    switch (recount_compare(r.slots[2].signature(), *pfv)) {
      case -1: ++out.n_weaker; break;
      case 1: ++out.n_stronger; break;
      case 0: ++out.n_unchanged; break;
      default: ++out.n_incomparable; break;
    }
  }
  return out;
}

inline factualis::stats::MeanStrengthReport recount_means(const factualis::Lexicon &lex) {
  factualis::stats::MeanStrengthReport out;
  std::array<long, 3> sums{};
  for (const auto &r : lex.entries()) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!r.slots[i].is_signature()) continue;
      sums[i] += recount_level(r.slots[i]);
      ++out.n[i];
    }
  }
  for (std::size_t i = 0; i < 3; ++i)
    out.mean[i] = out.n[i] ? static_cast<double>(sums[i]) / out.n[i] : 0.0;
  return out;
}

inline factualis::stats::AnimacyComparisonReport recount_animacy(
    const factualis::Lexicon &lex) {
  std::map<std::string, std::pair<int, int>> best;  // lemma -> (anim, inanim), -1 absent
  for (const auto &r : lex.entries()) {
    auto it = best.emplace(r.lemma, std::make_pair(-1, -1)).first;
    if (r.slots[0].is_signature())
      it->second.first = std::max(it->second.first, recount_level(r.slots[0]));
    if (r.slots[1].is_signature())
      it->second.second = std::max(it->second.second, recount_level(r.slots[1]));
  }
  factualis::stats::AnimacyComparisonReport out;
  for (const auto &[lemma, sides] : best) {
    if (sides.first < 0 || sides.second < 0) continue;
    factualis::stats::AnimacyComparisonReport::Row row;
    row.lemma = lemma;
    row.max_animate = sides.first;
    row.max_inanimate = sides.second;
    row.verdict = sides.second > sides.first
                      ? factualis::stats::AnimacyVerdict::inanimate_stronger
                  : sides.first > sides.second
                      ? factualis::stats::AnimacyVerdict::animate_stronger
                      : factualis::stats::AnimacyVerdict::tie;
    out.rows.push_back(std::move(row));
  }
  return out;
}

inline factualis::stats::FactiveAnimacyReport recount_factive_restriction(
    const factualis::Lexicon &lex) {
  factualis::stats::FactiveAnimacyReport out;
  for (const auto &r : lex.entries()) {
    if (!r.slots[0].is_signature() || !recount_factive(r.slots[0].signature())) continue;
    ++out.n_factive_animate;
    out.n_also_inanimate += r.slots[1].is_signature();
  }
  return out;
}

inline factualis::stats::CrosstabReport recount_crosstab(const factualis::Lexicon &lex,
                                                         factualis::ClassingSlot pref) {
  std::map<std::string, std::pair<bool, bool>> flags;
  for (const auto &r : lex.entries()) {
    auto sig = recount_classing(r, pref);
    if (!sig) continue;
    if (recount_factive(*sig)) flags[r.lemma].first = true;
    else if (recount_implicative(*sig)) flags[r.lemma].second = true;
  }
  factualis::stats::CrosstabReport out;
  out.classing = pref;
  for (const auto &[lemma, f] : flags) out.n_verbs += f.first && f.second;
  for (const auto &r : lex.entries()) {
    auto it = flags.find(r.lemma);
    if (it == flags.end() || !it->second.first || !it->second.second) continue;
    auto sig = recount_classing(r, pref);
    if (!sig) continue;
    factualis::stats::CrosstabReport::Side *side = nullptr;
    if (recount_factive(*sig)) side = &out.factive;
    else if (recount_implicative(*sig)) side = &out.implicative;
    if (!side) continue;
    bool inf = r.subcat.count(factualis::SubcatFrame::a_inf) ||
               r.subcat.count(factualis::SubcatFrame::de_inf) ||
               r.subcat.count(factualis::SubcatFrame::inf);
    bool que = r.subcat.count(factualis::SubcatFrame::que);
    ++side->population;
    side->n_inf += inf;
    side->n_que += que;
    side->n_inf_not_que += inf && !que;
    side->n_que_not_inf += que && !inf;
  }
  auto pct = [](int part, int whole) { return whole ? 100.0 * part / whole : 0.0; };
  for (auto *side : {&out.implicative, &out.factive}) {
    side->pct_inf = pct(side->n_inf, side->population);
    side->pct_que = pct(side->n_que, side->population);
    side->pct_inf_not_que = pct(side->n_inf_not_que, side->population);
    side->pct_que_not_inf = pct(side->n_que_not_inf, side->population);
  }
  return out;
}

}  // namespace oracle
}  // namespace testsupport
