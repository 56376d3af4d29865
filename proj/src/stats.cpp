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

#include "factualis/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace factualis {
namespace stats {

namespace {

double pct(int part, int whole) {
  return whole == 0 ? 0.0 : 100.0 * part / whole;
}

std::string fixed(double value, int decimals, char sep) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  std::string out(buf);
  if (sep != '.') {
    auto dot = out.find('.');
    if (dot != std::string::npos) out[dot] = sep;
  }
  return out;
}

std::string_view classing_note(ClassingSlot c) {
  return c == ClassingSlot::anim_first ? "PFV+anim preferred" : "PFV-anim preferred";
}

// Cell rows as one table: tabs under tsv, otherwise padded columns with the
// first column left-aligned and the rest right-aligned.
std::string layout(const std::vector<std::vector<std::string>> &rows, bool tsv) {
  std::ostringstream out;
  if (tsv) {
    for (const auto &row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << '\t';
        out << row[c];
      }
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::size_t> width;
  for (const auto &row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  }
  for (const auto &row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      std::size_t pad = width[c] - row[c].size();
      if (c == 0) {
        out << row[c];
        if (c + 1 < row.size()) out << std::string(pad, ' ');
      } else {
        out << std::string(pad, ' ') << row[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

StrengthHistogram strength_histogram(const Lexicon &lex) {
  StrengthHistogram h;
  for (const Reading &r : lex.entries()) {
    for (ContextKey key : kContextKeys) {
      int level = strength_level(r.slot(key));
      ++h.per_context[context_index(key)][static_cast<std::size_t>(level)];
      ++h.overall[static_cast<std::size_t>(level)];
    }
  }
  return h;
}

AspectDependenceReport aspect_dependence(const Lexicon &lex, const Options &opts) {
  AspectDependenceReport report;
  report.classing = opts.classing;
  for (const Reading &r : lex.entries()) {
    if (!r.slot(ContextKey::imp).is_signature()) continue;
    auto pfv = classing_signature(r, opts.classing);
    if (!pfv) continue;
    bool changed = !(r.slot(ContextKey::imp).signature() == *pfv);
    if (is_factive(*pfv)) {
      ++report.factive.n_with_both;
      report.factive.n_changed += changed;
    } else if (is_implicative(*pfv)) {
      ++report.implicative.n_with_both;
      report.implicative.n_changed += changed;
    }
  }
  report.factive.pct_changed = pct(report.factive.n_changed, report.factive.n_with_both);
  report.implicative.pct_changed =
      pct(report.implicative.n_changed, report.implicative.n_with_both);
  return report;
}

double WeakeningReport::pct_weaker() const {
  return pct(n_weaker, n_weaker + n_stronger + n_unchanged);
}
double WeakeningReport::pct_stronger() const {
  return pct(n_stronger, n_weaker + n_stronger + n_unchanged);
}
double WeakeningReport::pct_unchanged() const {
  return pct(n_unchanged, n_weaker + n_stronger + n_unchanged);
}

WeakeningReport imperfective_weakening(const Lexicon &lex, const Options &opts) {
  WeakeningReport report;
  report.classing = opts.classing;
  for (const Reading &r : lex.entries()) {
    if (!r.slot(ContextKey::imp).is_signature()) continue;
    auto pfv = classing_signature(r, opts.classing);
    if (!pfv || !is_implicative(*pfv)) continue;
    switch (compare_strength(r.slot(ContextKey::imp).signature(), *pfv)) {
      case StrengthOrder::weaker: ++report.n_weaker; break;
      case StrengthOrder::stronger: ++report.n_stronger; break;
      case StrengthOrder::equal: ++report.n_unchanged; break;
      case StrengthOrder::incomparable: ++report.n_incomparable; break;
    }
  }
  return report;
}

MeanStrengthReport mean_strength_by_context(const Lexicon &lex) {
  MeanStrengthReport report;
  std::array<long, 3> sums{};
  for (const Reading &r : lex.entries()) {
    for (ContextKey key : kContextKeys) {
      if (!r.slot(key).is_signature()) continue;
      sums[context_index(key)] += strength_level(r.slot(key));
      ++report.n[context_index(key)];
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    report.mean[i] = report.n[i] == 0 ? 0.0 : static_cast<double>(sums[i]) / report.n[i];
  }
  return report;
}

std::string_view animacy_verdict_name(AnimacyVerdict v) {
  switch (v) {
    case AnimacyVerdict::inanimate_stronger: return "inanimate_stronger";
    case AnimacyVerdict::animate_stronger: return "animate_stronger";
    case AnimacyVerdict::tie: return "tie";
    case AnimacyVerdict::incomparable: return "incomparable";
  }
  throw Error("invalid animacy verdict");
}

int AnimacyComparisonReport::count(AnimacyVerdict v) const {
  int n = 0;
  for (const Row &row : rows) n += row.verdict == v;
  return n;
}

AnimacyComparisonReport animacy_comparison(const Lexicon &lex) {
  struct Best {
    int anim = -1;   // -1 = no annotated slot on that side
    int inanim = -1;
  };
  std::map<std::string, Best> by_lemma;
  for (const Reading &r : lex.entries()) {
    Best &best = by_lemma[r.lemma];
    if (r.slot(ContextKey::pfv_anim).is_signature()) {
      best.anim = std::max(best.anim, strength_level(r.slot(ContextKey::pfv_anim)));
    }
    if (r.slot(ContextKey::pfv_inanim).is_signature()) {
      best.inanim = std::max(best.inanim, strength_level(r.slot(ContextKey::pfv_inanim)));
    }
  }

  AnimacyComparisonReport report;
  for (const auto &[lemma, best] : by_lemma) {
    if (best.anim < 0 || best.inanim < 0) continue;
    AnimacyComparisonReport::Row row;
    row.lemma = lemma;
    row.max_animate = best.anim;
    row.max_inanimate = best.inanim;
    if (best.inanim > best.anim) row.verdict = AnimacyVerdict::inanimate_stronger;
    else if (best.anim > best.inanim) row.verdict = AnimacyVerdict::animate_stronger;
    else row.verdict = AnimacyVerdict::tie;
    report.rows.push_back(std::move(row));
  }
  return report;
}

FactiveAnimacyReport factive_animacy_restriction(const Lexicon &lex) {
  FactiveAnimacyReport report;
  for (const Reading &r : lex.entries()) {
    const SignatureSlot &anim = r.slot(ContextKey::pfv_anim);
    if (!anim.is_signature() || !is_factive(anim.signature())) continue;
    ++report.n_factive_animate;
    report.n_also_inanimate += r.slot(ContextKey::pfv_inanim).is_signature();
  }
  return report;
}

CrosstabReport subcat_crosstab(const Lexicon &lex, const Options &opts) {
  enum class Cls { factive, implicative, other };
  auto cls_of = [&](const Reading &r) {
    auto sig = classing_signature(r, opts.classing);
    if (!sig) return Cls::other;
    if (is_factive(*sig)) return Cls::factive;
    if (is_implicative(*sig)) return Cls::implicative;
    return Cls::other;
  };

  std::map<std::string, std::pair<bool, bool>> polysemy;  // lemma -> (has factive, has implicative)
  for (const Reading &r : lex.entries()) {
    Cls c = cls_of(r);
    auto &flags = polysemy[r.lemma];
    if (c == Cls::factive) flags.first = true;
    if (c == Cls::implicative) flags.second = true;
  }

  CrosstabReport report;
  report.classing = opts.classing;
  for (const auto &[lemma, flags] : polysemy) report.n_verbs += flags.first && flags.second;

  auto tally = [](CrosstabReport::Side &side, const Reading &r) {
    bool has_inf = r.subcat.count(SubcatFrame::a_inf) != 0 ||
                   r.subcat.count(SubcatFrame::de_inf) != 0 ||
                   r.subcat.count(SubcatFrame::inf) != 0;
    bool has_que = r.subcat.count(SubcatFrame::que) != 0;
    ++side.population;
    side.n_inf += has_inf;
    side.n_que += has_que;
    side.n_inf_not_que += has_inf && !has_que;
    side.n_que_not_inf += has_que && !has_inf;
  };

  for (const Reading &r : lex.entries()) {
    const auto &flags = polysemy[r.lemma];
    if (!(flags.first && flags.second)) continue;
    switch (cls_of(r)) {
      case Cls::factive: tally(report.factive, r); break;
      case Cls::implicative: tally(report.implicative, r); break;
      case Cls::other: break;
    }
  }

  for (CrosstabReport::Side *side : {&report.implicative, &report.factive}) {
    side->pct_inf = pct(side->n_inf, side->population);
    side->pct_que = pct(side->n_que, side->population);
    side->pct_inf_not_que = pct(side->n_inf_not_que, side->population);
    side->pct_que_not_inf = pct(side->n_que_not_inf, side->population);
  }
  return report;
}

std::string render(const StrengthHistogram &r, const Render &fmt) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"context", "5", "4", "3", "2", "1", "0"});
  auto line = [&](std::string name, const std::array<int, 6> &counts) {
    std::vector<std::string> row{std::move(name)};
    for (int level = 5; level >= 0; --level)
      row.push_back(std::to_string(counts[static_cast<std::size_t>(level)]));
    rows.push_back(std::move(row));
  };
  for (ContextKey key : kContextKeys)
    line(std::string(context_name(key)), r.per_context[context_index(key)]);
  line("overall", r.overall);
  return "strength histogram (level: count)\n" + layout(rows, fmt.tsv);
}

std::string render(const AspectDependenceReport &r, const Render &fmt) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"class", "with_imp_and_pfv", "imp_differs", "pct"});
  rows.push_back({"factive", std::to_string(r.factive.n_with_both),
                  std::to_string(r.factive.n_changed),
                  fixed(r.factive.pct_changed, 1, fmt.decimal_sep)});
  rows.push_back({"implicative", std::to_string(r.implicative.n_with_both),
                  std::to_string(r.implicative.n_changed),
                  fixed(r.implicative.pct_changed, 1, fmt.decimal_sep)});
  return "aspect dependence (classing: " + std::string(classing_note(r.classing)) +
         ")\n" + layout(rows, fmt.tsv);
}

std::string render(const WeakeningReport &r, const Render &fmt) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"bucket", "n", "pct"});
  rows.push_back({"weaker", std::to_string(r.n_weaker),
                  fixed(r.pct_weaker(), 1, fmt.decimal_sep)});
  rows.push_back({"stronger", std::to_string(r.n_stronger),
                  fixed(r.pct_stronger(), 1, fmt.decimal_sep)});
  rows.push_back({"no_change", std::to_string(r.n_unchanged),
                  fixed(r.pct_unchanged(), 1, fmt.decimal_sep)});
  rows.push_back({"incomparable", std::to_string(r.n_incomparable), "-"});
  return "imperfective weakening over " + std::to_string(r.population()) +
         " PFV-implicative readings (classing: " +
         std::string(classing_note(r.classing)) + ")\n" + layout(rows, fmt.tsv);
}

std::string render(const MeanStrengthReport &r, const Render &fmt) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"context", "n", "mean"});
  for (ContextKey key : kContextKeys) {
    std::size_t i = context_index(key);
    rows.push_back({std::string(context_name(key)), std::to_string(r.n[i]),
                    fixed(r.mean[i], 2, fmt.decimal_sep)});
  }
  return "mean strength per context (annotated slots only)\n" + layout(rows, fmt.tsv);
}

std::string render(const AnimacyComparisonReport &r, const Render &fmt) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"lemma", "max_anim", "max_inanim", "verdict"});
  for (const auto &row : r.rows) {
    rows.push_back({row.lemma, std::to_string(row.max_animate),
                    std::to_string(row.max_inanimate),
                    std::string(animacy_verdict_name(row.verdict))});
  }
  std::vector<std::vector<std::string>> totals;
  for (AnimacyVerdict v : {AnimacyVerdict::inanimate_stronger,
                           AnimacyVerdict::animate_stronger, AnimacyVerdict::tie}) {
    totals.push_back({std::string(animacy_verdict_name(v)),
                      std::to_string(r.count(v))});
  }
  return "animacy comparison over " + std::to_string(r.rows.size()) +
         " verbs annotated on both perfective sides\n" + layout(rows, fmt.tsv) +
         layout(totals, fmt.tsv);
}

std::string render(const FactiveAnimacyReport &r, const Render &fmt) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"factive_with_animate_subject", std::to_string(r.n_factive_animate)});
  rows.push_back({"also_acceptable_inanimate", std::to_string(r.n_also_inanimate)});
  return "factive animacy restriction\n" + layout(rows, fmt.tsv);
}

std::string render(const CrosstabReport &r, const Render &fmt) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"pattern", "implicative(" + std::to_string(r.implicative.population) + ")",
                  "factive(" + std::to_string(r.factive.population) + ")"});
  auto line = [&](const char *name, double a, double b) {
    rows.push_back({name, fixed(a, 1, fmt.decimal_sep), fixed(b, 1, fmt.decimal_sep)});
  };
  line("+INF", r.implicative.pct_inf, r.factive.pct_inf);
  line("+QUE", r.implicative.pct_que, r.factive.pct_que);
  line("+INF-QUE", r.implicative.pct_inf_not_que, r.factive.pct_inf_not_que);
  line("-INF+QUE", r.implicative.pct_que_not_inf, r.factive.pct_que_not_inf);
  return "subcategorisation cross-tab over " + std::to_string(r.n_verbs) +
         " inferentially polysemous verbs (classing: " +
         std::string(classing_note(r.classing)) + ")\n" + layout(rows, fmt.tsv);
}

}  // namespace stats
}  // namespace factualis
