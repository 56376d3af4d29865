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

#include <array>
#include <string>
#include <vector>

#include "factualis/lexicon.hpp"

namespace factualis {
namespace stats {

struct Options {
  ClassingSlot classing = ClassingSlot::anim_first;
};

struct Render {
  bool tsv = false;
  char decimal_sep = '.';
};

// Counts of strength levels 0..5, per annotation context and overall.
// Every (entry, context) cell contributes exactly one count.
struct StrengthHistogram {
  std::array<std::array<int, 6>, 3> per_context{};  // [context][level]
  std::array<int, 6> overall{};
};

StrengthHistogram strength_histogram(const Lexicon &lex);

// How often the imperfective signature differs from the perfective one,
// split by perfective class.
struct AspectDependenceReport {
  struct Row {
    int n_with_both = 0;
    int n_changed = 0;
    double pct_changed = 0.0;  // 0 when the population is empty
  };
  Row factive;
  Row implicative;
  ClassingSlot classing = ClassingSlot::anim_first;
};

AspectDependenceReport aspect_dependence(const Lexicon &lex, const Options &opts = {});

// Strength comparison IMP vs PFV over readings implicative under the
// perfective. Percentages are over weaker+stronger+unchanged.
struct WeakeningReport {
  int n_weaker = 0;
  int n_stronger = 0;
  int n_unchanged = 0;
  int n_incomparable = 0;
  ClassingSlot classing = ClassingSlot::anim_first;

  int population() const {
    return n_weaker + n_stronger + n_unchanged + n_incomparable;
  }
  double pct_weaker() const;
  double pct_stronger() const;
  double pct_unchanged() const;
};

WeakeningReport imperfective_weakening(const Lexicon &lex, const Options &opts = {});

// Mean strength level over annotated slots (levels 1..5; NA/UNGR excluded).
struct MeanStrengthReport {
  std::array<double, 3> mean{};  // per context; 0 when no annotated slot
  std::array<int, 3> n{};
};

MeanStrengthReport mean_strength_by_context(const Lexicon &lex);

enum class AnimacyVerdict { inanimate_stronger, animate_stronger, tie, incomparable };

std::string_view animacy_verdict_name(AnimacyVerdict v);

// Per-verb comparison of the strongest inference attained with animate vs
// inanimate subjects, over verbs annotated on both perfective sides.
struct AnimacyComparisonReport {
  struct Row {
    std::string lemma;
    int max_animate = 0;
    int max_inanimate = 0;
    AnimacyVerdict verdict = AnimacyVerdict::tie;
  };
  std::vector<Row> rows;  // sorted by lemma

  int count(AnimacyVerdict v) const;
};

AnimacyComparisonReport animacy_comparison(const Lexicon &lex);

// Readings factive with an animate subject, and how many of those are also
// acceptable (any signature) with an inanimate one.
struct FactiveAnimacyReport {
  int n_factive_animate = 0;
  int n_also_inanimate = 0;
};

FactiveAnimacyReport factive_animacy_restriction(const Lexicon &lex);

// Subcategorisation cross-tab over readings of inferentially polysemous
// verbs (verbs with both a factive and an implicative reading).
struct CrosstabReport {
  struct Side {
    int population = 0;
    int n_inf = 0;           // subcat meets {aInf, deInf, inf}
    int n_que = 0;           // que in subcat
    int n_inf_not_que = 0;
    int n_que_not_inf = 0;
    double pct_inf = 0.0;
    double pct_que = 0.0;
    double pct_inf_not_que = 0.0;
    double pct_que_not_inf = 0.0;
  };
  int n_verbs = 0;
  Side implicative;
  Side factive;
  ClassingSlot classing = ClassingSlot::anim_first;
};

CrosstabReport subcat_crosstab(const Lexicon &lex, const Options &opts = {});

// Renderers: aligned plain text, or tab-separated under Render.tsv.
std::string render(const StrengthHistogram &r, const Render &fmt = {});
std::string render(const AspectDependenceReport &r, const Render &fmt = {});
std::string render(const WeakeningReport &r, const Render &fmt = {});
std::string render(const MeanStrengthReport &r, const Render &fmt = {});
std::string render(const AnimacyComparisonReport &r, const Render &fmt = {});
std::string render(const FactiveAnimacyReport &r, const Render &fmt = {});
std::string render(const CrosstabReport &r, const Render &fmt = {});

}  // namespace stats
}  // namespace factualis
