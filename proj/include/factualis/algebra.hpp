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

#include "factualis/core.hpp"

namespace factualis {

// Strength of the inference a slot triggers, 0..5:
//   5 max under both polarities      (1|1, 1|-1, ...)
//   4 max under exactly one polarity (1|n, 0.9|-1, ...)
//   3 strong (0.9) under both        (0.9|-0.9)
//   2 strong under exactly one       (0.9|n, n|-0.9)
//   1 neutral / sub-strong only      (n|n, 0.7|-0.7, ...)
//   0 NA or UNGR
int strength_level(const SignatureSlot &slot);
int strength_level(const Signature &sig);

InferentialClass classify(const Signature &sig);

// Factive in the statistical sense: same entailment under both polarities,
// i.e. signature 1|1 or -1|-1 (counter-factives included).
bool is_factive(const Signature &sig);

// Non-factive with an entailment under at least one polarity
// (e.g. 1|-1, 1|n, -0.7|-1).
bool is_implicative(const Signature &sig);

enum class StrengthOrder { weaker, stronger, equal, incomparable };

std::string_view strength_order_name(StrengthOrder o);

// Componentwise comparison of the magnitude vectors (|pos|, |neg|).
StrengthOrder compare_strength(const Signature &a, const Signature &b);

// Slot overload; NA/UNGR operands are not comparable and throw Error.
StrengthOrder compare_strength(const SignatureSlot &a, const SignatureSlot &b);

// Maps an inference magnitude to the certainty degree it conveys. Monotone:
// a larger magnitude never yields a strictly weaker degree.
class DegreeMapping {
 public:
  // 1 -> CT, 0.9 -> PR, 0.6..0.8 -> U, neutral -> U.
  static DegreeMapping paper();
  // Like paper(), except 0.8 -> PS.
  static DegreeMapping fine();

  // by_tenths[m - 6] is the degree for magnitude m/10, m in 6..10.
  explicit DegreeMapping(const std::array<CertaintyDegree, 5> &by_tenths);

  CertaintyDegree of_magnitude(int tenths) const;
  CertaintyDegree of(const InferenceValue &v) const {
    return of_magnitude(v.magnitude_tenths());
  }

  bool operator==(const DegreeMapping &) const = default;

 private:
  std::array<CertaintyDegree, 5> by_tenths_;
};

// Factuality of an embedded event given the embedding predicate's signature
// and the contextual factuality of the predicate's own occurrence.
FactualityValue lookup_factuality(const Signature &sig, FactualityValue context,
                                  const DegreeMapping &mapping);

// The 12 contextual cells of a lexicon-grid row, in column order
// CT+ CT- CTu PR+ PR- PRu PS+ PS- PSu U+ U- Uu. The U cells cannot be
// FactualityValues (U forces u polarity), so headers carry the raw pair.
struct GridContext {
  CertaintyDegree degree;
  Polarity polarity;
  std::string label() const;
};

inline constexpr std::size_t kGridCells = 12;

const std::array<GridContext, kGridCells> &grid_contexts();

// Full grid row for a signature: one output value per contextual cell.
// The three U columns all behave as Uu inputs.
std::array<FactualityValue, kGridCells> generate_grid(const Signature &sig,
                                                      const DegreeMapping &mapping);

}  // namespace factualis
