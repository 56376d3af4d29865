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

#include "factualis/algebra.hpp"

#include <algorithm>

namespace factualis {

int strength_level(const Signature &sig) {
  int p = sig.pos.magnitude_tenths();
  int n = sig.neg.magnitude_tenths();
  int maxed = (p == 10) + (n == 10);
  if (maxed == 2) return 5;
  if (maxed == 1) return 4;
  int strong = (p == 9) + (n == 9);
  if (strong == 2) return 3;
  if (strong == 1) return 2;
  return 1;
}

int strength_level(const SignatureSlot &slot) {
  if (!slot.is_signature()) return 0;
  return strength_level(slot.signature());
}

InferentialClass classify(const Signature &sig) {
  int ps = sig.pos.sign(), ns = sig.neg.sign();
  int pm = sig.pos.magnitude_tenths(), nm = sig.neg.magnitude_tenths();
  if (pm == 10 && nm == 10) {
    if (ps > 0 && ns > 0) return InferentialClass::factive;
    if (ps < 0 && ns < 0) return InferentialClass::counter_factive;
    return InferentialClass::two_way_implicative;
  }
  if (pm == 10) return InferentialClass::one_way_plus_implicative;
  if (nm == 10) return InferentialClass::one_way_minus_implicative;
  if (pm == 9 && nm == 9) return InferentialClass::two_way_quasi_implicative;
  if (pm == 9 || nm == 9) return InferentialClass::one_way_quasi_implicative;
  // 0.6..0.8 are kept undistinguished from the neutral case.
  return InferentialClass::neutral;
}

bool is_factive(const Signature &sig) {
  InferentialClass c = classify(sig);
  return c == InferentialClass::factive || c == InferentialClass::counter_factive;
}

bool is_implicative(const Signature &sig) {
  return !is_factive(sig) &&
         (sig.pos.is_max() || sig.neg.is_max());
}

std::string_view strength_order_name(StrengthOrder o) {
  switch (o) {
    case StrengthOrder::weaker: return "weaker";
    case StrengthOrder::stronger: return "stronger";
    case StrengthOrder::equal: return "equal";
    case StrengthOrder::incomparable: return "incomparable";
  }
  throw Error("invalid strength order");
}

StrengthOrder compare_strength(const Signature &a, const Signature &b) {
  int ap = a.pos.magnitude_tenths(), an = a.neg.magnitude_tenths();
  int bp = b.pos.magnitude_tenths(), bn = b.neg.magnitude_tenths();
  if (ap == bp && an == bn) return StrengthOrder::equal;
  if (ap <= bp && an <= bn) return StrengthOrder::weaker;
  if (ap >= bp && an >= bn) return StrengthOrder::stronger;
  return StrengthOrder::incomparable;
}

StrengthOrder compare_strength(const SignatureSlot &a, const SignatureSlot &b) {
  if (!a.is_signature() || !b.is_signature()) {
    throw Error("cannot compare strength of " + a.str() + " and " + b.str() +
                " (NA/UNGR are not comparable)");
  }
  return compare_strength(a.signature(), b.signature());
}

DegreeMapping::DegreeMapping(const std::array<CertaintyDegree, 5> &by_tenths)
    : by_tenths_(by_tenths) {
  for (std::size_t i = 1; i < by_tenths_.size(); ++i) {
    if (static_cast<int>(by_tenths_[i]) < static_cast<int>(by_tenths_[i - 1]))
      throw Error("degree mapping is not monotone in magnitude");
  }
}

DegreeMapping DegreeMapping::paper() {
  return DegreeMapping({CertaintyDegree::u, CertaintyDegree::u, CertaintyDegree::u,
                        CertaintyDegree::pr, CertaintyDegree::ct});
}

DegreeMapping DegreeMapping::fine() {
  return DegreeMapping({CertaintyDegree::u, CertaintyDegree::u, CertaintyDegree::ps,
                        CertaintyDegree::pr, CertaintyDegree::ct});
}

CertaintyDegree DegreeMapping::of_magnitude(int tenths) const {
  if (tenths == 0) return CertaintyDegree::u;
  if (tenths < 6 || tenths > 10)
    throw Error("inference magnitude off scale: " + std::to_string(tenths));
  return by_tenths_[static_cast<std::size_t>(tenths - 6)];
}

FactualityValue lookup_factuality(const Signature &sig, FactualityValue context,
                                  const DegreeMapping &mapping) {
  if (context.degree() == CertaintyDegree::u) return FactualityValue::uu();

  if (context.polarity() == Polarity::unknown) {
    if (sig.pos.is_neutral() && sig.neg.is_neutral()) return FactualityValue::uu();
    int max_mag = std::max(sig.pos.magnitude_tenths(), sig.neg.magnitude_tenths());
    CertaintyDegree d = degree_min(context.degree(), mapping.of_magnitude(max_mag));
    if (d == CertaintyDegree::u) return FactualityValue::uu();
    return FactualityValue::make(d, Polarity::unknown);
  }

  const InferenceValue &component =
      context.polarity() == Polarity::positive ? sig.pos : sig.neg;
  if (component.is_neutral()) return FactualityValue::uu();

  CertaintyDegree d = degree_min(context.degree(), mapping.of(component));
  if (d == CertaintyDegree::u) return FactualityValue::uu();
  return FactualityValue::make(
      d, component.sign() > 0 ? Polarity::positive : Polarity::negative);
}

std::string GridContext::label() const {
  std::string out(degree_name(degree));
  out += polarity_char(polarity);
  return out;
}

const std::array<GridContext, kGridCells> &grid_contexts() {
  static const std::array<GridContext, kGridCells> cells = [] {
    std::array<GridContext, kGridCells> c;
    std::size_t i = 0;
    for (CertaintyDegree d : {CertaintyDegree::ct, CertaintyDegree::pr,
                              CertaintyDegree::ps, CertaintyDegree::u}) {
      for (Polarity p : {Polarity::positive, Polarity::negative, Polarity::unknown}) {
        c[i++] = GridContext{d, p};
      }
    }
    return c;
  }();
  return cells;
}

std::array<FactualityValue, kGridCells> generate_grid(const Signature &sig,
                                                      const DegreeMapping &mapping) {
  std::array<FactualityValue, kGridCells> row;
  const auto &cells = grid_contexts();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    FactualityValue context =
        cells[i].degree == CertaintyDegree::u
            ? FactualityValue::uu()
            : FactualityValue::make(cells[i].degree, cells[i].polarity);
    row[i] = lookup_factuality(sig, context, mapping);
  }
  return row;
}

}  // namespace factualis
