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
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace factualis {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Raised by the textual front-ends; position() is the byte offset of the
// offending token in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string &msg, std::size_t position)
      : Error(msg), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class Polarity { positive, negative, unknown };

char polarity_char(Polarity p);
Polarity polarity_from_char(char c);  // throws ParseError
Polarity polarity_flip(Polarity p);
Polarity polarity_product(Polarity a, Polarity b);

// Ordered by strength: CT > PR > PS > U.
enum class CertaintyDegree { u = 0, ps = 1, pr = 2, ct = 3 };

std::string_view degree_name(CertaintyDegree d);
CertaintyDegree degree_from_name(std::string_view name);  // throws ParseError

inline CertaintyDegree degree_min(CertaintyDegree a, CertaintyDegree b) {
  return static_cast<int>(a) < static_cast<int>(b) ? a : b;
}

// A FactBank value: certainty degree x polarity. The only licit U-value is
// Uu, so the space has exactly 10 inhabitants.
class FactualityValue {
 public:
  FactualityValue() = default;  // Uu

  static FactualityValue make(CertaintyDegree degree, Polarity polarity);
  static FactualityValue uu() { return FactualityValue(); }
  static FactualityValue ct_plus() {
    return make(CertaintyDegree::ct, Polarity::positive);
  }

  CertaintyDegree degree() const { return degree_; }
  Polarity polarity() const { return polarity_; }

  std::string str() const;                              // "CT+", "Uu", ...
  static FactualityValue parse(std::string_view text);  // throws ParseError
  static const std::array<FactualityValue, 10> &all();

  bool operator==(const FactualityValue &) const = default;

 private:
  CertaintyDegree degree_ = CertaintyDegree::u;
  Polarity polarity_ = Polarity::unknown;
};

// One component of a signature: either neutral ("n", no inference) or a
// signed magnitude on the annotation scale {±0.6, ±0.7, ±0.8, ±0.9, ±1}.
// Stored in tenths; neutral is a distinct tag whose magnitude compares as 0.
class InferenceValue {
 public:
  InferenceValue() = default;  // neutral

  static InferenceValue neutral() { return InferenceValue(); }
  static InferenceValue from_tenths(int tenths);  // throws Error off scale

  bool is_neutral() const { return tenths_ == 0; }
  int magnitude_tenths() const { return tenths_ < 0 ? -tenths_ : tenths_; }
  int sign() const { return tenths_ == 0 ? 0 : (tenths_ < 0 ? -1 : 1); }
  bool is_max() const { return magnitude_tenths() == 10; }

  std::string str() const;  // "n", "1", "-0.7", ...
  static const std::array<InferenceValue, 11> &all();

  bool operator==(const InferenceValue &) const = default;

 private:
  explicit InferenceValue(int tenths) : tenths_(tenths) {}
  int tenths_ = 0;
};

// Inference triggered under positive / negative polarity of the embedding
// predicate, written "<pos>|<neg>".
struct Signature {
  InferenceValue pos;
  InferenceValue neg;

  std::string str() const;
  Signature swapped() const { return Signature{neg, pos}; }

  bool operator==(const Signature &) const = default;
};

// A signature, or one of the annotation markers: NA (test not applicable to
// the reading) / UNGR (test sentence ungrammatical). Both are distinct from
// the annotated-but-neutral signature "n|n".
class SignatureSlot {
 public:
  enum class Kind { signature, na, ungr };

  SignatureSlot() : kind_(Kind::na) {}
  SignatureSlot(Signature sig) : kind_(Kind::signature), sig_(sig) {}

  static SignatureSlot na() { return SignatureSlot(); }
  static SignatureSlot ungr() {
    SignatureSlot s;
    s.kind_ = Kind::ungr;
    return s;
  }

  Kind kind() const { return kind_; }
  bool is_signature() const { return kind_ == Kind::signature; }
  const Signature &signature() const;  // throws Error on NA/UNGR

  std::string str() const;

  bool operator==(const SignatureSlot &) const = default;

 private:
  Kind kind_;
  Signature sig_{};
};

// Accepts "NA", "UNGR" and "<v>|<v>" with v in {n, ±1, ±0.9 .. ±0.6};
// decimals may be written "0.9" or ".9". Throws ParseError naming the
// offending token and its byte position.
SignatureSlot parse_signature(std::string_view text);

// Canonical form; parse_signature(format_signature(s)) == s.
std::string format_signature(const SignatureSlot &slot);

// The three annotation contexts. IMP carries no animacy distinction.
enum class ContextKey { pfv_anim = 0, pfv_inanim = 1, imp = 2 };

inline constexpr std::array<ContextKey, 3> kContextKeys = {
    ContextKey::pfv_anim, ContextKey::pfv_inanim, ContextKey::imp};

std::string_view context_name(ContextKey key);  // "PFV+anim", "PFV-anim", "IMP"

inline std::size_t context_index(ContextKey key) {
  return static_cast<std::size_t>(key);
}

enum class InferentialClass {
  factive,
  counter_factive,
  two_way_implicative,
  one_way_plus_implicative,
  one_way_minus_implicative,
  two_way_quasi_implicative,
  one_way_quasi_implicative,
  neutral,
};

std::string_view class_name(InferentialClass c);

}  // namespace factualis
