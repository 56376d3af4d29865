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

#include "factualis/core.hpp"

#include <algorithm>

namespace factualis {

char polarity_char(Polarity p) {
  switch (p) {
    case Polarity::positive: return '+';
    case Polarity::negative: return '-';
    case Polarity::unknown: return 'u';
  }
  throw Error("invalid polarity");
}

Polarity polarity_from_char(char c) {
  switch (c) {
    case '+': return Polarity::positive;
    case '-': return Polarity::negative;
    case 'u': return Polarity::unknown;
    default:
      throw ParseError(std::string("invalid polarity character '") + c + "'", 0);
  }
}

Polarity polarity_flip(Polarity p) {
  switch (p) {
    case Polarity::positive: return Polarity::negative;
    case Polarity::negative: return Polarity::positive;
    case Polarity::unknown: return Polarity::unknown;
  }
  throw Error("invalid polarity");
}

Polarity polarity_product(Polarity a, Polarity b) {
  if (a == Polarity::unknown || b == Polarity::unknown) return Polarity::unknown;
  return a == b ? Polarity::positive : Polarity::negative;
}

std::string_view degree_name(CertaintyDegree d) {
  switch (d) {
    case CertaintyDegree::ct: return "CT";
    case CertaintyDegree::pr: return "PR";
    case CertaintyDegree::ps: return "PS";
    case CertaintyDegree::u: return "U";
  }
  throw Error("invalid certainty degree");
}

CertaintyDegree degree_from_name(std::string_view name) {
  if (name == "CT") return CertaintyDegree::ct;
  if (name == "PR") return CertaintyDegree::pr;
  if (name == "PS") return CertaintyDegree::ps;
  if (name == "U") return CertaintyDegree::u;
  throw ParseError("invalid certainty degree \"" + std::string(name) + "\"", 0);
}

FactualityValue FactualityValue::make(CertaintyDegree degree, Polarity polarity) {
  if (degree == CertaintyDegree::u && polarity != Polarity::unknown) {
    throw Error(std::string("illegal factuality value U") +
                polarity_char(polarity) + " (only Uu is licit)");
  }
  FactualityValue v;
  v.degree_ = degree;
  v.polarity_ = polarity;
  return v;
}

std::string FactualityValue::str() const {
  std::string out(degree_name(degree_));
  out += polarity_char(polarity_);
  return out;
}

FactualityValue FactualityValue::parse(std::string_view text) {
  if (text.size() < 2)
    throw ParseError("factuality value too short: \"" + std::string(text) + "\"", 0);
  std::string_view deg = text.substr(0, text.size() - 1);
  char pol = text.back();
  CertaintyDegree d = degree_from_name(deg);
  Polarity p = polarity_from_char(pol);
  if (d == CertaintyDegree::u && p != Polarity::unknown)
    throw ParseError("illegal factuality value \"" + std::string(text) + "\"", 0);
  return make(d, p);
}

const std::array<FactualityValue, 10> &FactualityValue::all() {
  static const std::array<FactualityValue, 10> values = [] {
    std::array<FactualityValue, 10> v;
    std::size_t i = 0;
    for (CertaintyDegree d : {CertaintyDegree::ct, CertaintyDegree::pr, CertaintyDegree::ps}) {
      for (Polarity p : {Polarity::positive, Polarity::negative, Polarity::unknown}) {
        v[i++] = make(d, p);
      }
    }
    v[i++] = uu();
    return v;
  }();
  return values;
}

InferenceValue InferenceValue::from_tenths(int tenths) {
  int mag = tenths < 0 ? -tenths : tenths;
  if (mag < 6 || mag > 10) {
    throw Error("inference magnitude off scale: " + std::to_string(tenths) +
                " tenths (scale is n, ±0.6..±0.9, ±1)");
  }
  return InferenceValue(tenths);
}

std::string InferenceValue::str() const {
  if (tenths_ == 0) return "n";
  std::string out;
  if (tenths_ < 0) out += '-';
  int mag = magnitude_tenths();
  if (mag == 10) {
    out += '1';
  } else {
    out += "0.";
    out += static_cast<char>('0' + mag);
  }
  return out;
}

const std::array<InferenceValue, 11> &InferenceValue::all() {
  static const std::array<InferenceValue, 11> values = [] {
    std::array<InferenceValue, 11> v;
    std::size_t i = 0;
    v[i++] = neutral();
    for (int mag = 6; mag <= 10; ++mag) {
      v[i++] = from_tenths(mag);
      v[i++] = from_tenths(-mag);
    }
    return v;
  }();
  return values;
}

std::string Signature::str() const { return pos.str() + "|" + neg.str(); }

const Signature &SignatureSlot::signature() const {
  if (kind_ != Kind::signature)
    throw Error("slot " + str() + " carries no signature");
  return sig_;
}

std::string SignatureSlot::str() const {
  switch (kind_) {
    case Kind::signature: return sig_.str();
    case Kind::na: return "NA";
    case Kind::ungr: return "UNGR";
  }
  throw Error("invalid slot kind");
}

namespace {

std::string_view trim(std::string_view s, std::size_t *lead = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

// One signature component at byte offset `at` in the original text.
InferenceValue parse_component(std::string_view tok, std::size_t at) {
  if (tok.empty()) throw ParseError("empty inference value", at);
  if (tok == "n") return InferenceValue::neutral();

  std::string_view body = tok;
  int sign = 1;
  if (body.front() == '-') {
    sign = -1;
    body.remove_prefix(1);
  }
  if (body == "1") return InferenceValue::from_tenths(sign * 10);
  // "0.d" or ".d" with d in 6..9
  std::string_view frac = body;
  if (frac.size() > 1 && frac.front() == '0') frac.remove_prefix(1);
  if (frac.size() == 2 && frac[0] == '.' && frac[1] >= '6' && frac[1] <= '9') {
    return InferenceValue::from_tenths(sign * (frac[1] - '0'));
  }

  bool numeric = !body.empty();
  bool dot = false;
  for (char c : body) {
    if (c == '.' && !dot) dot = true;
    else if (c < '0' || c > '9') { numeric = false; break; }
  }
  throw ParseError(std::string(numeric ? "inference magnitude off scale"
                                       : "malformed inference value") +
                       ": \"" + std::string(tok) + "\"",
                   at);
}

}  // namespace

SignatureSlot parse_signature(std::string_view text) {
  std::size_t lead = 0;
  std::string_view body = trim(text, &lead);
  if (body.empty()) throw ParseError("empty signature", 0);
  if (body == "NA") return SignatureSlot::na();
  if (body == "UNGR") return SignatureSlot::ungr();

  std::size_t bar = body.find('|');
  if (bar == std::string_view::npos)
    throw ParseError("expected '|' in signature \"" + std::string(body) + "\"", lead);
  if (body.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("more than one '|' in signature \"" + std::string(body) + "\"",
                     lead + body.find('|', bar + 1));

  std::size_t pos_lead = 0, neg_lead = 0;
  std::string_view pos_tok = trim(body.substr(0, bar), &pos_lead);
  std::string_view neg_tok = trim(body.substr(bar + 1), &neg_lead);
  InferenceValue pos = parse_component(pos_tok, lead + pos_lead);
  InferenceValue neg = parse_component(neg_tok, lead + bar + 1 + neg_lead);
  return SignatureSlot(Signature{pos, neg});
}

std::string format_signature(const SignatureSlot &slot) { return slot.str(); }

std::string_view context_name(ContextKey key) {
  switch (key) {
    case ContextKey::pfv_anim: return "PFV+anim";
    case ContextKey::pfv_inanim: return "PFV-anim";
    case ContextKey::imp: return "IMP";
  }
  throw Error("invalid context key");
}

std::string_view class_name(InferentialClass c) {
  switch (c) {
    case InferentialClass::factive: return "factive";
    case InferentialClass::counter_factive: return "counter-factive";
    case InferentialClass::two_way_implicative: return "2-way implicative";
    case InferentialClass::one_way_plus_implicative: return "1-way +implicative";
    case InferentialClass::one_way_minus_implicative: return "1-way -implicative";
    case InferentialClass::two_way_quasi_implicative: return "2-way quasi implicative";
    case InferentialClass::one_way_quasi_implicative: return "1-way quasi implicative";
    case InferentialClass::neutral: return "neutral";
  }
  throw Error("invalid inferential class");
}

}  // namespace factualis
