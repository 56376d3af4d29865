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

#include "factualis/projection.hpp"

#include <sstream>

namespace factualis {

namespace {

bool is_ident_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c >= 0x80;
}

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r'))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string_view ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && is_ident_byte(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected identifier", start);
    return text.substr(start, pos - start);
  }

  bool ident_ahead() {
    skip_ws();
    return pos < text.size() && is_ident_byte(static_cast<unsigned char>(text[pos]));
  }
};

struct Parser {
  Lexer lex;

  ClauseNode parse_expr() {
    lex.skip_ws();
    std::size_t start = lex.pos;
    std::string_view head = lex.ident();

    bool negated = false;
    if (head == "neg" && lex.ident_ahead()) {
      negated = true;
      head = lex.ident();
    }

    if (!negated && (head == "E" || head == "NP") && lex.peek() == '(') {
      lex.expect('(');
      EventNode event;
      event.label = std::string(lex.ident());
      event.kind = head == "E" ? EventKind::clause : EventKind::event_np;
      lex.expect(')');
      return ClauseNode{std::move(event)};
    }

    if (lex.peek() != ':') {
      throw ParseError("expected ':' after lemma \"" + std::string(head) + "\"",
                       lex.pos);
    }
    lex.expect(':');

    EspNode esp;
    esp.negated = negated;
    esp.lemma = std::string(head);
    esp.reading_id = std::string(lex.ident());
    lex.expect('[');
    parse_attrs(esp, start);
    lex.expect(']');
    lex.expect('(');
    esp.child = std::make_unique<ClauseNode>(parse_expr());
    lex.expect(')');
    return ClauseNode{std::move(esp)};
  }

  void parse_attrs(EspNode &esp, std::size_t node_start) {
    bool have_aspect = false, have_anim = false, have_mod = false;
    do {
      lex.skip_ws();
      std::size_t at = lex.pos;
      std::string_view attr = lex.ident();
      if (attr == "pfv" || attr == "imp") {
        if (have_aspect) throw ParseError("duplicate aspect attribute", at);
        have_aspect = true;
        esp.aspect = attr == "pfv" ? Aspect::pfv : Aspect::imp;
      } else if (attr == "anim" || attr == "inanim") {
        if (have_anim) throw ParseError("duplicate animacy attribute", at);
        have_anim = true;
        esp.animacy = attr == "anim" ? Animacy::anim : Animacy::inanim;
      } else if (attr == "mod") {
        lex.expect('=');
        lex.skip_ws();
        std::size_t mode_at = lex.pos;
        std::string_view mode = lex.ident();
        if (have_mod) throw ParseError("duplicate modality attribute", at);
        have_mod = true;
        if (mode == "ct") esp.modality = CertaintyDegree::ct;
        else if (mode == "pr") esp.modality = CertaintyDegree::pr;
        else if (mode == "ps") esp.modality = CertaintyDegree::ps;
        else throw ParseError("unknown modality \"" + std::string(mode) + "\"", mode_at);
      } else {
        throw ParseError("unknown attribute \"" + std::string(attr) + "\"", at);
      }
    } while (lex.accept(','));
    if (!have_aspect) {
      throw ParseError("missing aspect attribute (pfv or imp)", node_start);
    }
  }
};

}  // namespace

ClauseNode parse_clause(std::string_view text) {
  Parser parser{Lexer{text}};
  ClauseNode root = parser.parse_expr();
  if (!parser.lex.at_end()) {
    throw ParseError("trailing input after expression", parser.lex.pos);
  }
  return root;
}

FactualityValue contextual_factuality(const EspNode &node) {
  return FactualityValue::make(
      node.modality, node.negated ? Polarity::negative : Polarity::positive);
}

FactualityValue combine_context(FactualityValue outer, bool negated,
                                CertaintyDegree modality) {
  Polarity local = negated ? Polarity::negative : Polarity::positive;
  Polarity pol = polarity_product(outer.polarity(), local);
  CertaintyDegree deg = degree_min(outer.degree(), modality);
  if (deg == CertaintyDegree::u) return FactualityValue::uu();
  return FactualityValue::make(deg, pol);
}

SourceChain SourceChain::extended(const std::string &label) const {
  SourceChain out = *this;
  out.labels.push_back(label);
  return out;
}

std::string SourceChain::str() const {
  std::string out;
  for (const std::string &label : labels) {
    if (!out.empty()) out += '>';
    out += label;
  }
  return out;
}

namespace {

// Context value per active source chain, in chain creation order.
struct Chain {
  SourceChain chain;
  FactualityValue context;
};

// Cogniser signature for the node's (aspect, animacy), or nullopt when the
// reading has no usable cogniser slot for it.
std::optional<Signature> cogniser_signature(const Reading &r, Aspect aspect,
                                            Animacy animacy,
                                            PfvUnknownPolicy policy) {
  if (!r.cogniser_slots) return std::nullopt;
  Reading shadow = r;
  shadow.slots = *r.cogniser_slots;
  try {
    return select_slot(shadow, aspect, animacy, policy);
  } catch (const SlotError &) {
    return std::nullopt;
  }
}

void walk(const Lexicon &lex, const ClauseNode &node, std::vector<Chain> chains,
          const ProjectOptions &options, std::vector<FactualityProfile> &out) {
  if (node.is_event()) {
    FactualityProfile profile;
    profile.event_label = node.event().label;
    for (const Chain &c : chains) profile.assignments.emplace_back(c.chain, c.context);
    out.push_back(std::move(profile));
    return;
  }

  const EspNode &esp = node.esp();
  std::string label = esp.lemma + ":" + esp.reading_id;

  const Reading *reading = lex.resolve(esp.lemma, esp.reading_id);
  if (reading == nullptr) {
    throw ProjectionError(label, "reading not found in lexicon");
  }

  Signature sig;
  try {
    sig = select_slot(*reading, esp.aspect, esp.animacy, options.pfv_unknown);
  } catch (const SlotError &e) {
    throw ProjectionError(label, e.what());
  }

  // The ESP occurrence is itself an event; it carries the combined context.
  FactualityProfile profile;
  profile.event_label = label;
  std::vector<Chain> next;
  next.reserve(chains.size() * (reading->sip ? 2 : 1));
  for (const Chain &c : chains) {
    FactualityValue combined = combine_context(c.context, esp.negated, esp.modality);
    profile.assignments.emplace_back(c.chain, combined);
    next.push_back({c.chain, lookup_factuality(sig, combined, options.mapping)});
  }
  if (reading->sip) {
    auto cog = cogniser_signature(*reading, esp.aspect, esp.animacy, options.pfv_unknown);
    for (const Chain &c : chains) {
      FactualityValue combined = combine_context(c.context, esp.negated, esp.modality);
      FactualityValue value = cog ? lookup_factuality(*cog, combined, options.mapping)
                                  : FactualityValue::uu();
      next.push_back({c.chain.extended("subject"), value});
    }
  }
  out.push_back(std::move(profile));
  walk(lex, *esp.child, std::move(next), options, out);
}

}  // namespace

std::vector<FactualityProfile> project(const Lexicon &lex, const ClauseNode &tree,
                                       const ProjectOptions &options) {
  std::vector<FactualityProfile> out;
  walk(lex, tree, {Chain{SourceChain::anchor(), FactualityValue::ct_plus()}},
       options, out);
  return out;
}

std::string render_profiles(const std::vector<FactualityProfile> &profiles) {
  std::ostringstream out;
  for (const FactualityProfile &p : profiles) {
    for (const auto &[chain, value] : p.assignments) {
      out << p.event_label << '\t' << chain.str() << '\t' << value.str() << '\n';
    }
  }
  return out.str();
}

std::string project_text(const Lexicon &lex, std::string_view text,
                         const ProjectOptions &options) {
  return render_profiles(project(lex, parse_clause(text), options));
}

}  // namespace factualis
