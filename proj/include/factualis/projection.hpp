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

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "factualis/lexicon.hpp"

namespace factualis {

// A node in a clause-embedding expression. Grammar:
//
//   expr   := esp | event
//   esp    := ["neg" WS] LEMMA ":" READING "[" attrs "]" "(" expr ")"
//   attrs  := aspect ["," anim] ["," "mod=" mode]
//   aspect := "pfv" | "imp"      anim := "anim" | "inanim"
//   mode   := "ct" | "pr" | "ps"
//   event  := "E" "(" LABEL ")" | "NP" "(" LABEL ")"
//
// Whitespace is insignificant between tokens. Identifiers are UTF-8
// letters, digits, "_" and "-".
struct ClauseNode;

struct EventNode {
  std::string label;
  EventKind kind = EventKind::clause;
};

struct EspNode {
  std::string lemma;
  std::string reading_id;
  bool negated = false;
  CertaintyDegree modality = CertaintyDegree::ct;  // CT, PR or PS
  Aspect aspect = Aspect::pfv;
  Animacy animacy = Animacy::unknown;
  std::unique_ptr<ClauseNode> child;
};

struct ClauseNode {
  std::variant<EventNode, EspNode> node;

  bool is_event() const { return std::holds_alternative<EventNode>(node); }
  const EventNode &event() const { return std::get<EventNode>(node); }
  const EspNode &esp() const { return std::get<EspNode>(node); }
};

// Throws ParseError with the byte position of the offending token.
ClauseNode parse_clause(std::string_view text);

// Local contextual factuality of an ESP occurrence: degree = its modality
// marker, polarity = negative iff negated. An unmarked node yields CT+.
FactualityValue contextual_factuality(const EspNode &node);

// An outer context combined with one node's local markers: polarities
// multiply, degrees take the min.
FactualityValue combine_context(FactualityValue outer, bool negated,
                                CertaintyDegree modality);

// Factuality sources, anchored at the text author and extended by one
// cogniser per source-introducing predicate traversed.
struct SourceChain {
  std::vector<std::string> labels;

  static SourceChain anchor() { return SourceChain{{"author"}}; }
  SourceChain extended(const std::string &label) const;
  std::string str() const;  // "author>subject"

  bool operator==(const SourceChain &) const = default;
};

struct FactualityProfile {
  std::string event_label;
  std::vector<std::pair<SourceChain, FactualityValue>> assignments;
};

struct ProjectOptions {
  DegreeMapping mapping = DegreeMapping::paper();
  PfvUnknownPolicy pfv_unknown = PfvUnknownPolicy::weaker;
};

class ProjectionError : public Error {
 public:
  ProjectionError(const std::string &node, const std::string &msg)
      : Error(node + ": " + msg), node_(node) {}
  const std::string &node() const { return node_; }

 private:
  std::string node_;
};

// Factuality profiles for every node of the tree (embedding predicates are
// events too), outermost first, leaf last. The anchor-relative context is
// initialized to CT+; each ESP combines the context with its local markers,
// assigns that value to its own event, and passes the signature lookup down
// to its child. SIP nodes additionally fork a cogniser chain per active
// source chain.
std::vector<FactualityProfile> project(const Lexicon &lex, const ClauseNode &tree,
                                       const ProjectOptions &options = {});

// parse_clause + project, rendered one tab-separated line per
// (event, source chain, value).
std::string project_text(const Lexicon &lex, std::string_view text,
                         const ProjectOptions &options = {});

std::string render_profiles(const std::vector<FactualityProfile> &profiles);

}  // namespace factualis
