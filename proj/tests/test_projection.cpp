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

#include <doctest.h>

#include "factualis/projection.hpp"
#include "support/oracle.hpp"
#include "support/toy.hpp"

using namespace factualis;
using testsupport::make_toy_lexicon;
using testsupport::sig;

namespace {

Lexicon seed() {
  LoadResult result = load_tsv_file(FACTUALIS_DATA_DIR "/seed_lexicon.tsv");
  REQUIRE(result.errors.empty());
  return std::move(result.lexicon);
}

// Final value(s) assigned to the leaf event, rendered "chain value".
std::vector<std::string> leaf_assignments(const Lexicon &lex, std::string_view text) {
  auto profiles = project(lex, parse_clause(text));
  REQUIRE(!profiles.empty());
  std::vector<std::string> out;
  for (const auto &[chain, value] : profiles.back().assignments) {
    out.push_back(chain.str() + " " + value.str());
  }
  return out;
}

}  // namespace

TEST_CASE("parse_clause builds the node tree") {
  ClauseNode tree = parse_clause("neg échouer:07[pfv,anim]( E(persuader) )");
  REQUIRE_FALSE(tree.is_event());
  const EspNode &esp = tree.esp();
  CHECK(esp.lemma == "échouer");
  CHECK(esp.reading_id == "07");
  CHECK(esp.negated);
  CHECK(esp.aspect == Aspect::pfv);
  CHECK(esp.animacy == Animacy::anim);
  CHECK(esp.modality == CertaintyDegree::ct);
  REQUIRE(esp.child->is_event());
  CHECK(esp.child->event().label == "persuader");
  CHECK(esp.child->event().kind == EventKind::clause);
}

TEST_CASE("parse_clause defaults and attribute forms") {
  ClauseNode imp = parse_clause("réussir:05[imp](E(s_enfuir))");
  CHECK(imp.esp().aspect == Aspect::imp);
  CHECK(imp.esp().animacy == Animacy::unknown);
  CHECK_FALSE(imp.esp().negated);

  ClauseNode mod = parse_clause("réussir:05[pfv,anim,mod=pr](E(gagner))");
  CHECK(mod.esp().modality == CertaintyDegree::pr);

  ClauseNode mod_only = parse_clause("réussir:05[pfv,mod=ps](E(gagner))");
  CHECK(mod_only.esp().modality == CertaintyDegree::ps);
  CHECK(mod_only.esp().animacy == Animacy::unknown);

  ClauseNode np = parse_clause("garantir:05[pfv,inanim](NP(survie))");
  CHECK(np.esp().child->event().kind == EventKind::event_np);

  // "neg" is a keyword only in the marker position
  ClauseNode negish = parse_clause("negocier:01[pfv](E(p))");
  CHECK(negish.esp().lemma == "negocier");
  CHECK_FALSE(negish.esp().negated);

  ClauseNode bare = parse_clause("E(p)");
  CHECK(bare.is_event());
  ClauseNode bare_np = parse_clause("NP(survie)");
  CHECK(bare_np.is_event());
  CHECK(bare_np.event().kind == EventKind::event_np);

  // double negation at one node is not derivable
  CHECK_THROWS_AS(parse_clause("neg neg échouer:07[pfv,anim](E(p))"), ParseError);
}

TEST_CASE("parse_clause reports errors with positions") {
  CHECK_THROWS_AS(parse_clause(""), ParseError);
  CHECK_THROWS_AS(parse_clause("x:01[pfv](E(p)"), ParseError);     // missing ')'
  CHECK_THROWS_AS(parse_clause("x:01[pfv](E(p)))"), ParseError);   // trailing input
  CHECK_THROWS_AS(parse_clause("x[pfv](E(p))"), ParseError);       // missing reading
  CHECK_THROWS_AS(parse_clause("x:01[anim](E(p))"), ParseError);   // missing aspect
  CHECK_THROWS_AS(parse_clause("x:01[](E(p))"), ParseError);

  try {
    parse_clause("x:01[pfv,imp](E(p))");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("duplicate aspect") != std::string::npos);
    CHECK(e.position() == 9);
  }
  try {
    parse_clause("x:01[pfv,anim,anim](E(p))");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("duplicate animacy") != std::string::npos);
  }
  try {
    parse_clause("x:01[pfv,mod=xx](E(p))");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("unknown modality") != std::string::npos);
  }
  try {
    parse_clause("x:01[pfv,weird](E(p))");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("unknown attribute") != std::string::npos);
  }
}

TEST_CASE("contextual factuality of a node") {
  EspNode node;
  CHECK(contextual_factuality(node).str() == "CT+");
  node.negated = true;
  CHECK(contextual_factuality(node).str() == "CT-");
  node.negated = false;
  node.modality = CertaintyDegree::ps;
  CHECK(contextual_factuality(node).str() == "PS+");
}

TEST_CASE("combine_context multiplies polarity and mins degree") {
  auto ctx = [](const char *s) { return FactualityValue::parse(s); };
  CHECK(combine_context(ctx("CT+"), true, CertaintyDegree::ct).str() == "CT-");
  CHECK(combine_context(ctx("CT-"), true, CertaintyDegree::ct).str() == "CT+");
  CHECK(combine_context(ctx("CT-"), false, CertaintyDegree::pr).str() == "PR-");
  CHECK(combine_context(ctx("PS+"), false, CertaintyDegree::ct).str() == "PS+");
  CHECK(combine_context(ctx("CTu"), true, CertaintyDegree::ct).str() == "CTu");
  CHECK(combine_context(ctx("Uu"), true, CertaintyDegree::ct).str() == "Uu");
}

TEST_CASE("projection through the seed entries") {
  Lexicon lex = seed();
  CHECK(leaf_assignments(lex, "échouer:07[pfv,anim](E(p))") ==
        std::vector<std::string>{"author CT-"});
  CHECK(leaf_assignments(lex, "neg échouer:07[pfv,anim](E(p))") ==
        std::vector<std::string>{"author CT+"});
  CHECK(leaf_assignments(lex, "échouer:07[imp,anim](E(p))") ==
        std::vector<std::string>{"author Uu"});
  CHECK(leaf_assignments(lex, "obliger:02[pfv,anim](E(partir))") ==
        std::vector<std::string>{"author PR+"});
  CHECK(leaf_assignments(lex, "E(p)") == std::vector<std::string>{"author CT+"});
}

TEST_CASE("an SIP tells the anchor nothing and forks a cogniser chain") {
  Lexicon lex = seed();
  auto leafs = leaf_assignments(lex, "garantir:06[pfv,anim](E(succès))");
  REQUIRE(leafs.size() == 2);
  CHECK(leafs[0] == "author Uu");
  // seed SIP entries carry no cogniser signatures, so the forked chain is Uu
  CHECK(leafs[1] == "author>subject Uu");
}

TEST_CASE("project_text renders one line per event and source") {
  Lexicon lex = seed();
  CHECK(project_text(lex, "neg refuser:09[pfv,anim](E(ouvrir))") ==
        "refuser:09\tauthor\tCT-\n"
        "ouvrir\tauthor\tUu\n");
  CHECK(project_text(lex, "refuser:08[pfv,inanim](E(s_ouvrir))") ==
        "refuser:08\tauthor\tCT+\n"
        "s_ouvrir\tauthor\tCT-\n");
  CHECK(project_text(lex, "refuser:08[imp,inanim](E(s_ouvrir))") ==
        "refuser:08\tauthor\tCT+\n"
        "s_ouvrir\tauthor\tUu\n");
}

TEST_CASE("event-denoting NPs project like clauses") {
  Lexicon lex = seed();
  auto np = leaf_assignments(lex, "garantir:05[pfv,inanim](NP(survie))");
  auto clause = leaf_assignments(lex, "garantir:05[pfv,inanim](E(survie))");
  CHECK(np == clause);
  CHECK(np == std::vector<std::string>{"author CT+"});
}

TEST_CASE("projection errors name the offending node") {
  Lexicon lex = seed();
  try {
    project(lex, parse_clause("inconnu:01[pfv](E(p))"));
    FAIL("expected ProjectionError");
  } catch (const ProjectionError &e) {
    CHECK(e.node() == "inconnu:01");
    CHECK(std::string(e.what()).find("not found") != std::string::npos);
  }
  try {
    project(lex, parse_clause("échouer:07[pfv,inanim](E(p))"));
    FAIL("expected ProjectionError");
  } catch (const ProjectionError &e) {
    CHECK(e.node() == "échouer:07");
    CHECK(std::string(e.what()).find("NA") != std::string::npos);
  }
  try {
    project(lex, parse_clause("échouer:07[pfv,anim](motiver:03[pfv,inanim](E(p)))"));
    FAIL("expected ProjectionError");
  } catch (const ProjectionError &e) {
    CHECK(e.node() == "motiver:03");
  }
}

TEST_CASE("modality markers weaken the context") {
  Lexicon lex = seed();
  CHECK(leaf_assignments(lex, "échouer:07[pfv,anim,mod=pr](E(p))") ==
        std::vector<std::string>{"author PR-"});
  CHECK(leaf_assignments(lex, "échouer:07[pfv,anim,mod=ps](E(p))") ==
        std::vector<std::string>{"author PS-"});
  // nesting cannot regain certainty
  CHECK(leaf_assignments(lex, "savoir:01[pfv,anim,mod=ps](savoir:01[pfv,anim](E(p)))") ==
        std::vector<std::string>{"author PS+"});
}

TEST_CASE("stacked negated two-way implicatives cancel out") {
  Lexicon lex = make_toy_lexicon();
  // alpha IMP is 1|-1, gamma IMP is -1|1: the only two-way signatures
  for (const char *expr : {"alpha:01[imp]", "gamma:01[imp]"}) {
    std::string plain = std::string(expr) + "(" + expr + "(E(p)))";
    std::string negated = std::string("neg ") + expr + "(neg " + expr + "(E(p)))";
    auto a = project(lex, parse_clause(plain));
    auto b = project(lex, parse_clause(negated));
    CHECK(a.back().assignments == b.back().assignments);
  }
}

TEST_CASE("cogniser chains carry the cogniser signature lookup") {
  Lexicon lex = make_toy_lexicon();
  // delta is an SIP: anchor n|n, cogniser PFV+anim 1|n
  auto leafs = project(lex, parse_clause("delta:01[pfv,anim](E(p))")).back();
  REQUIRE(leafs.assignments.size() == 2);
  CHECK(leafs.assignments[0].first.str() == "author");
  CHECK(leafs.assignments[0].second.str() == "Uu");
  CHECK(leafs.assignments[1].first.str() == "author>subject");
  CHECK(leafs.assignments[1].second.str() == "CT+");

  // negated: the cogniser signature's negative component is n
  auto neg = project(lex, parse_clause("neg delta:01[pfv,anim](E(p))")).back();
  CHECK(neg.assignments[1].second.str() == "Uu");
}

TEST_CASE("nested SIPs double the active chains") {
  Lexicon lex = make_toy_lexicon();
  auto profiles = project(lex, parse_clause("delta:01[pfv,anim](delta:01[pfv,anim](E(p)))"));
  REQUIRE(profiles.size() == 3);
  CHECK(profiles[0].assignments.size() == 1);
  CHECK(profiles[1].assignments.size() == 2);
  const auto &leaf = profiles[2].assignments;
  REQUIRE(leaf.size() == 4);
  CHECK(leaf[0].first.str() == "author");
  CHECK(leaf[1].first.str() == "author>subject");
  CHECK(leaf[2].first.str() == "author>subject");       // fork of the anchor chain
  CHECK(leaf[3].first.str() == "author>subject>subject");
  // the anchor learned nothing at the outer SIP, so everything below is Uu
  CHECK(leaf[0].second.str() == "Uu");
  CHECK(leaf[2].second.str() == "Uu");
  // the outer cogniser sees CT+, and so does its own embedded cogniser
  CHECK(leaf[1].second.str() == "Uu");  // anchor signature n|n under CT+
  CHECK(leaf[3].second.str() == "CT+");
}

TEST_CASE("projection agrees with the chain-of-grids oracle on small trees") {
  using testsupport::oracle::NodeSpec;
  Lexicon lex = make_toy_lexicon();
  DegreeMapping mapping = DegreeMapping::paper();

  std::vector<NodeSpec> configs;
  for (const char *lemma : {"alpha", "beta", "gamma", "delta", "epsilon"}) {
    for (bool negated : {false, true}) {
      NodeSpec spec;
      spec.lemma = lemma;
      spec.reading_id = "01";
      spec.negated = negated;
      spec.aspect = Aspect::pfv;
      spec.animacy = Animacy::anim;
      configs.push_back(spec);
    }
  }

  int checked = 0;
  for (const NodeSpec &outer : configs) {
    for (const NodeSpec &inner : configs) {
      std::string text;
      for (const NodeSpec *spec : {&outer, &inner}) {
        if (spec->negated) text += "neg ";
        text += spec->lemma + ":" + spec->reading_id + "[pfv,anim](";
      }
      text += "E(p)))";
      auto profiles = project(lex, parse_clause(text));
      auto expected = testsupport::oracle::evaluate_chain(lex, {outer, inner}, mapping);
      CHECK(testsupport::oracle::matches(expected, profiles));
      ++checked;
    }
  }
  CHECK(checked == 100);
}
