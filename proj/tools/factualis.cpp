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

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "factualis/algebra.hpp"
#include "factualis/convert.hpp"
#include "factualis/core.hpp"
#include "factualis/lexicon.hpp"
#include "factualis/projection.hpp"
#include "factualis/stats.hpp"

namespace {

using namespace factualis;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // domain-level negative result
constexpr int kExitError = 2;     // usage / parse / IO error

struct Config {
  std::string lexicon_path;
  std::string mapping_mode = "paper";
  std::string pfv_unknown = "weaker";
  std::string classing = "anim";
  bool tsv = false;
  bool decimal_comma = false;

  DegreeMapping mapping() const {
    return mapping_mode == "fine" ? DegreeMapping::fine() : DegreeMapping::paper();
  }
  PfvUnknownPolicy pfv_policy() const {
    return pfv_unknown == "error" ? PfvUnknownPolicy::error : PfvUnknownPolicy::weaker;
  }
  ClassingSlot classing_slot() const {
    return classing == "inanim" ? ClassingSlot::inanim_first : ClassingSlot::anim_first;
  }
  stats::Render render() const {
    return stats::Render{tsv, decimal_comma ? ',' : '.'};
  }
  std::string resolved_lexicon() const {
    if (!lexicon_path.empty()) return lexicon_path;
    if (const char *env = std::getenv("FACTUALIS_LEXICON")) return env;
    return "data/seed_lexicon.tsv";
  }
};

// Loads the lexicon or exits 2. Row errors are fatal for every command
// except `validate`, which reports them itself.
Lexicon load_or_exit(const Config &config) {
  std::string path = config.resolved_lexicon();
  try {
    LoadResult result = load_tsv_file(path);
    if (!result.errors.empty()) {
      for (const LineError &e : result.errors) {
        std::cerr << path << ":" << e.line << ": " << e.message << "\n";
      }
      std::exit(kExitError);
    }
    return std::move(result.lexicon);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(kExitError);
  }
}

int cmd_lookup(const Config &config, const std::string &lemma,
               const std::string &reading_id) {
  Lexicon lex = load_or_exit(config);
  std::vector<const Reading *> matches;
  for (const Reading *r : lex.find(lemma)) {
    if (!reading_id.empty() && r->reading_id != reading_id) continue;
    matches.push_back(r);
  }
  if (matches.empty()) {
    std::cout << "no entries for " << lemma;
    if (!reading_id.empty()) std::cout << " " << reading_id;
    std::cout << "\n";
    return kExitNegative;
  }
  for (const Reading *r : matches) {
    std::cout << r->lemma << " " << r->reading_id << " ("
              << source_name(r->source) << ")";
    if (!r->gloss.empty()) std::cout << " \"" << r->gloss << "\"";
    std::cout << "\n";
    std::cout << "  sip: " << (r->sip ? "yes" : "no") << "  subcat:";
    if (r->subcat.empty()) std::cout << " -";
    for (SubcatFrame f : r->subcat) std::cout << " " << subcat_name(f);
    std::cout << "  events:";
    for (EventKind k : r->event_kinds) std::cout << " " << event_kind_name(k);
    std::cout << "\n";
    for (ContextKey key : kContextKeys) {
      const SignatureSlot &slot = r->slot(key);
      std::cout << "  " << context_name(key) << ": " << slot.str();
      if (slot.is_signature()) {
        std::cout << "  [" << class_name(classify(slot.signature())) << ", level "
                  << strength_level(slot) << "]";
      }
      std::cout << "\n";
    }
    if (r->cogniser_slots) {
      std::cout << "  cogniser:";
      for (ContextKey key : kContextKeys) {
        std::cout << " " << (*r->cogniser_slots)[context_index(key)].str();
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_grid(const Config &config, const std::string &signature_text) {
  SignatureSlot slot;
  try {
    slot = parse_signature(signature_text);
    if (!slot.is_signature()) {
      std::cerr << "error: " << slot.str() << " has no grid row\n";
      return kExitError;
    }
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
    return kExitError;
  }
  auto row = generate_grid(slot.signature(), config.mapping());
  const auto &contexts = grid_contexts();
  const char *sep = config.tsv ? "\t" : "  ";
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    if (i) std::cout << sep;
    std::cout << contexts[i].label();
  }
  std::cout << "\n";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) std::cout << sep;
    std::cout << row[i].str();
    if (!config.tsv && row[i].str().size() < contexts[i].label().size())
      std::cout << ' ';
  }
  std::cout << "\n";
  return kExitOk;
}

int cmd_project(const Config &config, const std::string &expression) {
  Lexicon lex = load_or_exit(config);
  ProjectOptions options{config.mapping(), config.pfv_policy()};
  try {
    std::cout << project_text(lex, expression, options);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
    return kExitError;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}

int cmd_stats(const Config &config, const std::string &report) {
  static const std::vector<std::string> names = {
      "strength", "aspect", "weakening", "means",
      "animacy",  "factive-animacy", "crosstab"};
  bool all = report == "all";
  if (!all && std::find(names.begin(), names.end(), report) == names.end()) {
    std::cerr << "error: unknown report \"" << report << "\"; valid names:";
    for (const auto &n : names) std::cerr << " " << n;
    std::cerr << " all\n";
    return kExitError;
  }

  Lexicon lex = load_or_exit(config);
  stats::Options opts{config.classing_slot()};
  stats::Render fmt = config.render();

  std::cout << "# lexicon: " << config.resolved_lexicon()
            << " | entries: " << lex.size() << " | mapping: " << config.mapping_mode
            << " | pfv-unknown: " << config.pfv_unknown
            << " | classing: " << config.classing << "\n";

  bool first = true;
  auto emit = [&](const std::string &text) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << text;
  };
  if (all || report == "strength") emit(stats::render(stats::strength_histogram(lex), fmt));
  if (all || report == "aspect") emit(stats::render(stats::aspect_dependence(lex, opts), fmt));
  if (all || report == "weakening")
    emit(stats::render(stats::imperfective_weakening(lex, opts), fmt));
  if (all || report == "means")
    emit(stats::render(stats::mean_strength_by_context(lex), fmt));
  if (all || report == "animacy") emit(stats::render(stats::animacy_comparison(lex), fmt));
  if (all || report == "factive-animacy")
    emit(stats::render(stats::factive_animacy_restriction(lex), fmt));
  if (all || report == "crosstab") emit(stats::render(stats::subcat_crosstab(lex, opts), fmt));
  return kExitOk;
}

int cmd_validate(const std::string &path) {
  try {
    LoadResult result = load_tsv_file(path);
    for (const LineError &e : result.errors) {
      std::cout << path << ":" << e.line << ": error: " << e.message << "\n";
    }
    ValidationReport report = validate(result.lexicon);
    std::cout << report.render();
    bool ok = result.errors.empty() && report.ok();
    std::cout << (ok ? "OK" : "FAILED") << ": " << result.lexicon.size()
              << " entries, " << result.errors.size() << " rejected row(s)\n";
    return ok ? kExitOk : kExitNegative;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_convert(const std::string &src, const std::string &dst) {
  try {
    auto issues = convert_sheet_csv_file(src, dst);
    for (const ConvertIssue &issue : issues) {
      std::cerr << src << ":" << issue.line << ": warning: " << issue.message << "\n";
    }
    std::cout << "wrote " << dst << "\n";
    return kExitOk;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Inferential-signature lexicon of French clause-embedding verbs: "
               "lookups, factuality grids, projection and lexicon statistics"};
  app.require_subcommand(1);

  Config config;
  app.add_option("--lexicon", config.lexicon_path,
                 "Lexicon TSV (default: $FACTUALIS_LEXICON or data/seed_lexicon.tsv)");
  app.add_option("--mapping", config.mapping_mode, "Degree mapping")
      ->check(CLI::IsMember({"paper", "fine"}));
  app.add_option("--pfv-unknown", config.pfv_unknown,
                 "Perfective slot policy when animacy is unknown")
      ->check(CLI::IsMember({"weaker", "error"}));
  app.add_option("--classing", config.classing,
                 "Perfective slot preferred for classification")
      ->check(CLI::IsMember({"anim", "inanim"}));
  app.add_flag("--tsv", config.tsv, "Tab-separated machine-readable output");
  app.add_flag("--decimal-comma", config.decimal_comma,
               "Render decimals with a comma separator");

  // global flags remain valid after the subcommand name
  app.fallthrough();

  std::string lemma, reading_id, signature, expression, report, src, dst, path;

  auto *lookup = app.add_subcommand("lookup", "Show lexicon entries for a lemma");
  lookup->add_option("lemma", lemma)->required();
  lookup->add_option("reading_id", reading_id);

  auto *grid = app.add_subcommand("grid", "Contextual-factuality grid row for a signature");
  grid->add_option("signature", signature)->required();

  auto *project = app.add_subcommand("project", "Factuality profile of a clause expression");
  project->add_option("expression", expression)->required();

  auto *stats_cmd = app.add_subcommand("stats", "Lexicon-level reports");
  stats_cmd->add_option("report", report)->required();

  auto *validate_cmd = app.add_subcommand("validate", "Check a lexicon TSV file");
  validate_cmd->add_option("path", path)->required();

  auto *convert = app.add_subcommand("convert", "Convert a sheet CSV export to canonical TSV");
  convert->add_option("src", src)->required();
  convert->add_option("dst", dst)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (lookup->parsed()) return cmd_lookup(config, lemma, reading_id);
    if (grid->parsed()) return cmd_grid(config, signature);
    if (project->parsed()) return cmd_project(config, expression);
    if (stats_cmd->parsed()) return cmd_stats(config, report);
    if (validate_cmd->parsed()) return cmd_validate(path);
    if (convert->parsed()) return cmd_convert(src, dst);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
