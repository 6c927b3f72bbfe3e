#include "sbm/cli.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sbm/invariants.hpp"
#include "sbm/presentation.hpp"
#include "sbm/rewrite.hpp"
#include "sbm/text_io.hpp"
#include "sbm/word.hpp"

namespace sbm {

namespace {

nlohmann::ordered_json profile_json(const InvariantProfile& prof) {
  nlohmann::ordered_json j;
  j["n"] = prof.params.strands;
  j["genus"] = prof.params.genus;
  j["permutation"] = prof.permutation;
  j["strand_homology"] = prof.strand_homology;
  j["a_exponent"] = prof.a_exponent;
  j["sigma_parity"] = prof.sigma_parity;
  j["tau_count"] = prof.tau_count;
  return j;
}

std::string step_text(const RewriteStep& s, const std::vector<Relation>& rels) {
  switch (s.kind) {
    case StepKind::RelationApply:
      return "apply " + relation_label(rels[s.relation_index]) +
             (s.forward ? " forward at " : " reverse at ") +
             std::to_string(s.position);
    case StepKind::FreeCancel:
      return "cancel " + format_letter(s.letter) + " at " +
             std::to_string(s.position);
    case StepKind::PairInsert:
      return "insert " + format_letter(s.letter) + " at " +
             std::to_string(s.position);
  }
  return "?";
}

nlohmann::ordered_json step_json(const RewriteStep& s,
                                 const std::vector<Relation>& rels) {
  nlohmann::ordered_json j;
  switch (s.kind) {
    case StepKind::RelationApply:
      j["kind"] = "relation";
      j["relation"] = relation_label(rels[s.relation_index]);
      j["direction"] = s.forward ? "forward" : "reverse";
      break;
    case StepKind::FreeCancel:
      j["kind"] = "cancel";
      j["letter"] = format_letter(s.letter);
      break;
    case StepKind::PairInsert:
      j["kind"] = "insert";
      j["letter"] = format_letter(s.letter);
      break;
  }
  j["position"] = s.position;
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Words, relations and equivalence search for singular braid "
               "monoids on closed orientable surfaces"};
  app.require_subcommand(1);

  int n = 0;
  int genus = 0;
  std::size_t budget_nodes = 0;
  std::size_t budget_len = 0;
  std::string format = "text";
  app.add_option("--n", n, "strand count (n >= 1)")->required();
  app.add_option("--genus", genus, "surface genus (g >= 0)")->required();
  app.add_option("--budget-nodes", budget_nodes,
                 "search nodes per side for equiv (default 100000)");
  app.add_option("--budget-len", budget_len,
                 "maximum word length during equiv search");
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string word_arg, word_arg2;
  auto* cmd_parse = app.add_subcommand("parse", "echo the canonical form");
  cmd_parse->add_option("word", word_arg, "braid word")->required();
  auto* cmd_inv =
      app.add_subcommand("invariants", "print the invariant profile as json");
  cmd_inv->add_option("word", word_arg, "braid word")->required();
  auto* cmd_rel =
      app.add_subcommand("relations", "print the defining relations");
  auto* cmd_equiv =
      app.add_subcommand("equiv", "search for a proof of word equivalence");
  cmd_equiv->add_option("word1", word_arg, "first word")->required();
  cmd_equiv->add_option("word2", word_arg2, "second word")->required();
  auto* cmd_simplify = app.add_subcommand(
      "simplify", "print the presentation with t2..t(n-1) eliminated");

  auto* cmd_derived = app.add_subcommand("derived", "print a derived word");
  cmd_derived->require_subcommand(1);
  int idx_i = 0, idx_j = 0, idx_r = 0;
  auto* d_air =
      cmd_derived->add_subcommand("air", "wall crossing of the i-th strand");
  d_air->add_option("i", idx_i, "strand index")->required();
  d_air->add_option("r", idx_r, "wall index")->required();
  auto* d_a2 = cmd_derived->add_subcommand("a2", "the conjugated wall product");
  d_a2->add_option("r", idx_r, "wall index")->required();
  auto* d_tauconj = cmd_derived->add_subcommand(
      "tauconj", "conjugated singular generator equal to tj");
  d_tauconj->add_option("i", idx_i, "source strand index")->required();
  d_tauconj->add_option("j", idx_j, "target strand index")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  const SurfaceParams p{n, genus};
  if (!p.valid()) {
    err << "invalid surface parameters: need n >= 1 and genus >= 0\n";
    return 1;
  }
  const ExportFormat fmt =
      format == "json" ? ExportFormat::Json : ExportFormat::Text;

  try {
    if (cmd_parse->parsed()) {
      const Word w = parse_word(word_arg, p);
      if (fmt == ExportFormat::Json) {
        nlohmann::ordered_json j;
        j["word"] = format_word(w);
        out << j.dump(2) << "\n";
      } else {
        out << format_word(w) << "\n";
      }
      return 0;
    }
    if (cmd_inv->parsed()) {
      const Word w = parse_word(word_arg, p);
      out << profile_json(evaluate(w, p)).dump(2) << "\n";
      return 0;
    }
    if (cmd_rel->parsed()) {
      out << export_presentation(build_presentation(p), fmt);
      return 0;
    }
    if (cmd_simplify->parsed()) {
      out << export_presentation(tietze_simplify(build_presentation(p)), fmt);
      return 0;
    }
    if (cmd_derived->parsed()) {
      Word w;
      if (d_air->parsed()) w = a_wall(idx_i, idx_r, p);
      else if (d_a2->parsed()) w = a2_word(idx_r, p);
      else w = tau_conjugate(idx_i, idx_j, p);
      out << format_word(w) << "\n";
      return 0;
    }
    if (cmd_equiv->parsed()) {
      const Word u = parse_word(word_arg, p);
      const Word v = parse_word(word_arg2, p);
      SearchBudget budget = default_budget(u, v);
      if (budget_nodes) budget.max_nodes = budget_nodes;
      if (budget_len) budget.max_word_length = budget_len;
      const std::vector<Relation> rels = all_relations(p);
      const EquivResult res = equiv_search(u, v, p, budget, rels);
      if (fmt == ExportFormat::Json) {
        nlohmann::ordered_json j;
        switch (res.verdict) {
          case Verdict::Equivalent: {
            j["verdict"] = "equivalent";
            nlohmann::ordered_json steps = nlohmann::ordered_json::array();
            for (const RewriteStep& s : res.trace->steps)
              steps.push_back(step_json(s, rels));
            j["trace"] = std::move(steps);
            break;
          }
          case Verdict::DistinctByInvariant:
            j["verdict"] = "distinct";
            j["witness"] = component_name(*res.witness);
            break;
          case Verdict::Unknown:
            j["verdict"] = "unknown";
            break;
        }
        out << j.dump(2) << "\n";
      } else {
        switch (res.verdict) {
          case Verdict::Equivalent:
            out << "equivalent\n";
            for (const RewriteStep& s : res.trace->steps)
              out << "  " << step_text(s, rels) << "\n";
            break;
          case Verdict::DistinctByInvariant:
            out << "distinct by " << component_name(*res.witness) << "\n";
            break;
          case Verdict::Unknown:
            out << "unknown\n";
            break;
        }
      }
      return res.verdict == Verdict::Unknown ? 2 : 0;
    }
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.position << ": " << e.what() << "\n";
    return 1;
  } catch (const SbmError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand given\n";
  return 1;
}

}  // namespace sbm
