#include "udproj/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "udproj/analysis.hpp"
#include "udproj/conllu.hpp"
#include "udproj/eval.hpp"
#include "udproj/morph.hpp"
#include "udproj/projection.hpp"

#ifndef UDPROJ_DEFAULT_TAGMAP
#define UDPROJ_DEFAULT_TAGMAP "data/tagmap_default.tsv"
#endif

namespace udproj::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw Error("failed to write file: " + path);
}

// One pre-tokenized sentence per line.
std::vector<std::vector<std::string>> read_target_sentences(const std::string& path) {
  std::vector<std::string> lines = split(read_file(path), '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::vector<std::vector<std::string>> out;
  out.reserve(lines.size());
  for (const std::string& line : lines) out.push_back(split_ws(line));
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::vector<std::string> lines = split(read_file(path), '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

struct ProjectArgs {
  std::string source;
  std::string targets;
  std::string alignments;
  std::string alignments2;
  std::string lexicon;
  std::string tagmap = UDPROJ_DEFAULT_TAGMAP;
  std::string output;
  std::string provenance;
  std::string merge_mode = "union";
  std::string order = "filter-first";
  bool swap_first = false;
  bool swap_second = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_ascii_space(s[b])) ++b;
  while (e > b && is_ascii_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

// Flat key=value file. Values fill in whatever the command line left unset.
void apply_config_file(const std::string& path, const CLI::App& cmd, ProjectArgs& a) {
  std::map<std::string, std::string*> strings = {
      {"source", &a.source},     {"targets", &a.targets},
      {"alignments", &a.alignments}, {"alignments2", &a.alignments2},
      {"lexicon", &a.lexicon},   {"tagmap", &a.tagmap},
      {"output", &a.output},     {"provenance", &a.provenance},
      {"merge", &a.merge_mode},  {"order", &a.order},
  };
  std::map<std::string, bool*> flags = {{"swap", &a.swap_first}, {"swap2", &a.swap_second}};

  std::size_t line_no = 0;
  for (const std::string& raw : split(read_file(path), '\n')) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + " line " + std::to_string(line_no) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    auto it = strings.find(key);
    auto fit = flags.find(key);
    if (it == strings.end() && fit == flags.end())
      throw UsageError(path + " line " + std::to_string(line_no) + ": unknown key \"" + key +
                       "\"");
    if (cmd.count("--" + key) > 0) continue;  // command line wins
    if (it != strings.end()) {
      *it->second = value;
    } else {
      if (value == "true" || value == "1" || value == "yes")
        *fit->second = true;
      else if (value == "false" || value == "0" || value == "no")
        *fit->second = false;
      else
        throw UsageError(path + " line " + std::to_string(line_no) + ": \"" + value +
                         "\" is not a boolean");
    }
  }
}

void validate_project_args(const ProjectArgs& a) {
  for (const auto& [name, value] :
       {std::pair<const char*, const std::string*>{"--source", &a.source},
        {"--targets", &a.targets},
        {"--alignments", &a.alignments},
        {"--lexicon", &a.lexicon},
        {"--output", &a.output}}) {
    if (value->empty()) throw UsageError(std::string(name) + " is required");
  }
  if (!merge_mode_from_name(a.merge_mode))
    throw UsageError("--merge must be union or intersection, got \"" + a.merge_mode + "\"");
  if (!resolution_order_from_name(a.order))
    throw UsageError("--order must be filter-first or root-first, got \"" + a.order + "\"");
}

std::vector<AlignmentGraph> read_alignments(const std::string& path, bool swap,
                                            const Treebank& src,
                                            const std::vector<std::vector<std::string>>& tgt) {
  std::vector<std::string> lines = read_lines(path);
  if (lines.size() != src.sentences.size())
    throw Error("alignment file " + path + " has " + std::to_string(lines.size()) +
                " lines, expected " + std::to_string(src.sentences.size()));
  std::vector<AlignmentGraph> graphs;
  graphs.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int n_src = static_cast<int>(src.sentences[i].tokens.size());
    int n_tgt = static_cast<int>(tgt[i].size());
    try {
      if (swap)
        graphs.push_back(swapped(parse_pharaoh(lines[i], n_tgt, n_src)));
      else
        graphs.push_back(parse_pharaoh(lines[i], n_src, n_tgt));
    } catch (const Error& e) {
      throw Error(path + " line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return graphs;
}

int run_project(const ProjectArgs& a, std::ostream& out, std::ostream& err) {
  MergeMode merge_mode = *merge_mode_from_name(a.merge_mode);
  ProjectionOptions options;
  options.order = *resolution_order_from_name(a.order);

  Treebank src = parse_conllu_file(a.source);
  std::vector<std::vector<std::string>> targets = read_target_sentences(a.targets);
  if (targets.size() != src.sentences.size())
    throw Error("target file has " + std::to_string(targets.size()) + " sentences, expected " +
                std::to_string(src.sentences.size()));

  std::vector<AlignmentGraph> graphs = read_alignments(a.alignments, a.swap_first, src, targets);
  if (!a.alignments2.empty()) {
    std::vector<AlignmentGraph> second =
        read_alignments(a.alignments2, a.swap_second, src, targets);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      graphs[i] = merge(graphs[i], second[i], merge_mode);
  }

  TagMap tag_map = load_tag_map(a.tagmap);
  std::vector<std::string> warnings;
  MorphLexicon lexicon = load_lexicon(a.lexicon, tag_map, &warnings);
  for (const std::string& w : warnings) err << "warning: " << w << "\n";

  TreebankProjection result = project_treebank(src, targets, graphs, lexicon, options);

  write_file(a.output, serialize_conllu(result.treebank));
  std::vector<std::pair<std::string, std::string>> metadata = {
      {"merge", std::string(merge_mode_name(merge_mode))},
      {"order", std::string(resolution_order_name(options.order))},
      {"swap", a.swap_first ? "true" : "false"},
      {"swap2", a.swap_second ? "true" : "false"},
  };
  std::string prov_path = a.provenance.empty() ? a.output + ".prov.tsv" : a.provenance;
  write_file(prov_path, render_provenance_tsv(result.provenance, metadata));

  int matched = 0, unmatched = 0, forced = 0;
  for (const SentenceProvenance& p : result.provenance) {
    matched += p.count(TokenOrigin::Matched);
    unmatched += p.count(TokenOrigin::UnmatchedFallback);
    forced += p.count(TokenOrigin::ForcedRoot);
  }
  out << "projected " << result.treebank.sentences.size() << " of " << src.sentences.size()
      << " sentences (" << matched << " matched, " << unmatched << " unmatched, " << forced
      << " forced-root tokens)\n";
  for (const std::string& e : result.errors) err << "error: " << e << "\n";
  return result.errors.empty() ? kExitOk : kExitPartial;
}

struct EvalArgs {
  std::string gold;
  std::string system;
  std::string tsv;
};

int run_eval(const EvalArgs& a, std::ostream& out, std::ostream&) {
  Treebank gold = parse_conllu_file(a.gold);
  Treebank system = parse_conllu_file(a.system);
  EvalReport report = score(gold, system);
  out << render_eval_report(report) << "\n" << render_effort_report(effort_report(report));
  if (!a.tsv.empty()) write_file(a.tsv, render_eval_tsv(report));
  return kExitOk;
}

struct AnalyzeArgs {
  std::string gold;
  std::string system;
  std::string provenance;
  std::string format = "text";
  std::string output;
};

int run_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream&) {
  TableFormat format = table_format_from_name(a.format);
  Treebank gold = parse_conllu_file(a.gold);
  Treebank system = parse_conllu_file(a.system);
  std::vector<SentenceProvenance> prov;
  RelationErrorTable table;
  if (!a.provenance.empty()) {
    prov = parse_provenance_tsv(read_file(a.provenance));
    table = relation_table(gold, system, &prov);
  } else {
    table = relation_table(gold, system);
  }
  std::string rendered = render_table(table, format);
  if (a.output.empty())
    out << rendered;
  else
    write_file(a.output, rendered);
  return kExitOk;
}

struct MatchArgs {
  std::string alignments;
  int n_src = -1;
  int n_tgt = -1;
};

int run_match(const MatchArgs& a, std::ostream& out, std::ostream&) {
  std::vector<std::string> lines = read_lines(a.alignments);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    // Dimensions default to the largest index seen on the line.
    int n_src = a.n_src, n_tgt = a.n_tgt;
    if (n_src < 0 || n_tgt < 0) {
      int max_s = -1, max_t = -1;
      for (const std::string& tok : split_ws(lines[i])) {
        std::size_t dash = tok.find('-');
        long long s = 0, t = 0;
        if (dash != std::string::npos &&
            parse_uint(std::string_view(tok).substr(0, dash), s) &&
            parse_uint(std::string_view(tok).substr(dash + 1), t)) {
          max_s = std::max(max_s, static_cast<int>(s));
          max_t = std::max(max_t, static_cast<int>(t));
        }
      }
      if (n_src < 0) n_src = max_s + 1;
      if (n_tgt < 0) n_tgt = max_t + 1;
    }
    AlignmentGraph g;
    try {
      g = parse_pharaoh(lines[i], n_src, n_tgt);
    } catch (const Error& e) {
      throw Error(a.alignments + " line " + std::to_string(i + 1) + ": " + e.what());
    }
    Matching m = maximum_matching(g);
    out << (i + 1) << "\t" << m.size() << "\t";
    for (std::size_t k = 0; k < m.pairs.size(); ++k) {
      if (k) out << " ";
      out << m.pairs[k].first << "-" << m.pairs[k].second;
    }
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cross-lingual dependency annotation projection toolkit"};
  app.require_subcommand(1);

  ProjectArgs pa;
  std::string config_path;
  CLI::App* project =
      app.add_subcommand("project", "project source annotations onto target sentences");
  project->add_option("--config", config_path,
                      "flat key=value configuration file; command-line flags take precedence");
  project->add_option("--source", pa.source, "parsed source treebank (CoNLL-U)");
  project->add_option("--targets", pa.targets,
                      "target sentences, one tokenized sentence per line");
  project->add_option("--alignments", pa.alignments,
                      "Pharaoh alignment file, one line per sentence");
  project->add_option("--alignments2", pa.alignments2,
                      "second alignment file to merge (e.g. the reverse direction)");
  project->add_option("--merge", pa.merge_mode, "merge operator for two alignment files")
      ->capture_default_str();
  project->add_flag("--swap", pa.swap_first, "treat --alignments as target-source pairs");
  project->add_flag("--swap2", pa.swap_second, "treat --alignments2 as target-source pairs");
  project->add_option("--lexicon", pa.lexicon, "morphological lexicon (FORM/LEMMA/RAWTAG TSV)");
  project->add_option("--tagmap", pa.tagmap, "raw tag to universal tag table (TSV)")
      ->capture_default_str();
  project->add_option("--order", pa.order, "run PoS filtering before or after root resolution")
      ->capture_default_str();
  project->add_option("--output", pa.output, "projected treebank output path");
  project->add_option("--provenance", pa.provenance,
                      "provenance TSV path (default: <output>.prov.tsv)");

  EvalArgs ea;
  CLI::App* eval_cmd = app.add_subcommand("eval", "score a system treebank against gold");
  eval_cmd->add_option("--gold", ea.gold, "gold treebank (CoNLL-U)")->required();
  eval_cmd->add_option("--system", ea.system, "system treebank (CoNLL-U)")->required();
  eval_cmd->add_option("--tsv", ea.tsv, "also write the report as TSV to this path");

  AnalyzeArgs aa;
  CLI::App* analyze = app.add_subcommand("analyze", "per-relation error breakdown against gold");
  analyze->add_option("--gold", aa.gold, "gold treebank (CoNLL-U)")->required();
  analyze->add_option("--system", aa.system, "system treebank (CoNLL-U)")->required();
  analyze->add_option("--provenance", aa.provenance, "provenance TSV from the project step");
  analyze->add_option("--format", aa.format, "output format")->capture_default_str();
  analyze->add_option("--output", aa.output, "write the table here instead of stdout");

  MatchArgs ma;
  CLI::App* match = app.add_subcommand("match", "print the maximum matching per alignment line");
  match->add_option("--alignments", ma.alignments, "Pharaoh alignment file")->required();
  match->add_option("--n-src", ma.n_src, "source token count (default: inferred per line)");
  match->add_option("--n-tgt", ma.n_tgt, "target token count (default: inferred per line)");

  std::vector<const char*> argv;
  argv.push_back("udproj");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* scope = &app;
    for (const CLI::App* sub : {project, eval_cmd, analyze, match})
      if (sub->parsed()) scope = sub;
    out << scope->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (project->parsed()) {
      if (!config_path.empty()) apply_config_file(config_path, *project, pa);
      validate_project_args(pa);
      return run_project(pa, out, err);
    }
    if (eval_cmd->parsed()) return run_eval(ea, out, err);
    if (analyze->parsed()) return run_analyze(aa, out, err);
    if (match->parsed()) return run_match(ma, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace udproj::cli
