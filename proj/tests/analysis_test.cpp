#include <doctest.h>

#include <map>

#include "udproj/analysis.hpp"

#include "generators.hpp"
#include "support.hpp"

using namespace udproj;

namespace {

Treebank gold5() {
  return parse_conllu(udproj::test::read_file(udproj::test::fixture_path("evalx/gold5.conllu")));
}
Treebank system5() {
  return parse_conllu(udproj::test::read_file(udproj::test::fixture_path("evalx/system5.conllu")));
}

const RelationRow* find_row(const RelationErrorTable& t, const std::string& deprel) {
  for (const RelationRow& r : t.rows)
    if (r.deprel == deprel) return &r;
  return nullptr;
}

// Same grouping, but label comparison relaxed to the universal part.
std::map<std::string, long long> relaxed_deprel_correct(const Treebank& gold,
                                                        const Treebank& system) {
  auto universal = [](const std::string& d) { return d.substr(0, d.find(':')); };
  std::map<std::string, long long> out;
  for (std::size_t k = 0; k < gold.sentences.size(); ++k) {
    const Sentence& g = gold.sentences[k];
    const Sentence& s = system.sentences[k];
    if (g.tokens.size() != s.tokens.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < g.tokens.size(); ++i)
      if (g.tokens[i].form != s.tokens[i].form) same = false;
    if (!same) continue;
    for (std::size_t i = 0; i < g.tokens.size(); ++i)
      if (universal(g.tokens[i].deprel) == universal(s.tokens[i].deprel))
        ++out[g.tokens[i].deprel];
  }
  return out;
}

}  // namespace

TEST_CASE("relation_table: identical treebanks are perfect") {
  Treebank tb = gold5();
  RelationErrorTable t = relation_table(tb, tb);
  CHECK(t.excluded_sentences == 0);
  for (const RelationRow& r : t.rows) {
    CHECK(r.deprel_correct == r.total);
    CHECK(r.head_correct == r.total);
  }
  CHECK(t.wrong_deprel_total == 0);
}

TEST_CASE("relation_table: the five-sentence fixture") {
  RelationErrorTable t = relation_table(gold5(), system5());

  CHECK(t.total_sentences == 5);
  CHECK(t.excluded_sentences == 1);  // the re-tokenized sentence
  CHECK(format_pct2(t.excluded_sentences, t.total_sentences) == "20.00");
  CHECK(t.included_gold_tokens == 15);

  long long sum = 0;
  for (const RelationRow& r : t.rows) sum += r.total;
  CHECK(sum == t.included_gold_tokens);

  // subtype must match exactly: obl vs obl:cau is an error
  const RelationRow* oblcau = find_row(t, "obl:cau");
  REQUIRE(oblcau != nullptr);
  CHECK(oblcau->total == 1);
  CHECK(oblcau->deprel_correct == 0);
  CHECK(oblcau->head_correct == 1);

  const RelationRow* advmod = find_row(t, "advmod");
  REQUIRE(advmod != nullptr);
  CHECK(advmod->deprel_correct == 0);  // system left it unlabeled
  CHECK(advmod->head_correct == 1);

  const RelationRow* punct = find_row(t, "punct");
  REQUIRE(punct != nullptr);
  CHECK(punct->total == 4);
  CHECK(punct->deprel_correct == 4);
  CHECK(punct->head_correct == 3);  // one wrong head in sentence 5

  const RelationRow* root = find_row(t, "root");
  REQUIRE(root != nullptr);
  CHECK(root->total == 4);
  CHECK(root->head_correct == 4);  // root head correctness means head == 0

  // of the two deprel errors, one carries the unmatched marker
  CHECK(t.wrong_deprel_total == 2);
  CHECK(t.wrong_deprel_unmatched == 1);
  CHECK(format_pct2(t.wrong_deprel_unmatched, t.wrong_deprel_total) == "50.00");

  // rows sorted by total descending, name ascending on ties
  REQUIRE(t.rows.size() == 6);
  CHECK(t.rows[0].deprel == "nsubj");
  CHECK(t.rows[1].deprel == "punct");
  CHECK(t.rows[2].deprel == "root");
  CHECK(t.rows[3].deprel == "advmod");
  CHECK(t.rows[4].deprel == "obj");
  CHECK(t.rows[5].deprel == "obl:cau");
}

TEST_CASE("relation_table: relaxed label comparison never loses correct counts") {
  RelationErrorTable strict = relation_table(gold5(), system5());
  std::map<std::string, long long> relaxed = relaxed_deprel_correct(gold5(), system5());
  for (const RelationRow& r : strict.rows) {
    long long relaxed_count = relaxed.count(r.deprel) ? relaxed.at(r.deprel) : 0;
    CHECK(relaxed_count >= r.deprel_correct);
  }
  // the subtype mismatch is the difference
  CHECK(relaxed.at("obl:cau") == 1);
}

TEST_CASE("relation_table: two nsubj tokens with one miss score 50%") {
  const char* gold_text =
      "1\ta\t_\t_\t_\t_\t2\tnsubj\t_\t_\n2\tb\t_\t_\t_\t_\t0\troot\t_\t_\n\n"
      "1\tc\t_\t_\t_\t_\t2\tnsubj\t_\t_\n2\td\t_\t_\t_\t_\t0\troot\t_\t_\n\n";
  const char* sys_text =
      "1\ta\t_\t_\t_\t_\t2\tnsubj\t_\t_\n2\tb\t_\t_\t_\t_\t0\troot\t_\t_\n\n"
      "1\tc\t_\t_\t_\t_\t2\tobj\t_\t_\n2\td\t_\t_\t_\t_\t0\troot\t_\t_\n\n";
  RelationErrorTable t = relation_table(parse_conllu(gold_text), parse_conllu(sys_text));
  const RelationRow* nsubj = find_row(t, "nsubj");
  REQUIRE(nsubj != nullptr);
  CHECK(nsubj->total == 2);
  CHECK(nsubj->deprel_correct == 1);
  CHECK(format_pct0(nsubj->deprel_correct, nsubj->total) == "50%");
}

TEST_CASE("relation_table: provenance flags drive the unmatched split") {
  const char* gold_text = "1\ta\t_\t_\t_\t_\t2\tnsubj\t_\t_\n2\tb\t_\t_\t_\t_\t0\troot\t_\t_\n\n";
  const char* sys_text = "1\ta\t_\t_\t_\t_\t2\tobj\t_\t_\n2\tb\t_\t_\t_\t_\t0\troot\t_\t_\n\n";
  std::vector<SentenceProvenance> prov = {
      {1, {TokenOrigin::UnmatchedFallback, TokenOrigin::ForcedRoot}}};
  RelationErrorTable t = relation_table(parse_conllu(gold_text), parse_conllu(sys_text), &prov);
  CHECK(t.wrong_deprel_total == 1);
  CHECK(t.wrong_deprel_unmatched == 1);  // flag wins even though deprel is not "_"
}

TEST_CASE("relation_table: sentence count mismatch is an error") {
  Treebank one = gold5();
  Treebank two;
  two.sentences.assign(one.sentences.begin(), one.sentences.begin() + 2);
  CHECK_THROWS_AS(relation_table(one, two), AnalysisError);
}

TEST_CASE("render_table: text rows read like the published breakdown") {
  RelationErrorTable t;
  t.rows.push_back({"nummod", 7, 7, 7});
  t.total_sentences = 1;
  t.included_gold_tokens = 7;
  std::string text = render_table(t, TableFormat::Text);
  // second line is the nummod row
  std::string row = split(text, '\n')[1];
  CHECK(split_ws(row) == std::vector<std::string>{"nummod", "7", "100%", "100%"});
  CHECK(text.find("excluded sentences: 0 of 1 (0.00%)") != std::string::npos);

  RelationErrorTable empty;
  std::string empty_text = render_table(empty, TableFormat::Text);
  CHECK(split(empty_text, '\n')[0].find("deprel") == 0);

  CHECK_THROWS_WITH_AS(table_format_from_name("xml"), doctest::Contains("unknown table format"),
                       AnalysisError);
  CHECK(table_format_from_name("tsv") == TableFormat::Tsv);
}

TEST_CASE("render_table: TSV round-trips to an equal table") {
  RelationErrorTable t = relation_table(gold5(), system5());
  RelationErrorTable back = parse_table_tsv(render_table(t, TableFormat::Tsv));
  CHECK(back == t);
}

TEST_CASE("relation_table: totals conserved on random pairs") {
  test::Rng rng(61);
  for (int iter = 0; iter < 50; ++iter) {
    Treebank gold = test::random_treebank(test::rand_int(rng, 1, 4), 6, rng);
    Treebank system = gold;
    // corrupt some labels and occasionally re-tokenize a sentence
    for (Sentence& s : system.sentences) {
      if (test::rand_int(rng, 0, 3) == 0) s = test::retokenize(s, rng);
      for (Token& t : s.tokens)
        if (test::rand_int(rng, 0, 2) == 0) t.deprel = test::random_deprel(rng);
    }
    RelationErrorTable t = relation_table(gold, system);
    long long sum = 0, included = 0;
    for (const RelationRow& r : t.rows) sum += r.total;
    for (std::size_t k = 0; k < gold.sentences.size(); ++k) {
      bool same = gold.sentences[k].tokens.size() == system.sentences[k].tokens.size();
      if (same)
        for (std::size_t i = 0; i < gold.sentences[k].tokens.size(); ++i)
          if (gold.sentences[k].tokens[i].form != system.sentences[k].tokens[i].form) same = false;
      if (same) included += static_cast<long long>(gold.sentences[k].tokens.size());
    }
    CHECK(sum == included);
    CHECK(sum == t.included_gold_tokens);
  }
}
