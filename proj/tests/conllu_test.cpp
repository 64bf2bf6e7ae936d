#include <doctest.h>

#include "udproj/conllu.hpp"

#include "generators.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace udproj;

namespace {

const char* kFiveTokens =
    "# sent_id = dev-0001\n"
    "1\tHayvanlar\thayvan\tNOUN\t_\t_\t4\tnsubj\t_\t_\n"
    "2\tkapının\tkapı\tNOUN\t_\t_\t3\tnmod:poss\t_\t_\n"
    "3\tyanında\tyan\tADJ\t_\t_\t4\tobl\t_\t_\n"
    "4\tduruyordu\tdur\tVERB\t_\t_\t0\troot\t_\t_\n"
    "5\t.\t.\tPUNCT\t_\t_\t4\tpunct\t_\t_\n"
    "\n";

std::vector<int> heads_of(const Sentence& s) {
  std::vector<int> out;
  for (const Token& t : s.tokens) out.push_back(t.head.value_or(-1));
  return out;
}

}  // namespace

TEST_CASE("parse: five-token sentence forms a valid tree") {
  Treebank tb = parse_conllu(kFiveTokens);
  REQUIRE(tb.sentences.size() == 1);
  const Sentence& s = tb.sentences[0];
  CHECK(heads_of(s) == std::vector<int>{4, 3, 4, 0, 4});
  CHECK(s.tokens[1].deprel == "nmod:poss");
  CHECK(s.comments == std::vector<std::string>{"# sent_id = dev-0001"});
  CHECK(validate_tree(s).empty());
}

TEST_CASE("parse: empty input gives an empty treebank") {
  CHECK(parse_conllu("").sentences.empty());
  CHECK(parse_conllu("\n\n").sentences.empty());
}

TEST_CASE("parse: head out of range is reported with location") {
  std::string text =
      "1\ta\t_\t_\t_\t_\t2\tdep\t_\t_\n"
      "2\tb\t_\t_\t_\t_\t7\tdep\t_\t_\n\n";
  try {
    parse_conllu(text);
    FAIL("expected ConlluError");
  } catch (const ConlluError& e) {
    CHECK(std::string(e.what()).find("head out of range") != std::string::npos);
    CHECK(e.line() == 2);
    CHECK(e.sentence() == 1);
  }
}

TEST_CASE("parse: malformed rows are rejected") {
  CHECK_THROWS_AS(parse_conllu("1\ta\t_\t_\t_\t_\t0\troot\t_\n\n"), ConlluError);  // 9 columns
  CHECK_THROWS_WITH_AS(parse_conllu("x\ta\t_\t_\t_\t_\t0\troot\t_\t_\n\n"),
                       doctest::Contains("non-numeric id"), ConlluError);
  CHECK_THROWS_WITH_AS(parse_conllu("1\ta\t_\t_\t_\t_\tz\tdep\t_\t_\n\n"),
                       doctest::Contains("non-numeric head"), ConlluError);
  CHECK_THROWS_WITH_AS(parse_conllu("1\ta\t_\t_\t_\t_\t0\troot\t_\t_\n"
                                    "1\tb\t_\t_\t_\t_\t1\tdep\t_\t_\n\n"),
                       doctest::Contains("duplicate id"), ConlluError);
  CHECK_THROWS_WITH_AS(parse_conllu("2\ta\t_\t_\t_\t_\t0\troot\t_\t_\n\n"),
                       doctest::Contains("non-sequential id"), ConlluError);
  CHECK_THROWS_WITH_AS(parse_conllu("1.1\ta\t_\t_\t_\t_\t0\troot\t_\t_\n\n"),
                       doctest::Contains("empty-node id"), ConlluError);
  CHECK_THROWS_WITH_AS(parse_conllu("1\t\t_\t_\t_\t_\t0\troot\t_\t_\n\n"),
                       doctest::Contains("empty form"), ConlluError);
  CHECK_THROWS_WITH_AS(parse_conllu("1\ta\t_\t_\t_\t_\t1\tdep\t_\t_\n\n"),
                       doctest::Contains("head equals its own id"), ConlluError);
  CHECK_THROWS_WITH_AS(parse_conllu("1\ta\t_\t_\t_\t_\t0\troot\t_\t_\n# late comment\n\n"),
                       doctest::Contains("comment line after token lines"), ConlluError);
}

TEST_CASE("parse: head _ stays unset") {
  Treebank tb = parse_conllu("1\ta\t_\t_\t_\t_\t_\t_\t_\t_\n\n");
  CHECK_FALSE(tb.sentences[0].tokens[0].head.has_value());
}

TEST_CASE("parse: multiword range line is captured and positioned") {
  std::string text =
      "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tde\tde\tADP\t_\t_\t3\tcase\t_\t_\n"
      "2\tel\tel\tDET\t_\t_\t3\tdet\t_\t_\n"
      "3\tmar\tmar\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "\n";
  Treebank tb = parse_conllu(text);
  REQUIRE(tb.sentences[0].spans.size() == 1);
  CHECK(tb.sentences[0].spans[0] == MultiwordSpan{1, 2, "del"});
  CHECK(serialize_conllu(tb) == text);

  CHECK_THROWS_WITH_AS(parse_conllu("1\tde\t_\t_\t_\t_\t0\troot\t_\t_\n"
                                    "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_\n"
                                    "2\tel\t_\t_\t_\t_\t1\tdet\t_\t_\n\n"),
                       doctest::Contains("does not precede"), ConlluError);
  CHECK_THROWS_WITH_AS(parse_conllu("1-2\tdel\t_\t_\t_\t_\t_\t_\t_\tSpaceAfter=No\n"
                                    "1\tde\t_\t_\t_\t_\t0\troot\t_\t_\n"
                                    "2\tel\t_\t_\t_\t_\t1\tdet\t_\t_\n\n"),
                       doctest::Contains("unsupported annotation"), ConlluError);
  CHECK_THROWS_WITH_AS(parse_conllu("1-3\tdel\t_\t_\t_\t_\t_\t_\t_\t_\n"
                                    "1\tde\t_\t_\t_\t_\t0\troot\t_\t_\n"
                                    "2\tel\t_\t_\t_\t_\t1\tdet\t_\t_\n\n"),
                       doctest::Contains("range end out of range"), ConlluError);
}

TEST_CASE("round-trip: canonical fixture files survive byte-for-byte") {
  for (const char* name :
       {"identity/source.conllu", "multialigned/source.conllu", "roundtrip/rt_mwt.conllu",
        "roundtrip/rt_skeleton.conllu", "roundtrip/rt_multi.conllu", "roundtrip/rt_deps.conllu",
        "roundtrip/rt_symbols.conllu"}) {
    CAPTURE(name);
    std::string text = test::read_file(test::fixture_path(name));
    CHECK(serialize_conllu(parse_conllu(text)) == text);
  }
}

TEST_CASE("round-trip: parse after serialize is the identity on values") {
  test::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Treebank tb = test::random_treebank(test::rand_int(rng, 0, 4), 9, rng);
    CHECK(parse_conllu(serialize_conllu(tb)) == tb);
  }
  CHECK(serialize_conllu(Treebank{}).empty());
}

TEST_CASE("validate_tree: diagnostics name the offending tokens") {
  auto with_heads = [](std::vector<std::optional<int>> heads) {
    Sentence s;
    for (std::size_t i = 0; i < heads.size(); ++i) {
      Token t;
      t.id = static_cast<int>(i) + 1;
      t.form = "w" + std::to_string(i + 1);
      t.head = heads[i];
      s.tokens.push_back(std::move(t));
    }
    return s;
  };

  CHECK(validate_tree(with_heads({4, 3, 4, 0, 4})).empty());

  auto cyc = validate_tree(with_heads({2, 1}));
  REQUIRE(cyc.size() == 2);  // no root + the cycle
  CHECK(cyc[0] == "no root: no token has head 0");
  CHECK(cyc[1] == "cycle: tokens 1, 2");

  auto multi = validate_tree(with_heads({0, 0}));
  REQUIRE(multi.size() == 1);
  CHECK(multi[0] == "multiple roots: tokens 1, 2");

  auto unset = validate_tree(with_heads({0, std::nullopt}));
  REQUIRE(unset.size() == 1);
  CHECK(unset[0] == "token 2: head is unset");

  auto range = validate_tree(with_heads({0, 9}));
  REQUIRE(range.size() == 1);
  CHECK(range[0] == "token 2: head 9 out of range");
}

TEST_CASE("validate_tree: agrees with a union-find oracle on random inputs") {
  test::Rng rng(11);
  for (int iter = 0; iter < 400; ++iter) {
    int n = test::rand_int(rng, 1, 12);
    std::vector<std::optional<int>> heads(n);
    if (iter % 2 == 0) {
      std::vector<int> tree = test::random_tree(n, rng);
      for (int i = 0; i < n; ++i) heads[i] = tree[i];
    } else {
      for (int i = 0; i < n; ++i) heads[i] = test::rand_int(rng, 0, n);
      // head == own id is a parse-level error; steer clear of it here
      for (int i = 0; i < n; ++i)
        if (*heads[i] == i + 1) heads[i] = 0;
    }
    Sentence s;
    for (int i = 0; i < n; ++i) {
      Token t;
      t.id = i + 1;
      t.form = "w";
      t.head = heads[i];
      s.tokens.push_back(std::move(t));
    }
    CHECK(validate_tree(s).empty() == test::oracle_is_rooted_tree(heads));
  }
}

TEST_CASE("sent_id_comment finds the metadata line") {
  Treebank tb = parse_conllu(kFiveTokens);
  CHECK(sent_id_comment(tb.sentences[0]) == std::string("# sent_id = dev-0001"));
  Sentence bare;
  CHECK_FALSE(sent_id_comment(bare).has_value());
}
