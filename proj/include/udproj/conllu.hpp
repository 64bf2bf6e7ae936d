#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udproj/util.hpp"

namespace udproj {

// One word line of a CoNLL-U sentence. Unset head ("_" in the file) is kept
// distinct from 0 so tokenized-but-unparsed sentences are representable.
struct Token {
  int id = 0;  // 1-based within the sentence
  std::string form;
  std::string lemma = "_";
  std::string upos = "_";
  std::string xpos = "_";
  std::string feats = "_";
  std::optional<int> head;  // 0 = sentence root
  std::string deprel = "_";
  std::string deps = "_";
  std::string misc = "_";

  bool operator==(const Token&) const = default;
};

// A multiword token range line ("n-m  form  _ ...").
struct MultiwordSpan {
  int start = 0;
  int end = 0;
  std::string form;

  bool operator==(const MultiwordSpan&) const = default;
};

struct Sentence {
  std::vector<std::string> comments;  // verbatim "#..." lines, in order
  std::vector<Token> tokens;          // ids are exactly 1..n
  std::vector<MultiwordSpan> spans;   // ordered, non-overlapping

  bool operator==(const Sentence&) const = default;
};

struct Treebank {
  std::vector<Sentence> sentences;

  bool operator==(const Treebank&) const = default;
};

class ConlluError : public Error {
 public:
  ConlluError(const std::string& msg, std::size_t line_no, std::size_t sentence_no);
  std::size_t line() const { return line_; }
  std::size_t sentence() const { return sentence_; }

 private:
  std::size_t line_;
  std::size_t sentence_;
};

// Parses a CoNLL-U document. Throws ConlluError naming the offending line and
// sentence ordinal on malformed input (wrong column count, non-numeric or
// out-of-range ids/heads, duplicate ids, misplaced range lines, empty-node
// ids).
Treebank parse_conllu(std::string_view text);

Treebank parse_conllu_file(const std::string& path);

// Inverse of parse_conllu on canonical documents: output re-parses to an
// equal Treebank and each sentence ends with one blank line.
std::string serialize_conllu(const Treebank& tb);
std::string serialize_sentence(const Sentence& s);

// Structural check of the head relation. Empty result iff every head is set,
// exactly one token has head 0, and the parent graph is acyclic. Each
// violation yields one diagnostic naming the offending token ids.
std::vector<std::string> validate_tree(const Sentence& s);

// The "# sent_id = ..." comment line, if present.
std::optional<std::string> sent_id_comment(const Sentence& s);

}  // namespace udproj
