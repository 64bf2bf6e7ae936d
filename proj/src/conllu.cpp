#include "udproj/conllu.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace udproj {

namespace {

std::string loc_msg(const std::string& msg, std::size_t line_no, std::size_t sentence_no) {
  return "line " + std::to_string(line_no) + ", sentence " + std::to_string(sentence_no) +
         ": " + msg;
}

bool is_integer(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// "a-b" with both parts numeric.
bool is_range_id(std::string_view s, long long& a, long long& b) {
  std::size_t dash = s.find('-');
  if (dash == std::string_view::npos) return false;
  return parse_uint(s.substr(0, dash), a) && parse_uint(s.substr(dash + 1), b);
}

bool is_empty_node_id(std::string_view s) {
  std::size_t dot = s.find('.');
  if (dot == std::string_view::npos) return false;
  return is_integer(s.substr(0, dot)) && is_integer(s.substr(dot + 1));
}

struct PendingSentence {
  Sentence sentence;
  std::vector<std::size_t> token_lines;  // source line of each token
  std::vector<std::size_t> span_lines;
  bool seen_token = false;
};

}  // namespace

ConlluError::ConlluError(const std::string& msg, std::size_t line_no, std::size_t sentence_no)
    : Error(loc_msg(msg, line_no, sentence_no)), line_(line_no), sentence_(sentence_no) {}

Treebank parse_conllu(std::string_view text) {
  Treebank tb;
  PendingSentence cur;
  std::size_t line_no = 0;
  std::size_t sentence_no = 1;

  auto fail = [&](const std::string& msg, std::size_t at_line) {
    throw ConlluError(msg, at_line, sentence_no);
  };

  auto finish_sentence = [&](std::size_t at_line) {
    Sentence& s = cur.sentence;
    if (s.tokens.empty() && s.comments.empty() && s.spans.empty()) return;
    if (s.tokens.empty()) fail("sentence has no token lines", at_line);
    int n = static_cast<int>(s.tokens.size());
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      const Token& t = s.tokens[i];
      if (t.head) {
        if (*t.head < 0 || *t.head > n)
          fail("head out of range (" + std::to_string(*t.head) + " > " + std::to_string(n) + ")",
               cur.token_lines[i]);
        if (*t.head == t.id)
          fail("head equals its own id (token " + std::to_string(t.id) + ")", cur.token_lines[i]);
      }
    }
    for (std::size_t i = 0; i < s.spans.size(); ++i) {
      const MultiwordSpan& sp = s.spans[i];
      if (sp.end > n)
        fail("range end out of range (" + std::to_string(sp.end) + " > " + std::to_string(n) + ")",
             cur.span_lines[i]);
    }
    tb.sentences.push_back(std::move(s));
    cur = PendingSentence{};
    ++sentence_no;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size()) {
      // A document not ending in a newline still finishes its sentence.
      if (line_no == 0 || text.back() == '\n') break;
      finish_sentence(line_no);
      break;
    }
    std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos) ? text.substr(pos)
                                                            : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
    ++line_no;

    if (line.empty()) {
      finish_sentence(line_no);
      continue;
    }
    if (line[0] == '#') {
      if (cur.seen_token) fail("comment line after token lines", line_no);
      cur.sentence.comments.emplace_back(line);
      continue;
    }

    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 10)
      fail("expected 10 tab-separated columns, got " + std::to_string(cols.size()), line_no);

    const std::string& id_col = cols[0];
    long long a = 0, b = 0;
    if (is_range_id(id_col, a, b)) {
      if (a >= b) fail("invalid range id " + id_col, line_no);
      int expected_next = static_cast<int>(cur.sentence.tokens.size()) + 1;
      if (a != expected_next)
        fail("range line " + id_col + " does not precede token " + std::to_string(a), line_no);
      if (!cur.sentence.spans.empty() && a <= cur.sentence.spans.back().end)
        fail("overlapping range id " + id_col, line_no);
      for (std::size_t c = 2; c < cols.size(); ++c)
        if (cols[c] != "_")
          fail("unsupported annotation on range line (column " + std::to_string(c + 1) + ")",
               line_no);
      if (cols[1].empty()) fail("empty form", line_no);
      cur.sentence.spans.push_back(
          {static_cast<int>(a), static_cast<int>(b), cols[1]});
      cur.span_lines.push_back(line_no);
      cur.seen_token = true;
      continue;
    }
    if (is_empty_node_id(id_col)) fail("empty-node id " + id_col + " not supported", line_no);
    long long id = 0;
    if (!parse_uint(id_col, id)) fail("non-numeric id \"" + id_col + "\"", line_no);
    int expected = static_cast<int>(cur.sentence.tokens.size()) + 1;
    if (id != expected) {
      if (id >= 1 && id < expected) fail("duplicate id " + std::to_string(id), line_no);
      fail("non-sequential id " + std::to_string(id) + " (expected " + std::to_string(expected) +
               ")",
           line_no);
    }

    Token t;
    t.id = static_cast<int>(id);
    t.form = cols[1];
    if (t.form.empty()) fail("empty form", line_no);
    t.lemma = cols[2];
    t.upos = cols[3];
    t.xpos = cols[4];
    t.feats = cols[5];
    if (cols[6] == "_") {
      t.head.reset();
    } else {
      long long h = 0;
      if (!parse_uint(cols[6], h)) fail("non-numeric head \"" + cols[6] + "\"", line_no);
      t.head = static_cast<int>(h);
    }
    t.deprel = cols[7];
    t.deps = cols[8];
    t.misc = cols[9];
    cur.sentence.tokens.push_back(std::move(t));
    cur.token_lines.push_back(line_no);
    cur.seen_token = true;
  }
  finish_sentence(line_no);
  return tb;
}

Treebank parse_conllu_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_conllu(buf.str());
}

std::string serialize_sentence(const Sentence& s) {
  std::string out;
  for (const std::string& c : s.comments) {
    out += c;
    out += '\n';
  }
  std::size_t next_span = 0;
  for (const Token& t : s.tokens) {
    while (next_span < s.spans.size() && s.spans[next_span].start == t.id) {
      const MultiwordSpan& sp = s.spans[next_span];
      out += std::to_string(sp.start) + "-" + std::to_string(sp.end) + "\t" + sp.form +
             "\t_\t_\t_\t_\t_\t_\t_\t_\n";
      ++next_span;
    }
    out += std::to_string(t.id);
    out += '\t';
    out += t.form;
    out += '\t';
    out += t.lemma;
    out += '\t';
    out += t.upos;
    out += '\t';
    out += t.xpos;
    out += '\t';
    out += t.feats;
    out += '\t';
    out += t.head ? std::to_string(*t.head) : "_";
    out += '\t';
    out += t.deprel;
    out += '\t';
    out += t.deps;
    out += '\t';
    out += t.misc;
    out += '\n';
  }
  out += '\n';
  return out;
}

std::string serialize_conllu(const Treebank& tb) {
  std::string out;
  for (const Sentence& s : tb.sentences) out += serialize_sentence(s);
  return out;
}

std::vector<std::string> validate_tree(const Sentence& s) {
  std::vector<std::string> diags;
  const int n = static_cast<int>(s.tokens.size());

  std::vector<int> roots;
  bool usable = true;
  for (const Token& t : s.tokens) {
    if (!t.head) {
      diags.push_back("token " + std::to_string(t.id) + ": head is unset");
      usable = false;
      continue;
    }
    if (*t.head < 0 || *t.head > n) {
      diags.push_back("token " + std::to_string(t.id) + ": head " + std::to_string(*t.head) +
                      " out of range");
      usable = false;
      continue;
    }
    if (*t.head == 0) roots.push_back(t.id);
  }
  if (roots.empty() && n > 0) {
    diags.push_back("no root: no token has head 0");
  } else if (roots.size() > 1) {
    std::string ids;
    for (std::size_t i = 0; i < roots.size(); ++i)
      ids += (i ? ", " : "") + std::to_string(roots[i]);
    diags.push_back("multiple roots: tokens " + ids);
  }
  if (!usable) return diags;

  // Walk parent chains; 0 = unvisited, 1 = on current path, 2 = done.
  std::vector<int> state(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (state[start] != 0) continue;
    std::vector<int> path;
    int v = start;
    while (v != 0 && state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = *s.tokens[v - 1].head;
    }
    if (v != 0 && state[v] == 1) {
      // Found a new cycle; report its members in ascending id order.
      std::vector<int> cycle;
      for (std::size_t i = path.size(); i-- > 0;) {
        cycle.push_back(path[i]);
        if (path[i] == v) break;
      }
      std::sort(cycle.begin(), cycle.end());
      std::string ids;
      for (std::size_t i = 0; i < cycle.size(); ++i)
        ids += (i ? ", " : "") + std::to_string(cycle[i]);
      diags.push_back("cycle: tokens " + ids);
    }
    for (int u : path) state[u] = 2;
  }
  return diags;
}

std::optional<std::string> sent_id_comment(const Sentence& s) {
  for (const std::string& c : s.comments) {
    if (c.rfind("# sent_id", 0) == 0 || c.rfind("#sent_id", 0) == 0) return c;
  }
  return std::nullopt;
}

}  // namespace udproj
