#include "cayb/parse.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace cayb {

namespace {

struct RawToken {
  std::string text;        // whitespace stripped
  std::size_t offset = 0;  // byte offset of the first non-space char
};

// Splits on commas outside parentheses; strips whitespace inside tokens.
std::vector<RawToken> split_tokens(std::string_view text) {
  std::vector<RawToken> out;
  RawToken cur;
  bool started = false;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ',' && depth == 0) {
      if (!started) throw ParseError("empty generator token", i);
      out.push_back(cur);
      cur = {};
      started = false;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      // inside a cycle, whitespace separates points; elsewhere it is noise
      if (depth > 0 && started && cur.text.back() != '(' &&
          cur.text.back() != ',')
        cur.text += ',';
      continue;
    }
    if (c == '(') ++depth;
    if (c == ')') {
      if (--depth < 0) throw ParseError("unbalanced ')'", i);
    }
    if (!started) {
      cur.offset = i;
      started = true;
    }
    cur.text += c;
  }
  if (depth != 0) throw ParseError("unbalanced '('", text.size());
  if (started) out.push_back(cur);
  return out;
}

long parse_int(const std::string& s, std::size_t pos, std::size_t* end,
               std::size_t base_offset) {
  std::size_t i = pos;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw ParseError("expected integer", base_offset + i);
  long v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + (s[i] - '0');
    if (v > 1000000) throw ParseError("integer too large", base_offset + pos);
    ++i;
  }
  *end = i;
  return neg ? -v : v;
}

DihedralElement parse_dihedral_token(const RawToken& tok, int n) {
  const std::string& s = tok.text;
  if (s == "1") return {0, 0};
  std::size_t i = 0;
  int reflect = 0;
  if (s[0] == 'b') {
    reflect = 1;
    i = 1;
    if (i == s.size()) return {1, 0};
    if (s[i] != '*') throw ParseError("expected '*' after 'b'", tok.offset + i);
    ++i;
  }
  if (i >= s.size() || s[i] != 'a')
    throw ParseError("expected 'a'", tok.offset + i);
  ++i;
  long exp = 1;
  if (i < s.size()) {
    if (s[i] != '^') throw ParseError("expected '^'", tok.offset + i);
    ++i;
    std::size_t end = 0;
    exp = parse_int(s, i, &end, tok.offset);
    if (end != s.size())
      throw ParseError("trailing characters in token", tok.offset + end);
  }
  return {reflect, mod_reduce(exp, n)};
}

Permutation parse_cycles_token(const RawToken& tok) {
  const std::string& s = tok.text;
  if (s == "id") return Permutation::identity(1);
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_point = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError("expected '('", tok.offset + i);
    ++i;
    std::vector<int> cycle;
    while (i < s.size() && s[i] != ')') {
      if (s[i] == ',') {
        ++i;
        continue;
      }
      std::size_t end = 0;
      long p = parse_int(s, i, &end, tok.offset);
      if (p < 1) throw ParseError("points are 1-based", tok.offset + i);
      cycle.push_back(static_cast<int>(p) - 1);
      max_point = std::max(max_point, static_cast<int>(p));
      i = end;
    }
    if (i == s.size()) throw ParseError("unterminated cycle", tok.offset + i);
    ++i;  // ')'
    if (cycle.size() < 2)
      throw ParseError("cycle needs at least two points", tok.offset);
    cycles.push_back(std::move(cycle));
  }
  Permutation p = Permutation::identity(max_point);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      int from = cycle[j];
      int to = cycle[(j + 1) % cycle.size()];
      if (p.images[from] != from)
        throw ParseError("point repeated across cycles", tok.offset);
      p.images[from] = to;
    }
  }
  if (!p.is_valid()) throw ParseError("not a permutation", tok.offset);
  return p;
}

}  // namespace

std::vector<DihedralElement> parse_dihedral_words(std::string_view text,
                                                  int n) {
  std::vector<DihedralElement> out;
  for (const auto& tok : split_tokens(text))
    out.push_back(parse_dihedral_token(tok, n));
  if (out.empty()) throw ParseError("empty generator list", 0);
  return out;
}

std::vector<Permutation> parse_permutations(std::string_view text) {
  auto tokens = split_tokens(text);
  if (tokens.empty()) throw ParseError("empty generator list", 0);
  std::vector<Permutation> out;
  int degree = 1;
  for (const auto& tok : tokens) {
    out.push_back(parse_cycles_token(tok));
    degree = std::max(degree, out.back().degree());
  }
  // pad everything to the common domain size
  for (auto& p : out)
    for (int i = p.degree(); i < degree; ++i) p.images.push_back(i);
  return out;
}

std::vector<int> parse_indices(std::string_view text) {
  std::vector<int> out;
  for (const auto& tok : split_tokens(text)) {
    std::size_t end = 0;
    long v = parse_int(tok.text, 0, &end, tok.offset);
    if (end != tok.text.size() || v < 0)
      throw ParseError("expected a non-negative element index", tok.offset);
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw ParseError("empty generator list", 0);
  return out;
}

std::vector<int> parse_generators(const FiniteGroup& g, std::string_view text) {
  std::vector<int> out;
  switch (g.kind()) {
    case FiniteGroup::Kind::Dihedral:
      for (DihedralElement e : parse_dihedral_words(text, g.modulus()))
        out.push_back(g.index_of(e));
      break;
    case FiniteGroup::Kind::Cyclic:
      for (DihedralElement e : parse_dihedral_words(text, g.modulus())) {
        if (e.reflect)
          throw ParseError("reflection token in a cyclic group", 0);
        out.push_back(e.exp);
      }
      break;
    case FiniteGroup::Kind::Permutation:
      for (auto& p : parse_permutations(text)) {
        for (int i = p.degree();
             i < g.permutation_at(FiniteGroup::kIdentity).degree(); ++i)
          p.images.push_back(i);
        out.push_back(g.index_of(p));
      }
      break;
    case FiniteGroup::Kind::Table:
      for (int idx : parse_indices(text)) {
        if (idx >= g.order())
          throw ParseError("element index out of range", 0);
        out.push_back(idx);
      }
      break;
  }
  return out;
}

}  // namespace cayb
