// Copyright 2026 The qpi-tools authors
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

#include "qpi/parser.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qpi {

namespace {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Equals,
  Semi,
  Plus,
  Star,
  TypeArrow,  // ~>
  SeqOp,      // >>>
  ProdOp,     // ***
  Eof,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {
      "def",      "id",      "swapP",    "assoclP",  "assocrP",  "unitelP",
      "unitilP",  "swapT",   "assoclT",  "assocrT",  "unitelT",  "unitilT",
      "dist",     "factor",  "absorbl",  "factorzr", "ctrl",     "inv",
      "arrZ",     "arrP",    "zero",     "assertZero", "lift",   "first",
      "second",   "measureZ", "measureP", "discard", "fst",      "snd",
      "qubit"};
  return kw;
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const int tl = line, tc = col;
    auto push = [&](Tok k, std::string s) {
      out.push_back({k, std::move(s), tl, tc});
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_')) {
        ++j;
      }
      push(Tok::Ident, text.substr(i, j - i));
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      push(Tok::Number, text.substr(i, j - i));
      advance(j - i);
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, "("); advance(1); continue;
      case ')': push(Tok::RParen, ")"); advance(1); continue;
      case '[': push(Tok::LBracket, "["); advance(1); continue;
      case ']': push(Tok::RBracket, "]"); advance(1); continue;
      case ',': push(Tok::Comma, ","); advance(1); continue;
      case ':': push(Tok::Colon, ":"); advance(1); continue;
      case '=': push(Tok::Equals, "="); advance(1); continue;
      case ';': push(Tok::Semi, ";"); advance(1); continue;
      case '+': push(Tok::Plus, "+"); advance(1); continue;
      case '*': {
        std::size_t j = i;
        while (j < text.size() && text[j] == '*') ++j;
        const std::size_t stars = j - i;
        if (stars == 1) {
          push(Tok::Star, "*");
        } else if (stars == 3) {
          push(Tok::ProdOp, "***");
        } else {
          throw ParseError("lex error at " + std::to_string(tl) + ":" +
                           std::to_string(tc) + ": unexpected '" +
                           std::string(stars, '*') + "'");
        }
        advance(stars);
        continue;
      }
      case '>': {
        std::size_t j = i;
        while (j < text.size() && text[j] == '>') ++j;
        if (j - i != 3) {
          throw ParseError("lex error at " + std::to_string(tl) + ":" +
                           std::to_string(tc) + ": expected '>>>'");
        }
        push(Tok::SeqOp, ">>>");
        advance(3);
        continue;
      }
      case '~':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Tok::TypeArrow, "~>");
          advance(2);
          continue;
        }
        [[fallthrough]];
      default:
        throw ParseError("lex error at " + std::to_string(tl) + ":" +
                         std::to_string(tc) + ": unexpected character '" +
                         std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::Eof, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  SourceFile parse() {
    std::vector<Definition> defs;
    while (!at_eof()) {
      expect_keyword("def");
      const Token name_tok = expect(Tok::Ident, "definition name");
      if (keywords().count(name_tok.text)) {
        fail(name_tok, "'" + name_tok.text + "' is a reserved word");
      }
      if (scope_.count(name_tok.text)) {
        fail(name_tok, "duplicate definition of '" + name_tok.text + "'");
      }
      std::optional<TypeExpr> dom, cod;
      if (peek().kind == Tok::Colon) {
        next();
        dom = parse_type();
        expect(Tok::TypeArrow, "'~>'");
        cod = parse_type();
      }
      expect(Tok::Equals, "'='");
      MeasuredTerm term = parse_term();
      if (dom) {
        const TypeExpr actual = typecheck_measured(term, *dom);
        if (cod && actual != *cod) {
          fail(name_tok, "definition '" + name_tok.text +
                             "' has codomain " + actual.str() +
                             " but is annotated " + cod->str());
        }
      }
      scope_.emplace(name_tok.text, term);
      defs.push_back({name_tok.text, dom, cod, term});
    }
    return SourceFile(std::move(defs));
  }

 private:
  const Token& peek(int ahead = 0) const {
    const std::size_t i = std::min(pos_ + static_cast<std::size_t>(ahead),
                                   toks_.size() - 1);
    return toks_[i];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at_eof() const { return peek().kind == Tok::Eof; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError("parse error at " + std::to_string(t.line) + ":" +
                     std::to_string(t.col) + ": " + msg);
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) {
      fail(peek(), "expected " + what + ", got '" + peek().text + "'");
    }
    return next();
  }

  void expect_keyword(const std::string& kw) {
    if (peek().kind != Tok::Ident || peek().text != kw) {
      fail(peek(), "expected '" + kw + "', got '" + peek().text + "'");
    }
    next();
  }

  bool at_keyword(const std::string& kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }

  // ---- types ----

  TypeExpr parse_type() {
    TypeExpr t = parse_type_prod();
    while (peek().kind == Tok::Plus) {
      next();
      t = TypeExpr::sum(t, parse_type_prod());
    }
    return t;
  }

  TypeExpr parse_type_prod() {
    TypeExpr t = parse_type_atom();
    while (peek().kind == Tok::Star) {
      next();
      t = TypeExpr::prod(t, parse_type_atom());
    }
    return t;
  }

  TypeExpr parse_type_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      if (t.text == "0") return TypeExpr::zero();
      if (t.text == "1") return TypeExpr::one();
      fail(t, "types use only the literals 0 and 1");
    }
    if (at_keyword("qubit")) {
      next();
      return qubit();
    }
    if (t.kind == Tok::LParen) {
      next();
      TypeExpr inner = parse_type();
      expect(Tok::RParen, "')'");
      return inner;
    }
    fail(t, "expected a type");
  }

  // ---- core (pi) terms ----

  PiTerm parse_pi() {
    PiTerm c = parse_pi_sum();
    while (peek().kind == Tok::Semi) {
      next();
      c = pi::seq(c, parse_pi_sum());
    }
    return c;
  }

  PiTerm parse_pi_sum() {
    PiTerm c = parse_pi_prod();
    while (peek().kind == Tok::Plus) {
      next();
      c = pi::sum_c(c, parse_pi_prod());
    }
    return c;
  }

  PiTerm parse_pi_prod() {
    PiTerm c = parse_pi_unary();
    while (peek().kind == Tok::Star) {
      next();
      c = pi::prod_c(c, parse_pi_unary());
    }
    return c;
  }

  PiTerm parse_pi_unary() {
    if (at_keyword("inv")) {
      next();
      return pi::inv(parse_pi_unary());
    }
    if (at_keyword("ctrl")) {
      next();
      return pi::ctrl(parse_pi_unary());
    }
    return parse_pi_atom();
  }

  PiTerm parse_pi_atom() {
    const Token t = peek();
    if (t.kind == Tok::LParen) {
      next();
      PiTerm inner = parse_pi();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident) fail(t, "expected a combinator");
    next();
    const std::string& s = t.text;
    if (s == "id") return pi::id();
    if (s == "swapP") return pi::swap_p();
    if (s == "assoclP") return pi::assocl_p();
    if (s == "assocrP") return pi::assocr_p();
    if (s == "unitelP") return pi::unitel_p();
    if (s == "unitilP") return pi::unitil_p();
    if (s == "swapT") return pi::swap_t();
    if (s == "assoclT") return pi::assocl_t();
    if (s == "assocrT") return pi::assocr_t();
    if (s == "unitelT") return pi::unitel_t();
    if (s == "unitilT") return pi::unitil_t();
    if (s == "dist") return pi::dist();
    if (s == "factor") return pi::factor();
    if (s == "absorbl") {
      if (peek().kind == Tok::LBracket) {
        next();
        TypeExpr b = parse_type();
        expect(Tok::RBracket, "']'");
        return pi::absorbl(b);
      }
      return pi::absorbl();
    }
    if (s == "factorzr") {
      expect(Tok::LBracket, "'[' (factorzr needs a type annotation)");
      TypeExpr b = parse_type();
      expect(Tok::RBracket, "']'");
      return pi::factorzr(b);
    }
    fail(t, "unknown combinator '" + s + "'");
  }

  // ---- arrow-layer (lift body) terms ----

  PizhTerm parse_pizh() {
    PizhTerm d = parse_pizh_prod();
    while (peek().kind == Tok::SeqOp) {
      next();
      d = pizh::seq(d, parse_pizh_prod());
    }
    return d;
  }

  PizhTerm parse_pizh_prod() {
    PizhTerm d = parse_pizh_unary();
    while (peek().kind == Tok::ProdOp) {
      next();
      d = pizh::prod(d, parse_pizh_unary());
    }
    return d;
  }

  PizhTerm parse_pizh_unary() {
    if (at_keyword("inv")) {
      next();
      return pizh::inv(parse_pizh_unary());
    }
    if (at_keyword("first") || at_keyword("second")) {
      const bool is_first = peek().text == "first";
      next();
      expect(Tok::LBracket, "'[' (spectator type)");
      TypeExpr spec = parse_type();
      expect(Tok::RBracket, "']'");
      PizhTerm d = parse_pizh_unary();
      return is_first ? pizh::first(d, spec) : pizh::second(d, spec);
    }
    return parse_pizh_atom();
  }

  PizhTerm parse_pizh_atom() {
    const Token t = peek();
    if (t.kind == Tok::LParen) {
      next();
      PizhTerm inner = parse_pizh();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident) fail(t, "expected an arrow-layer term");
    if (t.text == "arrZ" || t.text == "arrP") {
      next();
      PiTerm c = parse_pi_unary();
      return t.text == "arrZ" ? pizh::arr_z(c) : pizh::arr_phi(c);
    }
    next();
    const std::string& s = t.text;
    if (s == "id") return pizh::id();
    if (s == "swapT") return pizh::swap_t();
    if (s == "assoclT") return pizh::assocl_t();
    if (s == "assocrT") return pizh::assocr_t();
    if (s == "unitelT") return pizh::unite_t();
    if (s == "unitilT") return pizh::uniti_t();
    fail(t, "'" + s + "' is not allowed inside a lift body");
  }

  // ---- full (possibly measured) terms ----

  MeasuredTerm parse_term() {
    MeasuredTerm m = parse_term_prod();
    while (peek().kind == Tok::SeqOp) {
      next();
      m = mt::seq(m, parse_term_prod());
    }
    return m;
  }

  MeasuredTerm parse_term_prod() {
    MeasuredTerm m = parse_term_unary();
    while (peek().kind == Tok::ProdOp) {
      next();
      m = mt::prod(m, parse_term_unary());
    }
    return m;
  }

  MeasuredTerm parse_term_unary() {
    if (at_keyword("inv")) {
      next();
      return mt::inv(parse_term_unary());
    }
    if (at_keyword("first") || at_keyword("second")) {
      const bool is_first = peek().text == "first";
      next();
      expect(Tok::LBracket, "'[' (spectator type)");
      TypeExpr spec = parse_type();
      expect(Tok::RBracket, "']'");
      MeasuredTerm m = parse_term_unary();
      return is_first ? mt::first(m, spec) : mt::second(m, spec);
    }
    return parse_term_atom();
  }

  MeasuredTerm parse_term_atom() {
    const Token t = peek();
    if (t.kind == Tok::LParen) {
      next();
      MeasuredTerm inner = parse_term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident) fail(t, "expected a term");
    const std::string& s = t.text;
    if (s == "arrZ" || s == "arrP") {
      next();
      PiTerm c = parse_pi_unary();
      return mt::pure(arrow::arr(s == "arrZ" ? pizh::arr_z(c)
                                             : pizh::arr_phi(c)));
    }
    if (s == "lift") {
      next();
      expect(Tok::LBracket, "'[' (ancilla types)");
      TypeExpr n1 = parse_type();
      expect(Tok::Comma, "','");
      TypeExpr n2 = parse_type();
      expect(Tok::RBracket, "']'");
      PizhTerm body = parse_pizh_unary();
      return mt::pure(arrow::lift(AncType::from_type(n1), body,
                                  AncType::from_type(n2)));
    }
    next();
    if (s == "zero") return mt::pure(arrow::zero());
    if (s == "assertZero") return mt::pure(arrow::assert_zero());
    if (s == "id") return mt::pure(arrow::id());
    if (s == "swapT") return mt::pure(arrow::swap_t());
    if (s == "assoclT") return mt::pure(arrow::assocl_t());
    if (s == "assocrT") return mt::pure(arrow::assocr_t());
    if (s == "unitelT") return mt::pure(arrow::unite_t());
    if (s == "unitilT") return mt::pure(arrow::uniti_t());
    if (s == "measureZ") return mt::measure_z();
    if (s == "measureP") return mt::measure_phi();
    if (s == "discard") return mt::discard();
    if (s == "fst") return mt::fst();
    if (s == "snd") return mt::snd();
    if (keywords().count(s)) fail(t, "unexpected '" + s + "' in a term");
    const auto it = scope_.find(s);
    if (it == scope_.end()) fail(t, "unknown name '" + s + "'");
    return mt::ref(s, it->second);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, MeasuredTerm> scope_;
};

}  // namespace

const Definition& SourceFile::find(const std::string& name) const {
  for (const Definition& d : defs_) {
    if (d.name == name) return d;
  }
  throw Error("no definition named '" + name + "'");
}

bool SourceFile::contains(const std::string& name) const {
  for (const Definition& d : defs_) {
    if (d.name == name) return true;
  }
  return false;
}

SourceFile parse_source(const std::string& text) {
  return Parser(text).parse();
}

SourceFile parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_source(ss.str());
}

std::string print_source(const SourceFile& f) {
  std::string out;
  for (const Definition& d : f.defs()) {
    out += "def " + d.name;
    if (d.dom) {
      out += " : " + d.dom->str() + " ~> ";
      out += d.cod ? d.cod->str()
                   : typecheck_measured(d.term, *d.dom).str();
    }
    out += " = " + to_string(d.term) + "\n";
  }
  return out;
}

}  // namespace qpi
