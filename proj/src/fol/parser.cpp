#include <cctype>

#include "bvm/fol/formula.hpp"

namespace bvm::fol {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Not, And, Or, Arrow, Eq, At, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_' || src[i] == '\'')) ++i;
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", start});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '.': k = Tok::Dot; break;
      case '!': k = Tok::Not; break;
      case '&': k = Tok::And; break;
      case '|': k = Tok::Or; break;
      case '=': k = Tok::Eq; break;
      case '@': k = Tok::At; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

bool is_keyword(const std::string& s) { return s == "exists" || s == "forall" || s == "in"; }

class Parser {
 public:
  Parser(std::string_view src, const Signature& sig) : toks_(lex(src)), sig_(sig) {}

  Formula parse_all() {
    Formula f = formula();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(i_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(i_++, toks_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) {
      std::string got = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
      throw ParseError(std::string("expected ") + what + ", got " + got, peek().pos);
    }
    return next();
  }
  std::string variable() {
    const Token& t = expect(Tok::Ident, "variable");
    if (is_keyword(t.text)) throw ParseError("keyword '" + t.text + "' used as a variable", t.pos);
    return t.text;
  }

  Formula formula() {
    Formula f = implication();
    if (peek().kind == Tok::At) {
      const Token& at = next();
      const Token& tag = expect(Tok::Ident, "'Vcheck' after '@'");
      if (tag.text != kGroundPredicate) throw ParseError("unknown relativization '@" + tag.text + "'", at.pos);
      if (!sig_.has_relation(kGroundPredicate)) throw ParseError("relativization needs the Vcheck predicate in the signature", at.pos);
      f = relativize(f);
    }
    return f;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::Arrow)) return Formula::implication(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = Formula::disjunction(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::And)) f = Formula::conjunction(f, unary());
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    if (accept(Tok::Not)) return Formula::negation(unary());
    if (accept(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind == Tok::Ident && (t.text == "exists" || t.text == "forall")) {
      next();
      std::string v = variable();
      expect(Tok::Dot, "'.' after quantified variable");
      Formula body = implication();
      return t.text == "exists" ? Formula::exists(v, body) : Formula::forall(v, body);
    }
    return atom();
  }

  std::vector<std::string> arguments() {
    std::vector<std::string> args;
    expect(Tok::LParen, "'('");
    if (accept(Tok::RParen)) return args;
    do {
      args.push_back(variable());
    } while (accept(Tok::Comma));
    expect(Tok::RParen, "')'");
    return args;
  }

  Formula atom() {
    const Token& head = peek();
    if (head.kind != Tok::Ident) {
      std::string got = head.kind == Tok::End ? "end of input" : "'" + head.text + "'";
      throw ParseError("expected a formula, got " + got, head.pos);
    }
    if (peek(1).kind == Tok::LParen) {
      next();
      if (!sig_.has_relation(head.text)) throw ParseError("unknown relation symbol '" + head.text + "'", head.pos);
      auto args = arguments();
      if (args.size() != sig_.relation_arity(head.text))
        throw ParseError("arity mismatch for '" + head.text + "': expected " + std::to_string(sig_.relation_arity(head.text)) +
                             ", got " + std::to_string(args.size()),
                         head.pos);
      return Formula::relation(head.text, args);
    }
    std::string lhs = variable();
    if (peek().kind == Tok::Ident && peek().text == "in") {
      const Token& in = next();
      if (!sig_.has_relation(kMembership)) throw ParseError("unknown relation symbol 'in'", in.pos);
      return Formula::relation(kMembership, {lhs, variable()});
    }
    expect(Tok::Eq, "'=' or 'in'");
    const Token& rhs = peek();
    if (rhs.kind == Tok::Ident && peek(1).kind == Tok::LParen) {
      next();
      if (!sig_.has_function(rhs.text)) throw ParseError("unknown function symbol '" + rhs.text + "'", rhs.pos);
      auto args = arguments();
      if (args.size() != sig_.function_arity(rhs.text))
        throw ParseError("arity mismatch for '" + rhs.text + "': expected " + std::to_string(sig_.function_arity(rhs.text)) +
                             ", got " + std::to_string(args.size()),
                         rhs.pos);
      return Formula::function_equal(lhs, rhs.text, args);
    }
    return Formula::equal(lhs, variable());
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  const Signature& sig_;
};

}  // namespace

Formula parse(std::string_view source, const Signature& sig) { return Parser(source, sig).parse_all(); }

}  // namespace bvm::fol
