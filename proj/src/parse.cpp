#include "parse.hpp"

#include <vector>

#include "errors.hpp"
#include "normalize.hpp"

namespace minimod {

namespace {

enum class TokKind { LParen, RParen, Backslash, Colon, Dot, Arrow, Ident, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_ident_char(char c) {
  return is_alpha(c) || (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '(':
        out.push_back({TokKind::LParen, "(", start});
        ++i;
        continue;
      case ')':
        out.push_back({TokKind::RParen, ")", start});
        ++i;
        continue;
      case '\\':
        out.push_back({TokKind::Backslash, "\\", start});
        ++i;
        continue;
      case ':':
        out.push_back({TokKind::Colon, ":", start});
        ++i;
        continue;
      case '.':
        out.push_back({TokKind::Dot, ".", start});
        ++i;
        continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({TokKind::Arrow, "->", start});
          i += 2;
          continue;
        }
        throw parse_error("stray '-'", start);
      default:
        break;
    }
    if (is_alpha(c) || c == '#') {
      std::size_t j = i + (c == '#' ? 1 : 0);
      if (j >= text.size() || !is_alpha(text[j]))
        throw parse_error("invalid identifier", start);
      ++j;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      out.push_back({TokKind::Ident, text.substr(i, j - i), start});
      i = j;
      continue;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", start);
  }
  out.push_back({TokKind::End, "", text.size()});
  return out;
}

struct Parser {
  const std::vector<Token>& toks;
  const Signature* sig = nullptr;
  std::size_t at = 0;

  const Token& peek() const { return toks[at]; }
  Token next() { return toks[at++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, peek().pos);
  }

  void expect(TokKind kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++at;
  }

  Type parse_type_atom() {
    const Token& tok = peek();
    if (tok.kind == TokKind::LParen) {
      ++at;
      Type inner = parse_type_expr();
      expect(TokKind::RParen, "')'");
      return inner;
    }
    if (tok.kind == TokKind::Ident) {
      if (tok.text != "o") fail("expected 'o'");
      ++at;
      return Type::ground();
    }
    fail("expected a type");
  }

  Type parse_type_expr() {
    Type left = parse_type_atom();
    if (peek().kind == TokKind::Arrow) {
      ++at;
      return Type::arrow(left, parse_type_expr());
    }
    return left;
  }

  // binders: innermost last (name, type)
  Term parse_term_atom(std::vector<std::pair<std::string, Type>>& binders) {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokKind::LParen: {
        ++at;
        Term inner = parse_term_expr(binders);
        expect(TokKind::RParen, "')'");
        return inner;
      }
      case TokKind::Backslash: {
        ++at;
        if (peek().kind != TokKind::Ident) fail("expected a binder name");
        Token name = next();
        if (name.text[0] == '#')
          throw parse_error("binder names cannot start with '#'", name.pos);
        expect(TokKind::Colon, "':'");
        Type ty = parse_type_expr();
        expect(TokKind::Dot, "'.'");
        binders.emplace_back(name.text, ty);
        Term body = parse_term_expr(binders);
        binders.pop_back();
        return Term::lam(ty, body);
      }
      case TokKind::Ident: {
        ++at;
        for (std::size_t i = binders.size(); i-- > 0;) {
          if (binders[i].first == tok.text)
            return Term::bvar(static_cast<int>(binders.size() - 1 - i),
                              binders[i].second);
        }
        if (sig->contains(tok.text)) return Term::constant(tok.text);
        throw parse_error("unknown identifier '" + tok.text + "'", tok.pos);
      }
      default:
        fail("expected a term");
    }
  }

  bool starts_atom() const {
    TokKind k = peek().kind;
    return k == TokKind::LParen || k == TokKind::Backslash || k == TokKind::Ident;
  }

  Term parse_term_expr(std::vector<std::pair<std::string, Type>>& binders) {
    Term cur = parse_term_atom(binders);
    while (starts_atom()) {
      std::size_t arg_pos = peek().pos;
      Term arg = parse_term_atom(binders);
      try {
        cur = Term::app(cur, arg);
      } catch (const type_error& e) {
        throw type_error(std::string(e.what()) + " (at offset " +
                         std::to_string(arg_pos) + ")");
      }
    }
    return cur;
  }
};

}  // namespace

Type parse_type(const std::string& text) {
  std::vector<Token> toks = lex(text);
  Parser parser{toks};
  Type result = parser.parse_type_expr();
  if (parser.peek().kind != TokKind::End) parser.fail("trailing input");
  return result;
}

Term parse_term(const std::string& text, const Signature& sig) {
  std::vector<Token> toks = lex(text);
  Parser parser{toks, &sig};
  std::vector<std::pair<std::string, Type>> binders;
  Term raw = parser.parse_term_expr(binders);
  if (parser.peek().kind != TokKind::End) parser.fail("trailing input");
  require(raw.locally_closed() && !raw.has_fvar(), "parsed term not closed");
  return canonicalize(raw);
}

}  // namespace minimod
