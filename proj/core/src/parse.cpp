#include "indshape/fol/parse.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace indshape::fol {

namespace {

enum class Tok {
  Ident, Number, LParen, RParen,
  Plus, Star,
  Eq, Lt, Leq, Gt, Geq,
  Tilde, Amp, Bar, Arrow, DArrow,
  Bang, Quest, Dot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  auto push = [&](Tok k, size_t pos, std::string text = {}) {
    out.push_back({k, std::move(text), pos});
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    size_t pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      push(Tok::Number, pos, std::string(s.substr(i, j - i)));
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      push(Tok::Ident, pos, std::string(s.substr(i, j - i)));
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, pos); ++i; break;
      case ')': push(Tok::RParen, pos); ++i; break;
      case '+': push(Tok::Plus, pos); ++i; break;
      case '*': push(Tok::Star, pos); ++i; break;
      case '=': push(Tok::Eq, pos); ++i; break;
      case '~': push(Tok::Tilde, pos); ++i; break;
      case '&': push(Tok::Amp, pos); ++i; break;
      case '|': push(Tok::Bar, pos); ++i; break;
      case '!': push(Tok::Bang, pos); ++i; break;
      case '?': push(Tok::Quest, pos); ++i; break;
      case '.': push(Tok::Dot, pos); ++i; break;
      case '<':
        if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') {
          push(Tok::DArrow, pos); i += 3;
        } else if (i + 1 < s.size() && s[i + 1] == '=') {
          push(Tok::Leq, pos); i += 2;
        } else {
          push(Tok::Lt, pos); ++i;
        }
        break;
      case '>':
        if (i + 1 < s.size() && s[i + 1] == '=') { push(Tok::Geq, pos); i += 2; }
        else { push(Tok::Gt, pos); ++i; }
        break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') { push(Tok::Arrow, pos); i += 2; }
        else throw ParseError("unbound token '-'", pos);
        break;
      default:
        throw ParseError(std::string("unbound token '") + c + "'", pos);
    }
  }
  push(Tok::End, s.size());
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, bool templates)
      : toks_(lex(text)), templates_(templates) {}

  FormulaPtr formula_all() {
    FormulaPtr f = formula();
    expect(Tok::End, "trailing input");
    return f;
  }

  TermPtr term_all() {
    TermPtr t = term();
    expect(Tok::End, "trailing input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  Token take() { return toks_[idx_++]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool eat(Tok k) {
    if (!at(k)) return false;
    ++idx_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!eat(k)) throw ParseError(std::string("expected ") + what, peek().pos);
  }

  // formula := iff; iff is left associative, -> is right associative.
  FormulaPtr formula() {
    FormulaPtr f = impl();
    while (eat(Tok::DArrow)) f = iff(f, impl());
    return f;
  }

  FormulaPtr impl() {
    FormulaPtr f = disj();
    if (eat(Tok::Arrow)) return implies(f, impl());
    return f;
  }

  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (eat(Tok::Bar)) f = lor(f, conj());
    return f;
  }

  FormulaPtr conj() {
    FormulaPtr f = unary();
    while (eat(Tok::Amp)) f = land(f, unary());
    return f;
  }

  FormulaPtr unary() {
    if (eat(Tok::Tilde)) return lnot(unary());
    if (at(Tok::Bang) || at(Tok::Quest)) {
      bool uni = take().kind == Tok::Bang;
      if (!at(Tok::Ident)) throw ParseError("expected variable after quantifier", peek().pos);
      std::string v = take().text;
      expect(Tok::Dot, "'.' after quantified variable");
      FormulaPtr body = formula();  // maximal scope
      return uni ? forall(std::move(v), std::move(body))
                 : exists(std::move(v), std::move(body));
    }
    return atom();
  }

  FormulaPtr atom() {
    // Template predicate atom: ident '(' term ')'.
    if (at(Tok::Ident) && idx_ + 1 < toks_.size() && toks_[idx_ + 1].kind == Tok::LParen) {
      if (!templates_)
        throw ParseError("unbound token '" + peek().text + "(' (predicate atoms only in templates)",
                         peek().pos);
      std::string name = take().text;
      expect(Tok::LParen, "'('");
      TermPtr arg = term();
      expect(Tok::RParen, "')'");
      return pred(std::move(name), std::move(arg));
    }
    if (at(Tok::LParen)) {
      // Could be a parenthesized term starting an atom, or a parenthesized
      // formula. Try the atom reading first and rewind on failure.
      size_t save = idx_;
      try {
        return relational();
      } catch (const ParseError&) {
        idx_ = save;
      }
      expect(Tok::LParen, "'('");
      FormulaPtr f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    return relational();
  }

  FormulaPtr relational() {
    TermPtr l = term();
    switch (peek().kind) {
      case Tok::Eq: take(); return eq(l, term());
      case Tok::Lt: take(); return lt(l, term());
      case Tok::Leq: take(); { TermPtr r = term(); return leq(l, r); }
      case Tok::Gt: take(); return lt(term(), l);
      case Tok::Geq: take(); { TermPtr r = term(); return leq(r, l); }
      default:
        throw ParseError("expected relation", peek().pos);
    }
  }

  TermPtr term() {
    TermPtr t = factor();
    while (eat(Tok::Plus)) t = Term::add(t, factor());
    return t;
  }

  TermPtr factor() {
    TermPtr t = primary();
    while (eat(Tok::Star)) t = Term::mul(t, primary());
    return t;
  }

  TermPtr primary() {
    if (at(Tok::Number)) {
      Token tok = take();
      if (tok.text == "0") return Term::zero();
      if (tok.text == "1") return Term::one();
      unsigned long n = 0;
      for (char c : tok.text) {
        if (n > (std::numeric_limits<unsigned long>::max() - 9) / 10)
          throw ParseError("numeral literal too large", tok.pos);
        n = n * 10 + static_cast<unsigned long>(c - '0');
      }
      return numeral(n);
    }
    if (at(Tok::Ident)) return Term::var(take().text);
    if (eat(Tok::LParen)) {
      TermPtr t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    throw ParseError("expected term", peek().pos);
  }

  std::vector<Token> toks_;
  size_t idx_ = 0;
  bool templates_;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  return Parser(text, /*templates=*/false).formula_all();
}

FormulaPtr parse_template(std::string_view text) {
  return Parser(text, /*templates=*/true).formula_all();
}

TermPtr parse_term(std::string_view text) {
  return Parser(text, /*templates=*/false).term_all();
}

}  // namespace indshape::fol
