#include <algorithm>
#include <cctype>

#include "pomlog/error.hpp"
#include "pomlog/formula.hpp"

namespace pomlog {

namespace {

enum class Tok {
  Ident,
  Number,
  Bracket,  // whole "[...]" literal
  LParen,
  RParen,
  Comma,
  Dot,
  Bang,
  Amp,
  Pipe,
  Arrow,
  Lt,
  Tilde,
  Equal,
  Caret,
  Plus,
  Minus,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    const std::size_t start = i;
    const char c = s[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (c == '[') {
      const std::size_t close = s.find(']', i);
      if (close == std::string_view::npos) throw SyntaxError("unterminated '['", start);
      i = close + 1;
      out.push_back({Tok::Bracket, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      i += 2;
      out.push_back({Tok::Arrow, "->", start});
      continue;
    }
    Tok k;
    switch (c) {
      case '(':
        k = Tok::LParen;
        break;
      case ')':
        k = Tok::RParen;
        break;
      case ',':
        k = Tok::Comma;
        break;
      case '.':
        k = Tok::Dot;
        break;
      case '!':
        k = Tok::Bang;
        break;
      case '&':
        k = Tok::Amp;
        break;
      case '|':
        k = Tok::Pipe;
        break;
      case '<':
        k = Tok::Lt;
        break;
      case '~':
        k = Tok::Tilde;
        break;
      case '=':
        k = Tok::Equal;
        break;
      case '^':
        k = Tok::Caret;
        break;
      case '+':
        k = Tok::Plus;
        break;
      case '-':
        k = Tok::Minus;
        break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
    ++i;
    out.push_back({k, std::string(1, c), start});
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(Logic logic, std::string_view text, const ParseOptions& options)
      : logic_(logic), toks_(lex(text)), options_(options) {}

  FormulaPtr run() {
    FormulaPtr f = formula();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  struct Binding {
    std::string name;
    bool is_set;
  };

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, std::string_view what) {
    if (peek().kind != k) fail("expected " + std::string(what));
    return take();
  }
  bool at_ident(std::string_view name, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && peek(ahead).text == name;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, peek().pos); }

  bool temporal() const { return !is_first_order(logic_); }

  FormulaPtr check(FormulaPtr f, std::size_t pos) const {
    if (!allowed_in(logic_, f->kind))
      throw SyntaxError("operator not available in " + std::string(to_string(logic_)), pos);
    return f;
  }

  void check_label(Label a) const {
    if (options_.alphabet && !options_.alphabet->contains(a))
      throw AlphabetError("label '" + a.name() + "' not in " + options_.alphabet->to_string());
  }

  void use_var(const std::string& name, bool is_set, std::size_t pos) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->name != name) continue;
      if (it->is_set != is_set)
        throw ScopeError("'" + name + "' is a " + (it->is_set ? "set" : "first-order") +
                         " variable (at " + std::to_string(pos) + ")");
      return;
    }
    const auto& free = is_set ? options_.free_set_vars : options_.free_vars;
    if (std::find(free.begin(), free.end(), name) != free.end()) return;
    throw ScopeError("unbound variable '" + name + "' (at " + std::to_string(pos) + ")");
  }

  std::string variable(bool is_set) {
    const Token& t = expect(Tok::Ident, "a variable");
    use_var(t.text, is_set, t.pos);
    return t.text;
  }

  // Quantifier prefix at the current token, if any.
  bool at_quantifier() const {
    if (!is_first_order(logic_) || peek().kind != Tok::Ident) return false;
    const std::string& t = peek().text;
    if (t == "E" && peek(1).kind == Tok::Caret) return true;
    return (t == "E" || t == "A" || t == "E2" || t == "A2") && peek(1).kind == Tok::Ident &&
           peek(2).kind == Tok::Dot;
  }

  FormulaPtr formula() {
    if (at_quantifier()) return quantified();
    FormulaPtr lhs = disjunction();
    if (peek().kind == Tok::Arrow) {
      const std::size_t pos = take().pos;
      return check(mk::implies(lhs, formula()), pos);
    }
    return lhs;
  }

  FormulaPtr quantified() {
    const Token q = take();
    int bound = 0;
    if (accept(Tok::Caret)) {
      const Token& n = expect(Tok::Number, "a bound");
      bound = std::stoi(n.text);
    }
    const bool is_set = q.text == "E2" || q.text == "A2" || bound > 0;
    const Token& v = expect(Tok::Ident, "a variable");
    expect(Tok::Dot, "'.'");
    scope_.push_back({v.text, is_set});
    FormulaPtr body = formula();
    scope_.pop_back();
    FormulaPtr f;
    if (bound > 0)
      f = mk::exists_bounded(v.text, bound, body);
    else if (q.text == "E")
      f = mk::exists(v.text, body);
    else if (q.text == "A")
      f = mk::forall(v.text, body);
    else if (q.text == "E2")
      f = mk::exists_set(v.text, body);
    else
      f = mk::forall_set(v.text, body);
    return check(f, q.pos);
  }

  // Right operand of a binary connective: a quantifier extends to the right.
  template <typename Next>
  FormulaPtr operand(Next next) {
    if (at_quantifier()) return quantified();
    return (this->*next)();
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (peek().kind == Tok::Pipe) {
      const std::size_t pos = take().pos;
      f = check(mk::disj(f, operand(&Parser::conjunction)), pos);
    }
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = until();
    while (peek().kind == Tok::Amp) {
      const std::size_t pos = take().pos;
      f = check(mk::conj(f, operand(&Parser::until)), pos);
    }
    return f;
  }

  FormulaPtr until() {
    FormulaPtr f = unary();
    if (temporal() && at_ident("U")) {
      const std::size_t pos = take().pos;
      return check(mk::until(f, operand(&Parser::until)), pos);
    }
    return f;
  }

  FormulaPtr unary() {
    if (at_quantifier()) return quantified();
    const Token& t = peek();
    if (t.kind == Tok::Bang) {
      take();
      return mk::neg(unary());
    }
    if (temporal() && t.kind == Tok::Ident) {
      const std::size_t pos = t.pos;
      if (t.text == "X") {
        take();
        if (accept(Tok::Plus)) return check(mk::next_start(unary()), pos);
        if (accept(Tok::Minus)) return check(mk::next_term(unary()), pos);
        return check(mk::next(unary()), pos);
      }
      if (t.text == "F") {
        take();
        return check(mk::eventually(unary()), pos);
      }
      if (t.text == "G") {
        take();
        return check(mk::globally(unary()), pos);
      }
      if (t.text == "EX") {
        take();
        return check(mk::exists_next(unary()), pos);
      }
      if (t.text == "On") {
        take();
        return check(mk::evord_next(unary()), pos);
      }
      if (t.text == "Op") {
        take();
        return check(mk::evord_prev(unary()), pos);
      }
    }
    return atom();
  }

  FormulaPtr atom() {
    const Token& t = peek();
    const std::size_t pos = t.pos;
    if (accept(Tok::LParen)) {
      FormulaPtr f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind == Tok::Bracket) return bracket_atom();
    if (t.kind != Tok::Ident)
      fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    if (t.text == "true") {
      take();
      return mk::truth();
    }
    if (t.text == "false") {
      take();
      return mk::falsity();
    }
    if (temporal()) return event_atom();

    if (t.text == "sim" && peek(1).kind == Tok::LParen) {
      take();
      take();
      std::string x = variable(false);
      expect(Tok::Comma, "','");
      const int i = slot();
      expect(Tok::Comma, "','");
      std::string y = variable(false);
      expect(Tok::Comma, "','");
      const int j = slot();
      expect(Tok::RParen, "')'");
      return check(mk::sim(x, i, y, j), pos);
    }
    if (peek(1).kind == Tok::LParen) {
      const std::string name = take().text;
      take();
      std::string x = variable(false);
      expect(Tok::RParen, "')'");
      if (name == "S") return check(mk::start(x), pos);
      if (name == "T") return check(mk::term(x), pos);
      Label a(name);
      check_label(a);
      return check(mk::label(a, x), pos);
    }
    // Infix relation between variables.
    const Token& op = peek(1);
    if (op.kind == Tok::Lt || op.kind == Tok::Tilde || op.kind == Tok::Equal ||
        (op.kind == Tok::Ident && op.text == "in")) {
      std::string x = variable(false);
      const Token rel = take();
      if (rel.kind == Tok::Ident) return check(mk::in(x, variable(true)), pos);
      std::string y = variable(false);
      if (rel.kind == Tok::Equal) return check(mk::eq(x, y), pos);
      if (rel.kind == Tok::Tilde) return check(mk::evord(x, y), pos);
      const bool words = logic_ == Logic::FoSt || logic_ == Logic::FoStExt;
      return check(words ? mk::less(x, y) : mk::prec(x, y), pos);
    }
    fail("expected an atom");
  }

  int slot() {
    const Token& n = expect(Tok::Number, "a slot");
    const int s = std::stoi(n.text);
    if (s < 1 || (options_.k && static_cast<std::size_t>(s) > *options_.k))
      throw AlphabetError("slot " + n.text + " out of range");
    return s;
  }

  FormulaPtr event_atom() {
    const Token t = take();
    if (logic_ != Logic::Eptl) throw SyntaxError("unexpected '" + t.text + "'", t.pos);
    if (t.text == "S") return mk::event_start();
    if (t.text == "T") return mk::event_term();
    static const char* kReserved[] = {"X", "U", "F", "G", "EX", "On", "Op"};
    for (const char* r : kReserved)
      if (t.text == r) throw SyntaxError("unexpected '" + t.text + "'", t.pos);
    Label a(t.text);
    check_label(a);
    return mk::event_label(a);
  }

  FormulaPtr bracket_atom() {
    const Token t = take();
    const bool st = logic_ == Logic::LtlSt || logic_ == Logic::FoSt || logic_ == Logic::FoStExt;
    if (!st) {
      if (logic_ != Logic::Sptl && logic_ != Logic::Cptl)
        throw SyntaxError("letter literal not available in " + std::string(to_string(logic_)),
                          t.pos);
      if (t.text.find('*') != std::string::npos)
        throw AlphabetError("ST letter " + t.text + " where a conclist is expected");
      Conclist u;
      try {
        u = parse_conclist(t.text);
      } catch (const SyntaxError& e) {
        throw SyntaxError(e.what(), t.pos + e.position());
      }
      for (Label a : u.items) check_label(a);
      if (options_.k && u.size() > *options_.k)
        throw AlphabetError("conclist " + t.text + " not in Conc_" + std::to_string(*options_.k));
      return mk::conclist(std::move(u));
    }
    StLetter p;
    try {
      p = parse_st_letter(t.text);
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.what(), t.pos + e.position());
    }
    for (const auto& item : p.items) check_label(item.label);
    if (!p.is_starter() && !p.is_terminator())
      throw AlphabetError("letter " + t.text + " is neither a starter nor a terminator");
    if (options_.k && p.size() > *options_.k)
      throw AlphabetError("letter " + t.text + " not in box_" + std::to_string(*options_.k));
    if (logic_ == Logic::LtlSt) return mk::ltl_letter(std::move(p));
    expect(Tok::LParen, "'(' after a letter predicate");
    std::string x = variable(false);
    expect(Tok::RParen, "')'");
    return mk::letter(std::move(p), x);
  }

  Logic logic_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ParseOptions& options_;
  std::vector<Binding> scope_;
};

}  // namespace

FormulaPtr parse(Logic logic, std::string_view text, const ParseOptions& options) {
  return Parser(logic, text, options).run();
}

}  // namespace pomlog
