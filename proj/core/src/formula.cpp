#include "pomlog/formula.hpp"

#include <algorithm>
#include <array>

#include "pomlog/error.hpp"

namespace pomlog {

namespace {

constexpr std::array<std::pair<Logic, std::string_view>, 8> kLogicNames{{
    {Logic::FoPomset, "fo-pomset"},
    {Logic::MsoPomset, "mso-pomset"},
    {Logic::FoSt, "fo-st"},
    {Logic::FoStExt, "fo-st-ext"},
    {Logic::LtlSt, "ltl-st"},
    {Logic::Sptl, "sptl"},
    {Logic::Eptl, "eptl"},
    {Logic::Cptl, "cptl"},
}};

FormulaPtr node(Kind kind, FormulaPtr lhs = nullptr, FormulaPtr rhs = nullptr) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

FormulaPtr binder(Kind kind, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->var = std::move(var);
  f->lhs = std::move(body);
  return f;
}

FormulaPtr vars(Kind kind, std::string x, std::string y = {}) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->var = std::move(x);
  f->var2 = std::move(y);
  return f;
}

}  // namespace

std::string_view to_string(Logic logic) {
  for (const auto& [l, name] : kLogicNames)
    if (l == logic) return name;
  return "?";
}

Logic logic_from_string(std::string_view tag) {
  for (const auto& [l, name] : kLogicNames)
    if (name == tag) return l;
  throw SyntaxError("unknown logic '" + std::string(tag) + "'", 0);
}

bool is_first_order(Logic logic) {
  return logic == Logic::FoPomset || logic == Logic::MsoPomset || logic == Logic::FoSt ||
         logic == Logic::FoStExt;
}

bool is_pomset_logic(Logic logic) {
  return logic == Logic::FoPomset || logic == Logic::MsoPomset || logic == Logic::Eptl ||
         logic == Logic::Cptl || logic == Logic::Sptl;
}

bool operator==(const Formula& a, const Formula& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.var != b.var || a.var2 != b.var2 || a.slot1 != b.slot1 ||
      a.slot2 != b.slot2 || a.label != b.label || a.letter != b.letter || a.conclist != b.conclist)
    return false;
  auto same = [](const FormulaPtr& x, const FormulaPtr& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

namespace mk {

FormulaPtr truth() {
  static const FormulaPtr t = node(Kind::True);
  return t;
}
FormulaPtr falsity() {
  static const FormulaPtr f = node(Kind::False);
  return f;
}
FormulaPtr neg(FormulaPtr f) { return node(Kind::Not, std::move(f)); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return node(Kind::And, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return node(Kind::Or, std::move(a), std::move(b)); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return node(Kind::Implies, std::move(a), std::move(b));
}

FormulaPtr conj_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return truth();
  FormulaPtr acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

FormulaPtr disj_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return falsity();
  FormulaPtr acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

FormulaPtr exists(std::string var, FormulaPtr body) {
  return binder(Kind::Exists, std::move(var), std::move(body));
}
FormulaPtr forall(std::string var, FormulaPtr body) {
  return binder(Kind::Forall, std::move(var), std::move(body));
}
FormulaPtr exists_set(std::string var, FormulaPtr body) {
  return binder(Kind::ExistsSet, std::move(var), std::move(body));
}
FormulaPtr forall_set(std::string var, FormulaPtr body) {
  return binder(Kind::ForallSet, std::move(var), std::move(body));
}
FormulaPtr exists_bounded(std::string var, int bound, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::ExistsBounded;
  f->var = std::move(var);
  f->slot1 = bound;
  f->lhs = std::move(body);
  return f;
}

FormulaPtr label(Label a, std::string var) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::LabelAtom;
  f->label = a;
  f->var = std::move(var);
  return f;
}
FormulaPtr start(std::string var) { return vars(Kind::StartAtom, std::move(var)); }
FormulaPtr term(std::string var) { return vars(Kind::TermAtom, std::move(var)); }
FormulaPtr prec(std::string x, std::string y) {
  return vars(Kind::Prec, std::move(x), std::move(y));
}
FormulaPtr evord(std::string x, std::string y) {
  return vars(Kind::EvOrd, std::move(x), std::move(y));
}
FormulaPtr eq(std::string x, std::string y) { return vars(Kind::Eq, std::move(x), std::move(y)); }
FormulaPtr in(std::string x, std::string set) {
  return vars(Kind::In, std::move(x), std::move(set));
}

FormulaPtr letter(StLetter p, std::string var) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::LetterAtom;
  f->letter = std::move(p);
  f->var = std::move(var);
  return f;
}
FormulaPtr less(std::string x, std::string y) {
  return vars(Kind::Less, std::move(x), std::move(y));
}
FormulaPtr sim(std::string x, int i, std::string y, int j) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::SameEvent;
  f->var = std::move(x);
  f->var2 = std::move(y);
  f->slot1 = i;
  f->slot2 = j;
  return f;
}

FormulaPtr ltl_letter(StLetter p) { return letter(std::move(p), {}); }
FormulaPtr conclist(Conclist u) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::ConclistAtom;
  f->conclist = std::move(u);
  return f;
}
FormulaPtr next(FormulaPtr f) { return node(Kind::Next, std::move(f)); }
FormulaPtr until(FormulaPtr a, FormulaPtr b) {
  return node(Kind::Until, std::move(a), std::move(b));
}
FormulaPtr eventually(FormulaPtr f) { return node(Kind::Eventually, std::move(f)); }
FormulaPtr globally(FormulaPtr f) { return node(Kind::Globally, std::move(f)); }
FormulaPtr next_start(FormulaPtr f) { return node(Kind::NextStart, std::move(f)); }
FormulaPtr next_term(FormulaPtr f) { return node(Kind::NextTerm, std::move(f)); }

FormulaPtr event_label(Label a) { return label(a, {}); }
FormulaPtr event_start() { return node(Kind::StartAtom); }
FormulaPtr event_term() { return node(Kind::TermAtom); }
FormulaPtr exists_next(FormulaPtr f) { return node(Kind::ExistsNext, std::move(f)); }
FormulaPtr evord_next(FormulaPtr f) { return node(Kind::EvOrdNext, std::move(f)); }
FormulaPtr evord_prev(FormulaPtr f) { return node(Kind::EvOrdPrev, std::move(f)); }

}  // namespace mk

// ------------------------------------------------------------------ printing

namespace {

enum Prec : int { kQuant = 0, kImp, kOr, kAnd, kUntil, kUnary, kAtom };

int precedence(Kind k) {
  switch (k) {
    case Kind::Exists:
    case Kind::Forall:
    case Kind::ExistsSet:
    case Kind::ForallSet:
    case Kind::ExistsBounded:
      return kQuant;
    case Kind::Implies:
      return kImp;
    case Kind::Or:
      return kOr;
    case Kind::And:
      return kAnd;
    case Kind::Until:
    case Kind::Prec:
    case Kind::EvOrd:
    case Kind::Eq:
    case Kind::In:
    case Kind::Less:
      return kUntil;
    case Kind::Not:
    case Kind::Next:
    case Kind::Eventually:
    case Kind::Globally:
    case Kind::NextStart:
    case Kind::NextTerm:
    case Kind::ExistsNext:
    case Kind::EvOrdNext:
    case Kind::EvOrdPrev:
      return kUnary;
    default:
      return kAtom;
  }
}

void print_into(const Formula& f, int need, std::string& out);

void print_body(const Formula& f, std::string& out) {
  auto unary = [&](std::string_view op) {
    out += op;
    print_into(*f.lhs, kUnary, out);
  };
  auto infix = [&](int l, std::string_view op, int r) {
    print_into(*f.lhs, l, out);
    out += op;
    print_into(*f.rhs, r, out);
  };
  auto quant = [&](std::string_view q) {
    out += q;
    out += f.var;
    out += ". ";
    print_into(*f.lhs, kQuant, out);
  };
  switch (f.kind) {
    case Kind::True:
      out += "true";
      break;
    case Kind::False:
      out += "false";
      break;
    case Kind::Not:
      unary("!");
      break;
    case Kind::And:
      infix(kAnd, " & ", kUntil);
      break;
    case Kind::Or:
      infix(kOr, " | ", kAnd);
      break;
    case Kind::Implies:
      infix(kOr, " -> ", kImp);
      break;
    case Kind::Until:
      infix(kUnary, " U ", kUntil);
      break;
    case Kind::Exists:
      quant("E ");
      break;
    case Kind::Forall:
      quant("A ");
      break;
    case Kind::ExistsSet:
      quant("E2 ");
      break;
    case Kind::ForallSet:
      quant("A2 ");
      break;
    case Kind::ExistsBounded:
      quant("E^" + std::to_string(f.slot1) + " ");
      break;
    case Kind::LabelAtom:
      out += f.label.name();
      if (!f.var.empty()) out += "(" + f.var + ")";
      break;
    case Kind::StartAtom:
      out += "S";
      if (!f.var.empty()) out += "(" + f.var + ")";
      break;
    case Kind::TermAtom:
      out += "T";
      if (!f.var.empty()) out += "(" + f.var + ")";
      break;
    case Kind::Prec:
    case Kind::Less:
      out += f.var + " < " + f.var2;
      break;
    case Kind::EvOrd:
      out += f.var + " ~ " + f.var2;
      break;
    case Kind::Eq:
      out += f.var + " = " + f.var2;
      break;
    case Kind::In:
      out += f.var + " in " + f.var2;
      break;
    case Kind::LetterAtom:
      out += to_string(f.letter);
      if (!f.var.empty()) out += "(" + f.var + ")";
      break;
    case Kind::SameEvent:
      out += "sim(" + f.var + "," + std::to_string(f.slot1) + "," + f.var2 + "," +
             std::to_string(f.slot2) + ")";
      break;
    case Kind::ConclistAtom:
      out += conclist_literal(f.conclist);
      break;
    case Kind::Next:
      unary("X ");
      break;
    case Kind::Eventually:
      unary("F ");
      break;
    case Kind::Globally:
      unary("G ");
      break;
    case Kind::NextStart:
      unary("X+ ");
      break;
    case Kind::NextTerm:
      unary("X- ");
      break;
    case Kind::ExistsNext:
      unary("EX ");
      break;
    case Kind::EvOrdNext:
      unary("On ");
      break;
    case Kind::EvOrdPrev:
      unary("Op ");
      break;
  }
}

void print_into(const Formula& f, int need, std::string& out) {
  if (precedence(f.kind) < need) {
    out += '(';
    print_body(f, out);
    out += ')';
  } else {
    print_body(f, out);
  }
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto use = [&](const std::string& v) {
    if (!v.empty() && std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
  };
  switch (f.kind) {
    case Kind::Exists:
    case Kind::Forall:
    case Kind::ExistsSet:
    case Kind::ForallSet:
    case Kind::ExistsBounded:
      bound.push_back(f.var);
      collect_free(*f.lhs, bound, out);
      bound.pop_back();
      return;
    default:
      break;
  }
  use(f.var);
  use(f.var2);
  if (f.lhs) collect_free(*f.lhs, bound, out);
  if (f.rhs) collect_free(*f.rhs, bound, out);
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_into(f, kQuant, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

int depth(const Formula& f) {
  int d = 0;
  if (f.lhs) d = std::max(d, 1 + depth(*f.lhs));
  if (f.rhs) d = std::max(d, 1 + depth(*f.rhs));
  return d;
}

std::size_t node_count(const Formula& f) {
  return 1 + (f.lhs ? node_count(*f.lhs) : 0) + (f.rhs ? node_count(*f.rhs) : 0);
}

bool allowed_in(Logic logic, Kind kind) {
  switch (kind) {
    case Kind::True:
    case Kind::False:
    case Kind::Not:
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return true;
    case Kind::Exists:
    case Kind::Forall:
    case Kind::Eq:
      return is_first_order(logic);
    case Kind::ExistsSet:
    case Kind::ForallSet:
    case Kind::ExistsBounded:
    case Kind::In:
      return logic == Logic::MsoPomset;
    case Kind::LabelAtom:
    case Kind::StartAtom:
    case Kind::TermAtom:
      return logic == Logic::FoPomset || logic == Logic::MsoPomset || logic == Logic::Eptl;
    case Kind::Prec:
    case Kind::EvOrd:
      return logic == Logic::FoPomset || logic == Logic::MsoPomset;
    case Kind::LetterAtom:
      return logic == Logic::FoSt || logic == Logic::FoStExt || logic == Logic::LtlSt;
    case Kind::Less:
      return logic == Logic::FoSt || logic == Logic::FoStExt;
    case Kind::SameEvent:
      return logic == Logic::FoStExt;
    case Kind::ConclistAtom:
      return logic == Logic::Sptl || logic == Logic::Cptl;
    case Kind::Next:
      return logic == Logic::LtlSt || logic == Logic::Sptl;
    case Kind::Until:
    case Kind::Eventually:
    case Kind::Globally:
      return logic == Logic::LtlSt || logic == Logic::Sptl || logic == Logic::Cptl ||
             logic == Logic::Eptl;
    case Kind::NextStart:
    case Kind::NextTerm:
      return logic == Logic::Cptl;
    case Kind::ExistsNext:
    case Kind::EvOrdNext:
    case Kind::EvOrdPrev:
      return logic == Logic::Eptl;
  }
  return false;
}

FormulaPtr desugar(Logic logic, const FormulaPtr& f) {
  using namespace mk;
  if (f->is_atom()) {
    if (f->kind != Kind::Eq) return f;
    const std::string& x = f->var;
    const std::string& y = f->var2;
    if (logic == Logic::FoSt || logic == Logic::FoStExt)
      return conj(neg(less(x, y)), neg(less(y, x)));
    return conj_all({neg(prec(x, y)), neg(prec(y, x)), neg(evord(x, y)), neg(evord(y, x))});
  }
  FormulaPtr a = desugar(logic, f->lhs);
  FormulaPtr b = f->rhs ? desugar(logic, f->rhs) : nullptr;
  switch (f->kind) {
    case Kind::Or:
      return neg(conj(neg(a), neg(b)));
    case Kind::Implies:
      return neg(conj(a, neg(b)));
    case Kind::Forall:
      return neg(exists(f->var, neg(a)));
    case Kind::ForallSet:
      return neg(exists_set(f->var, neg(a)));
    case Kind::Eventually:
      return until(truth(), a);
    case Kind::Globally:
      return neg(until(truth(), neg(a)));
    default:
      break;
  }
  if (a == f->lhs && b == f->rhs) return f;
  auto copy = std::make_shared<Formula>(*f);
  copy->lhs = std::move(a);
  copy->rhs = std::move(b);
  return copy;
}

}  // namespace pomlog
