#include <doctest.h>

#include <set>

#include "pomlog/error.hpp"
#include "pomlog/formula.hpp"

using namespace pomlog;

TEST_CASE("parse examples") {
  auto f = parse(Logic::FoPomset, "E x. S(x) & T(x)");
  REQUIRE(f->kind == Kind::Exists);
  CHECK(f->var == "x");
  CHECK(f->lhs->kind == Kind::And);
  CHECK(f->lhs->lhs->kind == Kind::StartAtom);
  CHECK(f->lhs->rhs->kind == Kind::TermAtom);

  auto g = parse(Logic::Sptl, "X X [a]");
  REQUIRE(g->kind == Kind::Next);
  REQUIRE(g->lhs->kind == Kind::Next);
  CHECK(g->lhs->lhs->kind == Kind::ConclistAtom);
  CHECK(g->lhs->lhs->conclist == parse_conclist("a"));

  auto h = parse(Logic::Sptl, "[a b] U [d]");
  REQUIRE(h->kind == Kind::Until);
  CHECK(h->lhs->conclist == parse_conclist("a b"));
  CHECK(h->rhs->conclist == parse_conclist("d"));
}

TEST_CASE("print is the inverse of parse") {
  const std::pair<Logic, const char*> cases[] = {
      {Logic::FoPomset, "E x. S(x) & T(x)"},
      {Logic::Sptl, "X X [a]"},
      {Logic::Sptl, "[a b] U [d]"},
      {Logic::Sptl, "[] U [a] U [b]"},
      {Logic::Sptl, "([] U [a]) U [b]"},
      {Logic::Sptl, "!([a] & X true) | F G [b] -> false"},
      {Logic::FoPomset, "A x. E y. x < y | y ~ x -> !(x = y)"},
      {Logic::FoPomset, "(E x. a(x)) & (E y. b(y))"},
      {Logic::MsoPomset, "E2 X. A x. x in X"},
      {Logic::MsoPomset, "E^2 X. E x. x in X"},
      {Logic::FoSt, "E x. E y. x < y & [a*,*b*](x)"},
      {Logic::FoStExt, "A x. E y. sim(x,1,y,2)"},
      {Logic::LtlSt, "F [*c,*d*]"},
      {Logic::LtlSt, "[a*] & X [*a]"},
      {Logic::Cptl, "X+ [a] & X- true"},
      {Logic::Eptl, "EX d | On b & Op S U T"},
      {Logic::Sptl, "[]"},
  };
  for (const auto& [logic, text] : cases) {
    auto f = parse(logic, text);
    CHECK(print(f) == text);
    CHECK(*parse(logic, print(f)) == *f);
  }
  // Non-canonical spellings print canonically.
  CHECK(print(parse(Logic::FoPomset, "E x. !(x=x)")) == "E x. !(x = x)");
  CHECK(print(parse(Logic::Sptl, "((X ([a])))")) == "X [a]");
  CHECK(print(parse(Logic::FoPomset, "a(x) & E y. b(y)", {{"x"}})) == "a(x) & (E y. b(y))");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse(Logic::Sptl, "a_b"), SyntaxError);
  CHECK_THROWS_AS(parse(Logic::Sptl, "[a] &"), SyntaxError);
  CHECK_THROWS_AS(parse(Logic::Sptl, "([a]"), SyntaxError);
  CHECK_THROWS_AS(parse(Logic::FoPomset, "E x. a(y)"), ScopeError);
  CHECK_THROWS_AS(parse(Logic::MsoPomset, "E2 X. X in X"), ScopeError);
  CHECK_THROWS_AS(parse(Logic::MsoPomset, "E x. E2 Y. x < Y"), ScopeError);
  CHECK_THROWS_AS(parse(Logic::Sptl, "[a*]"), AlphabetError);
  CHECK_THROWS_AS(parse(Logic::LtlSt, "[a]"), AlphabetError);
  CHECK_THROWS_AS(parse(Logic::Sptl, "[a b c]", {.k = 2}), AlphabetError);
  CHECK_THROWS_AS(parse(Logic::Sptl, "[c]", {.alphabet = Alphabet{"a", "b"}}), AlphabetError);
  CHECK_THROWS_AS(parse(Logic::FoStExt, "E x. sim(x,1,x,3)", {.k = 2}), AlphabetError);
  CHECK_THROWS_AS(parse(Logic::FoPomset, "E x. X a(x)"), SyntaxError);
  CHECK_THROWS_AS(parse(Logic::Sptl, "X+ [a]"), SyntaxError);
  CHECK_THROWS_AS(parse(Logic::FoSt, "E x. E y. x ~ y"), SyntaxError);
  CHECK_THROWS_AS(parse(Logic::FoPomset, "E x. sim(x,1,x,1)"), SyntaxError);
  try {
    parse(Logic::Sptl, "[a] & & [b]");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(logic_from_string("ltl"), SyntaxError);
  CHECK(logic_from_string("fo-st-ext") == Logic::FoStExt);
}

TEST_CASE("free variables and depth") {
  auto f = parse(Logic::FoPomset, "E x. x < y & a(z)", {{"y", "z"}});
  CHECK(free_vars(*f) == std::set<std::string>{"y", "z"});
  CHECK(free_vars(*parse(Logic::FoPomset, "E x. S(x) & T(x)")).empty());
  CHECK(depth(*parse(Logic::Sptl, "X X [a]")) == 2);
  CHECK(depth(*parse(Logic::Sptl, "[a]")) == 0);
  CHECK(depth(*parse(Logic::FoPomset, "E x. a(x)")) == 1);
  CHECK(node_count(*parse(Logic::Sptl, "[a b] U [d]")) == 3);
}

TEST_CASE("desugaring") {
  auto eq = desugar(Logic::FoPomset, parse(Logic::FoPomset, "E x. E y. x = y"));
  CHECK(print(eq) == "E x. E y. !(x < y) & !(y < x) & !(x ~ y) & !(y ~ x)");
  auto weq = desugar(Logic::FoSt, parse(Logic::FoSt, "E x. x = x"));
  CHECK(print(weq) == "E x. !(x < x) & !(x < x)");
  CHECK(print(desugar(Logic::Sptl, parse(Logic::Sptl, "G [a]"))) == "!(true U ![a])");
  CHECK(print(desugar(Logic::Sptl, parse(Logic::Sptl, "F [a] | [b]"))) ==
        "!(!(true U [a]) & ![b])");
  CHECK(print(desugar(Logic::FoPomset, parse(Logic::FoPomset, "A x. S(x) -> T(x)"))) ==
        "!(E x. !!(S(x) & !T(x)))");
}

namespace {

// N_0 = atoms, E_d = u E_{d-1} + b (E_{d-1} N_{d-1} + N_{d-2} E_{d-1}).
std::uint64_t recurrence(std::uint64_t atoms, std::uint64_t u, std::uint64_t b, int d) {
  std::uint64_t n_prev2 = 0, n_prev = atoms, e = atoms;
  for (int i = 1; i <= d; ++i) {
    const std::uint64_t next = u * e + b * (e * n_prev + n_prev2 * e);
    n_prev2 = n_prev;
    n_prev += next;
    e = next;
  }
  return n_prev;
}

}  // namespace

TEST_CASE("formula enumeration") {
  FormulaEnumOptions o{.alphabet = Alphabet{"a"}, .k = 1};
  auto d0 = enumerate_formulas(Logic::Sptl, 0, o);
  std::set<std::string> texts;
  for (const auto& f : d0) texts.insert(print(f));
  CHECK(texts == std::set<std::string>{"[]", "[a]", "true", "false"});

  auto fo = enumerate_formulas(Logic::FoPomset, 1, o);
  bool found = false;
  for (const auto& f : fo) found |= print(f) == "E x. a(x)";
  CHECK(found);

  // Depth-2 counts against the closed-form recurrence, for every logic.
  FormulaEnumOptions ab{.alphabet = Alphabet{"a", "b"}, .k = 2, .vars = {"x", "y"}};
  struct Shape {
    Logic logic;
    std::uint64_t atoms, unary, binary;
  };
  const Shape shapes[] = {
      {Logic::Sptl, 9, 2, 2},
      {Logic::Cptl, 9, 3, 2},
      {Logic::LtlSt, 37, 2, 2},
      {Logic::Eptl, 6, 4, 2},
      {Logic::FoPomset, 2 + 2 * 4 + 8, 3, 1},
      {Logic::FoSt, 2 + 2 * 35 + 4, 3, 1},
      {Logic::FoStExt, 2 + 2 * 35 + 4 + 16, 3, 1},
      {Logic::MsoPomset, 2 + 2 * 4 + 8 + 2, 4, 1},
  };
  for (const auto& s : shapes) {
    FormulaEnumerator e(s.logic, ab);
    CHECK(e.atoms().size() == s.atoms);
    CHECK(e.count_upto(2) == recurrence(s.atoms, s.unary, s.binary, 2));
    CHECK(e.count_upto(3) == recurrence(s.atoms, s.unary, s.binary, 3));
  }

  // Materialized levels: right sizes, exact depths, no syntactic duplicates.
  FormulaEnumerator e(Logic::Sptl, ab);
  CHECK(e.count_upto(2) == 71829);
  std::set<std::string> seen;
  for (int d = 0; d <= 2; ++d) {
    const auto& lv = e.level(d);
    CHECK(lv.size() == e.count_exact(d));
    for (const auto& f : lv) {
      CHECK(depth(*f) == d);
      seen.insert(print(f));
    }
  }
  CHECK(seen.size() == 71829);
  // Streaming by index matches the materialized level.
  for (std::uint64_t i : {0ULL, 1ULL, 5000ULL, 71000ULL - 189ULL})
    CHECK(*e.at(2, i) == *e.level(2)[i]);
  CHECK(depth(*e.at(3, e.count_exact(3) - 1)) == 3);
}
