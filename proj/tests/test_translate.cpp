#include <doctest.h>

#include <optional>
#include <random>

#include "oracles.hpp"
#include "pomlog/concstate.hpp"
#include "pomlog/error.hpp"
#include "pomlog/fo_checker.hpp"
#include "pomlog/harness.hpp"
#include "pomlog/semantics.hpp"
#include "pomlog/translate.hpp"

using namespace pomlog;

namespace {

EventSet maximal_in(const Pomset& p, EventSet s) {
  EventSet out;
  for (EventId e : s)
    if (!p.successors(e).intersects(s)) out |= EventSet::single(e);
  return out;
}

// Empty and identity pomsets lie outside the word logics.
bool trivial(const Pomset& p) { return p.start() == p.events() && p.term() == p.events(); }

// Coherent words by random walk over □_k with Id_∅ included.
std::vector<StSequence> random_words(std::size_t k, const Alphabet& sigma, std::size_t max_len,
                                     std::size_t count, unsigned seed) {
  const auto letters = box_letters(k, sigma, true);
  std::mt19937 rng(seed);
  std::vector<StSequence> out;
  while (out.size() < count) {
    StSequence w;
    const std::size_t len = 1 + rng() % max_len;
    w.letters.push_back(letters[rng() % letters.size()]);
    while (w.size() < len) {
      std::vector<const StLetter*> next;
      for (const auto& l : letters)
        if (l.start_interface() == w.letters.back().term_interface()) next.push_back(&l);
      w.letters.push_back(*next[rng() % next.size()]);
    }
    out.push_back(w);
  }
  return out;
}

const std::vector<std::string> kSptlSamples = {
    "[a]",     "[]",          "X true",          "! X true",  "X [a b]",
    "X X [a]", "[b] U [a]",   "F [a]",           "G ! [a a]", "X (true U [b])",
    "F [a b]", "[a] U X [b]", "(F [b]) & X [a]", "X ! X [a]", "G (F [])",
};

}  // namespace

TEST_CASE("same_event matches glue tracking") {
  const Alphabet sigma{"a", "b"};
  const SameEventAutomata automata(2, sigma);
  for (const auto& w : random_words(2, sigma, 8, 400, 7)) {
    const auto g = glue_and_track(w);
    const auto idx = automata.index(w);
    for (std::size_t x = 0; x < w.size(); ++x)
      for (std::size_t y = 0; y < w.size(); ++y)
        for (int i = 1; i <= static_cast<int>(w.letters[x].size()); ++i)
          for (int j = 1; j <= static_cast<int>(w.letters[y].size()); ++j)
            REQUIRE(automata.related(idx, {x, i}, {y, j}) == same_event_by_glue(g, {x, i}, {y, j}));
  }
}

TEST_CASE("same_event on small words") {
  const auto w = parse_st_sequence("[a*,b*].[*a*,*b].[*a]");
  CHECK(same_event(w, 0, 1, 2, 1));
  CHECK(same_event(w, 0, 2, 1, 2));
  CHECK_FALSE(same_event(w, 0, 2, 2, 1));
  CHECK(same_event(w, 1, 1, 1, 1));
  CHECK_FALSE(same_event(w, 1, 1, 1, 2));
  CHECK_THROWS_AS(same_event(w, 2, 2, 0, 1), SlotOutOfRange);
  CHECK_THROWS_AS(same_event(parse_st_sequence("[a*].[*b]"), 0, 1, 1, 1), NotCoherent);
  // Missing slots are false through the hook.
  const SameEventAutomata automata(2, Alphabet{"a", "b"});
  CHECK_FALSE(automata.hook(w)({2, 2}, {0, 1}));
}

TEST_CASE("coherence formula") {
  const Alphabet sigma{"a", "b"};
  const FormulaPtr coh = build_coherence_formula(2, sigma);
  const auto letters = box_letters(2, sigma, true);
  std::mt19937 rng(3);
  int coherent = 0;
  for (int n = 0; n < 3000; ++n) {
    StSequence w;
    const std::size_t len = 1 + rng() % 4;
    for (std::size_t i = 0; i < len; ++i) w.letters.push_back(letters[rng() % letters.size()]);
    const bool expected = is_coherent(w);
    coherent += expected ? 1 : 0;
    REQUIRE(eval_fo_st(w, {}, *coh) == expected);
  }
  CHECK(coherent > 100);
}

TEST_CASE("FO to FO-ST agrees on sparse decompositions") {
  const Alphabet sigma{"a", "b"};
  const std::vector<std::string> samples = {
      "E x. a(x)",
      "E x. S(x) & T(x)",
      "E x. E y. x < y",
      "E x. E y. x ~ y & a(x) & b(y)",
      "A x. (S(x) -> a(x))",
      "E x. E y. !(x = y) & !(x < y) & !(y < x)",
      "A x. A y. (x < y -> T(y))",
      "E x. E y. E z. x < y & y < z",
  };
  const auto models = enumerate_pomsets({.max_events = 3, .k = 2, .alphabet = {"a", "b"}});
  const SameEventAutomata automata(2, sigma);
  for (const auto& text : samples) {
    CAPTURE(text);
    const FormulaPtr f = parse(Logic::FoPomset, text);
    const FormulaPtr g = translate_fo_pomset_to_fo_st(f, 2, sigma);
    FoChecker checker(g);
    for (const auto& p : models) {
      if (p.empty()) continue;
      const StSequence w = sparse_decompose(p);
      REQUIRE(checker.eval(w, {}, automata.hook(w)) == eval_fo_pomset(p, {}, *f));
    }
  }
}

TEST_CASE("FO to FO-ST: translated sentences hold only on coherent words") {
  const Alphabet sigma{"a"};
  const FormulaPtr g = translate_fo_pomset_to_fo_st(parse(Logic::FoPomset, "true"), 1, sigma);
  CHECK(eval_fo_st(parse_st_sequence("[a*].[*a]"), {}, *g));
  CHECK_FALSE(eval_fo_st(parse_st_sequence("[a*].[a*]"), {}, *g));
  ParseOptions free;
  free.free_vars = {"x"};
  CHECK_THROWS_AS(translate_fo_pomset_to_fo_st(parse(Logic::FoPomset, "a(x)", free), 1, sigma),
                  FreeVariables);
}

TEST_CASE("LTL-ST to SPTL") {
  CHECK(print(translate_ltl_st_to_sptl(parse(Logic::LtlSt, "[a*]"))) == "[] & X [a]");
  const std::vector<std::string> samples = {
      "[a*]",        "[*a]",     "X [*a*]",         "[a*] U [*b]", "F [*a,*b]",
      "G ! [a*,b*]", "X X true", "! [a*] & X true", "true",        "[b*] U (X [*b])",
  };
  const auto models = enumerate_pomsets({.max_events = 3, .k = 2, .alphabet = {"a", "b"}});
  for (const auto& text : samples) {
    CAPTURE(text);
    const FormulaPtr f = parse(Logic::LtlSt, text);
    const FormulaPtr g = translate_ltl_st_to_sptl(f);
    for (const auto& p : models) {
      if (trivial(p)) continue;
      REQUIRE(eval_on_pomset({Logic::Sptl, g}, p) == eval_on_pomset({Logic::LtlSt, f}, p));
    }
  }
}

TEST_CASE("on-run formula characterizes the run") {
  // Labels play no part, so one label and a wider k cover more shapes.
  const FormulaPtr on_run = on_run_formula("Tm", "U", "Tm2", "U2");
  const auto models = enumerate_pomsets({.max_events = 4, .k = 3, .alphabet = {"a"}});
  std::size_t pairs = 0;
  for (const auto& p : models) {
    const auto states = enumerate_concstates(p);
    for (const auto& c : states) {
      const auto run = run_from(c);
      for (const auto& c2 : states) {
        Valuation v;
        v.second_order = {{"Tm", maximal_in(p, c.terminated())},
                          {"U", c.active()},
                          {"Tm2", maximal_in(p, c2.terminated())},
                          {"U2", c2.active()}};
        const bool expected = std::find(run.begin(), run.end(), c2) != run.end();
        REQUIRE(eval_mso_pomset(p, v, *on_run) == expected);
        ++pairs;
      }
    }
  }
  CHECK(pairs > 10000);
}

TEST_CASE("SPTL to FO: bounded stage agrees with concstate semantics") {
  const auto models = enumerate_pomsets({.max_events = 3, .k = 2, .alphabet = {"a", "b"}});
  for (const auto& text : {"[a]", "X true", "X [a b]", "[b] U [a]", "G ! [a a]"}) {
    CAPTURE(text);
    const FormulaPtr f = parse(Logic::Sptl, text);
    const FormulaPtr g = translate_sptl_to_bounded(f, 2);
    for (const auto& p : models) {
      if (trivial(p)) continue;
      REQUIRE(eval_mso_pomset(p, {}, *g) == eval_on_pomset({Logic::Sptl, f}, p));
    }
  }
}

TEST_CASE("SPTL to FO: first-order result agrees with concstate semantics") {
  const auto models = enumerate_pomsets({.max_events = 4, .k = 2, .alphabet = {"a", "b"}});
  for (const auto& text : kSptlSamples) {
    CAPTURE(text);
    const FormulaPtr f = parse(Logic::Sptl, text);
    const FormulaPtr g = translate_sptl_to_fo_pomset(f, 2);
    REQUIRE(free_vars(*g).empty());
    FoChecker checker(g);
    for (const auto& p : models) {
      if (trivial(p)) continue;
      CAPTURE(to_string(sparse_decompose(p)));
      REQUIRE(checker.eval(p) == eval_on_pomset({Logic::Sptl, f}, p));
    }
  }
}

TEST_CASE("FoChecker agrees with the direct evaluators") {
  std::mt19937_64 rng(11);
  SUBCASE("pomsets") {
    FormulaEnumerator e(Logic::FoPomset, {.alphabet = {"a", "b"}, .vars = {"x", "y"}});
    const auto models = enumerate_pomsets({.max_events = 3, .k = 2, .alphabet = {"a", "b"}});
    const auto count = e.count_exact(3);
    for (int n = 0; n < 300; ++n) {
      const FormulaPtr f = mk::exists("x", mk::forall("y", e.at(3, rng() % count)));
      FoChecker checker(f);
      for (const auto& p : models) REQUIRE(checker.eval(p) == eval_fo_pomset(p, {}, *f));
    }
  }
  SUBCASE("words") {
    FormulaEnumerator e(Logic::FoStExt, {.alphabet = {"a"}, .k = 2, .vars = {"x", "y"}});
    const auto words = random_words(2, Alphabet{"a"}, 4, 60, 13);
    const auto count = e.count_exact(3);
    for (int n = 0; n < 300; ++n) {
      const FormulaPtr f = mk::exists("x", mk::forall("y", e.at(3, rng() % count)));
      FoChecker checker(f);
      for (const auto& w : words) {
        // Missing slots throw; short-circuiting may differ, so such words
        // are compared only when both sides answer.
        const auto answer = [&](auto&& run) -> std::optional<bool> {
          try {
            return run();
          } catch (const SlotOutOfRange&) {
            return std::nullopt;
          }
        };
        const auto expected = answer([&] { return eval_fo_st(w, {}, *f); });
        const auto actual = answer([&] { return checker.eval(w); });
        if (expected && actual) REQUIRE(*actual == *expected);
      }
    }
  }
}
