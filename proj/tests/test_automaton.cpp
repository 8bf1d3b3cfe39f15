#include <doctest.h>

#include <json.hpp>
#include <random>
#include <set>

#include "pomlog/automaton.hpp"
#include "pomlog/error.hpp"
#include "pomlog/semantics.hpp"
#include "pomlog/translate.hpp"

using namespace pomlog;

namespace {

std::size_t go(const SameEventDfa& s, const std::string& from, const std::string& letter) {
  const auto q = s.dfa.state_index(from);
  REQUIRE(q);
  return s.dfa.step(*q, s.letter(parse_st_letter(letter)));
}

std::string target(const SameEventDfa& s, const std::string& from, const std::string& letter) {
  return s.dfa.states[go(s, from, letter)];
}

Dfa cycle_dfa(std::size_t n) {
  Dfa d;
  d.letters = {"x"};
  for (std::size_t q = 0; q < n; ++q) {
    d.states.push_back("q" + std::to_string(q));
    d.delta.push_back({(q + 1) % n});
  }
  d.accepting.assign(n, 0);
  d.accepting[0] = 1;
  return d;
}

}  // namespace

TEST_CASE("A_{1,2,a}: drawn edges, literal rules") {
  const auto s =
      build_same_event_dfa(1, 2, Label("a"), 2, Alphabet{"a", "b"}, SameEventVariant::Literal);
  for (const auto* l : {"[a*,a*]", "[*a*,a*]", "[a*,*a*]", "[*a*,*a*]"})
    CHECK(target(s, "Bot", l) == "(aa,1)");
  for (const auto* l : {"[a*,b*]", "[*a*,b*]", "[a*,*b*]", "[*a*,*b*]"})
    CHECK(target(s, "Bot", l) == "(ab,1)");
  CHECK(target(s, "Bot", "[a*]") == "(a,1)");
  CHECK(target(s, "(aa,1)", "[*a*,*a]") == "(a,1)");
  CHECK(target(s, "(ab,1)", "[*a*,*b]") == "(a,1)");
  CHECK(target(s, "(a,1)", "[*a*,a*]") == "(aa,1)");
  CHECK(target(s, "(a,1)", "[*a*,b*]") == "(ab,1)");
  CHECK(target(s, "(a,1)", "[a*,*a*]") == "(aa,2)");
  CHECK(target(s, "(a,1)", "[b*,*a*]") == "(ba,2)");
  CHECK(target(s, "(aa,2)", "[*a,*a*]") == "(a,1)");
  CHECK(target(s, "(ba,2)", "[*b,*a*]") == "(a,1)");
  for (const auto* l : {"[*a*,*a]", "[*a,*a]"}) CHECK(target(s, "(aa,2)", l) == "Top");
  for (const auto* l : {"[*b*,*a]", "[*b,*a]"}) CHECK(target(s, "(ba,2)", l) == "Top");

  const Dfa t = trim(s.dfa);
  const std::set<std::string> reachable(t.states.begin(), t.states.end());
  CHECK(reachable == std::set<std::string>{"Bot", "Top", "Sink", "(a,1)", "(aa,1)", "(ab,1)",
                                           "(aa,2)", "(ba,2)"});
  for (const auto* q : {"(aa,2)", "(ba,2)", "Top"}) CHECK(s.dfa.accepting[*s.dfa.state_index(q)]);
  for (const auto* q : {"Bot", "(a,1)", "(aa,1)", "Sink"})
    CHECK_FALSE(s.dfa.accepting[*s.dfa.state_index(q)]);
  // Identities loop; everything from Top leads to the sink.
  CHECK(target(s, "(a,1)", "[*a*]") == "(a,1)");
  CHECK(target(s, "Top", "[*a*]") == "Sink");
}

TEST_CASE("A_{1,2,a}: literal rules misread slots") {
  const Alphabet sigma{"a", "b"};
  const auto literal_rules =
      build_same_event_dfa(1, 2, Label("a"), 2, sigma, SameEventVariant::Literal);
  // Slot 1 of the letter is b, yet the a at slot 2 is picked up.
  CHECK(target(literal_rules, "Bot", "[*b,*a*]") == "(a,1)");
  // The tracked event continues at slot 2 of the last letter; the literal
  // rules land in a rejecting state.
  const auto w = parse_st_sequence("[a*].[a*,*a*].[*a,*a*]");
  CHECK(same_event_by_glue(glue_and_track(w), {0, 1}, {2, 2}));
  const SameEventAutomata literal(2, sigma, SameEventVariant::Literal);
  const SameEventAutomata tracked(2, sigma, SameEventVariant::Tracked);
  CHECK_FALSE(literal.related(literal.index(w), {0, 1}, {2, 2}));
  CHECK(tracked.related(tracked.index(w), {0, 1}, {2, 2}));
}

TEST_CASE("A_{1,2,a}: tracked variant") {
  const auto s = build_same_event_dfa(1, 2, Label("a"), 2, Alphabet{"a", "b"});
  CHECK(target(s, "Bot", "[a*,a*]") == "(aa,1,-)");
  CHECK(target(s, "(a,1,-)", "[a*,*a*]") == "(aa,2,+)");
  CHECK(target(s, "(aa,2,+)", "[*a,*a*]") == "(a,1,+)");
  CHECK(target(s, "Bot", "[*b,*a*]") == "Sink");
  CHECK(target(s, "(aa,2,+)", "[*a*,*a]") == "Top");
  CHECK(trim(s.dfa).size() == 9);
}

TEST_CASE("same-event automata are counter-free") {
  const Alphabet sigma{"a", "b"};
  for (auto variant : {SameEventVariant::Literal, SameEventVariant::Tracked})
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (const auto* a : {"a", "b"}) {
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(a);
          const auto s = build_same_event_dfa(i, j, Label(a), 2, sigma, variant);
          const auto cert = check_counter_free(s.dfa);
          CHECK(cert.aperiodic);
          CHECK_FALSE(cert.witness);
          // n = k + 2 suffices, checked directly on short words.
          CHECK_FALSE(find_power_violation(s.dfa, 4, 2));
        }
  const auto s3 = build_same_event_dfa(3, 1, Label("a"), 3, Alphabet{"a"});
  CHECK(check_counter_free(s3.dfa).aperiodic);
  CHECK_FALSE(find_power_violation(s3.dfa, 5, 2));
}

TEST_CASE("counter-freeness: small automata") {
  const auto one = cycle_dfa(1);
  const auto c1 = check_counter_free(one);
  CHECK(c1.aperiodic);
  CHECK(c1.monoid_size == 1);

  const auto parity = cycle_dfa(2);
  const auto c2 = check_counter_free(parity);
  CHECK_FALSE(c2.aperiodic);
  CHECK(c2.witness_word == "x");
  CHECK(c2.period == 2);
  CHECK(find_power_violation(parity, 10, 1));
  const auto j = nlohmann::json::parse(to_json(c2));
  CHECK(j["aperiodic"] == false);
  CHECK(j["witness_word"] == "x");
  CHECK(j["period"] == 2);
}

TEST_CASE("even repetitions are not counter-free") {
  const Dfa w = even_repetition_dfa();
  CHECK(minimize(w).size() == w.size());
  const auto c = check_counter_free(w);
  CHECK_FALSE(c.aperiodic);
  CHECK(c.period == 2);
  REQUIRE(c.witness);
  // The witness pumped once more flips acceptance from the start state.
  std::vector<std::size_t> twice, thrice;
  for (int r = 0; r < 2 * static_cast<int>(c.period); ++r)
    twice.insert(twice.end(), c.witness->begin(), c.witness->end());
  thrice = twice;
  thrice.insert(thrice.end(), c.witness->begin(), c.witness->end());
  CHECK(w.run(w.initial, twice) != w.run(w.initial, thrice));
  const auto block =
      std::vector<std::size_t>{*w.letter_index("[a*,b*]"), *w.letter_index("[*a,*b]")};
  std::vector<std::size_t> word;
  for (int r = 0; r < 4; ++r) {
    word.insert(word.end(), block.begin(), block.end());
    CHECK(w.accepts(word) == (r % 2 == 1));
  }
}

TEST_CASE("minimize and adjacency export") {
  const auto s = build_same_event_dfa(1, 1, Label("a"), 1, Alphabet{"a"});
  const Dfa m = minimize(s.dfa);
  CHECK(m.size() <= trim(s.dfa).size());
  std::mt19937 rng(5);
  for (int n = 0; n < 500; ++n) {
    std::vector<std::size_t> word(1 + rng() % 5);
    for (auto& l : word) l = rng() % s.dfa.letters.size();
    CHECK(m.accepts(word) == s.dfa.accepts(word));
  }
  const std::string adj = to_adjacency(m);
  CHECK(adj.rfind("initial Bot\n", 0) == 0);
  CHECK(adj.find("accepting") != std::string::npos);
  CHECK_THROWS_AS(s.letter(parse_st_letter("[b*]")), AlphabetError);
  CHECK_THROWS_AS(build_same_event_dfa(2, 1, Label("a"), 1, Alphabet{"a"}), SlotOutOfRange);
}
