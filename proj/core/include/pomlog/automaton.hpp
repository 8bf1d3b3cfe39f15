#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pomlog/decomposition.hpp"

namespace pomlog {

/// Deterministic complete automaton over an indexed alphabet.
struct Dfa {
  std::vector<std::string> letters;
  std::vector<std::string> states;
  std::size_t initial = 0;
  std::vector<char> accepting;
  std::vector<std::vector<std::size_t>> delta;  // [state][letter]

  std::size_t size() const noexcept { return states.size(); }
  std::size_t step(std::size_t q, std::size_t letter) const { return delta[q][letter]; }
  std::size_t run(std::size_t q, const std::vector<std::size_t>& word) const;
  bool accepts(const std::vector<std::size_t>& word) const { return accepting[run(initial, word)]; }
  std::optional<std::size_t> state_index(const std::string& name) const;
  std::optional<std::size_t> letter_index(const std::string& name) const;
};

/// Restriction to the states reachable from the initial one.
Dfa trim(const Dfa& d);
/// Moore partition refinement on the trimmed automaton. Each class keeps the
/// name of its first reachable member.
Dfa minimize(const Dfa& d);
/// One "state letter state" line per transition, preceded by "initial" and
/// "accepting" lines.
std::string to_adjacency(const Dfa& d);

struct CounterFreeCertificate {
  bool aperiodic = true;
  std::size_t monoid_size = 0;
  /// Word mapped to an element whose powers cycle with period > 1.
  std::optional<std::vector<std::size_t>> witness;
  std::string witness_word;  // letters joined by '.'
  std::size_t period = 1;
};

/// Builds the transition monoid over all states and checks m^n = m^(n+1)
/// for every element, n = monoid size.
CounterFreeCertificate check_counter_free(const Dfa& d);
/// {"aperiodic", "monoid_size", "witness_word"?, "period"?}
std::string to_json(const CounterFreeCertificate& c, int indent = 2);

/// δ(q, w^n) = δ(q, w^(n+1)) for every state q and every non-empty word w of
/// length at most max_len. Returns the first failing word.
std::optional<std::vector<std::size_t>> find_power_violation(const Dfa& d, std::size_t n,
                                                             std::size_t max_len);

enum class SameEventVariant {
  /// The five rule families read literally: the tracked index is a position
  /// in the terminating interface, and (C, j) accepts.
  Literal,
  /// The tracked index is a position in the interface as before, and a flag
  /// records whether the last letter's slot j is the tracked event.
  Tracked,
};

/// A_{i,j,a} over □_k (Id_∅ included). State names are "Bot", "Top",
/// "Sink" and "(C,l)" with C the concatenated labels; the Tracked variant
/// appends ",+" or ",-" for the hit flag.
struct SameEventDfa {
  Dfa dfa;
  std::vector<StLetter> letters;
  std::unordered_map<std::string, std::size_t> index;  // to_string(letter) -> letter
  std::size_t bot = 0, top = 1, sink = 2;

  /// Letter index of a □_k member. Throws AlphabetError.
  std::size_t letter(const StLetter& l) const;
};

SameEventDfa build_same_event_dfa(int i, int j, Label a, std::size_t k, const Alphabet& sigma,
                                  SameEventVariant variant = SameEventVariant::Tracked);

/// Minimal automaton of W = ([a*,b*].[*a,*b])^(2n) over □_2 with Σ = {a,b}.
Dfa even_repetition_dfa();

}  // namespace pomlog
