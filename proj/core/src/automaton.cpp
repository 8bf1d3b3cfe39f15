#include "pomlog/automaton.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <map>
#include <sstream>
#include <tuple>

#include "pomlog/error.hpp"

namespace pomlog {

std::size_t Dfa::run(std::size_t q, const std::vector<std::size_t>& word) const {
  for (std::size_t l : word) q = delta[q][l];
  return q;
}

std::optional<std::size_t> Dfa::state_index(const std::string& name) const {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states.begin());
}

std::optional<std::size_t> Dfa::letter_index(const std::string& name) const {
  auto it = std::find(letters.begin(), letters.end(), name);
  if (it == letters.end()) return std::nullopt;
  return static_cast<std::size_t>(it - letters.begin());
}

Dfa trim(const Dfa& d) {
  std::vector<std::size_t> order{d.initial};
  std::vector<long> renumber(d.size(), -1);
  renumber[d.initial] = 0;
  for (std::size_t n = 0; n < order.size(); ++n)
    for (std::size_t t : d.delta[order[n]])
      if (renumber[t] < 0) {
        renumber[t] = static_cast<long>(order.size());
        order.push_back(t);
      }
  Dfa out;
  out.letters = d.letters;
  out.initial = 0;
  for (std::size_t q : order) {
    out.states.push_back(d.states[q]);
    out.accepting.push_back(d.accepting[q]);
    std::vector<std::size_t> row;
    for (std::size_t t : d.delta[q]) row.push_back(static_cast<std::size_t>(renumber[t]));
    out.delta.push_back(std::move(row));
  }
  return out;
}

Dfa minimize(const Dfa& input) {
  const Dfa d = trim(input);
  const std::size_t n = d.size();
  std::vector<std::size_t> cls(n);
  for (std::size_t q = 0; q < n; ++q) cls[q] = d.accepting[q] ? 1 : 0;
  std::size_t classes = 0;
  for (;;) {
    // Signature: own class, then the class reached on each letter.
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<std::size_t> sig{cls[q]};
      for (std::size_t t : d.delta[q]) sig.push_back(cls[t]);
      next[q] = ids.emplace(std::move(sig), ids.size()).first->second;
    }
    const std::size_t count = ids.size();
    cls = std::move(next);
    if (count == classes) break;
    classes = count;
  }
  // Number classes by first appearance in the trimmed (breadth-first) order.
  std::vector<long> id(classes, -1);
  std::vector<std::size_t> rep;
  for (std::size_t q = 0; q < n; ++q)
    if (id[cls[q]] < 0) {
      id[cls[q]] = static_cast<long>(rep.size());
      rep.push_back(q);
    }
  Dfa out;
  out.letters = d.letters;
  out.initial = static_cast<std::size_t>(id[cls[d.initial]]);
  for (std::size_t q : rep) {
    out.states.push_back(d.states[q]);
    out.accepting.push_back(d.accepting[q]);
    std::vector<std::size_t> row;
    for (std::size_t t : d.delta[q]) row.push_back(static_cast<std::size_t>(id[cls[t]]));
    out.delta.push_back(std::move(row));
  }
  return out;
}

std::string to_adjacency(const Dfa& d) {
  std::ostringstream out;
  out << "initial " << d.states[d.initial] << '\n';
  out << "accepting";
  for (std::size_t q = 0; q < d.size(); ++q)
    if (d.accepting[q]) out << ' ' << d.states[q];
  out << '\n';
  for (std::size_t q = 0; q < d.size(); ++q)
    for (std::size_t l = 0; l < d.letters.size(); ++l)
      out << d.states[q] << ' ' << d.letters[l] << ' ' << d.states[d.delta[q][l]] << '\n';
  return out.str();
}

namespace {

using Transformation = std::vector<std::size_t>;

Transformation compose(const Transformation& first, const Transformation& then) {
  Transformation out(first.size());
  for (std::size_t q = 0; q < first.size(); ++q) out[q] = then[first[q]];
  return out;
}

std::string word_text(const Dfa& d, const std::vector<std::size_t>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += d.letters[w[i]];
  }
  return out;
}

}  // namespace

CounterFreeCertificate check_counter_free(const Dfa& d) {
  std::vector<Transformation> generators;
  for (std::size_t l = 0; l < d.letters.size(); ++l) {
    Transformation t(d.size());
    for (std::size_t q = 0; q < d.size(); ++q) t[q] = d.delta[q][l];
    generators.push_back(std::move(t));
  }
  Transformation identity(d.size());
  for (std::size_t q = 0; q < d.size(); ++q) identity[q] = q;

  // Breadth-first closure, so each element keeps a shortest word.
  std::map<Transformation, std::size_t> seen{{identity, 0}};
  std::vector<Transformation> elements{identity};
  std::vector<std::vector<std::size_t>> words{{}};
  for (std::size_t n = 0; n < elements.size(); ++n)
    for (std::size_t l = 0; l < generators.size(); ++l) {
      Transformation t = compose(elements[n], generators[l]);
      if (seen.count(t)) continue;
      seen.emplace(t, elements.size());
      auto w = words[n];
      w.push_back(l);
      elements.push_back(std::move(t));
      words.push_back(std::move(w));
    }

  CounterFreeCertificate cert;
  cert.monoid_size = elements.size();
  for (std::size_t n = 0; n < elements.size(); ++n) {
    // Powers m, m^2, ... until one repeats; aperiodic iff the cycle is a fixpoint.
    std::map<Transformation, std::size_t> at;
    Transformation power = elements[n];
    std::size_t e = 1;
    while (!at.count(power)) {
      at.emplace(power, e++);
      power = compose(power, elements[n]);
    }
    const std::size_t period = e - at[power];
    if (period > 1) {
      cert.aperiodic = false;
      cert.witness = words[n];
      cert.witness_word = word_text(d, words[n]);
      cert.period = period;
      break;
    }
  }
  return cert;
}

std::string to_json(const CounterFreeCertificate& c, int indent) {
  nlohmann::ordered_json j;
  j["aperiodic"] = c.aperiodic;
  j["monoid_size"] = c.monoid_size;
  if (c.witness) {
    j["witness_word"] = c.witness_word;
    j["period"] = c.period;
  }
  return j.dump(indent);
}

std::optional<std::vector<std::size_t>> find_power_violation(const Dfa& d, std::size_t n,
                                                             std::size_t max_len) {
  const std::size_t sigma = d.letters.size();
  std::vector<std::size_t> w;
  for (std::size_t len = 1; len <= max_len; ++len) {
    w.assign(len, 0);
    for (;;) {
      for (std::size_t q = 0; q < d.size(); ++q) {
        std::size_t s = q;
        for (std::size_t r = 0; r < n; ++r) s = d.run(s, w);
        if (d.run(s, w) != s) return w;
      }
      std::size_t pos = 0;
      while (pos < len && ++w[pos] == sigma) w[pos++] = 0;
      if (pos == len) break;
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------- same event

std::size_t SameEventDfa::letter(const StLetter& l) const {
  auto it = index.find(to_string(l));
  if (it == index.end())
    throw AlphabetError("letter " + to_string(l) + " is not in the box alphabet");
  return it->second;
}

namespace {

std::vector<Label> start_items(const StLetter& l) {
  std::vector<Label> out;
  for (const auto& item : l.items)
    if (item.in_start) out.push_back(item.label);
  return out;
}

// Item position (0-based) of the n-th start (or term) interface member.
std::optional<std::size_t> item_of(const StLetter& l, std::size_t n, bool start) {
  for (std::size_t m = 0; m < l.items.size(); ++m)
    if (start ? l.items[m].in_start : l.items[m].in_term) {
      if (n == 0) return m;
      --n;
    }
  return std::nullopt;
}

// Position (0-based) of item m within the terminating interface.
std::size_t term_position(const StLetter& l, std::size_t m) {
  std::size_t n = 0;
  for (std::size_t r = 0; r < m; ++r) n += l.items[r].in_term ? 1 : 0;
  return n;
}

std::string conclist_name(const Conclist& c) {
  std::string out;
  for (Label l : c.items) out += l.name();
  return out;
}

}  // namespace

SameEventDfa build_same_event_dfa(int i, int j, Label a, std::size_t k, const Alphabet& sigma,
                                  SameEventVariant variant) {
  if (i < 1 || j < 1 || static_cast<std::size_t>(i) > k || static_cast<std::size_t>(j) > k)
    throw SlotOutOfRange("slots must lie in 1.." + std::to_string(k));
  const bool tracked = variant == SameEventVariant::Tracked;
  SameEventDfa out;
  out.letters = box_letters(k, sigma, true);
  for (std::size_t l = 0; l < out.letters.size(); ++l) {
    out.dfa.letters.push_back(to_string(out.letters[l]));
    out.index.emplace(out.dfa.letters.back(), l);
  }

  Dfa& d = out.dfa;
  d.states = {"Bot", "Top", "Sink"};
  d.accepting = {0, 1, 0};
  const auto conclists = conclists_upto(k, sigma);
  // (conclist, slot, hit) -> state
  std::map<std::tuple<Conclist, std::size_t, bool>, std::size_t> id;
  for (const auto& c : conclists)
    for (std::size_t l = 1; l <= k; ++l)
      for (int hit = 0; hit < (tracked ? 2 : 1); ++hit) {
        id[{c, l, hit != 0}] = d.states.size();
        std::string name = "(" + conclist_name(c) + "," + std::to_string(l);
        if (tracked) name += hit ? ",+" : ",-";
        d.states.push_back(name + ")");
        d.accepting.push_back(tracked ? hit != 0 : l == static_cast<std::size_t>(j));
      }
  const auto state_of = [&](const Conclist& c, std::size_t l, bool hit) {
    return id.at({c, l, tracked && hit});
  };

  d.delta.assign(d.states.size(), std::vector<std::size_t>(out.letters.size(), out.sink));
  const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
  for (std::size_t l = 0; l < out.letters.size(); ++l) {
    const StLetter& p = out.letters[l];
    const Conclist tp = p.term_interface();

    // From Bot: pick up the event at slot i.
    if (tracked) {
      if (ui <= p.size() && p.items[ui - 1].label == a) {
        const auto& item = p.items[ui - 1];
        if (item.in_term)
          d.delta[out.bot][l] = state_of(tp, term_position(p, ui - 1) + 1, ui == uj);
        else if (ui == uj)
          d.delta[out.bot][l] = out.top;
      }
    } else {
      if (ui <= tp.size() && tp.items[ui - 1] == a)
        d.delta[out.bot][l] = state_of(tp, ui, false);
      else if (ui <= p.size() && p.items[ui - 1].label == a && !p.items[ui - 1].in_term && ui == uj)
        d.delta[out.bot][l] = out.top;
    }

    // From (S_P, l): follow the tracked event through P.
    const Conclist sp{start_items(p)};
    for (std::size_t pos = 1; pos <= k; ++pos)
      for (int hit = 0; hit < (tracked ? 2 : 1); ++hit) {
        if (!id.count({sp, pos, hit != 0})) continue;
        const std::size_t from = id.at({sp, pos, hit != 0});
        if (pos > sp.size() || sp.items[pos - 1] != a) continue;
        const std::size_t m = *item_of(p, pos - 1, true);
        const bool continues = p.items[m].in_term;
        if (continues)
          d.delta[from][l] = state_of(tp, term_position(p, m) + 1, m + 1 == uj);
        else if (tracked ? m + 1 == uj : pos == uj)
          d.delta[from][l] = out.top;
      }
  }
  return out;
}

Dfa even_repetition_dfa() {
  const Alphabet sigma{"a", "b"};
  const auto letters = box_letters(2, sigma, true);
  const StLetter s = parse_st_letter("[a*,b*]");
  const StLetter t = parse_st_letter("[*a,*b]");
  // Position modulo four in the repeated block, plus a sink.
  Dfa d;
  d.states = {"q0", "q1", "q2", "q3", "sink"};
  d.accepting = {1, 0, 0, 0, 0};
  d.initial = 0;
  for (const auto& l : letters) d.letters.push_back(to_string(l));
  d.delta.assign(5, std::vector<std::size_t>(letters.size(), 4));
  for (std::size_t l = 0; l < letters.size(); ++l) {
    if (letters[l] == s) {
      d.delta[0][l] = 1;
      d.delta[2][l] = 3;
    } else if (letters[l] == t) {
      d.delta[1][l] = 2;
      d.delta[3][l] = 0;
    }
  }
  return minimize(d);
}

}  // namespace pomlog
