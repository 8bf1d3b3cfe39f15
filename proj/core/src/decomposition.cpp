#include "pomlog/decomposition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "run_detail.hpp"

namespace pomlog {

AutoconcurrencyAmbiguity::AutoconcurrencyAmbiguity(std::vector<Pomset> candidates)
    : Error("conclist sequence denotes " + std::to_string(candidates.size()) + " distinct pomsets"),
      candidates_(std::move(candidates)) {}

// ------------------------------------------------------------------ letters

bool StLetter::is_starter() const {
  return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.in_term; });
}

bool StLetter::is_terminator() const {
  return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.in_start; });
}

Conclist StLetter::start_interface() const {
  Conclist c;
  for (const auto& i : items)
    if (i.in_start) c.items.push_back(i.label);
  return c;
}

Conclist StLetter::term_interface() const {
  Conclist c;
  for (const auto& i : items)
    if (i.in_term) c.items.push_back(i.label);
  return c;
}

// --------------------------------------------------------------------- text

std::string to_string(const Conclist& c) {
  if (c.empty()) return "[]";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += c.items[i].name();
  }
  return out;
}

std::string conclist_literal(const Conclist& c) {
  return c.empty() ? "[]" : "[" + to_string(c) + "]";
}

std::string to_string(const StLetter& l) {
  std::string out = "[";
  for (std::size_t i = 0; i < l.items.size(); ++i) {
    if (i) out += ',';
    if (l.items[i].in_start) out += '*';
    out += l.items[i].label.name();
    if (l.items[i].in_term) out += '*';
  }
  return out + "]";
}

std::string to_string(const StSequence& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += '.';
    out += to_string(w.letters[i]);
  }
  return out;
}

std::string to_string(const ConclistSequence& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.conclists.size(); ++i) {
    if (i) out += " | ";
    out += to_string(s.conclists[i]);
  }
  return out + ")";
}

namespace {

bool label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string label() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && label_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a label");
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

StLetter read_letter(TextCursor& in) {
  StLetter l;
  in.expect('[');
  if (in.accept(']')) return l;
  do {
    StLetter::Item item;
    item.in_start = in.accept('*');
    item.label = Label(in.label());
    item.in_term = in.accept('*');
    l.items.push_back(item);
  } while (in.accept(','));
  in.expect(']');
  return l;
}

Conclist read_conclist_body(TextCursor& in, char stop1, char stop2) {
  Conclist c;
  if (in.accept('[')) {
    if (!in.accept(']')) {
      while (!in.peek(']')) c.items.emplace_back(in.label());
      in.expect(']');
    }
    return c;
  }
  while (!in.at_end() && !in.peek(stop1) && !in.peek(stop2)) c.items.emplace_back(in.label());
  return c;
}

}  // namespace

StLetter parse_st_letter(std::string_view text) {
  TextCursor in(text);
  StLetter l = read_letter(in);
  if (!in.at_end()) in.fail("trailing input");
  return l;
}

StSequence parse_st_sequence(std::string_view text) {
  TextCursor in(text);
  StSequence w;
  if (in.at_end()) return w;
  do w.letters.push_back(read_letter(in));
  while (in.accept('.'));
  if (!in.at_end()) in.fail("trailing input");
  return w;
}

Conclist parse_conclist(std::string_view text) {
  TextCursor in(text);
  Conclist c = read_conclist_body(in, '\0', '\0');
  if (!in.at_end()) in.fail("trailing input");
  return c;
}

ConclistSequence parse_conclist_sequence(std::string_view text) {
  TextCursor in(text);
  ConclistSequence s;
  in.expect('(');
  if (in.accept(')')) return s;
  do {
    Conclist c = read_conclist_body(in, '|', ')');
    s.conclists.push_back(std::move(c));
  } while (in.accept('|'));
  in.expect(')');
  if (!in.at_end()) in.fail("trailing input");
  return s;
}

// --------------------------------------------------------------- predicates

bool is_coherent(const StSequence& w) {
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    if (w.letters[i - 1].term_interface() != w.letters[i].start_interface()) return false;
  return true;
}

bool is_sparse(const StSequence& w) {
  if (!is_coherent(w)) return false;
  if (w.letters.size() == 1 && w.letters[0].is_identity()) return w.letters[0].size() > 0;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const auto& l = w.letters[i];
    if (l.is_identity() || !(l.is_starter() || l.is_terminator())) return false;
    if (i > 0 && l.is_starter() == w.letters[i - 1].is_starter()) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> embeddings(const Conclist& u, const Conclist& v) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t from) {
    if (i == u.size()) {
      out.push_back(current);
      return;
    }
    for (std::size_t j = from; j + (u.size() - i) <= v.size(); ++j) {
      if (v.items[j] != u.items[i]) continue;
      current.push_back(j);
      go(i + 1, j + 1);
      current.pop_back();
    }
  };
  go(0, 0);
  return out;
}

bool embeds(const Conclist& u, const Conclist& v) {
  std::size_t j = 0;
  for (Label l : u.items) {
    while (j < v.size() && v.items[j] != l) ++j;
    if (j == v.size()) return false;
    ++j;
  }
  return true;
}

bool is_well_formed(const ConclistSequence& s) {
  for (std::size_t i = 1; i < s.conclists.size(); ++i)
    if (!embeds(s.conclists[i - 1], s.conclists[i]) && !embeds(s.conclists[i], s.conclists[i - 1]))
      return false;
  return true;
}

// ------------------------------------------------------------------ gluing

namespace {

Pomset letter_pomset_with_ids(const StLetter& letter, int& counter) {
  const int n = static_cast<int>(letter.size());
  std::vector<std::string> ids;
  std::vector<Label> labels;
  std::vector<EventSet> succ(n), after(n);
  EventSet start, term;
  for (int i = 0; i < n; ++i) {
    ids.push_back("e" + std::to_string(++counter));
    labels.push_back(letter.items[i].label);
    for (int j = i + 1; j < n; ++j) after[i].insert(j);
    if (letter.items[i].in_start) start.insert(i);
    if (letter.items[i].in_term) term.insert(i);
  }
  return Pomset::build(std::move(ids), std::move(labels), std::move(succ), std::move(after), start,
                       term);
}

}  // namespace

Pomset letter_pomset(const StLetter& letter) {
  int counter = 0;
  return letter_pomset_with_ids(letter, counter);
}

Pomset glue_sequence(const StSequence& w) {
  if (w.empty()) return Pomset();
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    if (w.letters[i - 1].term_interface() != w.letters[i].start_interface()) throw NotCoherent(i);
  // Same result as folding glue over the letter pomsets with positional
  // pairings, built in one pass: an event precedes every event created after
  // the letter in which it ends.
  std::size_t total = w.letters[0].size();
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    for (const auto& item : w.letters[i].items) total += item.in_start ? 0 : 1;
  std::vector<Label> labels;
  std::vector<EventSet> succ, after;
  labels.reserve(total);
  succ.reserve(total);
  after.reserve(total);
  EventSet start, ended;
  std::vector<int> open, here;  // open: events of the current interface, in slot order
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const auto& items = w.letters[i].items;
    here.assign(items.size(), 0);
    std::size_t carried = 0;
    for (std::size_t s = 0; s < items.size(); ++s) {
      if (i > 0 && items[s].in_start) {
        here[s] = open[carried++];
        continue;
      }
      const int e = static_cast<int>(labels.size());
      labels.push_back(items[s].label);
      succ.emplace_back();
      after.emplace_back();
      for (EventId x : ended) succ[x].insert(e);
      if (items[s].in_start) start.insert(e);
      here[s] = e;
    }
    open.clear();
    for (std::size_t s = 0; s < items.size(); ++s) {
      for (std::size_t t = s + 1; t < items.size(); ++t) after[here[s]].insert(here[t]);
      if (items[s].in_term)
        open.push_back(here[s]);
      else
        ended.insert(here[s]);
    }
  }
  EventSet term;
  for (int e : open) term.insert(e);
  std::vector<std::string> ids(total);
  for (std::size_t e = 0; e < total; ++e) ids[e] = "e" + std::to_string(e + 1);
  return Pomset::build(std::move(ids), std::move(labels), std::move(succ), std::move(after), start,
                       term);
}

// ------------------------------------------------------------ decompositions

std::vector<std::pair<EventSet, EventSet>> sparse_run(const Pomset& p) {
  std::vector<std::pair<EventSet, EventSet>> run;
  run.reserve(2 * static_cast<std::size_t>(p.size()) + 1);
  EventSet t, u = p.start();
  run.emplace_back(t, u);
  for (;;) {
    if (EventSet x = detail::terminable(p, t, u); !x.empty()) {
      t |= x;
      u -= x;
    } else if (EventSet y = detail::startable(p, t, u); !y.empty()) {
      u |= y;
    } else {
      break;
    }
    run.emplace_back(t, u);
  }
  return run;
}

StSequence sparse_decompose(const Pomset& p) {
  if (p.empty()) throw EmptyPomset();
  auto run = sparse_run(p);
  StSequence w;
  if (run.size() == 1) {
    StLetter id;
    for (EventId e : p.in_event_order(p.start())) id.items.push_back({p.label(e), true, true});
    w.letters.push_back(std::move(id));
    return w;
  }
  w.letters.reserve(run.size() - 1);
  for (std::size_t s = 0; s + 1 < run.size(); ++s) {
    const auto& [t0, u0] = run[s];
    const auto& [t1, u1] = run[s + 1];
    StLetter l;
    l.items.reserve(static_cast<std::size_t>((u0 | u1).size()));
    if (t1 != t0) {
      for (EventId e : p.in_event_order(u0)) l.items.push_back({p.label(e), true, !t1.contains(e)});
    } else {
      for (EventId e : p.in_event_order(u1)) l.items.push_back({p.label(e), u0.contains(e), true});
    }
    w.letters.push_back(std::move(l));
  }
  return w;
}

ConclistSequence conclist_sequence_of(const StSequence& w) {
  if (w.empty()) throw EmptyPomset();
  if (!is_coherent(w)) {
    for (std::size_t i = 1; i < w.letters.size(); ++i)
      if (w.letters[i - 1].term_interface() != w.letters[i].start_interface()) throw NotCoherent(i);
  }
  ConclistSequence s;
  for (const auto& l : w.letters) s.conclists.push_back(l.start_interface());
  s.conclists.push_back(w.letters.back().term_interface());
  return s;
}

ConclistSequence conclist_decompose(const Pomset& p) {
  return conclist_sequence_of(sparse_decompose(p));
}

Pomset conclist_reconstruct(const ConclistSequence& s) {
  if (s.empty()) return Pomset();
  std::vector<std::vector<StLetter>> choices;
  if (s.size() == 1) {
    StLetter id;
    for (Label l : s.conclists[0].items) id.items.push_back({l, true, true});
    choices.push_back({id});
  }
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const Conclist& u = s.conclists[i];
    const Conclist& v = s.conclists[i + 1];
    std::vector<StLetter> options;
    if (u == v) {
      StLetter id;
      for (Label l : u.items) id.items.push_back({l, true, true});
      options.push_back(std::move(id));
    } else if (u.size() < v.size() && embeds(u, v)) {
      for (const auto& emb : embeddings(u, v)) {
        StLetter l;
        for (Label x : v.items) l.items.push_back({x, false, true});
        for (std::size_t j : emb) l.items[j].in_start = true;
        options.push_back(std::move(l));
      }
    } else if (v.size() < u.size() && embeds(v, u)) {
      for (const auto& emb : embeddings(v, u)) {
        StLetter l;
        for (Label x : u.items) l.items.push_back({x, true, false});
        for (std::size_t j : emb) l.items[j].in_term = true;
        options.push_back(std::move(l));
      }
    } else {
      throw NotWellFormed(i);
    }
    choices.push_back(std::move(options));
  }

  std::vector<Pomset> candidates;
  StSequence current;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == choices.size()) {
      Pomset p = glue_sequence(current);
      for (const auto& c : candidates)
        if (isomorphic(c, p)) return;
      candidates.push_back(std::move(p));
      return;
    }
    for (const auto& l : choices[i]) {
      current.letters.push_back(l);
      go(i + 1);
      current.letters.pop_back();
    }
  };
  go(0);
  if (candidates.size() > 1) throw AutoconcurrencyAmbiguity(std::move(candidates));
  return std::move(candidates.front());
}

bool isomorphic(const Pomset& p, const Pomset& q) {
  if (p.empty() || q.empty()) return p.empty() && q.empty();
  if (p.size() != q.size()) return false;
  return sparse_decompose(p) == sparse_decompose(q);
}

// ----------------------------------------------------------------- alphabets

std::vector<Conclist> conclists_upto(std::size_t k, const Alphabet& sigma) {
  std::vector<Conclist> out{Conclist{}};
  std::vector<Conclist> layer{Conclist{}};
  for (std::size_t m = 1; m <= k; ++m) {
    std::vector<Conclist> next;
    for (const auto& c : layer)
      for (Label l : sigma.labels()) {
        Conclist d = c;
        d.items.push_back(l);
        next.push_back(std::move(d));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<StLetter> box_letters(std::size_t k, const Alphabet& sigma, bool with_empty) {
  std::vector<StLetter> out;
  for (const auto& c : conclists_upto(k, sigma)) {
    const std::size_t m = c.size();
    if (m == 0) {
      if (with_empty) out.push_back(StLetter{});
      continue;
    }
    // Starters: the identity first, then proper ones; then proper terminators.
    for (int side = 0; side < 2; ++side)
      for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        bool identity = mask == (1U << m) - 1;
        if (side == 1 && identity) continue;
        StLetter l;
        for (std::size_t i = 0; i < m; ++i) {
          bool flag = (mask >> i) & 1U;
          l.items.push_back({c.items[i], side == 0 ? flag : true, side == 0 ? true : flag});
        }
        out.push_back(std::move(l));
      }
  }
  return out;
}

}  // namespace pomlog
