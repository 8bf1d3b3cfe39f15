#include "pomlog/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <json.hpp>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "pomlog/concstate.hpp"
#include "pomlog/error.hpp"
#include "pomlog/pomset_json.hpp"
#include "pomlog/semantics.hpp"

namespace pomlog {

namespace {

bool distinct_labels(const StLetter& l) {
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      if (l.items[i].label == l.items[j].label) return false;
  return true;
}

// Events a letter adds to the glue after the first position.
int fresh_events(const StLetter& l) {
  int n = 0;
  for (const auto& item : l.items) n += item.in_start ? 0 : 1;
  return n;
}

struct LetterTable {
  std::vector<StLetter> letters;
  std::vector<Conclist> start, term;
  std::vector<char> starter;  // non-identity starter; otherwise terminator
  std::vector<std::size_t> identities;
  std::vector<std::size_t> proper;
  /// Alphabet positions of the labels of items that create events, as first
  /// letter and as later letter.
  std::vector<std::vector<std::size_t>> first_labels, fresh_labels;
  /// Proper letters that may follow letter i: opposite kind, matching interface.
  std::vector<std::vector<std::size_t>> followers;

  explicit LetterTable(const EnumSpec& spec) {
    for (auto& l : box_letters(spec.k, spec.alphabet)) {
      if (spec.autoconcurrency_free && !distinct_labels(l)) continue;
      const std::size_t i = letters.size();
      start.push_back(l.start_interface());
      term.push_back(l.term_interface());
      starter.push_back(l.is_starter() && !l.is_identity());
      (l.is_identity() ? identities : proper).push_back(i);
      auto& first = first_labels.emplace_back();
      auto& fresh = fresh_labels.emplace_back();
      for (const auto& item : l.items) {
        const auto& names = spec.alphabet.labels();
        const auto pos = static_cast<std::size_t>(
            std::find(names.begin(), names.end(), item.label) - names.begin());
        first.push_back(pos);
        if (!item.in_start) fresh.push_back(pos);
      }
      letters.push_back(std::move(l));
    }
    std::map<std::pair<Conclist, bool>, std::vector<std::size_t>> by_start;
    for (std::size_t j : proper) by_start[{start[j], starter[j] != 0}].push_back(j);
    followers.resize(letters.size());
    for (std::size_t i : proper) {
      auto it = by_start.find({term[i], starter[i] == 0});
      if (it != by_start.end()) followers[i] = it->second;
    }
  }
};

// Labels used so far after introducing `labels`, or nothing when a label
// skips ahead of the first unused one.
std::optional<std::size_t> introduce(std::size_t used, const std::vector<std::size_t>& labels) {
  for (std::size_t l : labels) {
    if (l > used) return std::nullopt;
    if (l == used) ++used;
  }
  return used;
}

}  // namespace

void for_each_sparse_sequence(const EnumSpec& spec,
                              const std::function<void(const StSequence&, int)>& visit) {
  const LetterTable table(spec);
  const int budget = static_cast<int>(spec.max_events);
  const std::size_t unlimited = spec.alphabet.size();
  const std::size_t letter_bound = spec.max_letters;
  auto next_used = [&](std::size_t used, const std::vector<std::size_t>& labels) {
    return spec.label_orbits ? introduce(used, labels) : std::optional<std::size_t>(unlimited);
  };
  StSequence w;
  visit(w, 0);
  for (std::size_t i : table.identities) {
    const int n = static_cast<int>(table.letters[i].size());
    if (n == 0 || n > budget || !next_used(0, table.first_labels[i])) continue;
    w.letters = {table.letters[i]};
    visit(w, n);
  }
  w.letters.clear();
  std::function<void(std::size_t, int, std::size_t)> extend = [&](std::size_t last, int events,
                                                                  std::size_t used) {
    visit(w, events);
    if (w.size() == letter_bound) return;
    for (std::size_t j : table.followers[last]) {
      const int n = events + fresh_events(table.letters[j]);
      if (n > budget) continue;
      const auto u = next_used(used, table.fresh_labels[j]);
      if (!u) continue;
      w.letters.push_back(table.letters[j]);
      extend(j, n, *u);
      w.letters.pop_back();
    }
  };
  for (std::size_t i : table.proper) {
    const int n = static_cast<int>(table.letters[i].size());
    const auto u = next_used(0, table.first_labels[i]);
    if (n > budget || !u) continue;
    w.letters.push_back(table.letters[i]);
    extend(i, n, *u);
    w.letters.pop_back();
  }
}

std::vector<Pomset> enumerate_pomsets(const EnumSpec& spec) {
  std::vector<Pomset> out;
  for_each_sparse_sequence(spec,
                           [&](const StSequence& w, int) { out.push_back(glue_sequence(w)); });
  return out;
}

Pomset random_pomset(const EnumSpec& spec) {
  const LetterTable table(spec);
  std::mt19937_64 rng(spec.seed);
  const int budget = static_cast<int>(spec.max_events);
  auto pick = [&](const std::vector<std::size_t>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  };
  std::vector<std::size_t> first;
  for (std::size_t i : table.proper)
    if (static_cast<int>(table.letters[i].size()) <= budget) first.push_back(i);
  if (first.empty()) return Pomset();
  StSequence w;
  std::size_t last = pick(first);
  int events = static_cast<int>(table.letters[last].size());
  w.letters.push_back(table.letters[last]);
  std::bernoulli_distribution stop(0.15);
  while (!stop(rng)) {
    std::vector<std::size_t> options;
    for (std::size_t j : table.followers[last])
      if (events + fresh_events(table.letters[j]) <= budget) options.push_back(j);
    if (options.empty()) break;
    last = pick(options);
    events += fresh_events(table.letters[last]);
    w.letters.push_back(table.letters[last]);
  }
  return glue_sequence(w);
}

unsigned worker_threads() {
  if (const char* env = std::getenv("POMLOG_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

bool eval_on_pomset(const TaggedFormula& f, const Pomset& p) {
  if (!f.formula) throw Error("null formula");
  if (f.logic == Logic::Eptl)
    throw IncompatibleLogics("EPTL is evaluated at events; it has no pomset-level verdict");
  if (const auto fv = free_vars(*f.formula); !fv.empty())
    throw FreeVariables("formula has free variable " + *fv.begin());
  const Formula& phi = *f.formula;
  switch (f.logic) {
    case Logic::FoPomset:
      return eval_fo_pomset(p, {}, phi);
    case Logic::MsoPomset:
      return eval_mso_pomset(p, {}, phi);
    case Logic::Sptl:
      return eval_sptl_concstate(p, initial(p), phi);
    case Logic::Cptl:
      return eval_cptl(p, initial(p), phi);
    case Logic::FoSt:
    case Logic::FoStExt:
    case Logic::LtlSt: {
      const StSequence w = p.size() == 0 ? StSequence{} : sparse_decompose(p);
      if (f.logic == Logic::LtlSt) return eval_ltl_st(w, phi);
      return eval_fo_st(w, {}, phi);
    }
    case Logic::Eptl:
      break;
  }
  throw IncompatibleLogics("no pomset bridge for " + std::string(to_string(f.logic)));
}

EquivReport check_equivalence(const TaggedFormula& a, const TaggedFormula& b, const EnumSpec& spec,
                              unsigned threads) {
  EquivReport r;
  r.logic_a = a.logic;
  r.logic_b = b.logic;
  r.formula_a = print(a.formula);
  r.formula_b = print(b.formula);
  // Fail early on bad input rather than inside a worker.
  const Pomset empty;
  eval_on_pomset(a, empty);
  eval_on_pomset(b, empty);

  const std::vector<Pomset> models = enumerate_pomsets(spec);
  if (threads == 0) threads = worker_threads();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(models.size())));

  // Workers claim indices in order; the smallest disagreeing index wins.
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_bad{models.size()};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= models.size() || i >= first_bad.load()) return;
        if (eval_on_pomset(a, models[i]) != eval_on_pomset(b, models[i])) {
          std::size_t cur = first_bad.load();
          while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      first_bad.store(0);
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  const std::size_t bad = first_bad.load();
  if (bad == models.size()) {
    r.models_checked = models.size();
    return r;
  }
  r.models_checked = bad + 1;
  r.equivalent = false;
  r.counterexample = models[bad];
  r.verdict_a = eval_on_pomset(a, models[bad]);
  r.verdict_b = eval_on_pomset(b, models[bad]);
  return r;
}

std::string to_json(const EquivReport& r, int indent) {
  nlohmann::ordered_json j;
  j["logic_a"] = to_string(r.logic_a);
  j["logic_b"] = to_string(r.logic_b);
  j["formula_a"] = r.formula_a;
  j["formula_b"] = r.formula_b;
  j["models_checked"] = r.models_checked;
  j["verdict"] = r.equivalent ? "equivalent" : "counterexample";
  if (r.counterexample) {
    j["model"] = nlohmann::ordered_json::parse(to_json(*r.counterexample));
    j["verdicts"] = {{"a", r.verdict_a}, {"b", r.verdict_b}};
  }
  return j.dump(indent);
}

}  // namespace pomlog
