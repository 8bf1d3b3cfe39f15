#include <limits>

#include "pomlog/error.hpp"
#include "pomlog/formula.hpp"

namespace pomlog {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

FormulaEnumerator::FormulaEnumerator(Logic logic, FormulaEnumOptions options)
    : logic_(logic), options_(std::move(options)) {
  using namespace mk;
  const auto& sigma = options_.alphabet.labels();
  const auto& vs = options_.vars;
  atoms_.push_back(truth());
  atoms_.push_back(falsity());
  unary_.push_back({Kind::Not, {}});
  binary_.push_back({Kind::And, {}});
  switch (logic_) {
    case Logic::FoPomset:
    case Logic::MsoPomset:
      for (const auto& x : vs) {
        for (Label a : sigma) atoms_.push_back(label(a, x));
        atoms_.push_back(start(x));
        atoms_.push_back(term(x));
      }
      for (const auto& x : vs)
        for (const auto& y : vs) atoms_.push_back(prec(x, y));
      for (const auto& x : vs)
        for (const auto& y : vs) atoms_.push_back(evord(x, y));
      for (const auto& x : vs) unary_.push_back({Kind::Exists, x});
      if (logic_ == Logic::MsoPomset) {
        for (const auto& x : vs)
          for (const auto& s : options_.set_vars) atoms_.push_back(in(x, s));
        for (const auto& s : options_.set_vars) unary_.push_back({Kind::ExistsSet, s});
      }
      break;
    case Logic::FoSt:
    case Logic::FoStExt: {
      const auto letters = box_letters(options_.k, options_.alphabet, options_.empty_letter);
      for (const auto& x : vs)
        for (const auto& p : letters) atoms_.push_back(letter(p, x));
      for (const auto& x : vs)
        for (const auto& y : vs) atoms_.push_back(less(x, y));
      if (logic_ == Logic::FoStExt) {
        const int k = static_cast<int>(options_.k);
        for (const auto& x : vs)
          for (int i = 1; i <= k; ++i)
            for (const auto& y : vs)
              for (int j = 1; j <= k; ++j) atoms_.push_back(sim(x, i, y, j));
      }
      for (const auto& x : vs) unary_.push_back({Kind::Exists, x});
      break;
    }
    case Logic::LtlSt:
      for (const auto& p : box_letters(options_.k, options_.alphabet, options_.empty_letter))
        atoms_.push_back(ltl_letter(p));
      unary_.push_back({Kind::Next, {}});
      binary_.push_back({Kind::Until, {}});
      break;
    case Logic::Sptl:
    case Logic::Cptl:
      for (const auto& u : conclists_upto(options_.k, options_.alphabet))
        atoms_.push_back(conclist(u));
      if (logic_ == Logic::Sptl) {
        unary_.push_back({Kind::Next, {}});
      } else {
        unary_.push_back({Kind::NextStart, {}});
        unary_.push_back({Kind::NextTerm, {}});
      }
      binary_.push_back({Kind::Until, {}});
      break;
    case Logic::Eptl:
      for (Label a : sigma) atoms_.push_back(event_label(a));
      atoms_.push_back(event_start());
      atoms_.push_back(event_term());
      unary_.push_back({Kind::ExistsNext, {}});
      unary_.push_back({Kind::EvOrdNext, {}});
      unary_.push_back({Kind::EvOrdPrev, {}});
      binary_.push_back({Kind::Until, {}});
      break;
  }
  levels_.push_back(atoms_);
  cumulative_.push_back(atoms_);
}

FormulaPtr FormulaEnumerator::make(const Op& op, FormulaPtr a, FormulaPtr b) const {
  switch (op.kind) {
    case Kind::Not:
      return mk::neg(std::move(a));
    case Kind::And:
      return mk::conj(std::move(a), std::move(b));
    case Kind::Until:
      return mk::until(std::move(a), std::move(b));
    case Kind::Next:
      return mk::next(std::move(a));
    case Kind::NextStart:
      return mk::next_start(std::move(a));
    case Kind::NextTerm:
      return mk::next_term(std::move(a));
    case Kind::ExistsNext:
      return mk::exists_next(std::move(a));
    case Kind::EvOrdNext:
      return mk::evord_next(std::move(a));
    case Kind::EvOrdPrev:
      return mk::evord_prev(std::move(a));
    case Kind::Exists:
      return mk::exists(op.var, std::move(a));
    case Kind::ExistsSet:
      return mk::exists_set(op.var, std::move(a));
    default:
      throw Error("unexpected operator in enumeration");
  }
}

std::uint64_t FormulaEnumerator::count_exact(int d) {
  if (d < 0) return 0;
  if (d == 0) return atoms_.size();
  const std::uint64_t e = count_exact(d - 1);
  const std::uint64_t below = count_upto(d - 1);
  const std::uint64_t lower = count_upto(d - 2);
  std::uint64_t n = sat_mul(unary_.size(), e);
  // Binary: left at depth d-1 with right anywhere below d, or left strictly
  // shallower with right at depth d-1.
  const std::uint64_t pairs = sat_add(sat_mul(e, below), sat_mul(lower, e));
  return sat_add(n, sat_mul(binary_.size(), pairs));
}

std::uint64_t FormulaEnumerator::count_upto(int d) {
  std::uint64_t n = 0;
  for (int i = 0; i <= d; ++i) n = sat_add(n, count_exact(i));
  return n;
}

const std::vector<FormulaPtr>& FormulaEnumerator::cumulative(int d) {
  level(d);
  return cumulative_[static_cast<std::size_t>(d)];
}

const std::vector<FormulaPtr>& FormulaEnumerator::level(int d) {
  while (static_cast<int>(levels_.size()) <= d) {
    const int next = static_cast<int>(levels_.size());
    const std::uint64_t n = count_exact(next);
    std::vector<FormulaPtr> lv;
    lv.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < n; ++i) lv.push_back(at(next, i));
    std::vector<FormulaPtr> cum = cumulative_.back();
    cum.insert(cum.end(), lv.begin(), lv.end());
    levels_.push_back(std::move(lv));
    cumulative_.push_back(std::move(cum));
  }
  return levels_[static_cast<std::size_t>(d)];
}

FormulaPtr FormulaEnumerator::at(int d, std::uint64_t index) {
  if (d == 0) return atoms_.at(static_cast<std::size_t>(index));
  const auto& prev = level(d - 1);
  const std::uint64_t e = prev.size();
  for (const auto& op : unary_) {
    if (index < e) return make(op, prev[static_cast<std::size_t>(index)], nullptr);
    index -= e;
  }
  const auto& below = cumulative(d - 1);
  const std::uint64_t lower = d >= 2 ? cumulative(d - 2).size() : 0;
  for (const auto& op : binary_) {
    const std::uint64_t first = e * below.size();
    if (index < first)
      return make(op, prev[static_cast<std::size_t>(index / below.size())],
                  below[static_cast<std::size_t>(index % below.size())]);
    index -= first;
    const std::uint64_t second = lower * e;
    if (index < second)
      return make(op, below[static_cast<std::size_t>(index / e)],
                  prev[static_cast<std::size_t>(index % e)]);
    index -= second;
  }
  throw Error("formula index out of range");
}

std::vector<FormulaPtr> enumerate_formulas(Logic logic, int max_depth,
                                           const FormulaEnumOptions& options) {
  FormulaEnumerator e(logic, options);
  if (max_depth < 0) return {};
  e.level(max_depth);
  std::vector<FormulaPtr> out;
  for (int d = 0; d <= max_depth; ++d) {
    const auto& lv = e.level(d);
    out.insert(out.end(), lv.begin(), lv.end());
  }
  return out;
}

}  // namespace pomlog
