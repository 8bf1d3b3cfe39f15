#include "pomlog/label.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace pomlog {
namespace {

class SymbolTable {
 public:
  SymbolTable() { intern(""); }

  std::uint32_t intern(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = index_.try_emplace(std::string(name), 0);
    if (inserted) {
      names_.emplace_back(name);
      it->second = static_cast<std::uint32_t>(names_.size() - 1);
    }
    return it->second;
  }

  const std::string& name(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    return names_[id];
  }

 private:
  mutable std::shared_mutex mutex_;
  std::deque<std::string> names_;  // stable references
  std::unordered_map<std::string, std::uint32_t> index_;
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

Label::Label(std::string_view name) : id_(table().intern(name)) {}

const std::string& Label::name() const { return table().name(id_); }

std::strong_ordering operator<=>(Label a, Label b) {
  if (a.id_ == b.id_) return std::strong_ordering::equal;
  return a.name().compare(b.name()) < 0 ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
}

Alphabet::Alphabet(std::initializer_list<std::string_view> names, bool declared)
    : declared_(declared) {
  for (auto n : names) labels_.emplace_back(n);
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

Alphabet::Alphabet(std::vector<Label> labels, bool declared)
    : labels_(std::move(labels)), declared_(declared) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

bool Alphabet::contains(Label l) const {
  return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  std::vector<Label> all = labels_;
  all.insert(all.end(), other.labels_.begin(), other.labels_.end());
  return Alphabet(std::move(all), declared_ || other.declared_);
}

std::string Alphabet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ',';
    out += labels_[i].name();
  }
  return out + "}";
}

}  // namespace pomlog
