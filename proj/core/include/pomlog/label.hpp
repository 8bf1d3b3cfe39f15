#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace pomlog {

/// Interned event label. Equality is by identity; ordering is by name so that
/// every listing derived from labels is deterministic across runs.
class Label {
 public:
  Label() = default;
  explicit Label(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const noexcept { return id_; }

  friend bool operator==(Label a, Label b) noexcept { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Label a, Label b);

 private:
  std::uint32_t id_ = 0;  // 0 is the empty name
};

/// Finite label set Σ, kept sorted by name.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<std::string_view> names, bool declared = true);
  explicit Alphabet(std::vector<Label> labels, bool declared = true);

  const std::vector<Label>& labels() const noexcept { return labels_; }
  bool contains(Label l) const;
  bool declared() const noexcept { return declared_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  /// Union, declared if either side is.
  Alphabet merged(const Alphabet& other) const;

  std::string to_string() const;  // "{a,b}"
  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<Label> labels_;
  bool declared_ = false;
};

}  // namespace pomlog

template <>
struct std::hash<pomlog::Label> {
  std::size_t operator()(pomlog::Label l) const noexcept { return l.id(); }
};
