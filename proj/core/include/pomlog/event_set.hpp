#pragma once

#include <bit>
#include <cstdint>
#include <iterator>

namespace pomlog {

/// Index of an event inside its pomset.
using EventId = int;

/// Maximum number of events a pomset may hold.
inline constexpr int kMaxEvents = 64;

/// Set of event indices as a 64-bit mask.
class EventSet {
 public:
  constexpr EventSet() = default;
  constexpr explicit EventSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr EventSet all(int n) {
    return EventSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr EventSet single(EventId e) { return EventSet(std::uint64_t{1} << e); }

  constexpr bool contains(EventId e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(EventId e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(EventId e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(EventSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(EventSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr EventSet operator|(EventSet o) const { return EventSet(bits_ | o.bits_); }
  constexpr EventSet operator&(EventSet o) const { return EventSet(bits_ & o.bits_); }
  constexpr EventSet operator-(EventSet o) const { return EventSet(bits_ & ~o.bits_); }
  constexpr EventSet& operator|=(EventSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr EventSet& operator&=(EventSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr EventSet& operator-=(EventSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr bool operator==(EventSet, EventSet) = default;
  friend constexpr auto operator<=>(EventSet a, EventSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = EventId;
    using difference_type = std::ptrdiff_t;
    using pointer = const EventId*;
    using reference = EventId;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr EventId operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace pomlog
