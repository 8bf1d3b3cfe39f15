#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pomlog/pomset.hpp"

namespace pomlog {

/// Starter, terminator, or any discrete pomset with interfaces, written
/// item by item in event order.
struct StLetter {
  struct Item {
    Label label;
    bool in_start = false;
    bool in_term = false;
    friend bool operator==(const Item&, const Item&) = default;
    friend auto operator<=>(const Item& a, const Item& b) {
      if (auto c = a.label <=> b.label; c != 0) return c;
      if (auto c = a.in_start <=> b.in_start; c != 0) return c;
      return a.in_term <=> b.in_term;
    }
  };
  std::vector<Item> items;

  std::size_t size() const noexcept { return items.size(); }
  bool is_starter() const;
  bool is_terminator() const;
  bool is_identity() const { return is_starter() && is_terminator(); }
  /// Member of □_k.
  bool in_box(std::size_t k) const { return size() <= k && (is_starter() || is_terminator()); }
  Conclist start_interface() const;
  Conclist term_interface() const;

  friend bool operator==(const StLetter&, const StLetter&) = default;
  friend auto operator<=>(const StLetter& a, const StLetter& b) {
    return std::lexicographical_compare_three_way(a.items.begin(), a.items.end(), b.items.begin(),
                                                  b.items.end());
  }
};

struct StSequence {
  std::vector<StLetter> letters;
  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  friend bool operator==(const StSequence&, const StSequence&) = default;
};

struct ConclistSequence {
  std::vector<Conclist> conclists;
  std::size_t size() const noexcept { return conclists.size(); }
  bool empty() const noexcept { return conclists.empty(); }
  friend bool operator==(const ConclistSequence&, const ConclistSequence&) = default;
};

/// Raised by conclist_reconstruct when the sequence denotes several pomsets.
class AutoconcurrencyAmbiguity : public Error {
 public:
  explicit AutoconcurrencyAmbiguity(std::vector<Pomset> candidates);
  const std::vector<Pomset>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<Pomset> candidates_;
};

// -------------------------------------------------------------------- text

std::string to_string(const Conclist& c);          // "a b", "[]" when empty
std::string to_string(const StLetter& l);          // "[a*,*b*]"
std::string to_string(const StSequence& w);        // letters joined by '.'
std::string to_string(const ConclistSequence& s);  // "(b | a b | a)"

/// Conclist literal as used in formulas: "[a b]" or "[]".
std::string conclist_literal(const Conclist& c);

StLetter parse_st_letter(std::string_view text);
StSequence parse_st_sequence(std::string_view text);
ConclistSequence parse_conclist_sequence(std::string_view text);
/// Space-separated labels, optionally wrapped in brackets; "[]" is empty.
Conclist parse_conclist(std::string_view text);

// -------------------------------------------------------------- operations

/// Discrete pomset of one letter.
Pomset letter_pomset(const StLetter& letter);

/// ⟨w⟩. Throws NotCoherent with the offending index; the empty word gives
/// the empty pomset.
Pomset glue_sequence(const StSequence& w);

/// Unique sparse ST decomposition. An identity pomset decomposes into its
/// single identity letter. Throws EmptyPomset.
StSequence sparse_decompose(const Pomset& p);

/// (T, U) pairs visited from (∅, S_P) by maximal terminate/start steps.
std::vector<std::pair<EventSet, EventSet>> sparse_run(const Pomset& p);

/// Def. of conclist decomposition applied to the sparse decomposition.
ConclistSequence conclist_decompose(const Pomset& p);
/// The same construction for an arbitrary coherent nonempty sequence.
ConclistSequence conclist_sequence_of(const StSequence& w);

/// Unique pomset with the given conclist decomposition. Throws NotWellFormed
/// or AutoconcurrencyAmbiguity (with every candidate).
Pomset conclist_reconstruct(const ConclistSequence& s);

bool is_coherent(const StSequence& w);
/// Coherent, alternating, no identities; a single non-empty identity letter
/// is also sparse (it is the decomposition of an identity pomset).
bool is_sparse(const StSequence& w);
bool is_well_formed(const ConclistSequence& s);

/// U ⊑ V: a label- and order-preserving injection exists.
bool embeds(const Conclist& u, const Conclist& v);
/// Every such injection, as strictly increasing index lists into v.
std::vector<std::vector<std::size_t>> embeddings(const Conclist& u, const Conclist& v);

/// All letters of □_k over the alphabet, in a fixed order.
/// Id_∅ is included only when `with_empty` is set.
std::vector<StLetter> box_letters(std::size_t k, const Alphabet& sigma, bool with_empty = false);
/// All conclists of size ≤ k, in a fixed order.
std::vector<Conclist> conclists_upto(std::size_t k, const Alphabet& sigma);

}  // namespace pomlog
