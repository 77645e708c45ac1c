#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ptab/error.hpp"

namespace ptab {

// A permutation of {1..n} in one-line notation. Immutable once built.
class Permutation {
 public:
  // Validates that `word` contains each of 1..word.size() exactly once.
  // Throws errc::value_out_of_range or errc::duplicate_value otherwise;
  // the empty word is rejected.
  static Permutation from_word(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  // Value at 1-based position, i.e. sigma(pos).
  int value_at(int pos) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {}
  std::vector<int> word_;
};

// A word of distinct positive integers. This is the mutable working word of
// the bijection: the forward direction deletes labels from a permutation,
// the inverse direction inserts labels into the unrestricted-row list.
class PartialWord {
 public:
  PartialWord() = default;
  // Throws errc::duplicate_value if entries repeat.
  explicit PartialWord(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  bool contains(int value) const;
  // 0-based position of `value`, or nullopt.
  std::optional<int> position_of(int value) const;

  // Throws errc::internal_invariant_violation if `value` is absent.
  void erase(int value);

  // Insert `value` (or a block of values, kept in order) immediately before
  // `target`. Throws errc::insertion_target_missing if `target` is absent,
  // errc::duplicate_value if an inserted value is already present.
  void insert_before(int target, int value);
  void insert_before(int target, std::span<const int> values);

  friend bool operator==(const PartialWord&, const PartialWord&) = default;

 private:
  std::vector<int> values_;
};

// "(2,4,8,1,3,7)"; the empty word prints as "()".
std::string to_string(const PartialWord& word);

}  // namespace ptab
