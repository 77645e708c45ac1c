#include "ptab/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace ptab {

Permutation Permutation::from_word(std::vector<int> word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) {
    throw Error(errc::value_out_of_range, "a permutation must have at least one entry");
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || v > n) {
      throw Error(errc::value_out_of_range,
                  "entry " + std::to_string(v) + " is outside {1.." + std::to_string(n) + "}");
    }
    if (seen[v]) {
      throw Error(errc::duplicate_value, "entry " + std::to_string(v) + " appears more than once");
    }
    seen[v] = true;
  }
  return Permutation(std::move(word));
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw Error(errc::value_out_of_range, "a permutation must have at least one entry");
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

int Permutation::value_at(int pos) const {
  if (pos < 1 || pos > size()) {
    throw Error(errc::out_of_range, "position " + std::to_string(pos) + " is outside 1.." +
                                        std::to_string(size()));
  }
  return word_[pos - 1];
}

PartialWord::PartialWord(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t a = 0; a < values_.size(); ++a) {
    for (std::size_t b = a + 1; b < values_.size(); ++b) {
      if (values_[a] == values_[b]) {
        throw Error(errc::duplicate_value,
                    "entry " + std::to_string(values_[a]) + " appears more than once");
      }
    }
  }
}

bool PartialWord::contains(int value) const {
  return std::find(values_.begin(), values_.end(), value) != values_.end();
}

std::optional<int> PartialWord::position_of(int value) const {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) return std::nullopt;
  return static_cast<int>(it - values_.begin());
}

void PartialWord::erase(int value) {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) {
    throw Error(errc::internal_invariant_violation,
                "deleting label " + std::to_string(value) + " which is not in the working word");
  }
  values_.erase(it);
}

void PartialWord::insert_before(int target, int value) {
  insert_before(target, std::span<const int>(&value, 1));
}

void PartialWord::insert_before(int target, std::span<const int> values) {
  auto it = std::find(values_.begin(), values_.end(), target);
  if (it == values_.end()) {
    throw Error(errc::insertion_target_missing,
                "label " + std::to_string(target) + " is not in the working word");
  }
  for (int v : values) {
    if (contains(v)) {
      throw Error(errc::duplicate_value,
                  "entry " + std::to_string(v) + " is already in the working word");
    }
  }
  values_.insert(it, values.begin(), values.end());
}

std::string to_string(const PartialWord& word) {
  std::string out = "(";
  const auto& vs = word.values();
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(vs[k]);
  }
  out += ')';
  return out;
}

}  // namespace ptab
