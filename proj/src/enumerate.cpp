#include "permgrid/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "permgrid/error.hpp"

namespace permgrid {

std::string_view to_string(PermKind kind) {
  switch (kind) {
    case PermKind::all: return "all";
    case PermKind::involutions: return "involutions";
    case PermKind::ffi: return "ffi";
  }
  return "?";
}

PermKind parse_perm_kind(std::string_view text) {
  if (text == "all") return PermKind::all;
  if (text == "involutions") return PermKind::involutions;
  if (text == "ffi") return PermKind::ffi;
  throw ParseError("unknown permutation kind '" + std::string(text) + "'");
}

bool matches_kind(PermKind kind, const Permutation& pi) {
  switch (kind) {
    case PermKind::all: return true;
    case PermKind::involutions: return is_involution(pi);
    case PermKind::ffi: return is_fixed_point_free_involution(pi);
  }
  return false;
}

PermutationStream::PermutationStream(PermKind kind, int n, std::optional<int> first_value)
    : kind_(kind), n_(n), first_value_(first_value) {
  if (n < 0) throw DomainError("permutation size must be non-negative");
  if (first_value && (*first_value < 1 || *first_value > n)) done_ = true;
  if (kind_ == PermKind::ffi && n % 2 != 0) done_ = true;
}

std::optional<Permutation> PermutationStream::next() {
  if (done_) return std::nullopt;
  const bool ok = kind_ == PermKind::all ? advance_all() : advance_matching();
  if (!ok) {
    done_ = true;
    return std::nullopt;
  }
  return from_word_unchecked(word_);
}

bool PermutationStream::advance_all() {
  if (!started_) {
    started_ = true;
    word_.resize(n_);
    std::iota(word_.begin(), word_.end(), 1);
    if (first_value_) {
      std::rotate(word_.begin(), word_.begin() + (*first_value_ - 1), word_.begin() + *first_value_);
    }
    return true;
  }
  if (!std::next_permutation(word_.begin(), word_.end())) return false;
  return !first_value_ || word_[0] == *first_value_;
}

// Values a position may take given the current partial matching. A position
// is always the smallest unassigned one when this is asked.
bool PermutationStream::allowed(int position, int value) const {
  if (stack_.empty() && first_value_ && value != *first_value_) return false;
  if (value == position) return kind_ == PermKind::involutions;
  return word_[value - 1] == 0;
}

int PermutationStream::next_choice(int position, int after) const {
  for (int v = std::max(after + 1, position); v <= n_; ++v) {
    if (allowed(position, v)) return v;
  }
  return 0;
}

bool PermutationStream::advance_matching() {
  bool descending = !started_;
  if (!started_) {
    started_ = true;
    word_.assign(n_, 0);
  }
  for (;;) {
    if (descending) {
      auto it = std::find(word_.begin(), word_.end(), 0);
      if (it == word_.end()) return true;
      const int position = static_cast<int>(it - word_.begin()) + 1;
      const int v = next_choice(position, 0);
      if (v == 0) {
        descending = false;
        continue;
      }
      word_[position - 1] = v;
      word_[v - 1] = position;
      stack_.push_back({position, v});
    } else {
      if (stack_.empty()) return false;
      const Frame f = stack_.back();
      stack_.pop_back();
      word_[f.position - 1] = 0;
      word_[f.value - 1] = 0;
      const int v = next_choice(f.position, f.value);
      if (v != 0) {
        word_[f.position - 1] = v;
        word_[v - 1] = f.position;
        stack_.push_back({f.position, v});
        descending = true;
      }
    }
  }
}

std::vector<Permutation> collect(PermKind kind, int n, std::optional<int> first_value) {
  std::vector<Permutation> out;
  PermutationStream stream(kind, n, first_value);
  while (auto pi = stream.next()) out.push_back(std::move(*pi));
  return out;
}

}  // namespace permgrid
