#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permgrid {

// A permutation of [n] in one-line notation.
//
// The public model is 1-based in both positions and values: at(i) is pi_i for
// 1 <= i <= n. Storage is a 0-based vector holding the 1-based values, so
// word()[i - 1] == at(i).
class Permutation {
 public:
  using value_type = int;

  Permutation() = default;
  // Throws PreconditionError unless `word` is a bijection of {1..n}.
  explicit Permutation(std::vector<value_type> word);
  Permutation(std::initializer_list<value_type> word);

  static Permutation identity(int n);
  // n, n-1, ..., 1
  static Permutation decreasing(int n);

  // Accepts "3,1,6,5,2,4" or, for n <= 9, the compact "316524".
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  bool empty() const noexcept { return word_.empty(); }

  value_type at(int position) const noexcept { return word_[position - 1]; }
  std::span<const value_type> word() const noexcept { return word_; }

  // Comma-separated form.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  struct unchecked_tag {};
  Permutation(std::vector<value_type> word, unchecked_tag) : word_(std::move(word)) {}
  friend Permutation from_word_unchecked(std::vector<value_type> word);

  std::vector<value_type> word_;
};

// Skips validation; for internal construction sites that build bijections by
// construction.
Permutation from_word_unchecked(std::vector<Permutation::value_type> word);

struct DescentProfile {
  int des = 0;
  int ides = 0;
  friend bool operator==(const DescentProfile&, const DescentProfile&) = default;
};

Permutation inverse(const Permutation& pi);

int descents(const Permutation& pi);
// Number of i with i+1 to the left of i.
int inverse_descents(const Permutation& pi);
DescentProfile descent_profile(const Permutation& pi);

bool is_involution(const Permutation& pi);
bool is_fixed_point_free_involution(const Permutation& pi);

}  // namespace permgrid
