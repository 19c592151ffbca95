#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "permgrid/permutation.hpp"

namespace permgrid {

enum class PermKind { all, involutions, ffi };

std::string_view to_string(PermKind kind);
// Accepts "all", "involutions", "ffi". Throws ParseError otherwise.
PermKind parse_perm_kind(std::string_view text);

bool matches_kind(PermKind kind, const Permutation& pi);

// Single-pass stream of the permutations of one kind and size, in
// lexicographic order of their one-line words. Involutions and
// fixed-point-free involutions are built directly as matchings rather than by
// filtering S_n.
//
// With `first_value` set, only permutations with pi_1 == first_value are
// produced (still in lexicographic order). Concatenating the streams for
// first_value = 1..n reproduces the unrestricted stream, which is how
// enumeration is sharded across workers.
class PermutationStream {
 public:
  PermutationStream(PermKind kind, int n, std::optional<int> first_value = std::nullopt);

  std::optional<Permutation> next();

 private:
  struct Frame {
    int position;
    int value;
  };

  bool advance_all();
  bool advance_matching();
  bool allowed(int position, int value) const;
  int next_choice(int position, int after) const;

  PermKind kind_;
  int n_;
  std::optional<int> first_value_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> word_;  // 0 marks an unassigned position (matching mode)
  std::vector<Frame> stack_;
};

std::vector<Permutation> collect(PermKind kind, int n,
                                 std::optional<int> first_value = std::nullopt);

template <class Fn>
void for_each_permutation(PermKind kind, int n, Fn&& fn) {
  PermutationStream stream(kind, n);
  while (auto pi = stream.next()) fn(*pi);
}

}  // namespace permgrid
