#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permgrid/grid.hpp"
#include "permgrid/paths.hpp"
#include "permgrid/permutation.hpp"

namespace permgrid {

// ---------------------------------------------------------------------------
// Two-sided Eulerian numbers: removing the square in row k.

// Row index of the left-most new square produced by xi_(i,j): i if i < j,
// i + 1 if i > j. Throws DomainError when i == j.
int chi(int i, int j);

struct PointedPermutation {
  Permutation sigma;
  GridPoint point;
  friend bool operator==(const PointedPermutation&, const PointedPermutation&) = default;
  friend auto operator<=>(const PointedPermutation&, const PointedPermutation&) = default;
};

struct PositionedPermutation {
  Permutation pi;
  int position = 1;
  friend bool operator==(const PositionedPermutation&, const PositionedPermutation&) = default;
  friend auto operator<=>(const PositionedPermutation&, const PositionedPermutation&) = default;
};

// (pi, k) -> (pi with square <k, pi_k> deleted, (k, pi_k)). Requires n >= 2.
PointedPermutation theta_A(const Permutation& pi, int k);
// (sigma, (r, s)) -> (insert_square(sigma, (r, s)), r).
PositionedPermutation psi_A(const Permutation& sigma, GridPoint pt);

// ---------------------------------------------------------------------------
// Double insertions on involutions.

// Inserts squares at (i,j) and (j,i) of an involution's grid. For i < j the new
// squares are <i, j+1> and <j+1, i>. Symmetric in (i, j).
Permutation xi(const Permutation& pi, GridPoint pt);
// Inserts a 12-pair (squares <i,i>, <i+1,i+1>) at diagonal point (i,i).
Permutation eta(const Permutation& pi, int i);
// Inserts a 21-pair (squares <i,i+1>, <i+1,i>) at diagonal point (i,i).
Permutation eta_prime(const Permutation& pi, int i);

// Inverses; each throws PreconditionError when the squares to remove are not
// filled or sigma is not an involution.
Permutation xi_inv(const Permutation& sigma, GridPoint pt);
Permutation eta_inv(const Permutation& sigma, int i);
Permutation eta_prime_inv(const Permutation& sigma, int i);

// ---------------------------------------------------------------------------
// Subset labels. B-sets index the five terms of the involution recurrence,
// D-sets the fixed-point-free one. `part` is the subscript distinguishing the
// pieces a set is split into by the inverse map (0 when unsplit, as for B1).
struct SubsetLabel {
  char letter = 'B';
  int set = 1;
  int part = 0;

  std::string str() const;  // e.g. "B5_1", "B1", "D3_2"
  static SubsetLabel parse(const std::string& text);
  friend bool operator==(const SubsetLabel&, const SubsetLabel&) = default;
  friend auto operator<=>(const SubsetLabel&, const SubsetLabel&) = default;
};

// An element (sigma, point) of one of the B / D families.
//
// `family` is the recurrence term the element is drawn from (B^{(family)} or
// D^{(family)}); `label` is the finer piece, decided by predicates on sigma
// and the point. For the involution case these differ on the diagonal: a
// point of d-type (0,0) carries label B4_3 both in family 3 and in family 4.
// `tag` is 1 or 2 only for the doubled diagonal elements of D3 and D5.
struct TaggedElement {
  Permutation sigma;
  GridPoint point;
  std::optional<int> tag;
  int family = 1;
  SubsetLabel label;

  friend bool operator==(const TaggedElement&, const TaggedElement&) = default;
  friend auto operator<=>(const TaggedElement&, const TaggedElement&) = default;
};

struct ThetaTrace {
  Permutation input;
  int position = 1;
  std::string case_name;
  TaggedElement output;

  // (size, descents) of the output permutation, the subscript pair of the
  // set the output lands in.
  std::pair<int, int> target_nk() const;
};

// Point predicates of B^{(family)} for an involution sigma; returns the label
// of the piece (sigma, pt) falls in, or nullopt when it is not in the family.
// Families 1 and 2 are decided from traced paths.
std::optional<SubsetLabel> classify_B(const Permutation& sigma, GridPoint pt, int family);
std::optional<SubsetLabel> classify_B(const Permutation& sigma, const PathSet& paths,
                                      GridPoint pt, int family);

// Theta for involutions; requires n >= 3 and 1 <= i <= n.
ThetaTrace theta_I(const Permutation& pi, int i);
// Inverse of theta_I. Re-checks the element's label against the predicates.
PositionedPermutation psi_I(const TaggedElement& element);

// B^{(1)}_{n,k} .. B^{(5)}_{n,k}, scanning the involutions of size n with k
// descents. Entry r-1 holds family r, ordered by sigma then point.
std::array<std::vector<TaggedElement>, 5> build_B_sets(int n, int k);

// Appends every element (sigma, point) of B^{(1..5)} contributed by one
// involution sigma.
void append_B_elements(const Permutation& sigma, std::array<std::vector<TaggedElement>, 5>& sets);

// Closed-form cardinalities |B^{(r)}_{n,k}| / I_{n,k}, r = 1..5.
std::array<long long, 5> B_set_multipliers(int n, int k);

// D-set label for a fixed-point-free involution, point and (diagonal) tag;
// nullopt when the tag does not fit the point (tags exactly on the diagonal).
std::optional<SubsetLabel> classify_D(const Permutation& sigma, GridPoint pt,
                                      std::optional<int> tag);

// Theta for fixed-point-free involutions; requires even size >= 4.
ThetaTrace theta_J(const Permutation& pi, int i);
PositionedPermutation psi_J(const TaggedElement& element);

// D^{(1)}_{n,k} .. D^{(5)}_{n,k}; diagonal elements of D3 and D5 appear once
// per tag. Empty for odd n.
std::array<std::vector<TaggedElement>, 5> build_D_sets(int n, int k);

void append_D_elements(const Permutation& sigma, std::array<std::vector<TaggedElement>, 5>& sets);

// Closed-form cardinalities |D^{(r)}_{n,k}| / J_{n,k}, r = 1..5, for even n.
std::array<long long, 5> D_set_multipliers(int n, int k);

}  // namespace permgrid
