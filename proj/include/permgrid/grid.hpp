#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "permgrid/permutation.hpp"

namespace permgrid {

// Intersection of the row-th horizontal and col-th vertical rule of the grid
// of a size-n permutation; 1 <= row, col <= n + 1. Row 1 is the top rule,
// column 1 the leftmost.
struct GridPoint {
  int row = 1;
  int col = 1;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Cell <row, col> of the n x n array; filled iff pi_row == col.
struct Square {
  int row = 1;
  int col = 1;
  friend bool operator==(const Square&, const Square&) = default;
  friend auto operator<=>(const Square&, const Square&) = default;
};

// Change (delta des, delta ides) caused by inserting a filled square at a
// grid point. Both components are 0 or 1.
struct DType {
  int p = 0;  // horizontal (descent) part
  int q = 0;  // vertical (inverse descent) part

  DType swapped() const { return {q, p}; }
  // 0..3 as 2p + q: (0,0), (0,1), (1,0), (1,1).
  int index() const { return 2 * p + q; }
  static DType from_index(int i) { return {i / 2, i % 2}; }
  std::string str() const;

  friend bool operator==(const DType&, const DType&) = default;
  friend auto operator<=>(const DType&, const DType&) = default;
};

inline constexpr DType kDType00{0, 0};
inline constexpr DType kDType01{0, 1};
inline constexpr DType kDType10{1, 0};
inline constexpr DType kDType11{1, 1};

bool in_grid(const Permutation& pi, GridPoint pt);
bool is_filled(const Permutation& pi, Square sq);

// phi_(r,s): the size-(n+1) permutation whose grid is pi's grid with a filled
// square inserted at point (r,s). sigma_r = s; every other entry keeps its
// relative order, shifted down/right past the new row and column:
//   k < r: sigma_k = pi_k + [pi_k >= s]
//   k > r: sigma_k = pi_{k-1} + [pi_{k-1} >= s]
// Throws DomainError when the point is outside [1, n+1]^2.
Permutation insert_square(const Permutation& pi, GridPoint pt);

// Removes row sq.row and column sq.col. Exact inverse of insert_square.
// Throws PreconditionError when the square is not filled.
Permutation delete_square(const Permutation& sigma, Square sq);

// d-type by the defining experiment: insert, recount, subtract.
DType dtype(const Permutation& pi, GridPoint pt);

// Counts of grid points by d-type, indexed by DType::index().
struct DTypeCensus {
  std::array<std::int64_t, 4> counts{};

  std::int64_t operator[](DType d) const { return counts[d.index()]; }
  std::int64_t& operator[](DType d) { return counts[d.index()]; }
  std::int64_t total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  friend bool operator==(const DTypeCensus&, const DTypeCensus&) = default;
};

DTypeCensus dtype_census(const Permutation& pi);

// Closed form of the census for a permutation with the given size and
// descent profile (i = des + 1, j = ides + 1):
//   (0,0): ij + n   (1,0): j(n+1-i) - n   (0,1): i(n+1-j) - n
//   (1,1): (n+1-i)(n+1-j) + n
DTypeCensus census_formula(int n, DescentProfile profile);

}  // namespace permgrid
