#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "permgrid/grid.hpp"
#include "permgrid/permutation.hpp"

namespace permgrid {

// H0/H1 run left to right along horizontal rules; V0/V1 top to bottom along
// vertical rules. The digit is the d_h (resp. d_v) type shared by every point
// of the path.
enum class PathKind { H0, H1, V0, V1 };

std::string_view to_string(PathKind kind);
PathKind parse_path_kind(std::string_view text);

struct Path {
  PathKind kind = PathKind::H0;
  // One point per column (horizontal) or per row (vertical). A diagonal step
  // across a filled square records both of its end points and nothing else.
  std::vector<GridPoint> points;
};

struct PathCounts {
  int h0 = 0, h1 = 0, v0 = 0, v1 = 0;
  friend bool operator==(const PathCounts&, const PathCounts&) = default;
};

class PathSet {
 public:
  PathSet() = default;
  PathSet(int n, std::vector<Path> horizontal, std::vector<Path> vertical);

  int size() const { return n_; }
  // Ordered by starting row on the left boundary, top to bottom.
  const std::vector<Path>& horizontal() const { return horizontal_; }
  // Ordered by starting column on the top boundary, left to right.
  const std::vector<Path>& vertical() const { return vertical_; }

  PathCounts counts() const;

  // Index into horizontal()/vertical() of the unique path through pt.
  int horizontal_path_at(GridPoint pt) const;
  int vertical_path_at(GridPoint pt) const;

  // True iff every grid point lies on exactly one horizontal and exactly one
  // vertical path.
  bool partitions_grid() const;

 private:
  int cell(GridPoint pt) const { return (pt.row - 1) * (n_ + 1) + (pt.col - 1); }

  int n_ = 0;
  std::vector<Path> horizontal_;
  std::vector<Path> vertical_;
  std::vector<int> h_owner_;  // -1 unowned, -2 owned twice
  std::vector<int> v_owner_;
};

// Walks every path with the local rule: a 0_h path steps southeast when it
// reaches the top-left corner of a filled square, a 1_h path steps northeast
// from a bottom-left corner, a 0_v path steps southeast from a top-left
// corner and a 1_v path steps southwest from a top-right corner; otherwise
// the walk continues straight. The kind of a path is read off its starting
// boundary point from the adjacent pair of rows (columns). Throws
// InvariantError if a walk ever meets a square corner that contradicts its
// kind. Requires n >= 1.
PathSet trace_paths(const Permutation& pi);

// d-type read from the kinds of the two paths crossing at pt.
DType dtype_via_paths(const PathSet& paths, GridPoint pt);
DType dtype_via_paths(const Permutation& pi, GridPoint pt);

DTypeCensus census_via_paths(const PathSet& paths);

}  // namespace permgrid
