#include "permgrid/paths.hpp"

#include <string>

#include "permgrid/error.hpp"

namespace permgrid {

std::string_view to_string(PathKind kind) {
  switch (kind) {
    case PathKind::H0: return "h0";
    case PathKind::H1: return "h1";
    case PathKind::V0: return "v0";
    case PathKind::V1: return "v1";
  }
  return "?";
}

PathKind parse_path_kind(std::string_view text) {
  if (text == "h0" || text == "H0") return PathKind::H0;
  if (text == "h1" || text == "H1") return PathKind::H1;
  if (text == "v0" || text == "V0") return PathKind::V0;
  if (text == "v1" || text == "V1") return PathKind::V1;
  throw ParseError("unknown path kind '" + std::string(text) + "'");
}

PathSet::PathSet(int n, std::vector<Path> horizontal, std::vector<Path> vertical)
    : n_(n),
      horizontal_(std::move(horizontal)),
      vertical_(std::move(vertical)),
      h_owner_((n + 1) * (n + 1), -1),
      v_owner_((n + 1) * (n + 1), -1) {
  auto mark = [&](std::vector<int>& owner, const std::vector<Path>& paths) {
    for (int idx = 0; idx < static_cast<int>(paths.size()); ++idx) {
      for (const GridPoint& pt : paths[idx].points) {
        int& o = owner[cell(pt)];
        o = (o == -1) ? idx : -2;
      }
    }
  };
  mark(h_owner_, horizontal_);
  mark(v_owner_, vertical_);
}

PathCounts PathSet::counts() const {
  PathCounts c;
  for (const Path& p : horizontal_) (p.kind == PathKind::H0 ? c.h0 : c.h1)++;
  for (const Path& p : vertical_) (p.kind == PathKind::V0 ? c.v0 : c.v1)++;
  return c;
}

int PathSet::horizontal_path_at(GridPoint pt) const {
  const int o = h_owner_.at(cell(pt));
  if (o < 0) throw InvariantError("grid point not on exactly one horizontal path");
  return o;
}

int PathSet::vertical_path_at(GridPoint pt) const {
  const int o = v_owner_.at(cell(pt));
  if (o < 0) throw InvariantError("grid point not on exactly one vertical path");
  return o;
}

bool PathSet::partitions_grid() const {
  for (int o : h_owner_) {
    if (o < 0) return false;
  }
  for (int o : v_owner_) {
    if (o < 0) return false;
  }
  return true;
}

namespace {

[[noreturn]] void walk_failure(const Permutation& pi, PathKind kind, GridPoint pt) {
  throw InvariantError(std::string(to_string(kind)) + " path of " + pi.str() +
                       " reached a square corner of the wrong type at (" +
                       std::to_string(pt.row) + "," + std::to_string(pt.col) + ")");
}

Path walk_horizontal(const Permutation& pi, int start_row) {
  const int n = pi.size();
  const bool zero = start_row == 1 || (start_row <= n && pi.at(start_row - 1) > pi.at(start_row));
  Path path{zero ? PathKind::H0 : PathKind::H1, {}};
  path.points.reserve(n + 1);
  GridPoint pt{start_row, 1};
  path.points.push_back(pt);
  while (pt.col <= n) {
    const bool top_left = pt.row <= n && pi.at(pt.row) == pt.col;
    const bool bottom_left = pt.row >= 2 && pi.at(pt.row - 1) == pt.col;
    if (zero) {
      if (bottom_left) walk_failure(pi, path.kind, pt);
      pt = top_left ? GridPoint{pt.row + 1, pt.col + 1} : GridPoint{pt.row, pt.col + 1};
    } else {
      if (top_left) walk_failure(pi, path.kind, pt);
      pt = bottom_left ? GridPoint{pt.row - 1, pt.col + 1} : GridPoint{pt.row, pt.col + 1};
    }
    path.points.push_back(pt);
  }
  return path;
}

Path walk_vertical(const Permutation& pi, const Permutation& inv, int start_col) {
  const int n = pi.size();
  const bool zero =
      start_col == 1 || (start_col <= n && inv.at(start_col - 1) > inv.at(start_col));
  Path path{zero ? PathKind::V0 : PathKind::V1, {}};
  path.points.reserve(n + 1);
  GridPoint pt{1, start_col};
  path.points.push_back(pt);
  while (pt.row <= n) {
    const bool top_left = pt.col <= n && pi.at(pt.row) == pt.col;
    const bool top_right = pt.col >= 2 && pi.at(pt.row) == pt.col - 1;
    if (zero) {
      if (top_right) walk_failure(pi, path.kind, pt);
      pt = top_left ? GridPoint{pt.row + 1, pt.col + 1} : GridPoint{pt.row + 1, pt.col};
    } else {
      if (top_left) walk_failure(pi, path.kind, pt);
      pt = top_right ? GridPoint{pt.row + 1, pt.col - 1} : GridPoint{pt.row + 1, pt.col};
    }
    path.points.push_back(pt);
  }
  return path;
}

}  // namespace

PathSet trace_paths(const Permutation& pi) {
  const int n = pi.size();
  if (n < 1) throw DomainError("path tracing needs n >= 1");
  const Permutation inv = inverse(pi);
  std::vector<Path> horizontal;
  std::vector<Path> vertical;
  horizontal.reserve(n + 1);
  vertical.reserve(n + 1);
  for (int r = 1; r <= n + 1; ++r) horizontal.push_back(walk_horizontal(pi, r));
  for (int c = 1; c <= n + 1; ++c) vertical.push_back(walk_vertical(pi, inv, c));
  return PathSet(n, std::move(horizontal), std::move(vertical));
}

DType dtype_via_paths(const PathSet& paths, GridPoint pt) {
  const Path& h = paths.horizontal()[paths.horizontal_path_at(pt)];
  const Path& v = paths.vertical()[paths.vertical_path_at(pt)];
  return {h.kind == PathKind::H0 ? 0 : 1, v.kind == PathKind::V0 ? 0 : 1};
}

DType dtype_via_paths(const Permutation& pi, GridPoint pt) {
  if (!in_grid(pi, pt)) throw DomainError("grid point outside the grid");
  return dtype_via_paths(trace_paths(pi), pt);
}

DTypeCensus census_via_paths(const PathSet& paths) {
  DTypeCensus c;
  const int m = paths.size() + 1;
  for (int r = 1; r <= m; ++r) {
    for (int s = 1; s <= m; ++s) ++c[dtype_via_paths(paths, {r, s})];
  }
  return c;
}

}  // namespace permgrid
