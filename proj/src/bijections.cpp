#include "permgrid/bijections.hpp"

#include <algorithm>
#include <string>

#include "permgrid/enumerate.hpp"
#include "permgrid/error.hpp"

namespace permgrid {

namespace {

std::string point_str(GridPoint pt) {
  return "(" + std::to_string(pt.row) + "," + std::to_string(pt.col) + ")";
}

void require_involution(const Permutation& pi, const char* op) {
  if (!is_involution(pi)) {
    throw PreconditionError(std::string(op) + ": " + pi.str() + " is not an involution");
  }
}

void require_filled(const Permutation& sigma, Square sq, const char* op) {
  if (!is_filled(sigma, sq)) {
    throw PreconditionError(std::string(op) + ": square <" + std::to_string(sq.row) + "," +
                            std::to_string(sq.col) + "> is not filled in " + sigma.str());
  }
}

void require_diagonal_index(const Permutation& pi, int i, const char* op) {
  if (i < 1 || i > pi.size() + 1) {
    throw DomainError(std::string(op) + ": diagonal index " + std::to_string(i) +
                      " outside [1, " + std::to_string(pi.size() + 1) + "]");
  }
}

bool is_mixed(DType d) { return d.p != d.q; }

}  // namespace

int chi(int i, int j) {
  if (i == j) throw DomainError("chi is undefined on the diagonal (i == j)");
  return i < j ? i : i + 1;
}

PointedPermutation theta_A(const Permutation& pi, int k) {
  if (pi.size() < 2) throw DomainError("theta_A needs n >= 2");
  if (k < 1 || k > pi.size()) throw DomainError("theta_A: position out of range");
  const Square sq{k, pi.at(k)};
  return {delete_square(pi, sq), {sq.row, sq.col}};
}

PositionedPermutation psi_A(const Permutation& sigma, GridPoint pt) {
  return {insert_square(sigma, pt), pt.row};
}

Permutation xi(const Permutation& pi, GridPoint pt) {
  require_involution(pi, "xi");
  if (pt.row == pt.col) throw DomainError("xi needs an off-diagonal point");
  if (!in_grid(pi, pt)) throw DomainError("xi: point " + point_str(pt) + " outside the grid");
  const int a = std::min(pt.row, pt.col);
  const int b = std::max(pt.row, pt.col);
  // The first square lands at <a, b>; the mirrored point (b, a) has moved one
  // row down because a <= b, while its column is untouched.
  const Permutation once = insert_square(pi, {a, b});
  return insert_square(once, {b + 1, a});
}

Permutation eta(const Permutation& pi, int i) {
  require_involution(pi, "eta");
  require_diagonal_index(pi, i, "eta");
  return insert_square(insert_square(pi, {i, i}), {i + 1, i + 1});
}

Permutation eta_prime(const Permutation& pi, int i) {
  require_involution(pi, "eta_prime");
  require_diagonal_index(pi, i, "eta_prime");
  return insert_square(insert_square(pi, {i, i}), {i, i + 1});
}

Permutation xi_inv(const Permutation& sigma, GridPoint pt) {
  require_involution(sigma, "xi_inv");
  if (pt.row == pt.col) throw DomainError("xi_inv needs an off-diagonal point");
  const int a = std::min(pt.row, pt.col);
  const int b = std::max(pt.row, pt.col);
  if (a < 1 || b + 1 > sigma.size()) {
    throw DomainError("xi_inv: point " + point_str(pt) + " outside the grid");
  }
  require_filled(sigma, {a, b + 1}, "xi_inv");
  require_filled(sigma, {b + 1, a}, "xi_inv");
  return delete_square(delete_square(sigma, {b + 1, a}), {a, b});
}

Permutation eta_inv(const Permutation& sigma, int i) {
  require_involution(sigma, "eta_inv");
  require_filled(sigma, {i, i}, "eta_inv");
  require_filled(sigma, {i + 1, i + 1}, "eta_inv");
  return delete_square(delete_square(sigma, {i + 1, i + 1}), {i, i});
}

Permutation eta_prime_inv(const Permutation& sigma, int i) {
  require_involution(sigma, "eta_prime_inv");
  require_filled(sigma, {i, i + 1}, "eta_prime_inv");
  require_filled(sigma, {i + 1, i}, "eta_prime_inv");
  return delete_square(delete_square(sigma, {i + 1, i}), {i, i});
}

// ---------------------------------------------------------------------------

std::string SubsetLabel::str() const {
  std::string s(1, letter);
  s += std::to_string(set);
  if (part != 0) s += "_" + std::to_string(part);
  return s;
}

SubsetLabel SubsetLabel::parse(const std::string& text) {
  SubsetLabel label;
  if (text.size() < 2 || (text[0] != 'B' && text[0] != 'D') || text[1] < '1' || text[1] > '5') {
    throw ParseError("bad subset label '" + text + "'");
  }
  label.letter = text[0];
  label.set = text[1] - '0';
  if (text.size() == 2) return label;
  if (text.size() != 4 || text[2] != '_' || text[3] < '1' || text[3] > '3') {
    throw ParseError("bad subset label '" + text + "'");
  }
  label.part = text[3] - '0';
  return label;
}

std::pair<int, int> ThetaTrace::target_nk() const {
  return {output.sigma.size(), descents(output.sigma)};
}

// ---------------------------------------------------------------------------
// Involutions.

namespace {

// The last diagonal point on the 0_h path through pt, or nullopt if pt is not
// on a 0_h path.
std::optional<GridPoint> last_diagonal_touch(const PathSet& paths, GridPoint pt) {
  const Path& path = paths.horizontal()[paths.horizontal_path_at(pt)];
  if (path.kind != PathKind::H0) return std::nullopt;
  std::optional<GridPoint> last;
  for (const GridPoint& q : path.points) {
    if (q.row == q.col) last = q;
  }
  return last;
}

// First point on a 1_h path lying on the diagonal or at the bottom-left corner
// of a diagonal filled square.
std::optional<GridPoint> first_diagonal_touch(const Permutation& sigma, const Path& path) {
  for (const GridPoint& q : path.points) {
    if (q.row == q.col) return q;
    if (q.row == q.col + 1 && is_filled(sigma, {q.col, q.col})) return q;
  }
  return std::nullopt;
}

SubsetLabel b_label(int set, int part) { return {'B', set, part}; }

int side_part(GridPoint pt) { return pt.row < pt.col ? 1 : 2; }

}  // namespace

std::optional<SubsetLabel> classify_B(const Permutation& sigma, const PathSet& paths,
                                      GridPoint pt, int family) {
  if (!in_grid(sigma, pt)) return std::nullopt;
  const bool diagonal = pt.row == pt.col;
  switch (family) {
    case 1: {
      if (!diagonal) return std::nullopt;
      const auto last = last_diagonal_touch(paths, pt);
      if (last && *last == pt) return b_label(1, 0);
      return std::nullopt;
    }
    case 2: {
      const Path& path = paths.horizontal()[paths.horizontal_path_at(pt)];
      if (path.kind != PathKind::H1) return std::nullopt;
      const auto first = first_diagonal_touch(sigma, path);
      if (!first || *first != pt) return std::nullopt;
      return b_label(2, diagonal ? 2 : 1);
    }
    case 3: {
      if (dtype(sigma, pt) != kDType00) return std::nullopt;
      return diagonal ? b_label(4, 3) : b_label(3, side_part(pt));
    }
    case 4: {
      const DType d = dtype(sigma, pt);
      if (diagonal) return d == kDType00 ? b_label(4, 3) : b_label(5, 3);
      if (!is_mixed(d)) return std::nullopt;
      return b_label(4, side_part(pt));
    }
    case 5: {
      if (dtype(sigma, pt) != kDType11) return std::nullopt;
      return diagonal ? b_label(5, 3) : b_label(5, side_part(pt));
    }
    default:
      throw DomainError("B family must be 1..5");
  }
}

std::optional<SubsetLabel> classify_B(const Permutation& sigma, GridPoint pt, int family) {
  require_involution(sigma, "classify_B");
  if (sigma.size() < 1) return std::nullopt;
  return classify_B(sigma, trace_paths(sigma), pt, family);
}

ThetaTrace theta_I(const Permutation& pi, int i) {
  require_involution(pi, "theta_I");
  const int n = pi.size();
  if (n < 3) throw DomainError("theta_I needs n >= 3");
  if (i < 1 || i > n) throw DomainError("theta_I: position out of range");

  const int v = pi.at(i);
  ThetaTrace trace{pi, i, {}, {}};
  TaggedElement& out = trace.output;
  if (v > i + 1) {
    trace.case_name = "xi_inv_upper";
    out.point = {i, v - 1};
    out.sigma = xi_inv(pi, out.point);
  } else if (v < i - 1) {
    trace.case_name = "xi_inv_lower";
    out.point = {i - 1, v};
    out.sigma = xi_inv(pi, out.point);
  } else if (v == i + 1) {
    trace.case_name = "eta_prime_inv";
    out.point = {i, i};
    out.sigma = eta_prime_inv(pi, i);
  } else if (v == i - 1) {
    trace.case_name = "delete_subdiagonal";
    out.point = {i, v};
    out.sigma = delete_square(pi, {i, v});
  } else if (i == n || pi.at(i + 1) != i + 1) {
    trace.case_name = "delete_fixed_point";
    out.point = {i, i};
    out.sigma = delete_square(pi, {i, i});
  } else {
    trace.case_name = "eta_inv";
    out.point = {i, i};
    out.sigma = eta_inv(pi, i);
  }

  const int k = descents(pi);
  const int drop = k - descents(out.sigma);
  if (out.sigma.size() == n - 1 && (drop == 0 || drop == 1)) {
    out.family = 1 + drop;
  } else if (out.sigma.size() == n - 2 && drop >= 0 && drop <= 2) {
    out.family = 3 + drop;
  } else {
    throw InvariantError("theta_I(" + pi.str() + ", " + std::to_string(i) +
                         ") left the recurrence's index range");
  }
  const auto label = classify_B(out.sigma, out.point, out.family);
  if (!label) {
    throw InvariantError("theta_I(" + pi.str() + ", " + std::to_string(i) + ") = (" +
                         out.sigma.str() + ", " + point_str(out.point) +
                         ") is in no piece of B^(" + std::to_string(out.family) + ")");
  }
  out.label = *label;
  return trace;
}

PositionedPermutation psi_I(const TaggedElement& e) {
  require_involution(e.sigma, "psi_I");
  const auto label = classify_B(e.sigma, e.point, e.family);
  if (!label || *label != e.label) {
    throw PreconditionError("psi_I: (" + e.sigma.str() + ", " + point_str(e.point) +
                            ") is not in " + e.label.str() + " of family " +
                            std::to_string(e.family));
  }
  const GridPoint pt = e.point;
  const bool diagonal = pt.row == pt.col;
  switch (e.family) {
    case 1:
      return {insert_square(e.sigma, pt), pt.row};
    case 2:
      return {insert_square(e.sigma, pt), pt.row};
    case 3:
      if (!diagonal) return {xi(e.sigma, pt), chi(pt.row, pt.col)};
      return {eta(e.sigma, pt.row), pt.row};
    case 4:
      if (!diagonal) return {xi(e.sigma, pt), chi(pt.row, pt.col)};
      if (e.label == b_label(5, 3)) return {eta(e.sigma, pt.row), pt.row};
      return {eta_prime(e.sigma, pt.row), pt.row};
    case 5:
      if (!diagonal) return {xi(e.sigma, pt), chi(pt.row, pt.col)};
      return {eta_prime(e.sigma, pt.row), pt.row};
    default:
      throw DomainError("B family must be 1..5");
  }
}

void append_B_elements(const Permutation& sigma, std::array<std::vector<TaggedElement>, 5>& sets) {
  require_involution(sigma, "append_B_elements");
  if (sigma.size() < 1) throw DomainError("B sets need n >= 1");
  const PathSet paths = trace_paths(sigma);

  std::vector<TaggedElement> b1;
  std::vector<TaggedElement> b2;
  for (const Path& path : paths.horizontal()) {
    if (path.kind == PathKind::H0) {
      std::optional<GridPoint> last;
      for (const GridPoint& q : path.points) {
        if (q.row == q.col) last = q;
      }
      if (!last) throw InvariantError("0_h path of " + sigma.str() + " misses the diagonal");
      b1.push_back({sigma, *last, std::nullopt, 1, b_label(1, 0)});
    } else {
      const auto first = first_diagonal_touch(sigma, path);
      if (!first) throw InvariantError("1_h path of " + sigma.str() + " misses the diagonal");
      b2.push_back({sigma, *first, std::nullopt, 2, b_label(2, first->row == first->col ? 2 : 1)});
    }
  }
  auto by_point = [](const TaggedElement& a, const TaggedElement& b) { return a.point < b.point; };
  std::sort(b1.begin(), b1.end(), by_point);
  std::sort(b2.begin(), b2.end(), by_point);
  sets[0].insert(sets[0].end(), b1.begin(), b1.end());
  sets[1].insert(sets[1].end(), b2.begin(), b2.end());

  const int m = sigma.size() + 1;
  for (int r = 1; r <= m; ++r) {
    for (int c = 1; c <= m; ++c) {
      const GridPoint pt{r, c};
      const DType d = dtype(sigma, pt);
      const bool diagonal = r == c;
      if (d == kDType00) {
        sets[2].push_back({sigma, pt, std::nullopt, 3,
                           diagonal ? b_label(4, 3) : b_label(3, side_part(pt))});
      }
      if (diagonal) {
        sets[3].push_back({sigma, pt, std::nullopt, 4,
                           d == kDType00 ? b_label(4, 3) : b_label(5, 3)});
      } else if (is_mixed(d)) {
        sets[3].push_back({sigma, pt, std::nullopt, 4, b_label(4, side_part(pt))});
      }
      if (d == kDType11) {
        sets[4].push_back({sigma, pt, std::nullopt, 5,
                           diagonal ? b_label(5, 3) : b_label(5, side_part(pt))});
      }
    }
  }
}

std::array<std::vector<TaggedElement>, 5> build_B_sets(int n, int k) {
  if (n < 1) throw DomainError("build_B_sets needs n >= 1");
  std::array<std::vector<TaggedElement>, 5> sets;
  if (k < 0) return sets;
  PermutationStream stream(PermKind::involutions, n);
  while (auto sigma = stream.next()) {
    if (descents(*sigma) == k) append_B_elements(*sigma, sets);
  }
  return sets;
}

std::array<long long, 5> B_set_multipliers(int n, int k) {
  const long long m = n;
  const long long c = k;
  return {c + 1, m - c, (c + 1) * (c + 1) + m, (m + 1) + 2 * ((c + 1) * (m - c) - m),
          (m - c) * (m - c) + m};
}

// ---------------------------------------------------------------------------
// Fixed-point-free involutions.

std::optional<SubsetLabel> classify_D(const Permutation& sigma, GridPoint pt,
                                      std::optional<int> tag) {
  if (!is_fixed_point_free_involution(sigma)) {
    throw PreconditionError("classify_D: " + sigma.str() +
                            " is not a fixed-point-free involution");
  }
  if (!in_grid(sigma, pt)) return std::nullopt;
  const bool diagonal = pt.row == pt.col;
  if (diagonal != tag.has_value()) return std::nullopt;
  if (tag && *tag != 1 && *tag != 2) return std::nullopt;
  const DType d = dtype(sigma, pt);
  if (diagonal) {
    if (d == kDType00) return SubsetLabel{'D', 3, *tag};
    if (d == kDType11) return SubsetLabel{'D', 5, *tag};
    return std::nullopt;
  }
  const int part = side_part(pt);
  if (d == kDType00) return SubsetLabel{'D', 1, part};
  if (d == kDType11) return SubsetLabel{'D', 4, part};
  return SubsetLabel{'D', 2, part};
}

namespace {

// Descents lost by theta_J for each D family.
int d_family_drop(int set) {
  switch (set) {
    case 1: return 0;
    case 2:
    case 3: return 1;
    default: return 2;
  }
}

}  // namespace

ThetaTrace theta_J(const Permutation& pi, int i) {
  if (!is_fixed_point_free_involution(pi)) {
    throw PreconditionError("theta_J: " + pi.str() + " is not a fixed-point-free involution");
  }
  const int n = pi.size();
  if (n < 4) throw DomainError("theta_J needs size >= 4");
  if (i < 1 || i > n) throw DomainError("theta_J: position out of range");

  const int v = pi.at(i);
  ThetaTrace trace{pi, i, {}, {}};
  TaggedElement& out = trace.output;
  if (v > i + 1) {
    trace.case_name = "xi_inv_upper";
    out.point = {i, v - 1};
    out.sigma = xi_inv(pi, out.point);
  } else if (v < i - 1) {
    trace.case_name = "xi_inv_lower";
    out.point = {i - 1, v};
    out.sigma = xi_inv(pi, out.point);
  } else if (v == i + 1) {
    trace.case_name = "eta_prime_inv_tag1";
    out.point = {i, i};
    out.tag = 1;
    out.sigma = eta_prime_inv(pi, i);
  } else {
    trace.case_name = "eta_prime_inv_tag2";
    out.point = {i - 1, i - 1};
    out.tag = 2;
    out.sigma = eta_prime_inv(pi, i - 1);
  }

  const auto label = classify_D(out.sigma, out.point, out.tag);
  if (!label) {
    throw InvariantError("theta_J(" + pi.str() + ", " + std::to_string(i) +
                         ") is in no D set");
  }
  out.label = *label;
  out.family = label->set;
  if (descents(pi) - descents(out.sigma) != d_family_drop(out.family)) {
    throw InvariantError("theta_J(" + pi.str() + ", " + std::to_string(i) + ") landed in " +
                         label->str() + " with the wrong descent count");
  }
  return trace;
}

PositionedPermutation psi_J(const TaggedElement& e) {
  const auto label = classify_D(e.sigma, e.point, e.tag);
  if (!label || *label != e.label || label->set != e.family) {
    throw PreconditionError("psi_J: (" + e.sigma.str() + ", " + point_str(e.point) +
                            ") is not in " + e.label.str());
  }
  const GridPoint pt = e.point;
  if (pt.row != pt.col) return {xi(e.sigma, pt), chi(pt.row, pt.col)};
  return {eta_prime(e.sigma, pt.row), *e.tag == 1 ? pt.row : pt.row + 1};
}

void append_D_elements(const Permutation& sigma, std::array<std::vector<TaggedElement>, 5>& sets) {
  const int m = sigma.size() + 1;
  for (int r = 1; r <= m; ++r) {
    for (int c = 1; c <= m; ++c) {
      const GridPoint pt{r, c};
      if (r == c) {
        for (int tag : {1, 2}) {
          const auto label = classify_D(sigma, pt, tag);
          if (!label) throw InvariantError("diagonal point of mixed d-type in " + sigma.str());
          sets[label->set - 1].push_back({sigma, pt, tag, label->set, *label});
        }
      } else {
        const auto label = classify_D(sigma, pt, std::nullopt);
        sets[label->set - 1].push_back({sigma, pt, std::nullopt, label->set, *label});
      }
    }
  }
}

std::array<std::vector<TaggedElement>, 5> build_D_sets(int n, int k) {
  std::array<std::vector<TaggedElement>, 5> sets;
  if (n < 2 || n % 2 != 0 || k < 0) return sets;
  PermutationStream stream(PermKind::ffi, n);
  while (auto sigma = stream.next()) {
    if (descents(*sigma) == k) append_D_elements(*sigma, sets);
  }
  return sets;
}

std::array<long long, 5> D_set_multipliers(int n, int k) {
  const long long m = n;
  const long long c = k;
  return {c * (c + 1) + m, 2 * ((c + 1) * (m - c) - m), 2 * (c + 1),
          (m - c) * (m - c) + m - (m - c), 2 * (m - c)};
}

}  // namespace permgrid
