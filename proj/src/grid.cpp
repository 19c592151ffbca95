#include "permgrid/grid.hpp"

#include <string>

#include "permgrid/error.hpp"

namespace permgrid {

std::string DType::str() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

bool in_grid(const Permutation& pi, GridPoint pt) {
  const int m = pi.size() + 1;
  return pt.row >= 1 && pt.row <= m && pt.col >= 1 && pt.col <= m;
}

bool is_filled(const Permutation& pi, Square sq) {
  return sq.row >= 1 && sq.row <= pi.size() && pi.at(sq.row) == sq.col;
}

Permutation insert_square(const Permutation& pi, GridPoint pt) {
  if (!in_grid(pi, pt)) {
    throw DomainError("grid point (" + std::to_string(pt.row) + "," + std::to_string(pt.col) +
                      ") outside the grid of a size-" + std::to_string(pi.size()) +
                      " permutation");
  }
  const int n = pi.size();
  std::vector<int> w;
  w.reserve(n + 1);
  for (int k = 1; k <= n + 1; ++k) {
    if (k == pt.row) {
      w.push_back(pt.col);
      continue;
    }
    const int v = pi.at(k < pt.row ? k : k - 1);
    w.push_back(v + (v >= pt.col ? 1 : 0));
  }
  return from_word_unchecked(std::move(w));
}

Permutation delete_square(const Permutation& sigma, Square sq) {
  if (!is_filled(sigma, sq)) {
    throw PreconditionError("square <" + std::to_string(sq.row) + "," + std::to_string(sq.col) +
                            "> is not filled in " + sigma.str());
  }
  std::vector<int> w;
  w.reserve(sigma.size() - 1);
  for (int k = 1; k <= sigma.size(); ++k) {
    if (k == sq.row) continue;
    const int v = sigma.at(k);
    w.push_back(v - (v > sq.col ? 1 : 0));
  }
  return from_word_unchecked(std::move(w));
}

DType dtype(const Permutation& pi, GridPoint pt) {
  const Permutation sigma = insert_square(pi, pt);
  const DescentProfile before = descent_profile(pi);
  const DescentProfile after = descent_profile(sigma);
  DType d{after.des - before.des, after.ides - before.ides};
  if (d.p < 0 || d.p > 1 || d.q < 0 || d.q > 1) {
    throw InvariantError("insertion changed descents by " + d.str());
  }
  return d;
}

DTypeCensus dtype_census(const Permutation& pi) {
  DTypeCensus c;
  const int m = pi.size() + 1;
  for (int r = 1; r <= m; ++r) {
    for (int s = 1; s <= m; ++s) ++c[dtype(pi, {r, s})];
  }
  return c;
}

DTypeCensus census_formula(int n, DescentProfile profile) {
  const std::int64_t i = profile.des + 1;
  const std::int64_t j = profile.ides + 1;
  DTypeCensus c;
  c[kDType00] = i * j + n;
  c[kDType10] = j * (n + 1 - i) - n;
  c[kDType01] = i * (n + 1 - j) - n;
  c[kDType11] = (n + 1 - i) * (n + 1 - j) + n;
  return c;
}

}  // namespace permgrid
