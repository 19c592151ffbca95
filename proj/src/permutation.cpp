#include "permgrid/permutation.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "permgrid/error.hpp"

namespace permgrid {

namespace {

bool is_bijection(std::span<const int> word) {
  const auto n = word.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<value_type> word) : word_(std::move(word)) {
  if (!is_bijection(word_)) {
    throw PreconditionError("not a permutation of [n]: " + str());
  }
}

Permutation::Permutation(std::initializer_list<value_type> word)
    : Permutation(std::vector<value_type>(word)) {}

Permutation from_word_unchecked(std::vector<Permutation::value_type> word) {
  return Permutation(std::move(word), Permutation::unchecked_tag{});
}

Permutation Permutation::identity(int n) {
  std::vector<value_type> w(n);
  std::iota(w.begin(), w.end(), 1);
  return from_word_unchecked(std::move(w));
}

Permutation Permutation::decreasing(int n) {
  std::vector<value_type> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return from_word_unchecked(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n'))
    text.remove_suffix(1);

  std::vector<value_type> word;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw ParseError("invalid permutation text '" + std::string(text) +
                         "': compact form takes digits 1-9 only");
      }
      word.push_back(c - '0');
    }
    if (word.size() > 9) {
      throw ParseError("compact permutation form is limited to n <= 9; use commas");
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto field = text.substr(start, end - start);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      value_type v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError("invalid permutation entry '" + std::string(field) + "'");
      }
      word.push_back(v);
      start = end + 1;
    }
  }
  if (!is_bijection(word)) {
    throw ParseError("'" + std::string(text) + "' is not a permutation of [n]");
  }
  return from_word_unchecked(std::move(word));
}

std::string Permutation::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out << ',';
    out << word_[i];
  }
  return out.str();
}

Permutation inverse(const Permutation& pi) {
  std::vector<int> r(pi.size());
  for (int i = 1; i <= pi.size(); ++i) r[pi.at(i) - 1] = i;
  return from_word_unchecked(std::move(r));
}

int descents(const Permutation& pi) {
  int d = 0;
  for (int i = 1; i < pi.size(); ++i) d += pi.at(i) > pi.at(i + 1);
  return d;
}

int inverse_descents(const Permutation& pi) { return descents(inverse(pi)); }

DescentProfile descent_profile(const Permutation& pi) {
  return {descents(pi), inverse_descents(pi)};
}

bool is_involution(const Permutation& pi) {
  for (int i = 1; i <= pi.size(); ++i) {
    if (pi.at(pi.at(i)) != i) return false;
  }
  return true;
}

bool is_fixed_point_free_involution(const Permutation& pi) {
  if (pi.size() % 2 != 0) return false;
  for (int i = 1; i <= pi.size(); ++i) {
    if (pi.at(i) == i) return false;
  }
  return is_involution(pi);
}

}  // namespace permgrid
