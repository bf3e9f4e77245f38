#include "plesken/permutation.hpp"

#include "plesken/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace plesken {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x : images_) {
    if (x >= images_.size() || seen[x]) throw PreconditionError("image table is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<std::size_t>>& cycles,
                                     std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<bool> seen(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::size_t from = cycle[i];
      const std::size_t to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > n) throw InputError("cycle point out of range: " + std::to_string(from));
      if (seen[from - 1]) throw InputError("point repeated across cycles: " + std::to_string(from));
      seen[from - 1] = true;
      images[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(images));
}

std::size_t Permutation::apply(std::size_t x) const {
  if (x >= images_.size()) throw PreconditionError("point out of range");
  return images_[x];
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (images_.size() != rhs.images_.size())
    throw PreconditionError("composing permutations of different degrees");
  std::vector<std::size_t> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) images[x] = rhs.images_[images_[x]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) images[images_[x]] = x;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> visited(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !visited[x]; x = images_[x]) {
      visited[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> visited(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start] || images_[start] == start) continue;
    any = true;
    out << "(";
    bool first = true;
    for (std::size_t x = start; !visited[x]; x = images_[x]) {
      visited[x] = true;
      if (!first) out << " ";
      out << (x + 1);
      first = false;
    }
    out << ")";
  }
  if (!any) return "()";
  return out.str();
}

Permutation parse_permutation(const std::string& text, std::size_t n) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw InputError("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in permutation: " + text);
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_space();
      if (i == text.size()) throw InputError("unterminated cycle in permutation: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("expected point or ')' in permutation: " + text);
      std::size_t point = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        point = point * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      if (point == 0) throw InputError("points are 1-based; got 0");
      if (i < text.size() && text[i] == ',') ++i;
      cycle.push_back(point);
      max_point = std::max(max_point, point);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  if (n == 0) n = max_point;
  if (max_point > n)
    throw InputError("point " + std::to_string(max_point) + " exceeds degree " + std::to_string(n));
  return Permutation::from_cycles(cycles, n);
}

} // namespace plesken
