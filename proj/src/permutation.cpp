#include "superbrauer/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superbrauer {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t v : images) {
    if (v >= images.size() || seen[v])
      throw std::invalid_argument("image array is not a permutation");
    seen[v] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t degree, std::size_t i,
                                       std::size_t j) {
  if (i >= degree || j >= degree || i == j)
    throw std::invalid_argument("bad transposition");
  Permutation p(degree);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (degree() != q.degree())
    throw std::invalid_argument("permutation degree mismatch");
  Permutation r(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.images_[i] = images_[q.images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::sign() const {
  // Parity from the cycle decomposition.
  std::vector<bool> seen(degree(), false);
  int sign = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Permutation Permutation::embedded(std::size_t new_degree) const {
  if (new_degree < degree())
    throw std::invalid_argument("embedding degree too small");
  Permutation r(new_degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

bool Permutation::operator<(const Permutation& other) const {
  if (degree() != other.degree()) return degree() < other.degree();
  return images_ < other.images_;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> result;
  do {
    result.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

}  // namespace superbrauer
