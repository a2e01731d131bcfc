#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace superbrauer {

/// A permutation of {0, ..., degree-1}, stored as its image array.
/// Composition is (p * q)(i) = p(q(i)); q acts first.
class Permutation {
 public:
  explicit Permutation(std::size_t degree);  // identity
  static Permutation from_images(std::vector<std::uint32_t> images);
  /// The transposition (i j) in the given degree.
  static Permutation transposition(std::size_t degree, std::size_t i,
                                   std::size_t j);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// +1 or -1; multiplicative, -1 on transpositions.
  int sign() const;

  /// Embeds into a larger degree, fixing the new symbols.
  Permutation embedded(std::size_t new_degree) const;

  bool operator==(const Permutation& other) const {
    return images_ == other.images_;
  }
  bool operator!=(const Permutation& other) const { return !(*this == other); }
  bool operator<(const Permutation& other) const;

  /// Cycle notation for diagnostics, e.g. "(1 2)(3 4)" with 1-based symbols.
  std::string to_cycles() const;

 private:
  Permutation() = default;
  std::vector<std::uint32_t> images_;
};

/// All permutations of the given degree in lexicographic one-line order.
std::vector<Permutation> all_permutations(std::size_t degree);

}  // namespace superbrauer
