#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "superbrauer/rational.hpp"

namespace superbrauer {

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::uint32_t> parts);

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::size_t size() const;  // sum of parts
  std::size_t rows() const { return parts_.size(); }

  /// True iff at least `rows` parts are >= `cols`.
  bool contains_rectangle(std::size_t rows, std::size_t cols) const;

  bool operator==(const Partition& other) const {
    return parts_ == other.parts_;
  }
  bool operator<(const Partition& other) const { return parts_ < other.parts_; }

 private:
  std::vector<std::uint32_t> parts_;
};

/// All partitions of n, largest-first lexicographic order.
std::vector<Partition> partitions_of(std::size_t n);

/// Number of standard tableaux of the given shape (hook length formula).
Integer standard_tableau_count(const Partition& mu);

/// Sum of f^mu squared over partitions mu of r containing the given
/// rectangle: the dimension of the two-sided ideal generated by the
/// rectangular symmetrizer.
Integer rectangle_ideal_dimension(std::size_t rect_rows, std::size_t rect_cols,
                                  std::size_t r);

/// rectangle_ideal_dimension specialized to an (m+1) x (2n+1) rectangle in
/// degree 2d.
Integer ideal_dimension(std::size_t m, std::size_t n, std::size_t d);

}  // namespace superbrauer
