#include "superbrauer/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace superbrauer {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition part must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

std::size_t Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

bool Partition::contains_rectangle(std::size_t rows, std::size_t cols) const {
  if (rows == 0 || cols == 0) return true;
  if (parts_.size() < rows) return false;
  return parts_[rows - 1] >= cols;
}

namespace {

void enumerate(std::size_t remaining, std::uint32_t max_part,
               std::vector<std::uint32_t>& prefix,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  std::uint32_t top = static_cast<std::uint32_t>(
      std::min<std::size_t>(remaining, max_part));
  for (std::uint32_t part = top; part >= 1; --part) {
    prefix.push_back(part);
    enumerate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> prefix;
  enumerate(n, n == 0 ? 1 : static_cast<std::uint32_t>(n), prefix, out);
  return out;
}

Integer standard_tableau_count(const Partition& mu) {
  const auto& parts = mu.parts();
  if (parts.empty()) return 1;
  // Column lengths for hook computation.
  std::vector<std::uint32_t> col_len(parts[0], 0);
  for (std::uint32_t row_len : parts)
    for (std::uint32_t j = 0; j < row_len; ++j) ++col_len[j];
  Integer numerator = 1;
  for (std::size_t k = 2; k <= mu.size(); ++k) numerator *= (unsigned long)k;
  Integer hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts[i]; ++j) {
      std::size_t hook = (parts[i] - j) + (col_len[j] - i) - 1;
      hooks *= (unsigned long)hook;
    }
  Integer f = numerator / hooks;
  if (f * hooks != numerator)
    throw std::logic_error("hook length formula must divide exactly");
  return f;
}

Integer rectangle_ideal_dimension(std::size_t rect_rows, std::size_t rect_cols,
                                  std::size_t r) {
  Integer total = 0;
  for (const Partition& mu : partitions_of(r)) {
    if (!mu.contains_rectangle(rect_rows, rect_cols)) continue;
    Integer f = standard_tableau_count(mu);
    total += f * f;
  }
  return total;
}

Integer ideal_dimension(std::size_t m, std::size_t n, std::size_t d) {
  return rectangle_ideal_dimension(m + 1, 2 * n + 1, 2 * d);
}

}  // namespace superbrauer
