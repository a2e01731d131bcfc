#include "superbrauer/ideal_stream.hpp"

#include <numeric>

namespace superbrauer {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t value;
  do {
    value = next();
  } while (value >= limit);
  return value % bound;
}

Permutation random_permutation(std::size_t degree, SplitMix64& rng) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = degree; i > 1; --i) {
    std::size_t j = rng.next_below(i);
    std::swap(images[i - 1], images[j]);
  }
  return Permutation::from_images(std::move(images));
}

IdealSpanStream::IdealSpanStream(std::size_t m, std::size_t n, std::size_t d,
                                 std::uint64_t seed)
    : d_(d),
      empty_(2 * d < (m + 1) * (2 * n + 1)),
      generator_(2 * d),
      rng_(seed),
      last_pair_(Permutation(2 * d), Permutation(2 * d)) {
  if (!empty_) generator_ = young_symmetrizer(m, 2 * n, 2 * d);
}

GroupAlgebraElement IdealSpanStream::next() {
  if (empty_) return GroupAlgebraElement(2 * d_);
  if (!emitted_first_) {
    emitted_first_ = true;
    last_pair_ = {Permutation(2 * d_), Permutation(2 * d_)};
    return generator_;
  }
  Permutation p = random_permutation(2 * d_, rng_);
  Permutation q = random_permutation(2 * d_, rng_);
  last_pair_ = {p, q};
  return GroupAlgebraElement::of(p) * generator_ * GroupAlgebraElement::of(q);
}

void IdealSpanStream::reseed(std::uint64_t seed) { rng_ = SplitMix64(seed); }

}  // namespace superbrauer
