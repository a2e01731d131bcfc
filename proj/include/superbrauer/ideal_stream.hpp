#pragma once

#include <cstdint>
#include <utility>

#include "superbrauer/group_algebra.hpp"

namespace superbrauer {

/// Deterministic pseudo-random generator (splitmix64). Used wherever spanning
/// procedures need reproducible sampling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform value in [0, bound).
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Uniformly random permutation from the generator (Fisher-Yates).
Permutation random_permutation(std::size_t degree, SplitMix64& rng);

/// Stream of elements p * e * q where e is the rectangular symmetrizer of
/// shape (m+1) x (2n+1) embedded in Sym_{2d} and (p, q) are drawn
/// deterministically from the seed. The first element is e itself. The stream
/// is empty when 2d < (m+1)(2n+1).
class IdealSpanStream {
 public:
  IdealSpanStream(std::size_t m, std::size_t n, std::size_t d,
                  std::uint64_t seed);

  bool empty() const { return empty_; }
  std::size_t degree() const { return 2 * d_; }
  const GroupAlgebraElement& generator() const { return generator_; }

  /// Next element; the first call returns the generator itself.
  GroupAlgebraElement next();
  /// The (p, q) pair used by the most recent next().
  const std::pair<Permutation, Permutation>& last_pair() const {
    return last_pair_;
  }
  /// Restart sampling from a fresh seed (the generator is not re-emitted).
  void reseed(std::uint64_t seed);

 private:
  std::size_t d_;
  bool empty_;
  bool emitted_first_ = false;
  GroupAlgebraElement generator_;
  SplitMix64 rng_;
  std::pair<Permutation, Permutation> last_pair_;
};

}  // namespace superbrauer
