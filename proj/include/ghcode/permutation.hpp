#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ghcode/error.hpp"

namespace ghcode {

/// Coordinate permutation in one-line image form: coordinate k moves to image[k].
/// Indices are 0-based here; one_based() / from_one_based() handle I/O.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> image);

  static Permutation identity(std::size_t n);
  static Permutation from_one_based(std::span<const std::uint64_t> image);
  /// Builds a permutation on n points from 1-based cycles, e.g. {{2,4},{3,7}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t size() const noexcept { return image_.size(); }
  std::uint32_t operator()(std::size_t k) const { return image_[k]; }
  std::span<const std::uint32_t> image() const noexcept { return image_; }
  std::vector<std::uint64_t> one_based() const;
  bool is_identity() const noexcept;

  Permutation inverse() const;

  /// Acts on a whole block of `width` coordinates per point: block b moves to block image[b].
  Permutation block_lift(std::size_t width) const;

  /// out[image[k]] = in[k].
  template <class T>
  void apply(std::span<const T> in, std::span<T> out) const {
    if (in.size() != size() || out.size() != size()) {
      throw InputError("permutation of size " + std::to_string(size()) + " applied to length " +
                       std::to_string(in.size()));
    }
    for (std::size_t k = 0; k < image_.size(); ++k) out[image_[k]] = in[k];
  }

  template <class T>
  std::vector<T> apply(std::span<const T> in) const {
    std::vector<T> out(in.size());
    apply<T>(in, std::span<T>(out));
    return out;
  }

  template <class T>
  std::vector<T> apply(const std::vector<T>& in) const {
    return apply<T>(std::span<const T>(in));
  }

  /// Disjoint cycles, 1-based, fixed points omitted: "(2,4)(3,7)(6,8)"; identity prints "()".
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

/// outer ∘ inner: apply inner first, then outer.
Permutation compose(const Permutation& outer, const Permutation& inner);

}  // namespace ghcode
