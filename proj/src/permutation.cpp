#include "ghcode/permutation.hpp"

#include <numeric>

namespace ghcode {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t v : image_) {
    if (v >= image_.size() || seen[v]) throw InputError("image is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> image(n);
  std::iota(image.begin(), image.end(), 0u);
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_based(std::span<const std::uint64_t> image) {
  std::vector<std::uint32_t> zero_based(image.size());
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (image[k] == 0 || image[k] > image.size()) throw InputError("1-based image entry out of range");
    zero_based[k] = static_cast<std::uint32_t>(image[k] - 1);
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> image(n);
  std::iota(image.begin(), image.end(), 0u);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::uint32_t from = cycle[i];
      const std::uint32_t to = cycle[(i + 1) % cycle.size()];
      if (from == 0 || from > n || to == 0 || to > n || used[from - 1]) throw InputError("malformed cycle");
      used[from - 1] = true;
      image[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(image));
}

std::vector<std::uint64_t> Permutation::one_based() const {
  std::vector<std::uint64_t> out(image_.size());
  for (std::size_t k = 0; k < image_.size(); ++k) out[k] = std::uint64_t{image_[k]} + 1;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (image_[k] != k) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(image_.size());
  for (std::size_t k = 0; k < image_.size(); ++k) inv[image_[k]] = static_cast<std::uint32_t>(k);
  return Permutation(std::move(inv));
}

Permutation Permutation::block_lift(std::size_t width) const {
  std::vector<std::uint32_t> lifted(image_.size() * width);
  for (std::size_t b = 0; b < image_.size(); ++b) {
    for (std::size_t o = 0; o < width; ++o) {
      lifted[b * width + o] = static_cast<std::uint32_t>(image_[b] * width + o);
    }
  }
  return Permutation(std::move(lifted));
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    out += '(';
    std::size_t k = start;
    bool first = true;
    while (!seen[k]) {
      seen[k] = true;
      if (!first) out += ',';
      out += std::to_string(k + 1);
      first = false;
      k = image_[k];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw InputError("cannot compose permutations of different sizes");
  std::vector<std::uint32_t> image(inner.size());
  for (std::size_t k = 0; k < inner.size(); ++k) image[k] = outer(inner(k));
  return Permutation(std::move(image));
}

}  // namespace ghcode
