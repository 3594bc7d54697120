#pragma once

// Rank and kernel dimension of codes over Z_p.

#include <cstdint>
#include <span>
#include <vector>

#include "ghcode/code.hpp"
#include "ghcode/gray_code.hpp"

namespace ghcode {

/// Rows in reduced echelon form over GF(p), pivots strictly increasing. Grows by
/// incremental elimination.
class ReducedBasis {
 public:
  ReducedBasis(std::uint32_t p, std::size_t length);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  std::span<const Symbol> row(std::size_t i) const noexcept { return rows_[i]; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Adds the word to the span; returns false when it was already there.
  bool insert(std::span<const Symbol> word);
  bool contains(std::span<const Symbol> word) const;
  /// Subtracts the span component in place; the word is in the span iff the result is zero.
  void reduce(std::span<Symbol> word) const;

 private:
  void refresh_multiples(std::size_t r);

  std::uint32_t p_;
  std::size_t length_;
  std::vector<std::vector<Symbol>> rows_;
  std::vector<std::size_t> pivots_;
  // negatives_[r][c-1] = (p - c) * rows_[r], so reducing by coefficient c is one addition.
  std::vector<std::vector<std::vector<Symbol>>> negatives_;
};

struct InvariantPair {
  std::uint64_t rank = 0;
  std::uint64_t kernel_dim = 0;

  friend bool operator==(const InvariantPair&, const InvariantPair&) = default;
  friend auto operator<=>(const InvariantPair&, const InvariantPair&) = default;
};

struct KernelResult {
  std::uint64_t dimension;
  ReducedBasis basis;
};

/// dim <C> over GF(p).
std::uint64_t rank(const GrayCode& code);
/// Same, streaming the Gray image of an additive code without materialising it.
std::uint64_t rank(const AdditiveCode& code);

/// K(C) = {x : x + C = C}; requires the zero word in C (then K(C) is a subspace of C).
KernelResult kernel(const GrayCode& code);

/// log_p |C|; InputError when |C| is not a power of p.
unsigned log_p_size(const GrayCode& code);

bool is_linear(const GrayCode& code);
/// Rank first; the kernel search is skipped when the code turns out linear.
InvariantPair invariant_pair(const GrayCode& code);
/// Rank streamed, then the Gray image is materialised only for a nonlinear code.
InvariantPair invariant_pair(const AdditiveCode& code, const ResourceLimits& limits = {});

}  // namespace ghcode
