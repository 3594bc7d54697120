#pragma once

// Generalized Gray map Z_{p^s} -> Z_p^{p^{s-1}} and the coordinate maps that relate
// the Gray images of consecutive alphabets (gamma, rho, tau, tau-tilde).

#include <cstdint>
#include <span>
#include <vector>

#include "ghcode/permutation.hpp"
#include "ghcode/ring.hpp"

namespace ghcode {

using Symbol = std::uint8_t;
using GrayWord = std::vector<Symbol>;

/// Gray words pack one symbol per byte.
constexpr std::uint32_t kMaxGrayPrime = 251;

/// (s x p^s) matrix whose columns enumerate Z_p^s, built by the block recursion
/// Y_1 = (0 1 ... p-1), Y_s = [Y_{s-1} ... Y_{s-1}; 0..0 1..1 ... (p-1)..(p-1)].
struct YMatrix {
  std::uint32_t p = 0;
  unsigned s = 0;
  std::vector<std::vector<Symbol>> rows;

  std::size_t columns() const noexcept;
};

/// s >= 1. (s = 0 yields the empty matrix with a single column, used for phi_1.)
YMatrix build_y_matrix(std::uint32_t p, unsigned s);

/// phi_s(u) computed literally as (u_{s-1},...,u_{s-1}) + (u_0,...,u_{s-2}) Y_{s-1}.
GrayWord gray(Residue u, const RingParams& params);

/// Precomputed phi_s for a fixed ring; the fast path used by code enumeration.
class GrayMapper {
 public:
  explicit GrayMapper(RingParams params);

  const RingParams& params() const noexcept { return params_; }
  /// p^{s-1}
  std::size_t word_length() const noexcept { return width_; }

  void map(Residue u, std::span<Symbol> out) const;
  /// Component-wise map; out must hold entries.size() * word_length() symbols.
  void map_vector(std::span<const Residue> entries, std::span<Symbol> out) const;

 private:
  void compute(Residue u, std::span<Symbol> out) const;

  RingParams params_;
  std::size_t width_;
  std::vector<Symbol> table_;  // empty when too large to cache
};

/// Phi_s: component-wise Gray map.
GrayWord gray_vector(const RingVector& v);

/// Inverse of Phi_s; throws NotAGrayImage when w is not in the image.
RingVector gray_inverse(std::span<const Symbol> w, const RingParams& params);

/// gamma_s on p^{s-1} points: k = j p^{s-2} + i + 1 moves to j + i p + 1. Requires s >= 2.
Permutation gamma(std::uint32_t p, unsigned s);
/// gamma_s acting independently on each of n consecutive blocks of p^{s-1} coordinates.
Permutation gamma_extended(std::uint32_t p, unsigned s, std::size_t n);

/// rho on p n points. Coordinate k = j n + i + 1 with j in [0,p), i in [0,n) moves to i p + j + 1.
Permutation rho(std::uint32_t p, std::size_t n);

/// tau_s(u) = Phi_{s-1}^{-1}(gamma_s^{-1}(phi_s(u))), a length-p vector over Z_{p^{s-1}}. Requires s >= 2.
RingVector tau(Residue u, const RingParams& params);
/// tau_s applied coordinate-wise and concatenated (length p n).
RingVector tau_vector(const RingVector& v);
/// rho^{-1}(tau_s(v)).
RingVector tau_tilde(const RingVector& v);

}  // namespace ghcode
