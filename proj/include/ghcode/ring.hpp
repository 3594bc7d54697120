#pragma once

// Residues and vectors over Z_{p^s}.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ghcode {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// The ring Z_{p^s}. p is checked prime and p^s must fit a Residue.
class RingParams {
 public:
  static constexpr unsigned kMaxExponent = 32;

  RingParams(std::uint32_t p, unsigned s);

  std::uint32_t p() const noexcept { return p_; }
  unsigned s() const noexcept { return s_; }
  std::uint64_t modulus() const noexcept { return powers_[s_]; }
  /// p^i for 0 <= i <= s.
  std::uint64_t power(unsigned i) const;

  /// Z_{p^{s-1}}; requires s >= 2.
  RingParams lowered() const;
  /// Z_{p^{s+1}}.
  RingParams raised() const;

  std::string name() const;

  friend bool operator==(const RingParams& a, const RingParams& b) noexcept {
    return a.p_ == b.p_ && a.s_ == b.s_;
  }

 private:
  std::uint32_t p_;
  unsigned s_;
  std::array<std::uint64_t, kMaxExponent + 1> powers_{};
};

/// Base-p digits [u_0, ..., u_{s-1}], least significant first.
struct DigitExpansion {
  std::vector<std::uint32_t> digits;

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

DigitExpansion p_ary_expansion(Residue u, const RingParams& params);
Residue from_digits(const DigitExpansion& d, const RingParams& params);

class RingVector {
 public:
  RingVector(RingParams params, std::vector<Residue> entries);
  RingVector(RingParams params, std::initializer_list<Residue> entries)
      : RingVector(params, std::vector<Residue>(entries)) {}

  static RingVector zero(RingParams params, std::size_t n);
  static RingVector constant(RingParams params, std::size_t n, Residue value);

  const RingParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Residue operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Residue> entries() const noexcept { return entries_; }
  bool is_zero() const noexcept;

  /// Concatenation of `copies` copies of this vector.
  RingVector repeated(std::size_t copies) const;

  std::string to_string() const;

  friend bool operator==(const RingVector& a, const RingVector& b) noexcept {
    return a.params_ == b.params_ && a.entries_ == b.entries_;
  }

 private:
  RingParams params_;
  std::vector<Residue> entries_;
};

RingVector vec_add(const RingVector& a, const RingVector& b);
RingVector vec_sub(const RingVector& a, const RingVector& b);
RingVector vec_scale(std::uint64_t lambda, const RingVector& a);

/// Smallest m > 0 with m*v = 0; always a power of p.
std::uint64_t vector_order(const RingVector& v);

}  // namespace ghcode
