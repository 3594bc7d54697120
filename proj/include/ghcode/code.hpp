#pragma once

// Z_{p^s}-additive generalized Hadamard codes: type signatures, generator matrices,
// p-bases, and deterministic codeword enumeration.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghcode/error.hpp"
#include "ghcode/gray.hpp"
#include "ghcode/ring.hpp"

namespace ghcode {

/// The shape (p; t_1, ..., t_s) of a code H^{t_1,...,t_s}.
class TypeSignature {
 public:
  TypeSignature(std::uint32_t p, std::vector<unsigned> ts);

  const RingParams& params() const noexcept { return params_; }
  std::uint32_t p() const noexcept { return params_.p(); }
  unsigned s() const noexcept { return params_.s(); }
  const std::vector<unsigned>& ts() const noexcept { return ts_; }
  unsigned t() const noexcept { return t_; }
  /// Length over Z_{p^s}: p^{t-s+1}.
  std::uint64_t n() const noexcept { return n_; }
  /// Length of the Gray image: p^t.
  std::uint64_t gray_length() const noexcept { return gray_length_; }
  /// |H| = p^{t+1}.
  std::uint64_t code_size() const noexcept { return code_size_; }
  /// Rows of the generator matrix: t_1 + ... + t_s.
  unsigned rows() const noexcept;

  /// "2,1"
  std::string to_string() const;
  /// "(2,1)"
  std::string to_tuple_string() const;

  friend bool operator==(const TypeSignature& a, const TypeSignature& b) noexcept {
    return a.params_ == b.params_ && a.ts_ == b.ts_;
  }

 private:
  RingParams params_;
  std::vector<unsigned> ts_;
  unsigned t_ = 0;
  std::uint64_t n_ = 0;
  std::uint64_t gray_length_ = 0;
  std::uint64_t code_size_ = 0;
};

/// Validates t_1 >= 1 and that p^{t+1} is representable; also checks the generator
/// matrix itself fits `limits`.
TypeSignature validate_type(std::uint32_t p, std::vector<unsigned> ts, const ResourceLimits& limits = {});

/// Parses "2,1,0": comma-separated nonnegative integers.
std::vector<unsigned> parse_type(std::string_view text);

/// t = (sum_i (s-i+1) t_i) - 1, computed without constructing a signature (t_1 >= 1 assumed).
unsigned type_length_exponent(std::span<const unsigned> ts);

/// Types whose Gray image is a linear code: (1,0,...,0,t_s) for every p, and for p = 2 also
/// (2,t_2) and (1,0,...,0,1,t_s).
bool is_linear_type(std::uint32_t p, std::span<const unsigned> ts);
inline bool is_linear_type(const TypeSignature& sig) { return is_linear_type(sig.p(), sig.ts()); }

struct AdditiveCode {
  TypeSignature sig;
  /// Rows w_1, ..., w_{t_1+...+t_s}; w_1 is the all-one vector.
  std::vector<RingVector> generator;
  /// sigma_i with ord(w_i) = p^{sigma_i}.
  std::vector<unsigned> row_exponents;
  /// {p^q w_i : 0 <= q < sigma_i}, ordered by row then q.
  std::vector<RingVector> pbasis;
};

AdditiveCode build_generator_matrix(const TypeSignature& sig);

/// Walks the p^{t+1} codewords in odometer order over p-basis coefficients
/// (coefficient of pbasis[0] changes fastest). Index i corresponds to the coefficient
/// vector given by the base-p digits of i.
class CodewordOdometer {
 public:
  CodewordOdometer(const AdditiveCode& code, std::uint64_t start_index);

  std::uint64_t index() const noexcept { return index_; }
  std::span<const Residue> current() const noexcept { return word_; }
  void advance();

 private:
  const AdditiveCode* code_;
  std::uint64_t index_;
  std::vector<std::uint32_t> coefficients_;
  std::vector<Residue> word_;
  std::vector<std::vector<Residue>> wrap_;  // -(p-1) * b_j
};

/// Calls fn(index, codeword) for indices [begin, end).
template <class Fn>
void for_each_codeword(const AdditiveCode& code, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (begin >= end) return;
  CodewordOdometer odo(code, begin);
  for (std::uint64_t i = begin; i < end; ++i) {
    fn(i, odo.current());
    if (i + 1 < end) odo.advance();
  }
}

/// Calls fn(index, gray_word) for indices [begin, end).
template <class Fn>
void for_each_gray_word(const AdditiveCode& code, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  const GrayMapper mapper(code.sig.params());
  GrayWord buffer(code.sig.gray_length());
  for_each_codeword(code, begin, end, [&](std::uint64_t i, std::span<const Residue> cw) {
    mapper.map_vector(cw, buffer);
    fn(i, std::span<const Symbol>(buffer));
  });
}

/// All additive codewords, in enumeration order. Intended for small codes.
std::vector<RingVector> enumerate_additive(const AdditiveCode& code);

}  // namespace ghcode
