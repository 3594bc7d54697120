#pragma once

// Materialised Gray images with exact membership lookup, and the generalized
// Hadamard / minimum distance checks that run on them.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ghcode/code.hpp"
#include "ghcode/error.hpp"

namespace ghcode {

/// 64-bit fingerprint of a packed word. Only used to bucket words; every hit is confirmed
/// by a full comparison.
std::uint64_t fingerprint(std::span<const Symbol> word) noexcept;

/// A set of distinct words over Z_p of a common length, stored contiguously.
class GrayCode {
 public:
  GrayCode(std::uint32_t p, std::size_t word_length, std::vector<Symbol> data,
           std::optional<TypeSignature> source = std::nullopt);

  static GrayCode from_words(std::uint32_t p, const std::vector<GrayWord>& words);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t word_length() const noexcept { return length_; }
  std::size_t size() const noexcept { return count_; }
  std::span<const Symbol> word(std::size_t i) const noexcept { return {data_.data() + i * length_, length_}; }
  const std::optional<TypeSignature>& source() const noexcept { return source_; }

  std::optional<std::size_t> find(std::span<const Symbol> w) const noexcept;
  std::optional<std::size_t> find(std::span<const Symbol> w, std::uint64_t fp) const noexcept;
  bool contains(std::span<const Symbol> w) const noexcept { return find(w).has_value(); }

 private:
  void build_index();

  std::uint32_t p_;
  std::size_t length_;
  std::size_t count_;
  std::vector<Symbol> data_;
  std::optional<TypeSignature> source_;
  std::vector<std::uint64_t> fingerprints_;
  std::vector<std::uint32_t> slots_;  // word index + 1; 0 marks an empty slot
  std::uint64_t mask_ = 0;
};

/// Bytes needed to materialise the Gray image of sig (words plus lookup index).
std::uint64_t estimate_materialize_bytes(const TypeSignature& sig);

/// Phi(H) as a GrayCode; CapacityError if it does not fit the budget.
GrayCode materialize_gray(const AdditiveCode& code, const ResourceLimits& limits = {});

struct GhCheckMode {
  enum class Kind { exhaustive, sampled };
  static constexpr std::uint64_t kDefaultSeed = 0xC0DE;
  static constexpr std::uint64_t kDefaultPairs = 1'000'000;
  /// Codes up to this many words get the full pair scan by default.
  static constexpr std::uint64_t kExhaustiveLimit = 729;

  Kind kind = Kind::exhaustive;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t pairs = kDefaultPairs;

  static GhCheckMode exhaustive() { return {}; }
  static GhCheckMode sampled(std::uint64_t seed = kDefaultSeed, std::uint64_t pairs = kDefaultPairs) {
    return {Kind::sampled, seed, pairs};
  }
  static GhCheckMode automatic(std::uint64_t code_size);
};

struct GhVerdict {
  bool passed = false;
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
  std::string reason;
};

/// Every checked difference of distinct codewords must be constant or contain each symbol
/// equally often, and |C| must be p times the word length.
GhVerdict is_gh_code(const GrayCode& code, const GhCheckMode& mode);

/// True when a - b is a constant vector or perfectly balanced over Z_p.
bool difference_constant_or_balanced(std::span<const Symbol> a, std::span<const Symbol> b, std::uint32_t p);

/// Exact minimum Hamming distance over all pairs; requires at least two words.
std::uint64_t min_distance(const GrayCode& code);

/// Integer in [0, bound) by rejection sampling. Unlike std::uniform_int_distribution the
/// sequence is identical across standard libraries.
std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace ghcode
