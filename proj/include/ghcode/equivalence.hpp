#pragma once

// Chains of equivalent types and the coordinate permutations that carry one Gray image
// onto another.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghcode/code.hpp"
#include "ghcode/error.hpp"
#include "ghcode/gray_code.hpp"
#include "ghcode/permutation.hpp"

namespace ghcode {

/// Exponent of the order of the second generator row: 1 if t_1 >= 2, otherwise the first
/// i >= 2 with t_i > 0. NoSecondRow for (1,0,...,0).
unsigned sigma(const TypeSignature& sig);
/// The same quantity read off a constructed generator matrix.
unsigned sigma_from_code(const AdditiveCode& code);

struct ChainPosition {
  TypeSignature representative;
  /// 1-based place of the type inside its chain.
  unsigned position;
  unsigned sigma;
  std::size_t chain_length;
};

/// Representative (a type with t_1 >= 2) and position. The linear family
/// (1,0,...,0,t_s), where sigma would equal s, has no representative and is rejected.
ChainPosition chain_of(const TypeSignature& sig);

/// Every type equivalent to rep, member i of the chain being (1, 0^{i-2}, t_1-1, t_2, ...,
/// t_{s-1}, t_s-i+1). rep needs s >= 2 and t_1 >= 2.
std::vector<TypeSignature> chain_members(const TypeSignature& rep);

/// Coordinate permutation taking the Gray image of a chain member over Z_{p^{s+1}} with
/// length n_prime onto the image of the previous member over Z_{p^s}. Size n_prime * p^s.
Permutation step_permutation(std::uint32_t p, unsigned s, std::uint64_t n_prime);

/// Same, derived from two consecutive chain members; InputError when they are not.
Permutation step_permutation(const TypeSignature& lower, const TypeSignature& upper);

/// Maps the Gray image of chain member `position` onto that of the representative.
Permutation chain_witness(const TypeSignature& rep, unsigned position);

/// True when applying pi to every word of source's Gray image lands in target and the
/// sizes agree. Streams the source code.
bool maps_onto(const AdditiveCode& source, const Permutation& pi, const GrayCode& target);

enum class Verdict { pass, fail, pass_by_algebra };
std::string to_string(Verdict v);

struct EquivalenceReport {
  Verdict verdict = Verdict::fail;
  /// Empty for linear types.
  std::optional<ChainPosition> a;
  std::optional<ChainPosition> b;
  /// Carries Phi(a) onto Phi(b) when both sit in the same chain.
  std::optional<Permutation> witness;
  /// "set-equality" when the witness was checked word by word, otherwise "algebra-only".
  std::string mode;
  std::string reason;
};

/// Decides whether two types of the same p and t give permutation-equivalent codes.
/// The witness is checked on the materialised target when it fits `limits`.
EquivalenceReport verify_equivalence(const TypeSignature& a, const TypeSignature& b,
                                     const ResourceLimits& limits = {});

}  // namespace ghcode
