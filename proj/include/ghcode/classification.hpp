#pragma once

// Counting and listing types of a given length, bounds on the number of inequivalent
// codes, and full censuses with invariants.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghcode/code.hpp"
#include "ghcode/equivalence.hpp"
#include "ghcode/invariants.hpp"

namespace ghcode {

/// Types (t_1, ..., t_s) with t_1 >= min_first and sum (s-i+1) t_i = t+1, in
/// lexicographic order.
std::vector<std::vector<unsigned>> enumerate_types(unsigned t, unsigned s, unsigned min_first = 1);

/// Number of types of length p^t over Z_{p^s} (t_1 >= 1).
std::uint64_t count_types(unsigned t, unsigned s);
/// Types that are chain representatives: t_1 >= 2, or t_1 >= 3 when p = 2 and s = 2.
std::uint64_t count_types_reduced(unsigned t, unsigned s, std::uint32_t p);

struct BoundValue {
  std::uint64_t value = 0;
  /// Published figure for this (p, t), when one is known.
  std::optional<std::uint64_t> reference;
  bool matches_reference() const { return !reference || *reference == value; }
};

struct BoundsReport {
  std::uint32_t p = 0;
  unsigned t = 0;
  /// Counts per s used by the bounds.
  std::map<unsigned, std::uint64_t> types_per_s;
  std::map<unsigned, std::uint64_t> reduced_per_s;
  /// Earlier upper bound, counting types.
  BoundValue previous_types;
  /// Earlier upper bound with the number of classes per s taken as an assumption.
  BoundValue previous_classes;
  /// Improved bound from counting chain representatives.
  BoundValue improved;
  /// The improved range of s combined with the class-count assumption.
  BoundValue improved_classes;
  /// How the assumed class count per s was instantiated.
  std::string class_count_assumption;
  /// Distinct (rank, kernel) pairs: a lower bound, when computed.
  std::optional<std::uint64_t> invariant_lower_bound;
  /// Disagreements between computed and published values.
  std::vector<std::string> notes;
};

/// All bounds for (p, t); the invariant lower bound is filled in separately.
BoundsReport bounds(unsigned t, std::uint32_t p);

struct CensusRow {
  TypeSignature type;
  bool linear = false;
  /// Absent for linear types.
  std::optional<ChainPosition> chain;
  std::optional<InvariantPair> invariants;
  /// Invariants were requested but the code did not fit the budget.
  bool skipped = false;
};

/// Every type of length p^t (s = 1..t), ordered by s then lexicographically.
/// Invariants are computed once per representative when requested.
std::vector<CensusRow> census(unsigned t, std::uint32_t p, bool with_invariants,
                              const ResourceLimits& limits = {});

/// Number of inequivalent codes implied by a census: one linear class plus one per
/// distinct representative.
std::uint64_t class_count(const std::vector<CensusRow>& rows);
/// Distinct invariant pairs in a census, or nothing if any row lacks invariants.
std::optional<std::uint64_t> distinct_invariant_pairs(const std::vector<CensusRow>& rows);

/// Nonlinear types with t_1 >= 2 and t_s = 0: their chains have a single member.
/// Keyed by t, from t_min to t_max; lengths without such types are omitted.
std::map<unsigned, std::vector<TypeSignature>> isolated_types(unsigned t_max, std::uint32_t p,
                                                              unsigned t_min = 4);

}  // namespace ghcode
