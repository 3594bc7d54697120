#include "ghcode/classification.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace ghcode {

namespace {

void extend(std::vector<unsigned>& prefix, unsigned s, unsigned remaining,
            std::vector<std::vector<unsigned>>& out) {
  const unsigned weight = s - static_cast<unsigned>(prefix.size());
  if (weight == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned v = 0; v * weight <= remaining; ++v) {
    prefix.push_back(v);
    extend(prefix, s, remaining - v * weight, out);
    prefix.pop_back();
  }
}

// Number of (t_1, ..., t_s) with t_1 >= min_first and sum (s-i+1) t_i = total.
std::uint64_t count_weighted(unsigned total, unsigned s, unsigned min_first) {
  if (s == 0) return 0;
  if (static_cast<std::uint64_t>(min_first) * s > total) return 0;
  // ways[r]: ways for the tail t_2..t_s (weights s-1..1) to sum to r.
  std::vector<std::uint64_t> ways(total + 1, 0);
  ways[0] = 1;
  for (unsigned w = 1; w < s; ++w) {
    for (unsigned r = w; r <= total; ++r) ways[r] += ways[r - w];
  }
  std::uint64_t n = 0;
  for (unsigned a = min_first; a * s <= total; ++a) n += ways[total - a * s];
  return n;
}

// Previous and improved bounds published for odd p, t = 3..10.
struct Published {
  unsigned t;
  std::uint64_t improved, previous, improved_classes;
};
constexpr std::array<Published, 8> kPublishedOdd{{
    {3, 2, 2, 2},
    {4, 2, 2, 2},
    {5, 4, 6, 5},
    {6, 4, 9, 6},
    {7, 7, 15, 11},
    {8, 8, 22, 15},
    {9, 12, 33, 26},
    {10, 14, 46, 33},
}};

void note_mismatch(BoundsReport& r, const char* label, const BoundValue& b) {
  if (b.matches_reference()) return;
  r.notes.push_back(std::string(label) + ": computed " + std::to_string(b.value) + ", published " +
                    std::to_string(*b.reference));
}

}  // namespace

std::vector<std::vector<unsigned>> enumerate_types(unsigned t, unsigned s, unsigned min_first) {
  std::vector<std::vector<unsigned>> out;
  if (s == 0) return out;
  const unsigned total = t + 1;
  if (s == 1) {
    if (total >= min_first) out.push_back({total});
    return out;
  }
  std::vector<unsigned> prefix;
  for (unsigned a = std::max(min_first, 1u); a * s <= total; ++a) {
    prefix.assign(1, a);
    extend(prefix, s, total - a * s, out);
  }
  return out;
}

std::uint64_t count_types(unsigned t, unsigned s) { return count_weighted(t + 1, s, 1); }

std::uint64_t count_types_reduced(unsigned t, unsigned s, std::uint32_t p) {
  return count_weighted(t + 1, s, (p == 2 && s == 2) ? 3 : 2);
}

BoundsReport bounds(unsigned t, std::uint32_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (t < 3) throw InputError("bounds need t >= 3");
  BoundsReport r;
  r.p = p;
  r.t = t;
  const bool binary = p == 2;
  // s runs to t-1 for odd p; for p = 2 the last one is always linear.
  const unsigned previous_top = binary ? t - 2 : t - 1;
  const unsigned improved_top = (t + 1) / 2;
  const std::int64_t linear_per_s = binary ? 2 : 1;
  r.class_count_assumption =
      binary ? "classes per s taken as the number of types minus one, since two types per s are linear"
             : "classes per s taken as the number of types";

  std::int64_t previous = 1, previous_classes = 1, improved = 1, improved_classes = 1;
  for (unsigned s = 2; s <= std::max(previous_top, improved_top); ++s) {
    const auto x = static_cast<std::int64_t>(count_types(t, s));
    r.types_per_s[s] = static_cast<std::uint64_t>(x);
    const std::int64_t assumed = x - (linear_per_s - 1);
    if (s <= previous_top) {
      previous += x - linear_per_s;
      previous_classes += assumed - 1;
    }
    if (s <= improved_top) {
      const std::uint64_t reduced = count_types_reduced(t, s, p);
      r.reduced_per_s[s] = reduced;
      improved += static_cast<std::int64_t>(reduced);
      improved_classes += assumed - 1;
    }
  }
  r.previous_types.value = static_cast<std::uint64_t>(previous);
  r.previous_classes.value = static_cast<std::uint64_t>(previous_classes);
  r.improved.value = static_cast<std::uint64_t>(improved);
  r.improved_classes.value = static_cast<std::uint64_t>(improved_classes);

  if (!binary) {
    for (const auto& row : kPublishedOdd) {
      if (row.t != t) continue;
      r.improved.reference = row.improved;
      r.previous_types.reference = row.previous;
      r.improved_classes.reference = row.improved_classes;
    }
  }
  note_mismatch(r, "previous type bound", r.previous_types);
  note_mismatch(r, "improved bound", r.improved);
  note_mismatch(r, "improved class bound", r.improved_classes);
  return r;
}

std::vector<CensusRow> census(unsigned t, std::uint32_t p, bool with_invariants,
                              const ResourceLimits& limits) {
  std::vector<CensusRow> rows;
  for (unsigned s = 1; s <= t + 1; ++s) {
    for (auto& ts : enumerate_types(t, s)) {
      CensusRow row{TypeSignature(p, std::move(ts)), false, std::nullopt, std::nullopt, false};
      row.linear = is_linear_type(row.type);
      if (!row.linear) row.chain = chain_of(row.type);
      rows.push_back(std::move(row));
    }
  }
  if (!with_invariants) return rows;

  // Representatives in first-seen order, each computed once.
  std::vector<std::pair<TypeSignature, std::optional<InvariantPair>>> done;
  for (auto& row : rows) {
    if (row.linear) {
      row.invariants = InvariantPair{t + 1u, t + 1u};
      continue;
    }
    const TypeSignature& rep = row.chain->representative;
    auto it = std::find_if(done.begin(), done.end(), [&](const auto& d) { return d.first == rep; });
    if (it == done.end()) {
      std::optional<InvariantPair> value;
      if (estimate_materialize_bytes(rep) <= limits.budget_bytes) {
        value = invariant_pair(build_generator_matrix(rep), limits);
      }
      done.emplace_back(rep, value);
      it = std::prev(done.end());
    }
    row.invariants = it->second;
    row.skipped = !it->second.has_value();
  }
  return rows;
}

std::uint64_t class_count(const std::vector<CensusRow>& rows) {
  std::set<std::vector<unsigned>> reps;
  bool any_linear = false;
  for (const auto& row : rows) {
    if (row.linear) {
      any_linear = true;
    } else {
      reps.insert(row.chain->representative.ts());
    }
  }
  return reps.size() + (any_linear ? 1 : 0);
}

std::optional<std::uint64_t> distinct_invariant_pairs(const std::vector<CensusRow>& rows) {
  std::set<InvariantPair> pairs;
  for (const auto& row : rows) {
    if (!row.invariants) return std::nullopt;
    pairs.insert(*row.invariants);
  }
  return pairs.size();
}

std::map<unsigned, std::vector<TypeSignature>> isolated_types(unsigned t_max, std::uint32_t p,
                                                              unsigned t_min) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  std::map<unsigned, std::vector<TypeSignature>> out;
  for (unsigned t = t_min; t <= t_max; ++t) {
    for (unsigned s = 2; s <= t; ++s) {
      for (auto& ts : enumerate_types(t, s, 2)) {
        if (ts.back() != 0 || is_linear_type(p, ts)) continue;
        out[t].emplace_back(p, std::move(ts));
      }
    }
  }
  return out;
}

}  // namespace ghcode
