#include "ghcode/equivalence.hpp"

#include <atomic>
#include <stdexcept>

#include "ghcode/gray.hpp"
#include "ghcode/parallel.hpp"

namespace ghcode {

unsigned sigma(const TypeSignature& sig) {
  const auto& ts = sig.ts();
  if (ts[0] >= 2) return 1;
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (ts[i] > 0) return static_cast<unsigned>(i + 1);
  }
  throw NoSecondRow("type " + sig.to_tuple_string() + " has a single generator row");
}

unsigned sigma_from_code(const AdditiveCode& code) {
  if (code.row_exponents.size() < 2) {
    throw NoSecondRow("type " + code.sig.to_tuple_string() + " has a single generator row");
  }
  return code.sig.s() + 1 - code.row_exponents[1];
}

ChainPosition chain_of(const TypeSignature& sig) {
  const unsigned sg = sigma(sig);
  const unsigned s = sig.s();
  if (sg == s) {
    throw InputError("type " + sig.to_tuple_string() +
                     " belongs to the linear family (1,0,...,0,t_s) and has no chain representative");
  }
  if (sg == 1) return {sig, 1, 1, static_cast<std::size_t>(sig.ts().back()) + 1};
  const auto& ts = sig.ts();
  std::vector<unsigned> rep(ts.begin() + (sg - 1), ts.end());
  rep.front() += 1;
  rep.back() += sg - 1;
  TypeSignature representative(sig.p(), std::move(rep));
  const std::size_t length = representative.ts().back() + 1;
  return {std::move(representative), sg, sg, length};
}

std::vector<TypeSignature> chain_members(const TypeSignature& rep) {
  const auto& ts = rep.ts();
  if (ts.size() < 2 || ts[0] < 2) {
    throw InputError("chain representative needs s >= 2 and t_1 >= 2, got " + rep.to_tuple_string());
  }
  std::vector<TypeSignature> members{rep};
  for (unsigned i = 2; i <= ts.back() + 1; ++i) {
    std::vector<unsigned> m(i - 1, 0);
    m[0] = 1;
    m.push_back(ts[0] - 1);
    m.insert(m.end(), ts.begin() + 1, ts.end());
    m.back() -= i - 1;
    members.emplace_back(rep.p(), std::move(m));
  }
  return members;
}

Permutation step_permutation(std::uint32_t p, unsigned s, std::uint64_t n_prime) {
  if (s < 2) throw InputError("step permutation needs s >= 2");
  if (n_prime == 0) throw InputError("step permutation needs a positive length");
  const RingParams params(p, s);  // validates p and that p^s fits
  const Permutation blocks = rho(p, n_prime).block_lift(params.power(s - 1));
  const Permutation spread = gamma_extended(p, s + 1, n_prime);
  return compose(spread, blocks).inverse();
}

Permutation step_permutation(const TypeSignature& lower, const TypeSignature& upper) {
  if (lower.p() != upper.p() || lower.t() != upper.t() || upper.s() != lower.s() + 1 ||
      lower.n() != upper.n() * lower.p()) {
    throw InputError("types " + lower.to_tuple_string() + " and " + upper.to_tuple_string() +
                     " are not consecutive chain members");
  }
  return step_permutation(lower.p(), lower.s(), upper.n());
}

Permutation chain_witness(const TypeSignature& rep, unsigned position) {
  const auto members = chain_members(rep);
  if (position < 1 || position > members.size()) {
    throw InputError("chain position " + std::to_string(position) + " outside 1.." +
                     std::to_string(members.size()));
  }
  Permutation w = Permutation::identity(rep.gray_length());
  for (unsigned k = position; k >= 2; --k) {
    w = compose(step_permutation(members[k - 2], members[k - 1]), w);
  }
  return w;
}

bool maps_onto(const AdditiveCode& source, const Permutation& pi, const GrayCode& target) {
  if (source.sig.code_size() != target.size() || source.sig.gray_length() != target.word_length() ||
      pi.size() != target.word_length() || source.sig.p() != target.p()) {
    return false;
  }
  std::atomic<bool> ok{true};
  parallel_ranges(source.sig.code_size(), [&](std::uint64_t begin, std::uint64_t end) {
    GrayWord moved(target.word_length());
    for_each_gray_word(source, begin, end, [&](std::uint64_t, std::span<const Symbol> w) {
      if (!ok.load(std::memory_order_relaxed)) return;
      pi.apply(w, std::span<Symbol>(moved));
      if (!target.contains(moved)) ok.store(false, std::memory_order_relaxed);
    });
  });
  // Injective map into a set of equal size: landing inside means landing onto.
  return ok.load();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::pass_by_algebra: return "PASS-BY-ALGEBRA";
  }
  return "FAIL";
}

EquivalenceReport verify_equivalence(const TypeSignature& a, const TypeSignature& b,
                                     const ResourceLimits& limits) {
  if (a.p() != b.p() || a.t() != b.t()) {
    throw InputError("types " + a.to_tuple_string() + " and " + b.to_tuple_string() +
                     " do not share p and t");
  }
  EquivalenceReport report;
  report.mode = "algebra-only";
  const bool la = is_linear_type(a);
  const bool lb = is_linear_type(b);
  if (la != lb) {
    report.verdict = Verdict::fail;
    report.reason = "exactly one of the codes is linear";
    return report;
  }
  const auto try_chain = [](const TypeSignature& sig) -> std::optional<ChainPosition> {
    try {
      return chain_of(sig);
    } catch (const InputError&) {
      return std::nullopt;
    }
  };
  report.a = la ? try_chain(a) : chain_of(a);
  report.b = lb ? try_chain(b) : chain_of(b);
  const bool same_chain =
      report.a && report.b && report.a->representative == report.b->representative;
  if (!same_chain) {
    // All linear codes of one length are equivalent; nonlinear ones need a shared chain.
    report.verdict = la ? Verdict::pass : Verdict::fail;
    report.reason = la ? "both codes are linear with the same parameters"
                       : "representatives " + report.a->representative.to_tuple_string() + " and " +
                             report.b->representative.to_tuple_string() + " differ";
    return report;
  }
  const auto& rep = report.a->representative;
  const Permutation to_rep_a = chain_witness(rep, report.a->position);
  const Permutation to_rep_b = chain_witness(rep, report.b->position);
  report.witness = compose(to_rep_b.inverse(), to_rep_a);

  if (estimate_materialize_bytes(b) > limits.budget_bytes) {
    report.verdict = Verdict::pass_by_algebra;
    report.reason = "same chain; image too large to compare under the memory budget";
    return report;
  }
  const GrayCode target = materialize_gray(build_generator_matrix(b), limits);
  report.mode = "set-equality";
  if (maps_onto(build_generator_matrix(a), *report.witness, target)) {
    report.verdict = Verdict::pass;
    report.reason = "witness carries every codeword of the first image into the second";
  } else {
    report.verdict = Verdict::fail;
    report.reason = "witness failed to carry the first image onto the second";
  }
  return report;
}

}  // namespace ghcode
