#include "ghcode/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace ghcode {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// w += v over Z_p, both already reduced.
inline void add_into(std::span<Symbol> w, std::span<const Symbol> v, std::uint32_t p) {
  const std::size_t n = w.size();
  Symbol* dst = w.data();
  const Symbol* src = v.data();
  if (p <= 128) {
    const Symbol pp = static_cast<Symbol>(p);
    for (std::size_t i = 0; i < n; ++i) {
      const Symbol x = static_cast<Symbol>(dst[i] + src[i]);
      const Symbol y = static_cast<Symbol>(x - pp);
      dst[i] = std::min(x, y);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<Symbol>((dst[i] + src[i]) % p);
  }
}

}  // namespace

ReducedBasis::ReducedBasis(std::uint32_t p, std::size_t length) : p_(p), length_(length) {
  if (!is_prime(p) || p > kMaxGrayPrime) throw InputError("unsupported field size " + std::to_string(p));
}

void ReducedBasis::reduce(std::span<Symbol> word) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Symbol c = word[pivots_[r]];
    if (c != 0) add_into(word, negatives_[r][c - 1], p_);
  }
}

bool ReducedBasis::contains(std::span<const Symbol> word) const {
  if (word.size() != length_) throw InputError("word length does not match the basis");
  thread_local std::vector<Symbol> scratch;
  scratch.assign(word.begin(), word.end());
  reduce(scratch);
  return std::all_of(scratch.begin(), scratch.end(), [](Symbol x) { return x == 0; });
}

void ReducedBasis::refresh_multiples(std::size_t r) {
  auto& neg = negatives_[r];
  neg.assign(p_ - 1, std::vector<Symbol>(length_));
  for (std::uint32_t c = 1; c < p_; ++c) {
    for (std::size_t i = 0; i < length_; ++i) neg[c - 1][i] = static_cast<Symbol>((p_ - c) * rows_[r][i] % p_);
  }
}

bool ReducedBasis::insert(std::span<const Symbol> word) {
  if (word.size() != length_) throw InputError("word length does not match the basis");
  std::vector<Symbol> w(word.begin(), word.end());
  reduce(w);
  const auto lead = std::find_if(w.begin(), w.end(), [](Symbol x) { return x != 0; });
  if (lead == w.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(lead - w.begin());
  const std::uint32_t scale = inverse_mod(*lead, p_);
  for (auto& x : w) x = static_cast<Symbol>(x * scale % p_);

  // Clear the new pivot column from the existing rows.
  std::vector<Symbol> neg(length_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Symbol a = rows_[r][pivot];
    if (a == 0) continue;
    for (std::size_t i = 0; i < length_; ++i) neg[i] = static_cast<Symbol>((p_ - a) * w[i] % p_);
    add_into(rows_[r], neg, p_);
    refresh_multiples(r);
  }

  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const std::size_t r = static_cast<std::size_t>(at - pivots_.begin());
  pivots_.insert(at, pivot);
  rows_.insert(rows_.begin() + r, std::move(w));
  negatives_.insert(negatives_.begin() + static_cast<std::ptrdiff_t>(r), std::vector<std::vector<Symbol>>{});
  refresh_multiples(r);
  return true;
}

std::uint64_t rank(const GrayCode& code) {
  ReducedBasis basis(code.p(), code.word_length());
  for (std::size_t i = 0; i < code.size(); ++i) basis.insert(code.word(i));
  return basis.dimension();
}

std::uint64_t rank(const AdditiveCode& code) {
  ReducedBasis basis(code.sig.p(), code.sig.gray_length());
  for_each_gray_word(code, 0, code.sig.code_size(), [&](std::uint64_t, std::span<const Symbol> w) { basis.insert(w); });
  return basis.dimension();
}

unsigned log_p_size(const GrayCode& code) {
  unsigned e = 0;
  std::uint64_t size = code.size();
  while (size > 1 && size % code.p() == 0) {
    size /= code.p();
    ++e;
  }
  if (size != 1) throw InputError("code size " + std::to_string(code.size()) + " is not a power of p");
  return e;
}

KernelResult kernel(const GrayCode& code) {
  const std::uint32_t p = code.p();
  const std::size_t n = code.word_length();
  const std::uint64_t m = code.size();
  const std::vector<Symbol> zero(n, 0);
  if (!code.contains(zero)) throw InputError("kernel search requires the zero word in the code");

  // Visit the translates in a scrambled but fixed order so that non-kernel candidates
  // tend to fail on the first few checks.
  std::uint64_t stride = static_cast<std::uint64_t>(m * 0.6180339887) | 1;
  while (std::gcd(stride, m) != 1) stride += 2;

  ReducedBasis accepted(p, n);
  std::vector<Symbol> sum(n);
  for (std::uint64_t x_index = 0; x_index < m; ++x_index) {
    const auto x = code.word(x_index);
    if (accepted.contains(x)) continue;
    bool in_kernel = true;
    std::uint64_t c_index = 0;
    for (std::uint64_t j = 0; j < m; ++j) {
      const auto c = code.word(c_index);
      std::copy(x.begin(), x.end(), sum.begin());
      add_into(sum, c, p);
      if (!code.find(sum, fingerprint(sum))) {
        in_kernel = false;
        break;
      }
      c_index += stride;
      if (c_index >= m) c_index -= m;
    }
    if (in_kernel) {
      accepted.insert(x);
      // The kernel sits inside C, so it cannot outgrow it.
      std::uint64_t span_size = 1;
      for (std::size_t d = 0; d < accepted.dimension(); ++d) span_size *= p;
      if (span_size == m) break;
    }
  }
  const std::uint64_t dim = accepted.dimension();
  return KernelResult{dim, std::move(accepted)};
}

bool is_linear(const GrayCode& code) { return rank(code) == log_p_size(code); }

InvariantPair invariant_pair(const GrayCode& code) {
  const unsigned dim = log_p_size(code);
  const std::uint64_t r = rank(code);
  if (r == dim) return {r, dim};
  return {r, kernel(code).dimension};
}

InvariantPair invariant_pair(const AdditiveCode& code, const ResourceLimits& limits) {
  if (estimate_materialize_bytes(code.sig) <= limits.budget_bytes) {
    return invariant_pair(materialize_gray(code, limits));
  }
  const std::uint64_t r = rank(code);
  const std::uint64_t dim = code.sig.t() + 1;
  if (r == dim) return {r, dim};
  return {r, kernel(materialize_gray(code, limits)).dimension};
}

}  // namespace ghcode
