#include "ghcode/ring.hpp"

#include <algorithm>
#include <limits>

#include "ghcode/error.hpp"

namespace ghcode {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

RingParams::RingParams(std::uint32_t p, unsigned s) : p_(p), s_(s) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (s < 1) throw InputError("s must be at least 1");
  if (s > kMaxExponent) throw InputError("s = " + std::to_string(s) + " is too large");
  powers_[0] = 1;
  for (unsigned i = 1; i <= s; ++i) {
    powers_[i] = powers_[i - 1] * p;
    if (powers_[i] > std::numeric_limits<Residue>::max()) {
      throw InputError("p^s = " + std::to_string(p) + "^" + std::to_string(s) + " overflows a 32-bit residue");
    }
  }
}

std::uint64_t RingParams::power(unsigned i) const {
  if (i > s_) throw InputError("exponent " + std::to_string(i) + " exceeds s = " + std::to_string(s_));
  return powers_[i];
}

RingParams RingParams::lowered() const {
  if (s_ < 2) throw InputError("cannot lower Z_p");
  return RingParams(p_, s_ - 1);
}

RingParams RingParams::raised() const { return RingParams(p_, s_ + 1); }

std::string RingParams::name() const {
  return s_ == 1 ? "Z_" + std::to_string(p_) : "Z_" + std::to_string(p_) + "^" + std::to_string(s_);
}

DigitExpansion p_ary_expansion(Residue u, const RingParams& params) {
  if (u >= params.modulus()) {
    throw InputError("residue " + std::to_string(u) + " is outside " + params.name());
  }
  DigitExpansion out;
  out.digits.resize(params.s());
  for (unsigned i = 0; i < params.s(); ++i) {
    out.digits[i] = u % params.p();
    u /= params.p();
  }
  return out;
}

Residue from_digits(const DigitExpansion& d, const RingParams& params) {
  if (d.digits.size() != params.s()) {
    throw InputError("expected " + std::to_string(params.s()) + " digits, got " + std::to_string(d.digits.size()));
  }
  std::uint64_t value = 0;
  for (unsigned i = 0; i < params.s(); ++i) {
    if (d.digits[i] >= params.p()) throw InputError("digit " + std::to_string(d.digits[i]) + " is not below p");
    value += params.power(i) * d.digits[i];
  }
  return static_cast<Residue>(value);
}

RingVector::RingVector(RingParams params, std::vector<Residue> entries)
    : params_(params), entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("ring vectors must have positive length");
  for (Residue e : entries_) {
    if (e >= params_.modulus()) {
      throw InputError("entry " + std::to_string(e) + " is outside " + params_.name());
    }
  }
}

RingVector RingVector::zero(RingParams params, std::size_t n) { return constant(params, n, 0); }

RingVector RingVector::constant(RingParams params, std::size_t n, Residue value) {
  return RingVector(params, std::vector<Residue>(n, value));
}

bool RingVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Residue e) { return e == 0; });
}

RingVector RingVector::repeated(std::size_t copies) const {
  std::vector<Residue> out;
  out.reserve(entries_.size() * copies);
  for (std::size_t c = 0; c < copies; ++c) out.insert(out.end(), entries_.begin(), entries_.end());
  return RingVector(params_, std::move(out));
}

std::string RingVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

namespace {

void require_compatible(const RingVector& a, const RingVector& b) {
  if (!(a.params() == b.params())) throw InputError("ring vectors live over different rings");
  if (a.size() != b.size()) {
    throw InputError("length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

}  // namespace

RingVector vec_add(const RingVector& a, const RingVector& b) {
  require_compatible(a, b);
  const std::uint64_t m = a.params().modulus();
  std::vector<Residue> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<Residue>((std::uint64_t{a[i]} + b[i]) % m);
  return RingVector(a.params(), std::move(out));
}

RingVector vec_sub(const RingVector& a, const RingVector& b) {
  require_compatible(a, b);
  const std::uint64_t m = a.params().modulus();
  std::vector<Residue> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<Residue>((m + a[i] - b[i]) % m);
  return RingVector(a.params(), std::move(out));
}

RingVector vec_scale(std::uint64_t lambda, const RingVector& a) {
  const std::uint64_t m = a.params().modulus();
  lambda %= m;
  std::vector<Residue> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<Residue>(lambda * a[i] % m);
  return RingVector(a.params(), std::move(out));
}

std::uint64_t vector_order(const RingVector& v) {
  const RingParams& r = v.params();
  // Largest j <= s with p^j dividing every entry.
  unsigned j = r.s();
  for (Residue e : v.entries()) {
    if (e == 0) continue;
    unsigned k = 0;
    while (k < j && e % r.power(k + 1) == 0) ++k;
    j = std::min(j, k);
  }
  return r.power(r.s() - j);
}

}  // namespace ghcode
