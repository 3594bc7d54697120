#include "ghcode/code.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <limits>

namespace ghcode {

namespace {

std::uint64_t checked_power(std::uint64_t base, unsigned exponent) {
  std::uint64_t value = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (value > std::numeric_limits<std::uint64_t>::max() / base) {
      throw CapacityError(std::to_string(base) + "^" + std::to_string(exponent) + " overflows 64 bits",
                          std::numeric_limits<std::uint64_t>::max(), ResourceLimits::kDefaultBudget);
    }
    value *= base;
  }
  return value;
}

unsigned require_length_exponent(std::span<const unsigned> ts) {
  if (ts.empty()) throw InputError("type must have at least one entry");
  if (ts[0] < 1) throw InputError("t_1 must be at least 1");
  std::uint64_t weighted = 0;
  const std::size_t s = ts.size();
  for (std::size_t i = 0; i < s; ++i) weighted += std::uint64_t{s - i} * ts[i];
  if (weighted - 1 > 4096) throw InputError("type is far too large");
  return static_cast<unsigned>(weighted - 1);
}

}  // namespace

unsigned type_length_exponent(std::span<const unsigned> ts) { return require_length_exponent(ts); }

TypeSignature::TypeSignature(std::uint32_t p, std::vector<unsigned> ts)
    : params_(p, static_cast<unsigned>(ts.empty() ? 1 : ts.size())), ts_(std::move(ts)) {
  t_ = require_length_exponent(ts_);
  n_ = checked_power(p, t_ - s() + 1);
  gray_length_ = checked_power(p, t_);
  code_size_ = checked_power(p, t_ + 1);
}

unsigned TypeSignature::rows() const noexcept {
  unsigned r = 0;
  for (unsigned v : ts_) r += v;
  return r;
}

std::string TypeSignature::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < ts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ts_[i]);
  }
  return out;
}

std::string TypeSignature::to_tuple_string() const { return "(" + to_string() + ")"; }

TypeSignature validate_type(std::uint32_t p, std::vector<unsigned> ts, const ResourceLimits& limits) {
  TypeSignature sig(p, std::move(ts));
  const long double bytes = static_cast<long double>(sig.rows()) * sig.n() * sizeof(Residue);
  if (bytes > limits.budget_bytes) {
    throw CapacityError("generator matrix of type " + sig.to_tuple_string() + " does not fit",
                        static_cast<std::uint64_t>(std::min<long double>(bytes, 1.8e19L)), limits.budget_bytes);
  }
  return sig;
}

std::vector<unsigned> parse_type(std::string_view text) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    unsigned value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw InputError("malformed type string '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool is_linear_type(std::uint32_t p, std::span<const unsigned> ts) {
  const std::size_t s = ts.size();
  if (s <= 1) return true;
  const auto zero_between = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (ts[i] != 0) return false;
    }
    return true;
  };
  if (ts[0] == 1 && zero_between(1, s - 1)) return true;
  if (p == 2) {
    if (s == 2) return ts[0] == 2;
    return ts[0] == 1 && zero_between(1, s - 2) && ts[s - 2] == 1;
  }
  return false;
}

AdditiveCode build_generator_matrix(const TypeSignature& sig) {
  const RingParams& ring = sig.params();
  const std::uint32_t p = sig.p();
  const unsigned s = sig.s();

  // Start from A^{1,0,...,0} = (1) and append rows of order p^s, then p^{s-1}, ..., then p.
  std::vector<std::vector<Residue>> rows{{1}};
  std::size_t width = 1;
  for (unsigned i = 1; i <= s; ++i) {
    const unsigned additions = (i == 1) ? sig.ts()[0] - 1 : sig.ts()[i - 1];
    const std::uint64_t step = ring.power(i - 1);
    const std::uint64_t values = ring.power(s - i + 1);
    for (unsigned a = 0; a < additions; ++a) {
      for (auto& row : rows) {
        std::vector<Residue> grown;
        grown.reserve(width * values);
        for (std::uint64_t j = 0; j < values; ++j) grown.insert(grown.end(), row.begin(), row.end());
        row = std::move(grown);
      }
      std::vector<Residue> added;
      added.reserve(width * values);
      for (std::uint64_t j = 0; j < values; ++j) added.insert(added.end(), width, static_cast<Residue>(j * step));
      rows.push_back(std::move(added));
      width *= values;
    }
  }
  if (width != sig.n()) throw std::logic_error("generator width disagrees with n");

  AdditiveCode code{sig, {}, {}, {}};
  for (auto& row : rows) code.generator.emplace_back(ring, std::move(row));
  for (const auto& w : code.generator) {
    unsigned sigma = 0;
    for (std::uint64_t order = vector_order(w); order > 1; order /= p) ++sigma;
    code.row_exponents.push_back(sigma);
    for (unsigned q = 0; q < sigma; ++q) code.pbasis.push_back(vec_scale(ring.power(q), w));
  }
  if (code.pbasis.size() != sig.t() + 1) throw std::logic_error("p-basis size disagrees with t + 1");
  return code;
}

CodewordOdometer::CodewordOdometer(const AdditiveCode& code, std::uint64_t start_index)
    : code_(&code), index_(start_index) {
  const RingParams& ring = code.sig.params();
  const std::uint64_t m = ring.modulus();
  const std::uint32_t p = ring.p();
  if (start_index >= code.sig.code_size()) throw InputError("codeword index out of range");
  coefficients_.resize(code.pbasis.size());
  word_.assign(code.sig.n(), 0);
  std::uint64_t rest = start_index;
  for (std::size_t j = 0; j < code.pbasis.size(); ++j) {
    coefficients_[j] = static_cast<std::uint32_t>(rest % p);
    rest /= p;
    const auto b = code.pbasis[j].entries();
    for (std::size_t k = 0; k < word_.size(); ++k) {
      word_[k] = static_cast<Residue>((word_[k] + std::uint64_t{coefficients_[j]} * b[k]) % m);
    }
    std::vector<Residue> wrap(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) wrap[k] = static_cast<Residue>((m - (p - 1) * std::uint64_t{b[k]} % m) % m);
    wrap_.push_back(std::move(wrap));
  }
}

void CodewordOdometer::advance() {
  const std::uint64_t m = code_->sig.params().modulus();
  const std::uint32_t p = code_->sig.p();
  auto add = [&](std::span<const Residue> v) {
    for (std::size_t k = 0; k < word_.size(); ++k) {
      const std::uint64_t x = std::uint64_t{word_[k]} + v[k];
      word_[k] = static_cast<Residue>(x >= m ? x - m : x);
    }
  };
  std::size_t j = 0;
  while (j < coefficients_.size() && coefficients_[j] == p - 1) {
    coefficients_[j] = 0;
    add(wrap_[j]);
    ++j;
  }
  if (j == coefficients_.size()) throw std::out_of_range("odometer advanced past the last codeword");
  ++coefficients_[j];
  add(code_->pbasis[j].entries());
  ++index_;
}

std::vector<RingVector> enumerate_additive(const AdditiveCode& code) {
  std::vector<RingVector> out;
  out.reserve(code.sig.code_size());
  for_each_codeword(code, 0, code.sig.code_size(), [&](std::uint64_t, std::span<const Residue> cw) {
    out.emplace_back(code.sig.params(), std::vector<Residue>(cw.begin(), cw.end()));
  });
  return out;
}

}  // namespace ghcode
