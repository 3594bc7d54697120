#include "ghcode/gray.hpp"

#include <algorithm>
#include <stdexcept>

#include "ghcode/error.hpp"

namespace ghcode {

namespace {

void require_gray_prime(std::uint32_t p) {
  if (p > kMaxGrayPrime) {
    throw InputError("Gray words support p <= " + std::to_string(kMaxGrayPrime) + ", got " + std::to_string(p));
  }
}

constexpr std::size_t kMaxTableBytes = std::size_t{1} << 25;

}  // namespace

std::size_t YMatrix::columns() const noexcept {
  std::size_t c = 1;
  for (unsigned i = 0; i < s; ++i) c *= p;
  return c;
}

YMatrix build_y_matrix(std::uint32_t p, unsigned s) {
  require_gray_prime(p);
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  YMatrix y{p, 0, {}};
  for (unsigned level = 1; level <= s; ++level) {
    const std::size_t width = y.columns();
    for (auto& row : y.rows) {
      std::vector<Symbol> grown;
      grown.reserve(width * p);
      for (std::uint32_t c = 0; c < p; ++c) grown.insert(grown.end(), row.begin(), row.end());
      row = std::move(grown);
    }
    std::vector<Symbol> last;
    last.reserve(width * p);
    for (std::uint32_t c = 0; c < p; ++c) last.insert(last.end(), width, static_cast<Symbol>(c));
    y.rows.push_back(std::move(last));
    y.s = level;
  }
  return y;
}

GrayWord gray(Residue u, const RingParams& params) {
  require_gray_prime(params.p());
  const auto digits = p_ary_expansion(u, params).digits;
  const unsigned s = params.s();
  const YMatrix y = build_y_matrix(params.p(), s - 1);
  GrayWord out(y.columns(), static_cast<Symbol>(digits[s - 1]));
  for (unsigned i = 0; i + 1 < s; ++i) {
    for (std::size_t c = 0; c < out.size(); ++c) {
      out[c] = static_cast<Symbol>((out[c] + digits[i] * y.rows[i][c]) % params.p());
    }
  }
  return out;
}

GrayMapper::GrayMapper(RingParams params) : params_(params), width_(params.power(params.s() - 1)) {
  require_gray_prime(params.p());
  const std::uint64_t bytes = params.modulus() * width_;
  if (bytes <= kMaxTableBytes) {
    table_.resize(bytes);
    for (std::uint64_t u = 0; u < params.modulus(); ++u) {
      compute(static_cast<Residue>(u), std::span<Symbol>(table_.data() + u * width_, width_));
    }
  }
}

// Column c of Y_{s-1} holds the base-p digits of c, so the word can be grown one digit at
// a time: the block for digit value d at level i is the previous prefix plus d*u_i.
void GrayMapper::compute(Residue u, std::span<Symbol> out) const {
  const std::uint32_t p = params_.p();
  const unsigned s = params_.s();
  std::uint32_t digits[RingParams::kMaxExponent];
  for (unsigned i = 0; i < s; ++i) {
    digits[i] = u % p;
    u /= p;
  }
  out[0] = static_cast<Symbol>(digits[s - 1]);
  std::size_t prefix = 1;
  for (unsigned i = 0; i + 1 < s; ++i) {
    for (std::uint32_t d = 1; d < p; ++d) {
      const std::uint32_t shift = (d * digits[i]) % p;
      Symbol* block = out.data() + d * prefix;
      for (std::size_t k = 0; k < prefix; ++k) {
        const std::uint32_t v = out[k] + shift;
        block[k] = static_cast<Symbol>(v >= p ? v - p : v);
      }
    }
    prefix *= p;
  }
}

void GrayMapper::map(Residue u, std::span<Symbol> out) const {
  if (table_.empty()) {
    compute(u, out);
  } else {
    std::copy_n(table_.data() + std::size_t{u} * width_, width_, out.data());
  }
}

void GrayMapper::map_vector(std::span<const Residue> entries, std::span<Symbol> out) const {
  for (std::size_t i = 0; i < entries.size(); ++i) map(entries[i], out.subspan(i * width_, width_));
}

GrayWord gray_vector(const RingVector& v) {
  GrayMapper mapper(v.params());
  GrayWord out(v.size() * mapper.word_length());
  mapper.map_vector(v.entries(), out);
  return out;
}

RingVector gray_inverse(std::span<const Symbol> w, const RingParams& params) {
  require_gray_prime(params.p());
  const std::uint32_t p = params.p();
  const unsigned s = params.s();
  const std::size_t width = params.power(s - 1);
  if (w.empty() || w.size() % width != 0) {
    throw NotAGrayImage("word length " + std::to_string(w.size()) + " is not a positive multiple of " +
                        std::to_string(width));
  }
  GrayMapper mapper(params);
  GrayWord check(width);
  std::vector<Residue> entries(w.size() / width);
  for (std::size_t b = 0; b < entries.size(); ++b) {
    const auto block = w.subspan(b * width, width);
    if (std::any_of(block.begin(), block.end(), [p](Symbol x) { return x >= p; })) {
      throw NotAGrayImage("symbol outside Z_" + std::to_string(p));
    }
    std::uint64_t u = std::uint64_t{block[0]} * params.power(s - 1);
    for (unsigned i = 0; i + 1 < s; ++i) {
      const std::uint32_t digit = (block[params.power(i)] + p - block[0]) % p;
      u += digit * params.power(i);
    }
    mapper.map(static_cast<Residue>(u), check);
    if (!std::equal(check.begin(), check.end(), block.begin())) {
      throw NotAGrayImage("block " + std::to_string(b + 1) + " is not a Gray image");
    }
    entries[b] = static_cast<Residue>(u);
  }
  return RingVector(params, std::move(entries));
}

Permutation gamma(std::uint32_t p, unsigned s) {
  if (s < 2) throw InputError("gamma_s requires s >= 2");
  const RingParams params(p, s);
  const std::size_t inner = params.power(s - 2);
  std::vector<std::uint32_t> image(params.power(s - 1));
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < inner; ++i) image[j * inner + i] = static_cast<std::uint32_t>(j + i * p);
  }
  return Permutation(std::move(image));
}

Permutation gamma_extended(std::uint32_t p, unsigned s, std::size_t n) {
  const Permutation base = gamma(p, s);
  const std::size_t width = base.size();
  std::vector<std::uint32_t> image(width * n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t o = 0; o < width; ++o) image[b * width + o] = static_cast<std::uint32_t>(b * width + base(o));
  }
  return Permutation(std::move(image));
}

Permutation rho(std::uint32_t p, std::size_t n) {
  if (n < 1) throw InputError("rho requires n >= 1");
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  std::vector<std::uint32_t> image(p * n);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < n; ++i) image[j * n + i] = static_cast<std::uint32_t>(i * p + j);
  }
  return Permutation(std::move(image));
}

RingVector tau(Residue u, const RingParams& params) {
  if (params.s() < 2) throw InputError("tau_s requires s >= 2");
  const GrayWord image = gray(u, params);
  const GrayWord unpermuted = gamma(params.p(), params.s()).inverse().apply(image);
  try {
    return gray_inverse(unpermuted, params.lowered());
  } catch (const NotAGrayImage& e) {
    throw std::logic_error(std::string("gamma_s does not carry phi_s onto a Gray image: ") + e.what());
  }
}

RingVector tau_vector(const RingVector& v) {
  const RingParams& params = v.params();
  if (params.s() < 2) throw InputError("tau_s requires s >= 2");
  const std::uint32_t p = params.p();
  // tau_s is evaluated once per residue; codes reuse few distinct values.
  std::vector<Residue> out;
  out.reserve(v.size() * p);
  std::vector<std::vector<Residue>> cache(params.modulus() <= (1u << 20) ? params.modulus() : 0);
  for (Residue u : v.entries()) {
    if (!cache.empty()) {
      if (cache[u].empty()) {
        const RingVector t = tau(u, params);
        cache[u].assign(t.entries().begin(), t.entries().end());
      }
      out.insert(out.end(), cache[u].begin(), cache[u].end());
    } else {
      const RingVector t = tau(u, params);
      out.insert(out.end(), t.entries().begin(), t.entries().end());
    }
  }
  return RingVector(params.lowered(), std::move(out));
}

RingVector tau_tilde(const RingVector& v) {
  const RingVector t = tau_vector(v);
  const Permutation back = rho(v.params().p(), v.size()).inverse();
  return RingVector(t.params(), back.apply(t.entries()));
}

}  // namespace ghcode
