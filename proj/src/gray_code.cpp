#include "ghcode/gray_code.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <mutex>

#include "ghcode/parallel.hpp"

namespace ghcode {

std::uint64_t fingerprint(std::span<const Symbol> word) noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ word.size();
  std::size_t i = 0;
  for (; i + 8 <= word.size(); i += 8) {
    std::uint64_t chunk;
    std::memcpy(&chunk, word.data() + i, 8);
    h ^= chunk * 0xBF58476D1CE4E5B9ull;
    h = std::rotl(h, 27) * 0x94D049BB133111EBull;
  }
  std::uint64_t tail = 0;
  for (std::size_t k = 0; i < word.size(); ++i, ++k) tail |= std::uint64_t{word[i]} << (8 * k);
  h ^= tail * 0xBF58476D1CE4E5B9ull;
  h ^= h >> 31;
  h *= 0xD6E8FEB86659FD93ull;
  h ^= h >> 32;
  return h;
}

GrayCode::GrayCode(std::uint32_t p, std::size_t word_length, std::vector<Symbol> data,
                   std::optional<TypeSignature> source)
    : p_(p), length_(word_length), count_(0), data_(std::move(data)), source_(std::move(source)) {
  if (word_length == 0) throw InputError("Gray words must have positive length");
  if (data_.size() % word_length != 0) throw InputError("data is not a whole number of words");
  if (!is_prime(p) || p > kMaxGrayPrime) throw InputError("unsupported alphabet size " + std::to_string(p));
  count_ = data_.size() / word_length;
  if (count_ == 0) throw InputError("a code must contain at least one word");
  if (count_ >= std::numeric_limits<std::uint32_t>::max()) throw InputError("too many words for the index");
  if (std::any_of(data_.begin(), data_.end(), [p](Symbol x) { return x >= p; })) {
    throw InputError("symbol outside Z_" + std::to_string(p));
  }
  build_index();
}

GrayCode GrayCode::from_words(std::uint32_t p, const std::vector<GrayWord>& words) {
  if (words.empty()) throw InputError("a code must contain at least one word");
  const std::size_t length = words.front().size();
  std::vector<Symbol> data;
  data.reserve(length * words.size());
  for (const auto& w : words) {
    if (w.size() != length) throw InputError("words of differing length");
    data.insert(data.end(), w.begin(), w.end());
  }
  return GrayCode(p, length, std::move(data));
}

void GrayCode::build_index() {
  const std::uint64_t capacity = std::bit_ceil(std::uint64_t{count_} * 2);
  mask_ = capacity - 1;
  slots_.assign(capacity, 0);
  fingerprints_.resize(count_);
  for (std::size_t i = 0; i < count_; ++i) {
    const std::uint64_t fp = fingerprint(word(i));
    fingerprints_[i] = fp;
    std::uint64_t slot = fp & mask_;
    while (slots_[slot] != 0) {
      const std::size_t other = slots_[slot] - 1;
      if (fingerprints_[other] == fp && std::memcmp(word(other).data(), word(i).data(), length_) == 0) {
        throw InputError("duplicate word at positions " + std::to_string(other) + " and " + std::to_string(i));
      }
      slot = (slot + 1) & mask_;
    }
    slots_[slot] = static_cast<std::uint32_t>(i + 1);
  }
}

std::optional<std::size_t> GrayCode::find(std::span<const Symbol> w) const noexcept {
  if (w.size() != length_) return std::nullopt;
  return find(w, fingerprint(w));
}

std::optional<std::size_t> GrayCode::find(std::span<const Symbol> w, std::uint64_t fp) const noexcept {
  if (w.size() != length_) return std::nullopt;
  for (std::uint64_t slot = fp & mask_; slots_[slot] != 0; slot = (slot + 1) & mask_) {
    const std::size_t i = slots_[slot] - 1;
    if (fingerprints_[i] == fp && std::memcmp(word(i).data(), w.data(), length_) == 0) return i;
  }
  return std::nullopt;
}

std::uint64_t estimate_materialize_bytes(const TypeSignature& sig) {
  const long double words = static_cast<long double>(sig.code_size());
  const long double bytes = words * sig.gray_length() + words * (sizeof(std::uint64_t) + 2 * sizeof(std::uint32_t));
  return bytes >= 1.8e19L ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(bytes);
}

GrayCode materialize_gray(const AdditiveCode& code, const ResourceLimits& limits) {
  const TypeSignature& sig = code.sig;
  const std::uint64_t need = estimate_materialize_bytes(sig);
  if (need > limits.budget_bytes) {
    throw CapacityError("materialising the Gray image of " + sig.to_tuple_string() + " does not fit", need,
                        limits.budget_bytes);
  }
  const std::size_t length = sig.gray_length();
  std::vector<Symbol> data(sig.code_size() * length);
  parallel_ranges(sig.code_size(), [&](std::uint64_t begin, std::uint64_t end) {
    for_each_gray_word(code, begin, end, [&](std::uint64_t i, std::span<const Symbol> w) {
      std::copy(w.begin(), w.end(), data.begin() + i * length);
    });
  });
  return GrayCode(sig.p(), length, std::move(data), sig);
}

GhCheckMode GhCheckMode::automatic(std::uint64_t code_size) {
  return code_size <= kExhaustiveLimit ? exhaustive() : sampled();
}

std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

namespace {

inline Symbol sub_mod(Symbol a, Symbol b, std::uint32_t p) {
  return static_cast<Symbol>((a + p - b) % p);
}

}  // namespace

bool difference_constant_or_balanced(std::span<const Symbol> a, std::span<const Symbol> b, std::uint32_t p) {
  const std::size_t n = a.size();
  thread_local std::vector<Symbol> diff;
  diff.resize(n);
  if (p <= 128) {
    const Symbol pp = static_cast<Symbol>(p);
    for (std::size_t i = 0; i < n; ++i) {
      const Symbol x = static_cast<Symbol>(a[i] - b[i]);
      const Symbol y = static_cast<Symbol>(x + pp);
      diff[i] = std::min(x, y);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) diff[i] = sub_mod(a[i], b[i], p);
  }
  const bool divisible = n % p == 0;
  const std::size_t share = n / p;
  std::size_t seen = 0;
  for (std::uint32_t lambda = 0; lambda + 1 < p; ++lambda) {
    std::size_t count = 0;
    const Symbol l = static_cast<Symbol>(lambda);
    for (std::size_t i = 0; i < n; ++i) count += diff[i] == l;
    if (count == n) return true;
    if (!divisible || count != share) {
      // Only a constant vector can still qualify.
      return count == 0 && std::all_of(diff.begin(), diff.end(), [&](Symbol x) { return x == diff[0]; });
    }
    seen += count;
  }
  return n - seen == share || n - seen == n;
}

GhVerdict is_gh_code(const GrayCode& code, const GhCheckMode& mode) {
  GhVerdict verdict;
  verdict.exhaustive = mode.kind == GhCheckMode::Kind::exhaustive;
  const std::size_t m = code.size();
  const std::uint32_t p = code.p();

  struct Failure {
    std::size_t i, j;
  };
  std::optional<Failure> failure;
  std::mutex failure_mutex;
  auto record = [&](std::size_t i, std::size_t j) {
    std::lock_guard lock(failure_mutex);
    if (!failure || std::pair(i, j) < std::pair(failure->i, failure->j)) failure = Failure{i, j};
  };

  if (verdict.exhaustive) {
    parallel_ranges(m, [&](std::uint64_t begin, std::uint64_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          if (!difference_constant_or_balanced(code.word(i), code.word(j), p)) {
            record(i, j);
            return;
          }
        }
      }
    });
    verdict.pairs_checked = m < 2 ? 0 : std::uint64_t{m} * (m - 1) / 2;
  } else if (m >= 2) {
    std::mt19937_64 rng(mode.seed);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(mode.pairs);
    for (auto& [i, j] : pairs) {
      i = static_cast<std::uint32_t>(bounded_random(rng, m));
      j = static_cast<std::uint32_t>(bounded_random(rng, m - 1));
      if (j >= i) ++j;
    }
    // The reported failure is the earliest failing sample, whatever the worker split.
    std::optional<std::uint64_t> first_bad;
    parallel_ranges(pairs.size(), [&](std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t k = begin; k < end; ++k) {
        if (!difference_constant_or_balanced(code.word(pairs[k].first), code.word(pairs[k].second), p)) {
          std::lock_guard lock(failure_mutex);
          if (!first_bad || k < *first_bad) first_bad = k;
          return;
        }
      }
    });
    if (first_bad) failure = Failure{pairs[*first_bad].first, pairs[*first_bad].second};
    verdict.pairs_checked = pairs.size();
  }

  if (failure) {
    verdict.reason = "difference of words " + std::to_string(failure->i) + " and " + std::to_string(failure->j) +
                     " is neither constant nor balanced";
    return verdict;
  }
  if (std::uint64_t{m} != std::uint64_t{p} * code.word_length()) {
    verdict.reason = "cardinality " + std::to_string(m) + " is not p * N = " +
                     std::to_string(std::uint64_t{p} * code.word_length());
    return verdict;
  }
  verdict.passed = true;
  return verdict;
}

std::uint64_t min_distance(const GrayCode& code) {
  const std::size_t m = code.size();
  if (m < 2) throw InputError("minimum distance needs at least two words");
  const std::size_t n = code.word_length();
  std::uint64_t best = n;
  std::mutex best_mutex;
  parallel_ranges(m, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t local = n;
    for (std::size_t i = begin; i < end; ++i) {
      const Symbol* a = code.word(i).data();
      for (std::size_t j = i + 1; j < m; ++j) {
        const Symbol* b = code.word(j).data();
        std::uint64_t d = 0;
        for (std::size_t k = 0; k < n; ++k) d += a[k] != b[k];
        local = std::min(local, d);
      }
    }
    std::lock_guard lock(best_mutex);
    best = std::min(best, local);
  });
  return best;
}

}  // namespace ghcode
