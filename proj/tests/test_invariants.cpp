#include "doctest.h"

#include <random>

#include "ghcode/invariants.hpp"
#include "oracles.hpp"

using namespace ghcode;

namespace {

std::vector<oracle::Word> words_of(const GrayCode& code) {
  std::vector<oracle::Word> out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto w = code.word(i);
    out.emplace_back(w.begin(), w.end());
  }
  return out;
}

}  // namespace

TEST_CASE("reduced basis keeps echelon form") {
  ReducedBasis b(3, 4);
  CHECK(b.insert(GrayWord{0, 2, 1, 1}));
  CHECK(b.insert(GrayWord{1, 1, 0, 0}));
  CHECK_FALSE(b.insert(GrayWord{1, 2, 2, 2}));  // 2 * first + second
  CHECK(b.dimension() == 2);
  CHECK(b.pivots() == std::vector<std::size_t>{0, 1});
  for (std::size_t r = 0; r < b.dimension(); ++r) {
    CHECK(b.row(r)[b.pivots()[r]] == 1);
    for (std::size_t q = 0; q < b.dimension(); ++q) {
      if (q != r) CHECK(b.row(q)[b.pivots()[r]] == 0);
    }
  }
  CHECK(b.contains(GrayWord{0, 0, 0, 0}));
  CHECK(b.contains(GrayWord{2, 1, 1, 1}));
  CHECK_FALSE(b.contains(GrayWord{0, 0, 0, 1}));
  CHECK_FALSE(b.insert(GrayWord{0, 0, 0, 0}));
  CHECK_THROWS_AS(b.insert(GrayWord{1}), InputError);
  CHECK_THROWS_AS(ReducedBasis(6, 3), InputError);
}

TEST_CASE("rank matches textbook elimination on random matrices") {
  std::mt19937_64 rng(2024);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 15;
      std::vector<oracle::Word> m(rows, oracle::Word(cols));
      ReducedBasis b(p, cols);
      for (auto& row : m) {
        for (auto& x : row) x = static_cast<int>(rng() % p);
        // Bias towards dependent rows.
        if (rng() % 3 == 0) std::fill(row.begin(), row.end(), 0);
        b.insert(GrayWord(row.begin(), row.end()));
      }
      CHECK(b.dimension() == static_cast<std::size_t>(oracle::rank(m, static_cast<int>(p))));
    }
  }
}

TEST_CASE("rank and kernel agree with brute force on small codes") {
  for (std::uint32_t p : {2u, 3u}) {
    const unsigned t_max = p == 2 ? 5 : 4;
    for (unsigned t = 2; t <= t_max; ++t) {
      for (unsigned s = 1; s <= t + 1; ++s) {
        for (const auto& ts : oracle::types(t, s, 1)) {
          const TypeSignature sig(p, ts);
          const auto additive = build_generator_matrix(sig);
          const auto code = materialize_gray(additive);
          const auto words = words_of(code);
          const int r = oracle::rank(words, static_cast<int>(p));
          const int k = oracle::kernel_dim(words, static_cast<int>(p));
          const auto pair = invariant_pair(code);
          INFO(sig.to_tuple_string());
          CHECK(pair.rank == static_cast<std::uint64_t>(r));
          CHECK(pair.kernel_dim == static_cast<std::uint64_t>(k));
          CHECK(rank(additive) == pair.rank);
          CHECK(kernel(code).dimension == pair.kernel_dim);
          CHECK(invariant_pair(additive) == pair);
          CHECK(is_linear(code) == is_linear_type(sig));
          CHECK(pair.kernel_dim <= sig.t() + 1);
          CHECK(pair.rank >= sig.t() + 1);
        }
      }
    }
  }
}

TEST_CASE("(2,0,0,0) over Z_81 has rank 34") {
  // The printed listing gives (14,2); brute-force elimination over the direct construction
  // disagrees on the rank.
  const std::vector<unsigned> ts{2, 0, 0, 0};
  const auto words = oracle::gray_code(3, ts);
  CHECK(oracle::rank(words, 3) == 34);
  const auto pair = invariant_pair(build_generator_matrix(TypeSignature(3, ts)));
  CHECK(pair == InvariantPair{34, 2});
}

TEST_CASE("kernel of a non-additive code") {
  // 111 + 120 = 201 is missing, so only the zero word translates the code onto itself.
  const auto code = GrayCode::from_words(3, {{0, 0, 0}, {1, 1, 1}, {0, 1, 2}, {1, 2, 0}});
  CHECK(kernel(code).dimension ==
        static_cast<std::uint64_t>(oracle::kernel_dim(words_of(code), 3)));
  CHECK_THROWS_AS(invariant_pair(code), InputError);  // 4 words is not a power of 3
  const auto no_zero = GrayCode::from_words(3, {{1, 1, 1}, {0, 1, 2}, {2, 2, 2}});
  CHECK_THROWS_AS(kernel(no_zero), InputError);
}

TEST_CASE("kernel basis spans kernel words only") {
  const auto code = materialize_gray(build_generator_matrix(TypeSignature(3, {2, 0, 0})));
  const auto k = kernel(code);
  CHECK(k.dimension == 2);
  for (std::size_t r = 0; r < k.basis.dimension(); ++r) CHECK(code.contains(k.basis.row(r)));
}

TEST_CASE("streamed invariants fall back when the image does not fit") {
  const auto additive = build_generator_matrix(TypeSignature(3, {1, 0, 2}));  // linear
  const auto pair = invariant_pair(additive, ResourceLimits{1000});
  CHECK(pair == InvariantPair{5, 5});
  const auto nonlinear = build_generator_matrix(TypeSignature(3, {2, 1}));
  CHECK_THROWS_AS(invariant_pair(nonlinear, ResourceLimits{1000}), CapacityError);
}
