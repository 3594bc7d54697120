#pragma once

// Slow, straightforward reimplementations used as references by the unit tests.
// None of these share code with the library beyond plain data types.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline std::vector<int> digits(std::uint64_t u, int p, int count) {
  std::vector<int> d(count);
  for (int i = 0; i < count; ++i) {
    d[i] = static_cast<int>(u % p);
    u /= p;
  }
  return d;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Coordinate c of phi_s(u): top digit plus the dot product of the low digits with the
/// base-p digits of c.
inline Word gray(std::uint64_t u, int p, int s) {
  const auto d = digits(u, p, s);
  const std::uint64_t width = ipow(p, s - 1);
  Word w(width);
  for (std::uint64_t c = 0; c < width; ++c) {
    const auto cd = digits(c, p, s - 1);
    int v = d[s - 1];
    for (int i = 0; i + 1 < s; ++i) v += d[i] * cd[i];
    w[c] = v % p;
  }
  return w;
}

inline Word gray_vector(const std::vector<std::uint64_t>& v, int p, int s) {
  Word out;
  for (auto x : v) {
    const auto g = gray(x, p, s);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

/// Rank over GF(p) by textbook elimination on a copy.
inline int rank(std::vector<Word> m, int p) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  auto inv = [p](int a) {
    for (int x = 1; x < p; ++x) {
      if (a * x % p == 1) return x;
    }
    return 0;
  };
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][c] % p != 0) {
        piv = static_cast<int>(i);
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    const int f = inv(m[r][c]);
    for (auto& x : m[r]) x = x * f % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == r || m[i][c] == 0) continue;
      const int g = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = ((m[i][k] - g * m[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// Dimension of {x in C : x + C = C}, checked element by element.
inline int kernel_dim(const std::vector<Word>& code, int p) {
  const std::set<Word> set(code.begin(), code.end());
  std::size_t count = 0;
  for (const auto& x : code) {
    bool in = true;
    for (const auto& c : code) {
      Word y(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) y[i] = (x[i] + c[i]) % p;
      if (!set.count(y)) {
        in = false;
        break;
      }
    }
    if (in) ++count;
  }
  int d = 0;
  while (count > 1) {
    count /= p;
    ++d;
  }
  return d;
}

/// Closure of the generator rows under addition in Z_{p^s}^n.
inline std::set<std::vector<std::uint64_t>> span(const std::vector<std::vector<std::uint64_t>>& rows,
                                                 std::uint64_t modulus) {
  const std::size_t n = rows.at(0).size();
  std::set<std::vector<std::uint64_t>> out{std::vector<std::uint64_t>(n, 0)};
  std::vector<std::vector<std::uint64_t>> frontier(out.begin(), out.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& v : frontier) {
      for (const auto& r : rows) {
        std::vector<std::uint64_t> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = (v[i] + r[i]) % modulus;
        if (out.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// Generator matrix by the direct description: start from (1); each added row repeats
/// the previous matrix over every value of the new row's step, then appends the row.
inline std::vector<std::vector<std::uint64_t>> generator(int p, const std::vector<unsigned>& ts) {
  const int s = static_cast<int>(ts.size());
  const std::uint64_t modulus = ipow(p, s);
  std::vector<std::vector<std::uint64_t>> a{{1}};
  for (int i = 1; i <= s; ++i) {
    const unsigned count = (i == 1) ? ts[0] - 1 : ts[i - 1];
    const std::uint64_t step = ipow(p, i - 1);
    const std::uint64_t values = ipow(p, s - i + 1);
    for (unsigned c = 0; c < count; ++c) {
      std::vector<std::vector<std::uint64_t>> b(a.size() + 1);
      for (std::uint64_t j = 0; j < values; ++j) {
        for (std::size_t r = 0; r < a.size(); ++r) b[r].insert(b[r].end(), a[r].begin(), a[r].end());
        b.back().insert(b.back().end(), a[0].size(), (j * step) % modulus);
      }
      a = std::move(b);
    }
  }
  return a;
}

inline std::vector<Word> gray_code(int p, const std::vector<unsigned>& ts) {
  const int s = static_cast<int>(ts.size());
  const auto words = span(generator(p, ts), ipow(p, s));
  std::vector<Word> out;
  for (const auto& v : words) out.push_back(gray_vector(v, p, s));
  return out;
}

inline bool balanced_or_constant(const Word& a, const Word& b, int p) {
  std::map<int, std::size_t> counts;
  for (std::size_t i = 0; i < a.size(); ++i) ++counts[((a[i] - b[i]) % p + p) % p];
  if (counts.size() == 1) return true;
  if (counts.size() != static_cast<std::size_t>(p)) return false;
  for (const auto& [k, v] : counts) {
    if (v != a.size() / p) return false;
  }
  return true;
}

/// Every type (t_1..t_s) with t_1 >= min_first by exhausting all bounded tuples.
inline std::vector<std::vector<unsigned>> types(unsigned t, unsigned s, unsigned min_first) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(s, 0);
  // Entry i alone cannot exceed (t+1)/(s-i).
  std::vector<unsigned> bound(s);
  for (unsigned i = 0; i < s; ++i) bound[i] = (t + 1) / (s - i) + 1;
  while (true) {
    unsigned total = 0;
    for (unsigned i = 0; i < s; ++i) total += (s - i) * cur[i];
    if (total == t + 1 && cur[0] >= min_first) out.push_back(cur);
    unsigned k = s;
    while (k > 0) {
      --k;
      if (++cur[k] < bound[k]) break;
      cur[k] = 0;
      if (k == 0) return out;
    }
  }
}

}  // namespace oracle
