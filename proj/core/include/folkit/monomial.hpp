#pragma once

#include <numeric>
#include <vector>

namespace folkit {

// Exponent vector, one entry per variable.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

// Graded lexicographic: total degree first, then earliest variable wins.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex_less(a, b); }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline bool mono_divides(const Monomial& d, const Monomial& m) {
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& m, const Monomial& d) {
  Monomial r(m);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= d[i];
  return r;
}

}  // namespace folkit
