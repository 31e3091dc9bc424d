#pragma once

#include <utility>

namespace perihall::ffla {

template <class F>
std::uint64_t for_each_subspace(FieldSpec f, std::size_t n, std::size_t k, F&& fn) {
  if (k > n) return 0;
  std::uint64_t visited = 0;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  std::vector<bool> is_piv(n);
  for (;;) {
    std::fill(is_piv.begin(), is_piv.end(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free.emplace_back(i, j);
    MatrixFp m(f, k, n);
    for (std::size_t i = 0; i < k; ++i) m.set(i, piv[i], 1);
    std::vector<Elem> digit(free.size(), 0);
    for (;;) {
      ++visited;
      if (!fn(static_cast<const MatrixFp&>(m))) return visited;
      std::size_t d = 0;
      while (d < digit.size()) {
        digit[d] = (digit[d] + 1) % f.p();
        m.set(free[d].first, free[d].second, digit[d]);
        if (digit[d] != 0) break;
        ++d;
      }
      if (d == digit.size()) break;
    }
    // next combination
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return visited;
}

}  // namespace perihall::ffla
