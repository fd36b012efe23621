#include <algorithm>

#include "qm/subspace.hpp"

namespace qm {

namespace {

// Combinations of {0..n-1} of size d, lexicographic.
void for_each_combination(int n, int d, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> c(d);
  for (int i = 0; i < d; ++i) c[i] = i;
  if (d > n) return;
  while (true) {
    f(c);
    int i = d - 1;
    while (i >= 0 && c[i] == n - d + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

std::vector<Subspace<Fp>> enumerate_subspaces(int n, std::uint32_t q, std::uint64_t budget) {
  if (n < 0) throw ShapeError("negative ambient dimension");
  if (!is_prime(q)) throw ShapeError("modulus must be a prime >= 2");
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= q;
    if (size > budget) throw BudgetError("subspace enumeration budget exceeded");
  }

  const Fp zero = Fp::zero(q);
  std::vector<Subspace<Fp>> out;
  for (int d = 0; d <= n; ++d) {
    for_each_combination(n, d, [&](const std::vector<int>& pivots) {
      // Free positions of an RREF matrix with these pivot columns.
      std::vector<bool> is_pivot(n, false);
      for (int c : pivots) is_pivot[c] = true;
      std::vector<std::pair<int, int>> free_pos;
      for (int i = 0; i < d; ++i)
        for (int j = pivots[i] + 1; j < n; ++j)
          if (!is_pivot[j]) free_pos.emplace_back(i, j);

      std::vector<std::uint32_t> vals(free_pos.size(), 0);
      while (true) {
        Matrix<Fp> basis(d, n, zero);
        for (int i = 0; i < d; ++i) basis.at(i, pivots[i]) = Fp::one(q);
        for (std::size_t k = 0; k < free_pos.size(); ++k)
          basis.at(free_pos[k].first, free_pos[k].second) = Fp(vals[k], q);
        out.push_back(Subspace<Fp>::from_span_rows(basis));

        std::size_t k = 0;
        while (k < vals.size() && ++vals[k] == q) vals[k++] = 0;
        if (k == vals.size()) break;
      }
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qm
