#include "bergman/multi_index.hpp"

#include <algorithm>

namespace bergman {

namespace {

void emit(int n, int pos, int remaining, std::vector<int>& cur,
          std::vector<MultiIndex>& out) {
  if (pos == n - 1) {
    for (int last = 0; last <= remaining; ++last) {
      cur[pos] = last;
      out.emplace_back(cur);
    }
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    emit(n, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerateMultiIndices(int n, int maxTotal) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(n, 0);
  emit(n, 0, maxTotal, cur, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const MultiIndex& a, const MultiIndex& b) {
                     return a.total() < b.total();
                   });
  return out;
}

}  // namespace bergman
