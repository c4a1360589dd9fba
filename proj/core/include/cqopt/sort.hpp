#pragma once

#include <algorithm>
#include <vector>

namespace cqopt {

// Oracle-driven stable merge sort: sign_cmp returns the sign of a - b and
// ties keep first-seen order.
template <typename T, typename Cmp>
void stable_merge_sort(std::vector<T>& items, const Cmp& sign_cmp) {
  if (items.size() < 2) return;
  std::vector<T> buf(items.size());
  for (size_t width = 1; width < items.size(); width *= 2) {
    for (size_t lo = 0; lo + width < items.size(); lo += 2 * width) {
      size_t mid = lo + width;
      size_t hi = std::min(lo + 2 * width, items.size());
      size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (sign_cmp(items[j], items[i]) < 0)
          buf[k++] = items[j++];
        else
          buf[k++] = items[i++];
      }
      while (i < mid) buf[k++] = items[i++];
      while (j < hi) buf[k++] = items[j++];
      std::copy(buf.begin() + lo, buf.begin() + hi, items.begin() + lo);
    }
  }
}

}  // namespace cqopt
