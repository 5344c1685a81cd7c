#ifndef NDSORT_MERGE_SORT_HPP
#define NDSORT_MERGE_SORT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ndsort {

/// Stable bottom-up merge sort of an index permutation.
///
/// `less(a, b)` must be a strict weak order on the stored indices. A linear
/// pre-scan detects input that is already ordered; in that case nothing is
/// moved and the function returns false. Otherwise the order is sorted using
/// `scratch` as the single auxiliary buffer and the function returns true.
///
/// Every pair of elements adjacent in the final order is passed to `less`
/// directly at least once. Callers rely on this to detect exact ties from
/// inside the comparator.
template <typename Index, typename Less>
bool stable_merge_sort(std::vector<Index>& order, std::vector<Index>& scratch, Less&& less)
{
    const std::size_t n = order.size();
    std::size_t i = 1;
    while (i < n && !less(order[i], order[i - 1])) {
        ++i;
    }
    if (i >= n) {
        return false;
    }

    scratch.resize(n);
    Index* src = order.data();
    Index* dst = scratch.data();
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo < n; lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, n);
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t l = lo;
            std::size_t r = mid;
            std::size_t out = lo;
            while (l < mid && r < hi) {
                // ties take the left run: stability
                if (less(src[r], src[l])) {
                    dst[out++] = src[r++];
                } else {
                    dst[out++] = src[l++];
                }
            }
            out = std::copy(src + l, src + mid, dst + out) - dst;
            std::copy(src + r, src + hi, dst + out);
        }
        std::swap(src, dst);
    }
    if (src != order.data()) {
        std::copy(src, src + n, order.data());
    }
    return true;
}

} // namespace ndsort

#endif
