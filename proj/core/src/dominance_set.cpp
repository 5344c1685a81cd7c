#include "ndsort/dominance_set.hpp"

#include "ndsort/core.hpp"

#include <algorithm>
#include <string>

namespace ndsort {

namespace {

constexpr std::uint64_t all_ones = ~std::uint64_t{0};

// bits [from, 63] of a word
constexpr std::uint64_t mask_from(std::size_t from) noexcept { return all_ones << (from % 64); }

// bits [0, to] of a word
constexpr std::uint64_t mask_to(std::size_t to) noexcept { return all_ones >> (63 - to % 64); }

} // namespace

DominanceSet::DominanceSet(std::size_t capacity)
    : words_((capacity + 63) / 64, 0)
    , capacity_(capacity)
{
}

DominanceSet DominanceSet::prefix(std::size_t capacity, std::size_t count)
{
    DominanceSet set(capacity);
    if (count > capacity) {
        throw Error(ErrorCode::InvalidArgument,
                    "prefix of " + std::to_string(count) + " exceeds capacity " + std::to_string(capacity));
    }
    if (count == 0) {
        return set;
    }
    std::fill_n(set.words_.begin(), count / 64, all_ones);
    if (count % 64 != 0) {
        set.words_[count / 64] = mask_to(count - 1);
    }
    set.min_ = 0;
    set.max_ = count - 1;
    return set;
}

std::size_t DominanceSet::size() const noexcept
{
    if (empty()) {
        return 0;
    }
    std::size_t total = 0;
    for (std::size_t w = min_ / 64; w <= max_ / 64; ++w) {
        total += static_cast<std::size_t>(std::popcount(words_[w]));
    }
    return total;
}

void DominanceSet::insert(std::size_t pos)
{
    if (pos >= capacity_) {
        throw Error(ErrorCode::InvalidArgument,
                    "position " + std::to_string(pos) + " outside capacity " + std::to_string(capacity_));
    }
    words_[pos / 64] |= std::uint64_t{1} << (pos % 64);
    if (empty()) {
        min_ = max_ = pos;
    } else {
        min_ = std::min(min_, pos);
        max_ = std::max(max_, pos);
    }
}

void DominanceSet::clear() noexcept
{
    if (!empty()) {
        std::fill(words_.begin() + static_cast<std::ptrdiff_t>(min_ / 64),
                  words_.begin() + static_cast<std::ptrdiff_t>(max_ / 64 + 1), 0);
    }
    min_ = max_ = npos;
}

void DominanceSet::intersect_with(const DominanceSet& other)
{
    if (empty()) {
        return;
    }
    if (other.empty()) {
        clear();
        return;
    }
    const std::size_t lo = std::max(min_, other.min_);
    const std::size_t hi = std::min(max_, other.max_);
    if (lo > hi) {
        clear();
        return;
    }

    const std::size_t wlo = lo / 64;
    const std::size_t whi = hi / 64;

    // Our bits live in [min_, max_]; everything outside [lo, hi] goes.
    std::fill(words_.begin() + static_cast<std::ptrdiff_t>(min_ / 64),
              words_.begin() + static_cast<std::ptrdiff_t>(wlo), 0);
    std::fill(words_.begin() + static_cast<std::ptrdiff_t>(whi + 1),
              words_.begin() + static_cast<std::ptrdiff_t>(max_ / 64 + 1), 0);

    for (std::size_t w = wlo; w <= whi; ++w) {
        words_[w] &= other.words_[w];
    }
    words_[wlo] &= mask_from(lo);
    words_[whi] &= mask_to(hi);

    recompute_bounds(lo, hi);
}

void DominanceSet::recompute_bounds(std::size_t lo, std::size_t hi) noexcept
{
    std::size_t wlo = lo / 64;
    const std::size_t whi = hi / 64;
    while (wlo <= whi && words_[wlo] == 0) {
        ++wlo;
    }
    if (wlo > whi) {
        min_ = max_ = npos;
        return;
    }
    min_ = wlo * 64 + static_cast<std::size_t>(std::countr_zero(words_[wlo]));

    std::size_t w = whi;
    while (words_[w] == 0) {
        --w;
    }
    max_ = w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
}

std::vector<std::size_t> DominanceSet::to_vector() const
{
    std::vector<std::size_t> out;
    for_each_descending([&](std::size_t pos) {
        out.push_back(pos);
        return true;
    });
    std::reverse(out.begin(), out.end());
    return out;
}

bool operator==(const DominanceSet& a, const DominanceSet& b) noexcept
{
    return a.capacity_ == b.capacity_ && a.min_ == b.min_ && a.max_ == b.max_ && a.words_ == b.words_;
}

} // namespace ndsort
