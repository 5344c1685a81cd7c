#ifndef NDSORT_DOMINANCE_SET_HPP
#define NDSORT_DOMINANCE_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ndsort {

/// Fixed-capacity bit set over compact solution indices that tracks the
/// smallest and largest occupied position.
///
/// Intersections only touch the words inside the overlap of the two
/// occupied ranges, so sets that are far apart cost O(1) to intersect.
class DominanceSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    DominanceSet() = default;
    explicit DominanceSet(std::size_t capacity);

    /// The set {0, 1, ..., count - 1}.
    static DominanceSet prefix(std::size_t capacity, std::size_t count);

    std::size_t capacity() const noexcept { return capacity_; }
    bool empty() const noexcept { return min_ == npos; }
    std::size_t size() const noexcept;

    std::optional<std::size_t> min() const noexcept { return empty() ? std::nullopt : std::optional(min_); }
    std::optional<std::size_t> max() const noexcept { return empty() ? std::nullopt : std::optional(max_); }

    bool contains(std::size_t pos) const noexcept
    {
        return pos < capacity_ && ((words_[pos / 64] >> (pos % 64)) & 1U) != 0;
    }

    /// Throws Error(InvalidArgument) when pos >= capacity.
    void insert(std::size_t pos);
    void clear() noexcept;

    /// this <- this ∩ other, restricted to [max(mins), min(maxes)].
    void intersect_with(const DominanceSet& other);

    /// Visits members from the highest position down; stops when `visit`
    /// returns false.
    template <typename Visit>
    void for_each_descending(Visit&& visit) const
    {
        if (empty()) {
            return;
        }
        for (std::size_t w = max_ / 64 + 1; w-- > min_ / 64;) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                const auto top = 63 - std::countl_zero(word);
                if (!visit(w * 64 + static_cast<std::size_t>(top))) {
                    return;
                }
                word &= ~(std::uint64_t{1} << top);
            }
        }
    }

    std::vector<std::size_t> to_vector() const;

    friend bool operator==(const DominanceSet& a, const DominanceSet& b) noexcept;

private:
    void recompute_bounds(std::size_t lo, std::size_t hi) noexcept;

    std::vector<std::uint64_t> words_;
    std::size_t capacity_ = 0;
    std::size_t min_ = npos;
    std::size_t max_ = npos;
};

} // namespace ndsort

#endif
