#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace dyadic {

inline constexpr std::uint64_t binomial_saturated = std::numeric_limits<std::uint64_t>::max();

// C(n, k); saturates at binomial_saturated instead of overflowing.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Pascal triangle up to row n, saturating like binomial().
class BinomialTable {
public:
    explicit BinomialTable(std::size_t n);
    std::uint64_t operator()(std::size_t n, std::size_t k) const
    {
        return k > n ? 0 : rows_[n][k];
    }

private:
    std::vector<std::vector<std::uint64_t>> rows_;
};

// Revolving-door (minimal change) order of the k-subsets of {0..n-1}:
// R(n,k) = R(n-1,k) followed by reverse(R(n-1,k-1)) with n-1 added.
// Consecutive subsets differ by exactly one element leaving and one entering.
class RevolvingDoor {
public:
    // Requires C(n,k) to fit in 64 bits.
    RevolvingDoor(std::size_t n, std::size_t k);

    std::uint64_t size() const { return total_; }

    // Subset at the given rank, elements ascending.
    std::vector<std::uint32_t> unrank(std::uint64_t rank) const;

    struct Swap {
        std::uint32_t out;
        std::uint32_t in;
    };

    // Cursor over the order starting at an arbitrary rank. next() must not
    // be called at the last rank.
    class Cursor {
    public:
        std::span<const std::uint32_t> elements() const
        {
            return std::span(c_).subspan(1, k_);
        }
        Swap next();

    private:
        friend class RevolvingDoor;
        std::vector<std::uint32_t> c_;  // 1-based, c_[k+1] = n sentinel
        std::size_t k_ = 0;
    };

    Cursor cursor_at(std::uint64_t rank) const;

private:
    std::size_t n_, k_;
    BinomialTable binom_;
    std::uint64_t total_;
};

} // namespace dyadic
