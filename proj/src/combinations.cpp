#include "dyadic/combinations.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyadic {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    // Multiplicative form; each partial product C(n-k+i, i) is an integer.
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > binomial_saturated)
            return binomial_saturated;
    }
    return static_cast<std::uint64_t>(r);
}

BinomialTable::BinomialTable(std::size_t n) : rows_(n + 1)
{
    for (std::size_t i = 0; i <= n; ++i) {
        rows_[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j) {
            std::uint64_t a = rows_[i - 1][j - 1], b = rows_[i - 1][j];
            rows_[i][j] = (a > binomial_saturated - b) ? binomial_saturated : a + b;
        }
    }
}

RevolvingDoor::RevolvingDoor(std::size_t n, std::size_t k)
    : n_(n), k_(k), binom_(n), total_(binom_(n, k))
{
    if (k > n)
        throw std::invalid_argument("k exceeds n");
    if (total_ == binomial_saturated)
        throw std::overflow_error("number of subsets exceeds 64 bits");
}

std::vector<std::uint32_t> RevolvingDoor::unrank(std::uint64_t rank) const
{
    if (rank >= total_)
        throw std::out_of_range("rank outside the revolving-door order");
    std::vector<std::uint32_t> picked;
    std::size_t n = n_, k = k_;
    while (k > 0) {
        if (k == n) {
            for (std::size_t i = 0; i < n; ++i)
                picked.push_back(static_cast<std::uint32_t>(i));
            break;
        }
        std::uint64_t without = binom_(n - 1, k);
        if (rank >= without) {
            picked.push_back(static_cast<std::uint32_t>(n - 1));
            rank = binom_(n - 1, k - 1) - 1 - (rank - without);
            --k;
        }
        --n;
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

RevolvingDoor::Cursor RevolvingDoor::cursor_at(std::uint64_t rank) const
{
    Cursor cur;
    cur.k_ = k_;
    cur.c_.assign(k_ + 2, 0);
    auto elems = unrank(rank);
    for (std::size_t i = 0; i < k_; ++i)
        cur.c_[i + 1] = elems[i];
    cur.c_[k_ + 1] = static_cast<std::uint32_t>(n_);
    return cur;
}

// Knuth, TAOCP 7.2.1.3 Algorithm R, steps R3-R5, one visit at a time.
RevolvingDoor::Swap RevolvingDoor::Cursor::next()
{
    auto& c = c_;
    const std::size_t t = k_;
    if (t % 2 == 1) {
        if (c[1] + 1 < c[2]) {
            Swap s{c[1], c[1] + 1};
            ++c[1];
            return s;
        }
    } else if (t > 0 && c[1] > 0) {
        Swap s{c[1], c[1] - 1};
        --c[1];
        return s;
    }

    std::size_t j = 2;
    bool decrease = t % 2 == 1;  // odd t enters at R4, even t at R5
    while (j <= t) {
        if (decrease) {
            // R4: c[j] == c[j-1] + 1
            if (c[j] >= j) {
                Swap s{c[j], static_cast<std::uint32_t>(j - 2)};
                c[j] = c[j - 1];
                c[j - 1] = static_cast<std::uint32_t>(j - 2);
                return s;
            }
            ++j;
            decrease = false;
        } else {
            // R5: c[j-1] == j - 2
            if (c[j] + 1 < c[j + 1]) {
                Swap s{c[j - 1], c[j] + 1};
                c[j - 1] = c[j];
                ++c[j];
                return s;
            }
            ++j;
            decrease = true;
        }
    }
    throw std::logic_error("revolving-door cursor advanced past the last subset");
}

} // namespace dyadic
