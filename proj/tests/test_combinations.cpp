#include <doctest.h>

#include <set>

#include "dyadic/combinations.hpp"

using namespace dyadic;

TEST_CASE("binomial")
{
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(25, 12) == 5200300);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(67, 33) == 14226520737620288370ULL);
    CHECK(binomial(200, 100) == binomial_saturated);

    BinomialTable t(70);
    for (std::size_t n = 0; n <= 70; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(t(n, k) == binomial(n, k));
}

TEST_CASE("revolving door: R(5,3) listing")
{
    RevolvingDoor rd(5, 3);
    std::vector<std::vector<std::uint32_t>> expected = {
        {0, 1, 2}, {0, 2, 3}, {1, 2, 3}, {0, 1, 3}, {0, 3, 4},
        {1, 3, 4}, {2, 3, 4}, {0, 2, 4}, {1, 2, 4}, {0, 1, 4}};
    REQUIRE(rd.size() == 10);
    for (std::uint64_t r = 0; r < 10; ++r)
        CHECK(rd.unrank(r) == expected[r]);
}

TEST_CASE("revolving door: cursor steps are single swaps matching unrank")
{
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            RevolvingDoor rd(n, k);
            std::set<std::vector<std::uint32_t>> seen;
            for (std::uint64_t start = 0; start < rd.size(); start += 1 + rd.size() / 3) {
                auto cur = rd.cursor_at(start);
                for (std::uint64_t r = start; r + 1 < rd.size(); ++r) {
                    std::vector<std::uint32_t> before(cur.elements().begin(), cur.elements().end());
                    auto [out, in] = cur.next();
                    std::vector<std::uint32_t> after(cur.elements().begin(), cur.elements().end());
                    CHECK(after == rd.unrank(r + 1));
                    CHECK(std::find(before.begin(), before.end(), out) != before.end());
                    CHECK(std::find(before.begin(), before.end(), in) == before.end());
                    CHECK(std::find(after.begin(), after.end(), in) != after.end());
                    CHECK(std::find(after.begin(), after.end(), out) == after.end());
                }
            }
            for (std::uint64_t r = 0; r < rd.size(); ++r)
                seen.insert(rd.unrank(r));
            CHECK(seen.size() == rd.size());
        }
    }
}

TEST_CASE("revolving door: rejects out-of-range ranks")
{
    RevolvingDoor rd(6, 2);
    CHECK_THROWS(rd.unrank(15));
    CHECK_THROWS(RevolvingDoor(3, 4));
}
