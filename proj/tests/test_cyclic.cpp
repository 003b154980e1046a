#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kneserq/cyclic.hpp"
#include "kneserq/error.hpp"
#include "oracles.hpp"

#include <numeric>
#include <set>

using namespace kq;

namespace {

CyclicSubset from_mask(int n, std::uint32_t mask)
{
    std::vector<int> e;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1u)
            e.push_back(i);
    return CyclicSubset(n, e);
}

ErrorKind kind_of(const std::function<void()> &f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidParams;
}

} // namespace

TEST_CASE("subsets are stored sorted and validated")
{
    CHECK(CyclicSubset(7, {5, 0, 3}).elements() == std::vector<int>{0, 3, 5});
    CHECK(CyclicSubset(7, {3, 0}) == CyclicSubset(7, {0, 3}));
    CHECK(kind_of([] { CyclicSubset(5, {5}); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([] { CyclicSubset(5, {1, 1}); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([] { CyclicSubset(0, {}); }) == ErrorKind::InvalidParams);
    CHECK(CyclicSubset(6, {0, 1}).complement() == CyclicSubset(6, {2, 3, 4, 5}));
}

TEST_CASE("rotate")
{
    CHECK(rotate(CyclicSubset(5, {0, 2}), 1) == CyclicSubset(5, {1, 3}));
    const CyclicSubset s(9, {0, 4, 7});
    CHECK(rotate(s, 0) == s);
    CHECK(rotate(CyclicSubset(7, {0, 3}), 7) == CyclicSubset(7, {0, 3}));
    CHECK(rotate(CyclicSubset(7, {0, 3}), -1) == CyclicSubset(7, {2, 6}));
    CHECK(rotation_offset(CyclicSubset(5, {0, 2}), CyclicSubset(5, {2, 4})) == 2);
    CHECK(rotation_offset(CyclicSubset(5, {0, 2}), CyclicSubset(5, {0, 1})) == -1);
}

TEST_CASE("arcs wrap around")
{
    const Arc a(7, 6, 3);
    CHECK(a.contains(6));
    CHECK(a.contains(0));
    CHECK(a.contains(1));
    CHECK_FALSE(a.contains(2));
    CHECK(a.count(CyclicSubset(7, {0, 3, 6})) == 2);
    CHECK(Arc(7, -1, 2).start == 6);
}

TEST_CASE("r-separation")
{
    CHECK(is_r_separated(CyclicSubset(9, {0, 3, 5}), 2));
    CHECK_FALSE(is_r_separated(CyclicSubset(5, {0, 1}), 2));
    for (int n = 2; n <= 10; ++n)
        for (int i = 0; i < n; ++i)
            for (int r = 1; 2 * r <= n; ++r)
                CHECK(is_r_separated(CyclicSubset(n, {i}), r));
}

TEST_CASE("well-spread examples")
{
    CHECK(is_well_spread(CyclicSubset(5, {0, 2})));
    CHECK_FALSE(is_well_spread(CyclicSubset(6, {0, 1, 2})));
    CHECK(is_well_spread(CyclicSubset(13, {0, 2, 5, 7, 10})));
    CHECK(is_well_spread_dual(CyclicSubset(5, {0, 2})));
    CHECK_FALSE(is_well_spread_dual(CyclicSubset(6, {0, 1, 2})));
    for (int n = 1; n <= 8; ++n) {
        CHECK(is_well_spread(CyclicSubset::empty(n)));
        CHECK(is_well_spread_dual(CyclicSubset::empty(n)));
        CHECK(is_well_spread(CyclicSubset::full(n)));
        CHECK(is_well_spread_dual(CyclicSubset::full(n)));
    }
}

TEST_CASE("well-spread agrees with a bitmask arc scan")
{
    for (int n = 1; n <= 12; ++n)
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            const CyclicSubset s = from_mask(n, m);
            const bool want = oracle::well_spread_mask(n, m);
            REQUIRE(is_well_spread(s) == want);
            REQUIRE(is_well_spread_dual(s) == want);
        }
}

TEST_CASE("well-spread is rotation and complement invariant")
{
    for (int n = 2; n <= 11; ++n)
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            const CyclicSubset s = from_mask(n, m);
            const bool ws = is_well_spread(s);
            REQUIRE(is_well_spread(s.complement()) == ws);
            for (int t = 1; t < n; t += 3) {
                REQUIRE(is_well_spread(rotate(s, t)) == ws);
                REQUIRE(is_r_separated(rotate(s, t), 2) == is_r_separated(s, 2));
            }
        }
}

TEST_CASE("a well-spread set below half is 2-separated, its complement is not")
{
    for (int n = 3; n <= 16; ++n)
        for (int k = 1; 2 * k < n; ++k) {
            if (gcd(n, k) != 1)
                continue;
            const CyclicSubset s = canonical_well_spread(n, k);
            CHECK(is_r_separated(s, 2));
            CHECK_FALSE(is_r_separated(s.complement(), 2));
        }
}

TEST_CASE("canonical generator")
{
    CHECK(canonical_well_spread(13, 5) == CyclicSubset(13, {0, 2, 5, 7, 10}));
    CHECK(canonical_well_spread(5, 2) == CyclicSubset(5, {0, 2}));
    for (int n = 1; n <= 9; ++n)
        CHECK(canonical_well_spread(n, 1) == CyclicSubset(n, {0}));
    CHECK(canonical_well_spread(6, 0) == CyclicSubset::empty(6));
    CHECK(canonical_well_spread(6, 6) == CyclicSubset::full(6));
}

TEST_CASE("well-spread sets are the rotations of the canonical one")
{
    for (int n = 1; n <= 14; ++n) {
        std::vector<std::set<CyclicSubset>> by_size(static_cast<std::size_t>(n) + 1);
        for (std::uint32_t m = 0; m < (1u << n); ++m)
            if (oracle::well_spread_mask(n, m))
                by_size[static_cast<std::size_t>(std::popcount(m))].insert(from_mask(n, m));
        for (int k = 1; k <= n; ++k) {
            std::set<CyclicSubset> rotations;
            for (int t = 0; t < n; ++t)
                rotations.insert(rotate(canonical_well_spread(n, k), t));
            CHECK(rotations == by_size[static_cast<std::size_t>(k)]);
            CHECK(static_cast<int>(rotations.size()) == n / std::gcd(n, k));
        }
    }
}

TEST_CASE("euclidean reduction")
{
    const auto t = euclid_reduce(canonical_well_spread(14, 5));
    REQUIRE_FALSE(t.steps.empty());
    CHECK(t.steps.front().cycle_length == 14);
    CHECK(t.steps.front().set_size == 5);
    CHECK(t.steps.front().quotient == 2);
    CHECK(t.steps.front().remainder == 4);
    CHECK(t.terminal_size == 1);
    CHECK(euclid_reduce(canonical_well_spread(6, 3)).terminal_size == 3);
    CHECK(euclid_reduce(canonical_well_spread(5, 2)).terminal_size == 1);
    CHECK(kind_of([] { euclid_reduce(CyclicSubset(6, {0, 1})); }) == ErrorKind::NotWellSpread);
    CHECK(kind_of([] { euclid_reduce(CyclicSubset(6, {0, 2, 4, 5})); }) == ErrorKind::NotWellSpread);
}

TEST_CASE("reduction steps stay well-spread and end at the gcd")
{
    for (int n = 2; n <= 16; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (int t = 0; t < n; t += 5) {
                const CyclicSubset s = rotate(canonical_well_spread(n, k), t);
                const auto trace = euclid_reduce(s);
                CHECK(trace.terminal_size == std::gcd(n, k));
                int length = n, size = k;
                for (const auto &step : trace.steps) {
                    CHECK(step.cycle_length == length);
                    CHECK(step.set_size == size);
                    CHECK(step.quotient == length / size);
                    CHECK(step.remainder == length % size);
                    CHECK(step.surviving_set.modulus() == size + step.remainder);
                    CHECK(is_well_spread(step.surviving_set));
                    CHECK(step.surviving_set.size() == size);
                    // The next step works on the complement, which holds the r removed gaps.
                    length = step.surviving_set.modulus();
                    size = step.remainder;
                }
            }
}

TEST_CASE("critical parameters")
{
    CHECK(critical_params(13, 5) == CriticalParams{5, 2});
    CHECK(critical_params(7, 2) == CriticalParams{3, 1});
    for (int n = 2; n <= 12; ++n)
        CHECK(critical_params(n, 1) == CriticalParams{n - 1, 1});
    CHECK(kind_of([] { critical_params(12, 4); }) == ErrorKind::NotCoprime);
    for (int n = 2; n <= 40; ++n)
        for (int k = 1; k < n; ++k) {
            if (std::gcd(n, k) != 1)
                continue;
            const auto [a, b] = critical_params(n, k);
            CHECK(static_cast<long long>(a) * k == static_cast<long long>(b) * n - 1);
            CHECK(a < n);
            CHECK(b <= k);
            for (int smaller = 1; smaller < a; ++smaller)
                CHECK((static_cast<long long>(smaller) * k + 1) % n != 0);
        }
}
