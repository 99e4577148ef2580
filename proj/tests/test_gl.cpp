#include <set>

#include "doctest.h"

#include "helpers.hpp"

using namespace brpic;
using namespace brpic::testing;

TEST_CASE("gl_order formula") {
    CHECK(gl_order(PrimeField(2), 1) == 1);
    CHECK(gl_order(PrimeField(2), 2) == 6);
    CHECK(gl_order(PrimeField(2), 3) == 168);
    CHECK(gl_order(PrimeField(3), 3) == 11232);
    CHECK(gl_order(PrimeField(2), 5) == 9999360);
    CHECK(gl_order(PrimeField(5), 3) == 1488000);
}

TEST_CASE("enumeration yields each invertible matrix exactly once") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {2, 3}, {3, 3}}) {
        PrimeField f(p);
        std::set<std::uint64_t> seen;
        std::uint64_t prev = 0;
        bool first = true;
        std::uint64_t count = 0;
        gl_enumerate(f, n, [&](const FpMatrix& m) {
            ++count;
            CHECK(is_invertible(m));
            auto w = m.pack_word();
            REQUIRE(w.has_value());
            CHECK(seen.insert(*w).second);
            // ascending row-major radix-p order
            std::uint64_t code = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) code = code * p + m.at(i, j);
            if (!first) CHECK(code > prev);
            prev = code;
            first = false;
        });
        CHECK(BigInt(count) == gl_order(f, n));
    }
}

TEST_CASE("partitions cover the stream disjointly for every worker count") {
    PrimeField f(3);
    const int n = 2;
    std::set<std::uint64_t> whole;
    gl_enumerate(f, n, [&](const FpMatrix& m) { whole.insert(*m.pack_word()); });
    for (int w : {1, 2, 3, 5, 8}) {
        std::set<std::uint64_t> merged;
        std::uint64_t total = 0;
        for (const auto& part : gl_partitions(f, n, w)) {
            gl_enumerate_range(f, n, part.lo, part.hi, [&](const FpMatrix& m) {
                ++total;
                CHECK(merged.insert(*m.pack_word()).second);  // disjoint
            });
        }
        CHECK(merged == whole);
        CHECK(BigInt(total) == gl_order(f, n));
    }
}

TEST_CASE("size guard rejects infeasible sweeps") {
    CHECK_THROWS_AS(gl_enumerate(PrimeField(3), 5, [](const FpMatrix&) {}), SizeGuardExceeded);
    CHECK_THROWS_AS(gl_collect(PrimeField(7), 3), SizeGuardExceeded);
    // but an explicit override admits them
    std::uint64_t count = 0;
    gl_enumerate(PrimeField(2), 3, [&](const FpMatrix&) { ++count; }, 200);
    CHECK(count == 168);
}
