#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "brpic/matrix.hpp"

namespace brpic {

using BigInt = boost::multiprecision::cpp_int;

// |GL_n(F_p)| = prod_{i=0}^{n-1} (p^n - p^i).
BigInt gl_order(const PrimeField& field, int n);

// Default ceiling on |GL_n(F_p)| for exhaustive sweeps.
inline constexpr std::uint64_t kDefaultEnumGuard = 20'000'000;

// Identifier of the deterministic enumeration order, quoted in reports so
// reruns are comparable.
inline constexpr const char* kEnumOrderId = "row-major-radix-p/v1";

// First-row code range [lo, hi); the enumeration of GL splits into disjoint
// sub-streams along these.
struct RowRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

// Partitions the first-row code space [1, p^n) into `workers` near-equal
// ranges. Every nonzero first row extends to the same number of invertible
// matrices, so the ranges carry near-equal work.
std::vector<RowRange> gl_partitions(const PrimeField& field, int n, int workers);

namespace detail {

inline std::uint64_t pow_u64(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace detail

// Core sweep: visits every invertible n-by-n matrix over F_p whose first-row
// code lies in [lo, hi), in increasing row-major radix-p order (entries read
// row by row are base-p digits, leftmost most significant). Singular
// candidates are pruned by an incremental rank check: as soon as a row prefix
// becomes dependent, the whole block of completions is skipped.
//
// The visitor receives a const FpMatrix& that is only valid during the call.
template <class Visitor>
void gl_enumerate_range(const PrimeField& field, int n, std::uint64_t lo, std::uint64_t hi,
                        Visitor&& visit) {
    constexpr int kMaxN = 8;
    if (n <= 0 || n > kMaxN) throw SizeGuardExceeded("enumeration supports 1 <= n <= 8");
    const std::uint32_t p = field.p();
    const std::uint64_t row_count = detail::pow_u64(p, n);
    if (hi > row_count) hi = row_count;
    if (lo < 1) lo = 1;  // a zero first row is singular
    if (lo >= hi) return;

    std::array<std::array<Residue, kMaxN>, kMaxN> rows{};   // candidate rows
    std::array<std::array<Residue, kMaxN>, kMaxN> ech{};    // normalized echelon copies
    std::array<int, kMaxN> pivot{};
    FpMatrix out(field, n, n);

    auto decode = [&](std::uint64_t c, std::array<Residue, kMaxN>& r) {
        for (int j = n - 1; j >= 0; --j) {
            r[static_cast<std::size_t>(j)] = static_cast<Residue>(c % p);
            c /= p;
        }
    };
    auto inc = [&](std::array<Residue, kMaxN>& r) {
        for (int j = n - 1; j >= 0; --j) {
            if (++r[static_cast<std::size_t>(j)] < p) return;
            r[static_cast<std::size_t>(j)] = 0;
        }
    };
    // Reduces rows[d] against the echelon rows above it. Dependent rows are
    // rejected; independent ones are recorded (normalized) at level d and
    // copied into the output buffer.
    auto try_push = [&](int d) -> bool {
        std::array<Residue, kMaxN> r = rows[static_cast<std::size_t>(d)];
        for (int b = 0; b < d; ++b) {
            Residue c = r[static_cast<std::size_t>(pivot[static_cast<std::size_t>(b)])];
            if (!c) continue;
            const auto& eb = ech[static_cast<std::size_t>(b)];
            for (int j = 0; j < n; ++j)
                r[static_cast<std::size_t>(j)] =
                    field.sub(r[static_cast<std::size_t>(j)],
                              field.mul(c, eb[static_cast<std::size_t>(j)]));
        }
        int pc = -1;
        for (int j = 0; j < n; ++j)
            if (r[static_cast<std::size_t>(j)]) { pc = j; break; }
        if (pc < 0) return false;
        Residue s = field.inv(r[static_cast<std::size_t>(pc)]);
        auto& ed = ech[static_cast<std::size_t>(d)];
        for (int j = 0; j < n; ++j)
            ed[static_cast<std::size_t>(j)] = field.mul(s, r[static_cast<std::size_t>(j)]);
        pivot[static_cast<std::size_t>(d)] = pc;
        const auto& src = rows[static_cast<std::size_t>(d)];
        for (int j = 0; j < n; ++j) out.set_residue(d, j, src[static_cast<std::size_t>(j)]);
        return true;
    };

    auto sweep = [&](auto&& self, int d, std::uint64_t from, std::uint64_t to) -> void {
        auto& row = rows[static_cast<std::size_t>(d)];
        decode(from, row);
        for (std::uint64_t c = from; c < to; ++c, inc(row)) {
            if (!try_push(d)) continue;
            if (d == n - 1)
                visit(static_cast<const FpMatrix&>(out));
            else
                self(self, d + 1, 1, row_count);
        }
    };
    sweep(sweep, 0, lo, hi);
}

// Full deterministic sweep of GL_n(F_p) under the size guard.
template <class Visitor>
void gl_enumerate(const PrimeField& field, int n, Visitor&& visit,
                  std::uint64_t max_order = kDefaultEnumGuard) {
    if (gl_order(field, n) > BigInt(max_order))
        throw SizeGuardExceeded("|GL_" + std::to_string(n) + "(F_" +
                                std::to_string(field.p()) + ")| = " + gl_order(field, n).str() +
                                " exceeds the sweep guard " + std::to_string(max_order));
    gl_enumerate_range(field, n, 1, detail::pow_u64(field.p(), n),
                       std::forward<Visitor>(visit));
}

// Materializes the stream; intended for small groups and tests.
std::vector<FpMatrix> gl_collect(const PrimeField& field, int n,
                                 std::uint64_t max_order = kDefaultEnumGuard);

}  // namespace brpic
