#include "brpic/gl.hpp"

namespace brpic {

BigInt gl_order(const PrimeField& field, int n) {
    BigInt pn = 1;
    for (int i = 0; i < n; ++i) pn *= field.p();
    BigInt order = 1, pi = 1;
    for (int i = 0; i < n; ++i) {
        order *= pn - pi;
        pi *= field.p();
    }
    return order;
}

std::vector<RowRange> gl_partitions(const PrimeField& field, int n, int workers) {
    if (workers < 1) workers = 1;
    const std::uint64_t row_count = detail::pow_u64(field.p(), n);
    const std::uint64_t span = row_count - 1;  // nonzero rows only
    std::vector<RowRange> parts;
    parts.reserve(static_cast<std::size_t>(workers));
    for (int k = 0; k < workers; ++k) {
        std::uint64_t lo = 1 + span * static_cast<std::uint64_t>(k) / static_cast<std::uint64_t>(workers);
        std::uint64_t hi = 1 + span * static_cast<std::uint64_t>(k + 1) / static_cast<std::uint64_t>(workers);
        parts.push_back({lo, hi});
    }
    return parts;
}

std::vector<FpMatrix> gl_collect(const PrimeField& field, int n, std::uint64_t max_order) {
    std::vector<FpMatrix> out;
    gl_enumerate(field, n, [&](const FpMatrix& m) { out.push_back(m); }, max_order);
    return out;
}

}  // namespace brpic
