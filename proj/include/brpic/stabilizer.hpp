#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brpic/gl.hpp"
#include "brpic/h3.hpp"
#include "brpic/zoo.hpp"

namespace brpic {

// Membership in Stab(omega) < GL_n(F_p): true iff omega o (g x g x g) equals
// omega in the canonical model. This is elementwise equivalent to
// gl_act_h3(g, omega) == omega (each condition is the other at g^{-1}, and
// both cut out the same subgroup).
bool stabilizes(const FpMatrix& g, const H3Class& omega);

enum class StabMethod { brute_force, closure, membership_only };

struct StabilizerReport {
    BigInt order{0};
    StabMethod method = StabMethod::membership_only;
    std::vector<FpMatrix> generators_checked;
    std::optional<ZooMatch> named_match;  // order-consistent label, if any
    // First elements in deterministic stream/BFS order, packed into 64-bit
    // words; retained only on request and only when the packing fits.
    std::vector<std::uint64_t> element_sample;
    std::string enumeration_order = kEnumOrderId;
};

struct SearchOptions {
    int workers = 0;  // 0: BRPIC_WORKERS env var, then hardware concurrency
    std::uint64_t max_group_order = kDefaultEnumGuard;
    bool retain_samples = false;
    std::size_t sample_cap = 10'000;
};

// Exact |Stab(omega)| by a full deterministic sweep of GL_n(F_p). The sweep
// partitions into disjoint first-row ranges across workers; the result is
// identical for every worker count.
StabilizerReport brute_force_stabilizer(const H3Class& omega, const SearchOptions& opts = {});

struct ClosureOptions {
    std::size_t memory_guard_bytes = 200'000'000;
    bool retain_samples = false;
    std::size_t sample_cap = 10'000;
};

// Order of <gens> by breadth-first closure over a hash set of packed
// encodings. When omega is given, every generator must stabilize it first.
StabilizerReport closure(const std::vector<FpMatrix>& gens,
                         const std::optional<H3Class>& omega = std::nullopt,
                         const ClosureOptions& opts = {});

int resolve_worker_count(int requested);

}  // namespace brpic
