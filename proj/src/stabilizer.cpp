#include "brpic/stabilizer.hpp"

#include <array>
#include <bit>
#include <cstdlib>
#include <thread>
#include <unordered_set>

namespace brpic {

bool stabilizes(const FpMatrix& g, const H3Class& omega) {
    require_same_field(g.field(), omega.field());
    if (!g.square() || g.rows() != omega.dim())
        throw DimensionMismatch("matrix dimension does not match the class");
    return pullback(g, omega) == omega;
}

int resolve_worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BRPIC_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0 && w <= 256) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Dense membership test for odd p: recomputes the pullback coefficients of
// omega along the candidate and compares, alt part first (it is the cheap
// discriminator: for n = 3 it is just det).
class OddTester {
public:
    explicit OddTester(const H3Class& omega)
        : f_(omega.field()), n_(omega.dim()) {
        for (const auto& [idx, c] : omega.alt().terms())
            alt_src_.push_back({idx[0], idx[1], idx[2], c});
        for (const auto& [idx, c] : omega.sym().terms())
            sym_src_.push_back({idx[0], idx[1], c});
        int t = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                for (int k = j + 1; k < n_; ++k) {
                    triples_.push_back({i, j, k});
                    alt_target_.push_back(0);
                    ++t;
                }
        for (std::size_t s = 0; s < alt_src_.size(); ++s) {
            const auto& a = alt_src_[s];
            for (std::size_t r = 0; r < triples_.size(); ++r)
                if (triples_[r][0] == a.i && triples_[r][1] == a.j && triples_[r][2] == a.k)
                    alt_target_[r] = a.c;
        }
        sym_target_.assign(static_cast<std::size_t>(n_) * n_, 0);
        for (const auto& s : sym_src_)
            sym_target_[static_cast<std::size_t>(s.i) * n_ + s.j] = s.c;
    }

    bool test(const FpMatrix& g) const {
        const std::uint32_t p = f_.p();
        for (std::size_t r = 0; r < triples_.size(); ++r) {
            const auto& tj = triples_[r];
            std::uint64_t acc = 0;
            for (const auto& a : alt_src_) {
                // 3x3 minor of g on rows (a.i, a.j, a.k), columns tj
                std::uint64_t m00 = g.at(a.i, tj[0]), m01 = g.at(a.i, tj[1]), m02 = g.at(a.i, tj[2]);
                std::uint64_t m10 = g.at(a.j, tj[0]), m11 = g.at(a.j, tj[1]), m12 = g.at(a.j, tj[2]);
                std::uint64_t m20 = g.at(a.k, tj[0]), m21 = g.at(a.k, tj[1]), m22 = g.at(a.k, tj[2]);
                std::uint64_t pos = m00 * ((m11 * m22) % p) + m01 * ((m12 * m20) % p) +
                                    m02 * ((m10 * m21) % p);
                std::uint64_t neg = m00 * ((m12 * m21) % p) + m01 * ((m10 * m22) % p) +
                                    m02 * ((m11 * m20) % p);
                acc += a.c * ((pos + 3ull * p * p - neg) % p);
            }
            if (acc % p != alt_target_[r]) return false;
        }
        std::array<std::uint32_t, 64> buf{};
        for (const auto& s : sym_src_)
            for (int a = 0; a < n_; ++a) {
                Residue gia = g.at(s.i, a);
                if (!gia) continue;
                for (int b = 0; b < n_; ++b) {
                    Residue t = f_.mul(s.c, f_.mul(gia, g.at(s.j, b)));
                    if (!t) continue;
                    std::size_t key = (a <= b)
                                          ? static_cast<std::size_t>(a) * n_ + b
                                          : static_cast<std::size_t>(b) * n_ + a;
                    buf[key] = f_.add(buf[key], t);
                }
            }
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j) {
                std::size_t key = static_cast<std::size_t>(i) * n_ + j;
                if (buf[key] != sym_target_[key]) return false;
            }
        return true;
    }

private:
    struct Alt { int i, j, k; Residue c; };
    struct Sym { int i, j; Residue c; };

    PrimeField f_;
    int n_;
    std::vector<Alt> alt_src_;
    std::vector<Sym> sym_src_;
    std::vector<std::array<int, 3>> triples_;
    std::vector<Residue> alt_target_;
    std::vector<Residue> sym_target_;
};

// Membership test for p = 2 through the evaluation function
// f(v) = omega(v, v, v): classes are determined by f, the pullback along g
// turns f into f o g, so g stabilizes omega iff f(g v) = f(v) for all v.
// It suffices to check the vectors with f(v) = 1 (g is a bijection).
// Cross-checked against the substitution path in the test suite.
class EvalMaskTester {
public:
    explicit EvalMaskTester(const H3Class& omega) : n_(omega.dim()) {
        const PrimeField& f = omega.field();
        const SymForm& rep = omega.coset().representative();
        for (std::uint32_t v = 0; v < (1u << n_); ++v) {
            FpVector x(f, n_);
            for (int i = 0; i < n_; ++i) x.set(i, (v >> i) & 1);
            if (rep.evaluate(x)) {
                mask_ |= 1ull << v;
                ones_.push_back(v);
            }
        }
    }

    bool test(const FpMatrix& g) const {
        std::array<std::uint32_t, 8> rows{};
        for (int i = 0; i < n_; ++i) {
            std::uint32_t r = 0;
            for (int j = 0; j < n_; ++j) r |= g.at(i, j) << j;
            rows[static_cast<std::size_t>(i)] = r;
        }
        for (std::uint32_t v : ones_) {
            std::uint32_t gv = 0;
            for (int i = 0; i < n_; ++i)
                gv |= static_cast<std::uint32_t>(
                          std::popcount(rows[static_cast<std::size_t>(i)] & v) & 1)
                      << i;
            if (!(mask_ >> gv & 1)) return false;
        }
        return true;
    }

private:
    int n_;
    std::uint64_t mask_ = 0;
    std::vector<std::uint32_t> ones_;
};

template <class Tester>
void sweep_partition(const H3Class& omega, const Tester& tester, RowRange range,
                     bool retain, std::size_t cap, std::uint64_t& count,
                     std::vector<std::uint64_t>& sample) {
    count = 0;
    gl_enumerate_range(omega.field(), omega.dim(), range.lo, range.hi,
                       [&](const FpMatrix& g) {
                           if (!tester.test(g)) return;
                           ++count;
                           if (retain && sample.size() < cap)
                               if (auto w = g.pack_word()) sample.push_back(*w);
                       });
}

}  // namespace

StabilizerReport brute_force_stabilizer(const H3Class& omega, const SearchOptions& opts) {
    const PrimeField& f = omega.field();
    const int n = omega.dim();
    BigInt total = gl_order(f, n);
    if (total > BigInt(opts.max_group_order))
        throw SizeGuardExceeded("|GL_" + std::to_string(n) + "(F_" + std::to_string(f.p()) +
                                ")| = " + total.str() + " exceeds the brute-force guard " +
                                std::to_string(opts.max_group_order) +
                                "; raise it explicitly or use the closure method");

    const int workers = resolve_worker_count(opts.workers);
    auto parts = gl_partitions(f, n, workers);
    std::vector<std::uint64_t> counts(parts.size(), 0);
    std::vector<std::vector<std::uint64_t>> samples(parts.size());

    auto run = [&](std::size_t k) {
        if (f.p() == 2 && n <= 6) {
            EvalMaskTester tester(omega);
            sweep_partition(omega, tester, parts[k], opts.retain_samples, opts.sample_cap,
                            counts[k], samples[k]);
        } else if (f.p() != 2) {
            OddTester tester(omega);
            sweep_partition(omega, tester, parts[k], opts.retain_samples, opts.sample_cap,
                            counts[k], samples[k]);
        } else {
            // p = 2 beyond the mask width: fall back to the definitional test
            struct SlowTester {
                const H3Class& w;
                bool test(const FpMatrix& g) const { return pullback(g, w) == w; }
            } tester{omega};
            sweep_partition(omega, tester, parts[k], opts.retain_samples, opts.sample_cap,
                            counts[k], samples[k]);
        }
    };

    if (parts.size() == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(parts.size());
        for (std::size_t k = 0; k < parts.size(); ++k) pool.emplace_back(run, k);
        for (auto& t : pool) t.join();
    }

    StabilizerReport report;
    report.method = StabMethod::brute_force;
    for (auto c : counts) report.order += c;
    if (opts.retain_samples) {
        // Partition ranges are ascending, so concatenation in partition order
        // is the global stream order; the merged prefix is worker-independent.
        for (const auto& s : samples) {
            for (auto w : s) {
                if (report.element_sample.size() >= opts.sample_cap) break;
                report.element_sample.push_back(w);
            }
            if (report.element_sample.size() >= opts.sample_cap) break;
        }
    }
    report.named_match = find_named_match(report.order, f.p(), n);
    return report;
}

// ---------------------------------------------------------------------------
// Generator closure

namespace {

// Open-addressing set of packed matrix words; ~0 is free (unreachable for
// entry payloads of at most 63 bits).
class FlatSet64 {
public:
    explicit FlatSet64(std::size_t guard_bytes) : guard_(guard_bytes) { rehash(1 << 16); }

    bool insert(std::uint64_t k) {
        if (count_ * 5 >= slots_.size() * 3) rehash(slots_.size() * 2);
        std::size_t i = probe(k);
        if (slots_[i] == k) return false;
        slots_[i] = k;
        ++count_;
        return true;
    }

    std::size_t size() const noexcept { return count_; }
    std::size_t memory_bytes() const noexcept { return slots_.size() * sizeof(std::uint64_t); }

private:
    static constexpr std::uint64_t kFree = ~0ull;

    std::size_t probe(std::uint64_t k) const {
        std::uint64_t h = k * 0x9e3779b97f4a7c15ull;
        std::size_t mask = slots_.size() - 1;
        std::size_t i = static_cast<std::size_t>(h >> 17) & mask;
        while (slots_[i] != kFree && slots_[i] != k) i = (i + 1) & mask;
        return i;
    }

    void rehash(std::size_t new_size) {
        if (new_size * sizeof(std::uint64_t) > guard_)
            throw MemoryGuardExceeded("closure hash set would exceed the memory guard (" +
                                      std::to_string(guard_) + " bytes)");
        std::vector<std::uint64_t> old = std::move(slots_);
        slots_.assign(new_size, kFree);
        for (std::uint64_t k : old)
            if (k != kFree) slots_[probe(k)] = k;
    }

    std::size_t guard_;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> slots_;
};

void mat_mul_into(const FpMatrix& a, const FpMatrix& b, FpMatrix& out) {
    const PrimeField& f = a.field();
    const int n = a.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < n; ++k)
                acc += static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j);
            out.set_residue(i, j, static_cast<Residue>(acc % f.p()));
        }
}

struct Key192 {
    std::array<std::uint64_t, 3> w;
    bool operator==(const Key192& o) const noexcept { return w == o.w; }
};

struct Key192Hash {
    std::size_t operator()(const Key192& k) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t x : k.w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

Key192 pack192(const FpMatrix& m) {
    Key192 k{{0, 0, 0}};
    int pos = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j, ++pos)
            k.w[static_cast<std::size_t>(pos / 16)] |=
                static_cast<std::uint64_t>(m.at(i, j)) << (4 * (pos % 16));
    return k;
}

}  // namespace

StabilizerReport closure(const std::vector<FpMatrix>& gens, const std::optional<H3Class>& omega,
                         const ClosureOptions& opts) {
    StabilizerReport report;
    report.method = StabMethod::closure;
    report.generators_checked = gens;
    if (gens.empty()) {
        report.order = 1;
        return report;
    }
    const PrimeField& f = gens.front().field();
    const int n = gens.front().rows();
    for (const auto& g : gens) {
        if (g.field() != f || !g.square() || g.rows() != n)
            throw DimensionMismatch("generators must share one square shape");
        if (!is_invertible(g)) throw GeneratorNotInvertible("generator is singular");
        if (omega && !stabilizes(g, *omega))
            throw GeneratorNotStabilizing("generator does not stabilize the given class");
    }

    const int bits = FpMatrix::bits_per_entry(f);
    FpMatrix cur(f, n, n), prod(f, n, n);

    if (bits * n * n <= 63) {
        FlatSet64 seen(opts.memory_guard_bytes);
        std::vector<std::uint64_t> queue;
        auto check_queue_guard = [&]() {
            if ((queue.capacity() + 1) * sizeof(std::uint64_t) + seen.memory_bytes() >
                opts.memory_guard_bytes)
                throw MemoryGuardExceeded("closure frontier would exceed the memory guard");
        };
        std::uint64_t id = *FpMatrix::identity(f, n).pack_word();
        seen.insert(id);
        queue.push_back(id);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            cur = FpMatrix::unpack_word(f, n, queue[head]);
            for (const auto& g : gens) {
                mat_mul_into(cur, g, prod);
                std::uint64_t k = *prod.pack_word();
                if (seen.insert(k)) {
                    check_queue_guard();
                    queue.push_back(k);
                }
            }
        }
        report.order = seen.size();
        if (opts.retain_samples)
            report.element_sample.assign(queue.begin(),
                                         queue.begin() + static_cast<std::ptrdiff_t>(std::min(
                                                             queue.size(), opts.sample_cap)));
    } else {
        if (n > 6) throw SizeGuardExceeded("closure packing supports n <= 6");
        std::unordered_set<Key192, Key192Hash> seen;
        std::vector<FpMatrix> queue;
        seen.insert(pack192(FpMatrix::identity(f, n)));
        queue.push_back(FpMatrix::identity(f, n));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const auto& g : gens) {
                mat_mul_into(queue[head], g, prod);
                if (seen.insert(pack192(prod)).second) {
                    if (seen.size() * 56 > opts.memory_guard_bytes)
                        throw MemoryGuardExceeded("closure set would exceed the memory guard");
                    queue.push_back(prod);
                }
            }
        }
        report.order = seen.size();
    }
    report.named_match = find_named_match(report.order, f.p(), n);
    return report;
}

}  // namespace brpic
