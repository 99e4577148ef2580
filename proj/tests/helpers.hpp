#pragma once

#include <random>

#include "brpic/gl.hpp"
#include "brpic/h3.hpp"

// Shared test utilities. The oracle functions here are deliberately
// independent re-derivations (naive loops, pointwise evaluation); they must
// not call the implementation paths they check.

namespace brpic::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Residue rand_residue(std::mt19937_64& g, const PrimeField& f) {
    return static_cast<Residue>(g() % f.p());
}

inline FpVector rand_vector(std::mt19937_64& g, const PrimeField& f, int n) {
    FpVector v(f, n);
    for (int i = 0; i < n; ++i) v.set(i, rand_residue(g, f));
    return v;
}

inline FpMatrix rand_matrix(std::mt19937_64& g, const PrimeField& f, int rows, int cols) {
    FpMatrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, rand_residue(g, f));
    return m;
}

inline FpMatrix rand_invertible(std::mt19937_64& g, const PrimeField& f, int n) {
    while (true) {
        FpMatrix m = rand_matrix(g, f, n, n);
        if (is_invertible(m)) return m;
    }
}

// Schoolbook product, written independently of mat_mul.
inline FpMatrix naive_mul(const FpMatrix& a, const FpMatrix& b) {
    const PrimeField& f = a.field();
    FpMatrix r(f, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            std::int64_t acc = 0;
            for (int k = 0; k < a.cols(); ++k)
                acc += static_cast<std::int64_t>(a.at(i, k)) * static_cast<std::int64_t>(b.at(k, j));
            r.set(i, j, acc);
        }
    return r;
}

inline WedgeForm rand_wedge(std::mt19937_64& g, const PrimeField& f, int n, int deg) {
    WedgeForm w(f, n, deg);
    std::vector<int> idx(static_cast<std::size_t>(deg));
    for (int t = 0; t < 2 * n; ++t) {
        bool distinct = true;
        for (int d = 0; d < deg; ++d) idx[static_cast<std::size_t>(d)] = static_cast<int>(g() % n);
        for (int a = 0; a < deg && distinct; ++a)
            for (int b = a + 1; b < deg; ++b)
                if (idx[static_cast<std::size_t>(a)] == idx[static_cast<std::size_t>(b)]) distinct = false;
        if (distinct) w.add_term(idx, rand_residue(g, f));
    }
    return w;
}

inline SymForm rand_sym(std::mt19937_64& g, const PrimeField& f, int n, int deg) {
    SymForm s(f, n, deg);
    std::vector<int> idx(static_cast<std::size_t>(deg));
    for (int t = 0; t < 2 * n; ++t) {
        for (int d = 0; d < deg; ++d) idx[static_cast<std::size_t>(d)] = static_cast<int>(g() % n);
        s.add_term(idx, rand_residue(g, f));
    }
    return s;
}

inline H3Class rand_h3(std::mt19937_64& g, const PrimeField& f, int n) {
    if (f.p() == 2) return H3Class::even(sym3_reduce(rand_sym(g, f, n, 3)));
    return H3Class::odd(rand_wedge(g, f, n, 3), rand_sym(g, f, n, 2));
}

}  // namespace brpic::testing
