#include "brpic/matrix.hpp"

#include <bit>

namespace brpic {

FpMatrix FpMatrix::identity(PrimeField field, int n) {
    FpMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set_residue(i, i, 1 % field.p());
    return m;
}

FpMatrix FpMatrix::from_rows(PrimeField field,
                             std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    FpMatrix m(field, r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw DimensionMismatch("ragged row in matrix literal");
        int j = 0;
        for (auto x : row) m.set(i, j++, x);
        ++i;
    }
    return m;
}

int FpMatrix::bits_per_entry(const PrimeField& field) noexcept {
    return std::bit_width(field.p() - 1);
}

std::optional<std::uint64_t> FpMatrix::pack_word() const noexcept {
    int bits = bits_per_entry(field_);
    if (!square() || bits * rows_ * cols_ > 64) return std::nullopt;
    std::uint64_t w = 0;
    int shift = 0;
    for (Residue x : e_) {
        w |= static_cast<std::uint64_t>(x) << shift;
        shift += bits;
    }
    return w;
}

FpMatrix FpMatrix::unpack_word(PrimeField field, int n, std::uint64_t word) {
    int bits = bits_per_entry(field);
    std::uint64_t mask = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
    FpMatrix m(field, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.set_residue(i, j, static_cast<Residue>(word & mask));
            word >>= bits;
        }
    return m;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    const PrimeField& f = a.field();
    FpMatrix r(f, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < a.cols(); ++k)
                acc += static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j);
            r.set_residue(i, j, static_cast<Residue>(acc % f.p()));
        }
    return r;
}

FpVector apply(const FpMatrix& m, const FpVector& v) {
    require_same_field(m.field(), v.field());
    if (m.cols() != v.dim()) throw DimensionMismatch("matrix-vector shape mismatch");
    const PrimeField& f = m.field();
    FpVector r(f, m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < m.cols(); ++j)
            acc += static_cast<std::uint64_t>(m.at(i, j)) * v[j];
        r.set(i, static_cast<std::int64_t>(acc % f.p()));
    }
    return r;
}

namespace {

// Row echelon elimination in place; returns pivot columns.
std::vector<int> echelonize(FpMatrix& m) {
    const PrimeField& f = m.field();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col)) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) {
                Residue t = m.at(row, j);
                m.set_residue(row, j, m.at(pr, j));
                m.set_residue(pr, j, t);
            }
        Residue s = f.inv(m.at(row, col));
        for (int j = 0; j < m.cols(); ++j) m.set_residue(row, j, f.mul(s, m.at(row, j)));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            Residue c = m.at(i, col);
            if (!c) continue;
            for (int j = 0; j < m.cols(); ++j)
                m.set_residue(i, j, f.sub(m.at(i, j), f.mul(c, m.at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

FpMatrix mat_inverse(const FpMatrix& a) {
    if (!a.square()) throw DimensionMismatch("inverse of non-square matrix");
    const PrimeField& f = a.field();
    int n = a.rows();
    FpMatrix aug(f, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set_residue(i, j, a.at(i, j));
        aug.set_residue(i, n + i, 1 % f.p());
    }
    auto pivots = echelonize(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw Singular("matrix is singular");
    FpMatrix inv(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.set_residue(i, j, aug.at(i, n + j));
    return inv;
}

FpMatrix transpose(const FpMatrix& a) {
    FpMatrix t(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t.set_residue(j, i, a.at(i, j));
    return t;
}

Residue det(const FpMatrix& a) {
    if (!a.square()) throw DimensionMismatch("determinant of non-square matrix");
    const PrimeField& f = a.field();
    FpMatrix m = a;
    int n = a.rows();
    Residue d = 1 % f.p();
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int i = col; i < n; ++i)
            if (m.at(i, col)) { pr = i; break; }
        if (pr < 0) return 0;
        if (pr != col) {
            for (int j = 0; j < n; ++j) {
                Residue t = m.at(col, j);
                m.set_residue(col, j, m.at(pr, j));
                m.set_residue(pr, j, t);
            }
            d = f.neg(d);
        }
        d = f.mul(d, m.at(col, col));
        Residue s = f.inv(m.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            Residue c = f.mul(s, m.at(i, col));
            if (!c) continue;
            for (int j = col; j < n; ++j)
                m.set_residue(i, j, f.sub(m.at(i, j), f.mul(c, m.at(col, j))));
        }
    }
    return d;
}

int rank(const FpMatrix& a) {
    FpMatrix m = a;
    return static_cast<int>(echelonize(m).size());
}

bool is_invertible(const FpMatrix& a) {
    return a.square() && rank(a) == a.rows();
}

std::vector<FpVector> kernel_basis(const FpMatrix& a) {
    const PrimeField& f = a.field();
    FpMatrix m = a;
    auto pivots = echelonize(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<FpVector> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        FpVector v(f, a.cols());
        v.set(free, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v.set(pivots[r], -static_cast<std::int64_t>(m.at(static_cast<int>(r), free)));
        basis.push_back(v);
    }
    return basis;
}

}  // namespace brpic
