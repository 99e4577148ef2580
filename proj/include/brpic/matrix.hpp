#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "brpic/field.hpp"
#include "brpic/vec.hpp"

namespace brpic {

// Dense matrix over F_p with canonical entries. Square instances are the
// carriers of GL_n(F_p) elements; rectangular ones only feed kernel/rank
// computations.
class FpMatrix {
public:
    FpMatrix(PrimeField field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

    static FpMatrix identity(PrimeField field, int n);

    // Row-major literal construction; entries are reduced mod p.
    static FpMatrix from_rows(PrimeField field,
                              std::initializer_list<std::initializer_list<std::int64_t>> rows);

    const PrimeField& field() const noexcept { return field_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Residue at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, std::int64_t x) { e_[idx(i, j)] = field_.reduce(x); }
    void set_residue(int i, int j, Residue x) { e_[idx(i, j)] = x; }

    bool operator==(const FpMatrix& o) const noexcept {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const FpMatrix& o) const noexcept { return !(*this == o); }

    // Packs all entries into one 64-bit word, ceil(log2 p) bits per entry in
    // row-major order, or nothing if they do not fit. This is the encoding the
    // hash-set closure and element samples use.
    std::optional<std::uint64_t> pack_word() const noexcept;
    static FpMatrix unpack_word(PrimeField field, int n, std::uint64_t word);
    static int bits_per_entry(const PrimeField& field) noexcept;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    PrimeField field_;
    int rows_, cols_;
    std::vector<Residue> e_;
};

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
inline FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) { return mat_mul(a, b); }

FpVector apply(const FpMatrix& m, const FpVector& v);

// Gauss-Jordan inverse; throws Singular when no inverse exists.
FpMatrix mat_inverse(const FpMatrix& a);

FpMatrix transpose(const FpMatrix& a);
Residue det(const FpMatrix& a);
int rank(const FpMatrix& a);
bool is_invertible(const FpMatrix& a);

// Basis of {v : a v = 0}, from the reduced row echelon form; deterministic.
// Empty result means the map is injective.
std::vector<FpVector> kernel_basis(const FpMatrix& a);

}  // namespace brpic
