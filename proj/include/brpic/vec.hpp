#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "brpic/field.hpp"

namespace brpic {

// Element of V_n = F_p^n with canonical coordinates.
class FpVector {
public:
    FpVector(PrimeField field, int n) : field_(field), c_(static_cast<std::size_t>(n), 0) {}

    FpVector(PrimeField field, std::initializer_list<std::int64_t> coords)
        : field_(field) {
        c_.reserve(coords.size());
        for (auto x : coords) c_.push_back(field_.reduce(x));
    }

    static FpVector basis(PrimeField field, int n, int i) {
        FpVector v(field, n);
        v.set(i, 1);
        return v;
    }

    const PrimeField& field() const noexcept { return field_; }
    int dim() const noexcept { return static_cast<int>(c_.size()); }

    Residue operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    void set(int i, std::int64_t x) { c_[static_cast<std::size_t>(i)] = field_.reduce(x); }

    bool is_zero() const noexcept {
        for (Residue x : c_)
            if (x) return false;
        return true;
    }

    FpVector operator+(const FpVector& o) const {
        require_compatible(o);
        FpVector r(field_, dim());
        for (int i = 0; i < dim(); ++i) r.c_[static_cast<std::size_t>(i)] = field_.add((*this)[i], o[i]);
        return r;
    }

    FpVector scaled(Residue s) const {
        FpVector r(field_, dim());
        for (int i = 0; i < dim(); ++i) r.c_[static_cast<std::size_t>(i)] = field_.mul((*this)[i], s);
        return r;
    }

    bool operator==(const FpVector& o) const noexcept {
        return field_ == o.field_ && c_ == o.c_;
    }
    bool operator!=(const FpVector& o) const noexcept { return !(*this == o); }

    // Coordinates as base-p digits, leftmost most significant. Used for
    // deterministic point enumeration.
    std::uint64_t code() const noexcept {
        std::uint64_t c = 0;
        for (Residue x : c_) c = c * field_.p() + x;
        return c;
    }

    static FpVector from_code(PrimeField field, int n, std::uint64_t code) {
        FpVector v(field, n);
        for (int j = n - 1; j >= 0; --j) {
            v.c_[static_cast<std::size_t>(j)] = static_cast<Residue>(code % field.p());
            code /= field.p();
        }
        return v;
    }

private:
    void require_compatible(const FpVector& o) const {
        require_same_field(field_, o.field_);
        if (dim() != o.dim()) throw DimensionMismatch("vector dimensions differ");
    }

    PrimeField field_;
    std::vector<Residue> c_;
};

// Enumerates all p^n points of V_n in code order and applies fn.
template <class Fn>
void for_each_point(const PrimeField& field, int n, Fn&& fn) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= field.p();
    for (std::uint64_t c = 0; c < total; ++c) fn(FpVector::from_code(field, n, c));
}

}  // namespace brpic
