#pragma once

#include "brpic/orders.hpp"

namespace brpic {

// Lie algebra over F_p (p > 3) given by structure constants
// [e_i, e_j] = sum_k c[i][j][k] e_k. Antisymmetry and the Jacobi identity are
// verified at construction.
class LieAlgebraFp {
public:
    struct BracketTerm { int k; std::int64_t c; };

    // brackets[i][j] may be populated on i < j only; the antisymmetric half
    // fills in automatically.
    LieAlgebraFp(PrimeField field, int dim,
                 const std::map<std::pair<int, int>, std::vector<BracketTerm>>& brackets);

    const PrimeField& field() const noexcept { return field_; }
    int dim() const noexcept { return dim_; }

    Residue structure(int i, int j, int k) const { return c_[index(i, j, k)]; }

    FpVector bracket(const FpVector& a, const FpVector& b) const;

    bool is_abelian() const noexcept;

private:
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(k);
    }
    void verify_jacobi() const;

    PrimeField field_;
    int dim_;
    std::vector<Residue> c_;
};

// Invariant symmetric bilinear form on a Lie algebra; invariance
// ([a,b],c) = (a,[b,c]) is checked on all basis triples.
struct MetricForm {
    MetricForm(const LieAlgebraFp& g, FpMatrix b);

    FpMatrix b;
};

// Matrix of ad(e_i) : x -> [e_i, x].
FpMatrix ad_matrix(const LieAlgebraFp& g, int i);

// Killing form (a, b) = Tr(ad(a) ad(b)) mod p.
MetricForm killing_form(const LieAlgebraFp& g);

// The class omega = omega_alt + omega_sym on the underlying V_dim:
// alt coefficients ([e_i, e_j], e_k) on i < j < k, sym coefficients read off
// B directly (B is stored symmetric, so no normalization constants enter).
H3Class omega_from_metric(const LieAlgebraFp& g, const MetricForm& metric);

// Stabilizer of omega^g by brute force plus the Brauer-Picard order; requires
// the alternating part to be non-degenerate (equivalently g = [g, g] and the
// form non-degenerate).
BrPicReport autm_stab_report(const LieAlgebraFp& g, const MetricForm& metric,
                             const SearchOptions& opts = {});

// |Aut_m(g)| by direct sweep: automorphisms of the bracket that preserve the
// bilinear form. Stab(omega^g) is order-consistent with this; note that the
// display normalization of omega_sym reads B off coefficient-by-coefficient,
// so the two subgroups of GL are conjugate rather than equal when B mixes
// diagonal and off-diagonal entries.
BigInt metric_automorphism_order(const LieAlgebraFp& g, const MetricForm& metric,
                                 const SearchOptions& opts = {});

}  // namespace brpic
