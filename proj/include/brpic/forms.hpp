#pragma once

#include <map>
#include <vector>

#include "brpic/matrix.hpp"
#include "brpic/vec.hpp"

namespace brpic {

// Element of Wedge^k(V_n^*), k in {2, 3}. Coefficients are kept on strictly
// increasing index tuples; adding a term with a permuted tuple folds in the
// permutation sign, and repeated indices vanish.
class WedgeForm {
public:
    WedgeForm(PrimeField field, int n, int degree);

    const PrimeField& field() const noexcept { return field_; }
    int dim() const noexcept { return n_; }
    int degree() const noexcept { return deg_; }

    void add_term(std::vector<int> idx, std::int64_t c);
    Residue coeff(std::vector<int> idx) const;  // sign-adjusted lookup
    const std::map<std::vector<int>, Residue>& terms() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    WedgeForm operator+(const WedgeForm& o) const;
    WedgeForm scaled(Residue s) const;
    bool operator==(const WedgeForm& o) const noexcept;
    bool operator!=(const WedgeForm& o) const noexcept { return !(*this == o); }

    // Multilinear evaluation at degree() many vectors (determinant of the
    // selected coordinate minors).
    Residue evaluate(const std::vector<FpVector>& args) const;

private:
    PrimeField field_;
    int n_, deg_;
    std::map<std::vector<int>, Residue> coeffs_;
};

// Element of Sym^k(V_n^*), k in {2, 3}, as a polynomial in the dual basis:
// coefficients on weakly increasing index tuples.
class SymForm {
public:
    SymForm(PrimeField field, int n, int degree);

    const PrimeField& field() const noexcept { return field_; }
    int dim() const noexcept { return n_; }
    int degree() const noexcept { return deg_; }

    void add_term(std::vector<int> idx, std::int64_t c);
    Residue coeff(std::vector<int> idx) const;
    const std::map<std::vector<int>, Residue>& terms() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    SymForm operator+(const SymForm& o) const;
    SymForm scaled(Residue s) const;
    bool operator==(const SymForm& o) const noexcept;
    bool operator!=(const SymForm& o) const noexcept { return !(*this == o); }

    // Evaluation as a polynomial function on V_n.
    Residue evaluate(const FpVector& v) const;

private:
    PrimeField field_;
    int n_, deg_;
    std::map<std::vector<int>, Residue> coeffs_;
};

// phi o (g x ... x g): substitutes x_i -> sum_j g[i][j] x_j. Coefficients of
// the result are 2x2/3x3 minors of g against the source tuples.
WedgeForm pullback(const FpMatrix& g, const WedgeForm& phi);
SymForm pullback(const FpMatrix& g, const SymForm& s);

// Left GL-action: g . phi = phi o (g^{-1} x ... x g^{-1}). The stabilizer
// {g : g.phi = phi} coincides with {g : phi o (g x..x g) = phi} elementwise,
// since each condition on g is the other one on g^{-1} composed with the
// action laws.
WedgeForm gl_act_wedge(const FpMatrix& g, const WedgeForm& phi);
SymForm gl_act_sym(const FpMatrix& g, const SymForm& s);

// iota_v(x^y^z) = <v,z> x^y - <v,y> x^z + <v,x> y^z, extended linearly.
WedgeForm interior_derivation(const FpVector& v, const WedgeForm& phi3);

// Basis of Rad(phi) = {v : iota_v(phi) = 0}.
std::vector<FpVector> radical(const WedgeForm& phi3);
bool is_nondegenerate(const WedgeForm& phi3);

// Coset of Sym^3(V_n^*) modulo R = span{x_i^2 x_j + x_i x_j^2, i != j},
// p = 2 only. The stored representative is canonical: in every mixed-square
// monomial the squared variable carries the smaller index.
class Sym3Coset {
public:
    const PrimeField& field() const noexcept { return rep_.field(); }
    int dim() const noexcept { return rep_.dim(); }
    const SymForm& representative() const noexcept { return rep_; }

    bool is_zero() const noexcept { return rep_.is_zero(); }
    Sym3Coset operator+(const Sym3Coset& o) const;
    bool operator==(const Sym3Coset& o) const noexcept { return rep_ == o.rep_; }
    bool operator!=(const Sym3Coset& o) const noexcept { return !(*this == o); }

    friend Sym3Coset sym3_reduce(const SymForm& s);

private:
    explicit Sym3Coset(SymForm rep) : rep_(std::move(rep)) {}
    SymForm rep_;
};

// Canonical coset representative; idempotent, F_2-linear.
Sym3Coset sym3_reduce(const SymForm& s);

// Projection to Wedge^3: keeps the squarefree monomials of the canonical
// representative, kills the rest.
WedgeForm pi_alt(const Sym3Coset& c);

Sym3Coset pullback(const FpMatrix& g, const Sym3Coset& c);
Sym3Coset gl_act_sym3(const FpMatrix& g, const Sym3Coset& c);

}  // namespace brpic
