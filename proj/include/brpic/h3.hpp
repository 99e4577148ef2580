#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "brpic/forms.hpp"

namespace brpic {

// A class in H^3(V_n, k^x) in the canonical model:
//   odd p:  a pair (alt, sym) in Wedge^3(V_n^*) (+) Sym^2(V_n^*);
//   p = 2:  a coset in Sym^3(V_n^*) / <x_i^2 x_j + x_i x_j^2>.
class H3Class {
public:
    static H3Class odd(WedgeForm alt3, SymForm sym2);
    static H3Class even(Sym3Coset coset);
    static H3Class zero(PrimeField field, int n);

    const PrimeField& field() const noexcept { return field_; }
    int dim() const noexcept { return n_; }
    bool odd_model() const noexcept { return field_.p() != 2; }

    const WedgeForm& alt() const;     // odd p only
    const SymForm& sym() const;       // odd p only
    const Sym3Coset& coset() const;   // p = 2 only

    // omega_alt in either model: the Wedge^3 component for odd p, the image
    // under pi for p = 2.
    WedgeForm alt_part() const;

    bool is_zero() const noexcept;
    H3Class operator+(const H3Class& o) const;
    bool operator==(const H3Class& o) const noexcept;
    bool operator!=(const H3Class& o) const noexcept { return !(*this == o); }

private:
    H3Class(PrimeField field, int n) : field_(field), n_(n) {}

    PrimeField field_;
    int n_;
    std::optional<WedgeForm> alt_;
    std::optional<SymForm> sym_;
    std::optional<Sym3Coset> coset_;
};

// dim H^3(V_n, k^x): C(n,3) + C(n+1,2) for odd p, C(n+2,3) - C(n,2) for p = 2.
long long h3_dim(const PrimeField& field, int n);

// The canonical basis classes of H^3(V_n, k^x); deterministic order.
std::vector<H3Class> h3_basis(const PrimeField& field, int n);

// A class in H^3(V_n, F_p) for odd p: a Wedge^3 part over the x_i and an
// n-by-n coefficient matrix over the cup products x_i u y_j.
struct H3FpClass {
    H3FpClass(PrimeField field, int n)
        : wedge3(field, n, 3), mixed(field, n, n) {}

    const PrimeField& field() const noexcept { return wedge3.field(); }
    int dim() const noexcept { return wedge3.dim(); }

    WedgeForm wedge3;
    FpMatrix mixed;

    bool operator==(const H3FpClass& o) const noexcept {
        return wedge3 == o.wedge3 && mixed == o.mixed;
    }
};

// Connecting map of the coefficient sequence 0 -> H^2(-,k^x) -> H^3(-,F_p)
// -> H^3(-,k^x) -> 0 for odd p: delta(x_k ^ x_l) = x_k u y_l - x_l u y_k.
H3FpClass connecting_delta(const WedgeForm& mu2);

// Quotient H^3(V_n,F_p) -> H^3(V_n,k^x): the wedge part passes through and
// the mixed matrix symmetrizes (z_i z_j picks up a_ij + a_ji, z_i^2 picks up
// a_ii). Kernel is exactly the image of connecting_delta.
H3Class project_to_kx(const H3FpClass& c);

// A degree-2 class in H^2(V_m, F_p), the shape extension classes of central
// extensions 0 -> F_p -> G -> V_m -> 0 take: a linear combination of the
// products x_i x_j (i < j) plus carries y_i (x_i^2 when p = 2).
struct H2FpClass {
    H2FpClass(PrimeField field_, int m_)
        : field(field_), m(m_), carry(static_cast<std::size_t>(m_), 0) {}

    PrimeField field;
    int m;
    std::map<std::pair<int, int>, Residue> pairs;  // keys i < j
    std::vector<Residue> carry;

    void add_pair(int i, int j, std::int64_t c);
    void add_carry(int i, std::int64_t c);
    bool operator==(const H2FpClass& o) const noexcept {
        return field == o.field && m == o.m && pairs == o.pairs && carry == o.carry;
    }
};

// x_0 u kappa followed by the projection to H^3(V_{m+1}, k^x). Input indices
// 0..m-1 shift up by one; coordinate 0 of the result is the new x_0 direction.
H3Class cup_x0(const H2FpClass& kappa);

// Explicit 3-cocycle V^3 -> Z_p written as the exponent of a fixed primitive
// p-th root of unity. Linear in the class it represents.
class Cocycle3 {
public:
    Cocycle3(PrimeField field, int n) : field_(field), n_(n) {}

    const PrimeField& field() const noexcept { return field_; }
    int dim() const noexcept { return n_; }

    Residue eval(const FpVector& u, const FpVector& v, const FpVector& w) const;

    struct AltTerm { int i, j, k; Residue c; };       // c * u_i v_j w_k
    struct MixedTerm { int i, j; Residue c; };        // c * u_i y_j(v, w)
    struct MonomialTerm { int a, b, e; Residue c; };  // c * u_a v_b w_e (p = 2)

    std::vector<AltTerm> alt_terms;
    std::vector<MixedTerm> mixed_terms;
    std::vector<MonomialTerm> monomial_terms;

private:
    PrimeField field_;
    int n_;
};

// Carry 2-cocycle in coordinate i: 1 when u_i + v_i >= p as integers.
Residue carry_cocycle(const PrimeField& field, int i, const FpVector& u, const FpVector& v);

// Representative cocycle of a class in the canonical model. Odd p: basis
// wedges map to u_i v_j w_k, the symmetric part z_i z_j maps to u_i y_j(v,w)
// read off the cup products with i <= j. For p = 2 every canonical monomial
// x_a x_b x_c maps to the cup product u_a v_b w_e with indices sorted.
Cocycle3 explicit_representative(const H3Class& omega);

// 2-cochain with values in Z_p (exponents of the fixed root of unity).
using TwoCochain = std::function<Residue(const FpVector&, const FpVector&)>;

// beta_a(x, y) = c(a,x,y) + c(x,y,a) - c(x,a,y).
TwoCochain beta_map(const FpVector& a, const Cocycle3& c);

// The class of a 2-cocycle in H^2(V_n, k^x) = Wedge^2(V_n^*), via the
// alternation (u,v) -> b(u,v) - b(v,u). The cocycle identity is verified
// first: exhaustively when p^{3n} <= 10^6, on 2000 seeded samples otherwise.
WedgeForm two_cocycle_class(const PrimeField& field, int n, const TwoCochain& b);

// Componentwise pullback / left action on H^3 classes.
H3Class pullback(const FpMatrix& g, const H3Class& omega);
H3Class gl_act_h3(const FpMatrix& g, const H3Class& omega);

}  // namespace brpic
