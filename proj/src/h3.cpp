#include "brpic/h3.hpp"

#include <random>

namespace brpic {

// ---------------------------------------------------------------------------
// H3Class

H3Class H3Class::odd(WedgeForm alt3, SymForm sym2) {
    require_same_field(alt3.field(), sym2.field());
    if (alt3.field().p() == 2) throw WrongCharacteristic("pair model requires odd p");
    if (alt3.degree() != 3 || sym2.degree() != 2 || alt3.dim() != sym2.dim())
        throw DimensionMismatch("expected (Wedge^3, Sym^2) components of equal dimension");
    H3Class w(alt3.field(), alt3.dim());
    w.alt_ = std::move(alt3);
    w.sym_ = std::move(sym2);
    return w;
}

H3Class H3Class::even(Sym3Coset coset) {
    H3Class w(coset.field(), coset.dim());
    w.coset_ = std::move(coset);
    return w;
}

H3Class H3Class::zero(PrimeField field, int n) {
    if (field.p() == 2) return even(sym3_reduce(SymForm(field, n, 3)));
    return odd(WedgeForm(field, n, 3), SymForm(field, n, 2));
}

const WedgeForm& H3Class::alt() const {
    if (!alt_) throw WrongCharacteristic("alt component exists only for odd p");
    return *alt_;
}

const SymForm& H3Class::sym() const {
    if (!sym_) throw WrongCharacteristic("sym component exists only for odd p");
    return *sym_;
}

const Sym3Coset& H3Class::coset() const {
    if (!coset_) throw WrongCharacteristic("coset model exists only for p = 2");
    return *coset_;
}

WedgeForm H3Class::alt_part() const {
    return odd_model() ? *alt_ : pi_alt(*coset_);
}

bool H3Class::is_zero() const noexcept {
    if (odd_model()) return alt_->is_zero() && sym_->is_zero();
    return coset_->is_zero();
}

H3Class H3Class::operator+(const H3Class& o) const {
    require_same_field(field_, o.field_);
    if (n_ != o.n_) throw DimensionMismatch("H^3 class dimension mismatch");
    if (odd_model()) return odd(*alt_ + *o.alt_, *sym_ + *o.sym_);
    return even(*coset_ + *o.coset_);
}

bool H3Class::operator==(const H3Class& o) const noexcept {
    if (field_ != o.field_ || n_ != o.n_) return false;
    if (odd_model()) return *alt_ == *o.alt_ && *sym_ == *o.sym_;
    return *coset_ == *o.coset_;
}

long long h3_dim(const PrimeField& field, int n) {
    auto choose = [](long long m, int k) {
        long long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
        return m < k ? 0 : r;
    };
    if (field.p() == 2) return choose(n + 2, 3) - choose(n, 2);
    return choose(n, 3) + choose(n + 1, 2);
}

std::vector<H3Class> h3_basis(const PrimeField& field, int n) {
    std::vector<H3Class> basis;
    if (field.p() != 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    WedgeForm a(field, n, 3);
                    a.add_term({i, j, k}, 1);
                    basis.push_back(H3Class::odd(std::move(a), SymForm(field, n, 2)));
                }
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                SymForm s(field, n, 2);
                s.add_term({i, j}, 1);
                basis.push_back(H3Class::odd(WedgeForm(field, n, 3), std::move(s)));
            }
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                for (int c = b; c < n; ++c) {
                    // canonical monomials: skip x_a x_b^2 with a < b = c, it
                    // equals x_a^2 x_b which is listed as (a, a, b)
                    if (a < b && b == c) continue;
                    SymForm s(field, n, 3);
                    s.add_term({a, b, c}, 1);
                    basis.push_back(H3Class::even(sym3_reduce(s)));
                }
    }
    return basis;
}

// ---------------------------------------------------------------------------
// The F_p coefficient model and the connecting map

H3FpClass connecting_delta(const WedgeForm& mu2) {
    if (mu2.field().p() == 2) throw WrongCharacteristic("connecting_delta requires odd p");
    if (mu2.degree() != 2) throw DimensionMismatch("connecting_delta expects a 2-form");
    const PrimeField& f = mu2.field();
    H3FpClass out(f, mu2.dim());
    for (const auto& [idx, c] : mu2.terms()) {
        const int k = idx[0], l = idx[1];
        out.mixed.set_residue(k, l, f.add(out.mixed.at(k, l), c));
        out.mixed.set_residue(l, k, f.sub(out.mixed.at(l, k), c));
    }
    return out;
}

H3Class project_to_kx(const H3FpClass& c) {
    const PrimeField& f = c.field();
    if (f.p() == 2) throw WrongCharacteristic("project_to_kx requires odd p");
    const int n = c.dim();
    SymForm sym(f, n, 2);
    for (int i = 0; i < n; ++i) {
        if (c.mixed.at(i, i)) sym.add_term({i, i}, c.mixed.at(i, i));
        for (int j = i + 1; j < n; ++j) {
            Residue s = f.add(c.mixed.at(i, j), c.mixed.at(j, i));
            if (s) sym.add_term({i, j}, s);
        }
    }
    return H3Class::odd(c.wedge3, std::move(sym));
}

// ---------------------------------------------------------------------------
// Cup with x_0

void H2FpClass::add_pair(int i, int j, std::int64_t c) {
    if (i == j) throw WrongShape("pair term needs distinct indices");
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= m) throw IndexOutOfRange("pair index out of range");
    auto key = std::make_pair(i, j);
    Residue v = field.add(pairs.count(key) ? pairs[key] : 0, field.reduce(c));
    if (v)
        pairs[key] = v;
    else
        pairs.erase(key);
}

void H2FpClass::add_carry(int i, std::int64_t c) {
    if (i < 0 || i >= m) throw IndexOutOfRange("carry index out of range");
    carry[static_cast<std::size_t>(i)] = field.add(carry[static_cast<std::size_t>(i)], field.reduce(c));
}

H3Class cup_x0(const H2FpClass& kappa) {
    const PrimeField& f = kappa.field;
    const int n = kappa.m + 1;
    if (f.p() != 2) {
        H3FpClass lift(f, n);
        for (const auto& [key, c] : kappa.pairs)
            lift.wedge3.add_term({0, key.first + 1, key.second + 1}, c);
        for (int i = 0; i < kappa.m; ++i)
            lift.mixed.set_residue(0, i + 1, kappa.carry[static_cast<std::size_t>(i)]);
        return project_to_kx(lift);
    }
    SymForm cubic(f, n, 3);
    for (const auto& [key, c] : kappa.pairs)
        cubic.add_term({0, key.first + 1, key.second + 1}, c);
    for (int i = 0; i < kappa.m; ++i)
        if (kappa.carry[static_cast<std::size_t>(i)])
            cubic.add_term({0, i + 1, i + 1}, kappa.carry[static_cast<std::size_t>(i)]);
    return H3Class::even(sym3_reduce(cubic));
}

// ---------------------------------------------------------------------------
// Explicit cocycles

Residue carry_cocycle(const PrimeField& field, int i, const FpVector& u, const FpVector& v) {
    return (u[i] + v[i] >= field.p()) ? 1 : 0;
}

Residue Cocycle3::eval(const FpVector& u, const FpVector& v, const FpVector& w) const {
    Residue acc = 0;
    for (const auto& t : alt_terms)
        acc = field_.add(acc, field_.mul(t.c, field_.mul(u[t.i], field_.mul(v[t.j], w[t.k]))));
    for (const auto& t : mixed_terms)
        acc = field_.add(acc, field_.mul(t.c, field_.mul(u[t.i], carry_cocycle(field_, t.j, v, w))));
    for (const auto& t : monomial_terms)
        acc = field_.add(acc, field_.mul(t.c, field_.mul(u[t.a], field_.mul(v[t.b], w[t.e]))));
    return acc;
}

Cocycle3 explicit_representative(const H3Class& omega) {
    Cocycle3 c(omega.field(), omega.dim());
    if (omega.odd_model()) {
        for (const auto& [idx, coef] : omega.alt().terms())
            c.alt_terms.push_back({idx[0], idx[1], idx[2], coef});
        for (const auto& [idx, coef] : omega.sym().terms())
            c.mixed_terms.push_back({idx[0], idx[1], coef});
    } else {
        for (const auto& [idx, coef] : omega.coset().representative().terms())
            c.monomial_terms.push_back({idx[0], idx[1], idx[2], coef});
    }
    return c;
}

TwoCochain beta_map(const FpVector& a, const Cocycle3& c) {
    const PrimeField f = c.field();
    return [a, c, f](const FpVector& x, const FpVector& y) -> Residue {
        return f.sub(f.add(c.eval(a, x, y), c.eval(x, y, a)), c.eval(x, a, y));
    };
}

WedgeForm two_cocycle_class(const PrimeField& field, int n, const TwoCochain& b) {
    // d(b)(u,v,w) = b(v,w) - b(u+v,w) + b(u,v+w) - b(u,v) must vanish.
    auto defect = [&](const FpVector& u, const FpVector& v, const FpVector& w) {
        Residue d = b(v, w);
        d = field.sub(d, b(u + v, w));
        d = field.add(d, b(u, v + w));
        d = field.sub(d, b(u, v));
        return d;
    };
    std::uint64_t points = 1;
    bool overflow = false;
    for (int i = 0; i < 3 * n; ++i) {
        points *= field.p();
        if (points > 1'000'000) { overflow = true; break; }
    }
    if (!overflow) {
        std::uint64_t side = 1;
        for (int i = 0; i < n; ++i) side *= field.p();
        for (std::uint64_t cu = 0; cu < side; ++cu)
            for (std::uint64_t cv = 0; cv < side; ++cv)
                for (std::uint64_t cw = 0; cw < side; ++cw) {
                    FpVector u = FpVector::from_code(field, n, cu);
                    FpVector v = FpVector::from_code(field, n, cv);
                    FpVector w = FpVector::from_code(field, n, cw);
                    if (defect(u, v, w))
                        throw NotACocycle("2-cocycle identity fails at codes (" +
                                          std::to_string(cu) + "," + std::to_string(cv) + "," +
                                          std::to_string(cw) + ")");
                }
    } else {
        std::mt19937_64 rng(0x2c0c1deaULL);
        std::uint64_t side = 1;
        for (int i = 0; i < n; ++i) side *= field.p();
        for (int trial = 0; trial < 2000; ++trial) {
            FpVector u = FpVector::from_code(field, n, rng() % side);
            FpVector v = FpVector::from_code(field, n, rng() % side);
            FpVector w = FpVector::from_code(field, n, rng() % side);
            if (defect(u, v, w)) throw NotACocycle("2-cocycle identity fails on a sampled triple");
        }
    }

    WedgeForm out(field, n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            FpVector ei = FpVector::basis(field, n, i);
            FpVector ej = FpVector::basis(field, n, j);
            Residue a = field.sub(b(ei, ej), b(ej, ei));
            if (a) out.add_term({i, j}, a);
        }
    return out;
}

// ---------------------------------------------------------------------------
// GL action on H^3

H3Class pullback(const FpMatrix& g, const H3Class& omega) {
    require_same_field(g.field(), omega.field());
    if (!g.square() || g.rows() != omega.dim())
        throw DimensionMismatch("matrix dimension does not match H^3 class");
    if (omega.odd_model())
        return H3Class::odd(pullback(g, omega.alt()), pullback(g, omega.sym()));
    return H3Class::even(pullback(g, omega.coset()));
}

H3Class gl_act_h3(const FpMatrix& g, const H3Class& omega) {
    return pullback(mat_inverse(g), omega);
}

}  // namespace brpic
