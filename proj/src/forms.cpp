#include "brpic/forms.hpp"

#include <algorithm>

namespace brpic {

namespace {

void check_indices(const std::vector<int>& idx, int n, int deg) {
    if (static_cast<int>(idx.size()) != deg)
        throw DimensionMismatch("index tuple length does not match form degree");
    for (int i : idx)
        if (i < 0 || i >= n) throw IndexOutOfRange("form index out of range");
}

// Sorts idx in place, returns the permutation sign, or 0 on a repeat.
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

Residue minor_det(const PrimeField& f, const FpMatrix& g, const std::vector<int>& r,
                  const std::vector<int>& c) {
    if (r.size() == 2)
        return f.sub(f.mul(g.at(r[0], c[0]), g.at(r[1], c[1])),
                     f.mul(g.at(r[0], c[1]), g.at(r[1], c[0])));
    Residue acc = 0;
    acc = f.add(acc, f.mul(g.at(r[0], c[0]),
                           f.sub(f.mul(g.at(r[1], c[1]), g.at(r[2], c[2])),
                                 f.mul(g.at(r[1], c[2]), g.at(r[2], c[1])))));
    acc = f.sub(acc, f.mul(g.at(r[0], c[1]),
                           f.sub(f.mul(g.at(r[1], c[0]), g.at(r[2], c[2])),
                                 f.mul(g.at(r[1], c[2]), g.at(r[2], c[0])))));
    acc = f.add(acc, f.mul(g.at(r[0], c[2]),
                           f.sub(f.mul(g.at(r[1], c[0]), g.at(r[2], c[1])),
                                 f.mul(g.at(r[1], c[1]), g.at(r[2], c[0])))));
    return acc;
}

template <class Fn>
void for_each_increasing(int n, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) return;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

void check_square_acts(const FpMatrix& g, int n) {
    if (!g.square() || g.rows() != n)
        throw DimensionMismatch("matrix dimension does not match form dimension");
}

}  // namespace

// ---------------------------------------------------------------------------
// WedgeForm

WedgeForm::WedgeForm(PrimeField field, int n, int degree) : field_(field), n_(n), deg_(degree) {
    if (degree != 2 && degree != 3) throw DimensionMismatch("wedge degree must be 2 or 3");
}

void WedgeForm::add_term(std::vector<int> idx, std::int64_t c) {
    check_indices(idx, n_, deg_);
    int sign = sort_sign(idx);
    if (sign == 0) return;
    Residue add = field_.reduce(sign > 0 ? c : -c);
    auto it = coeffs_.find(idx);
    Residue v = field_.add(it == coeffs_.end() ? 0 : it->second, add);
    if (v)
        coeffs_[std::move(idx)] = v;
    else if (it != coeffs_.end())
        coeffs_.erase(it);
}

Residue WedgeForm::coeff(std::vector<int> idx) const {
    check_indices(idx, n_, deg_);
    int sign = sort_sign(idx);
    if (sign == 0) return 0;
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) return 0;
    return sign > 0 ? it->second : field_.neg(it->second);
}

WedgeForm WedgeForm::operator+(const WedgeForm& o) const {
    require_same_field(field_, o.field_);
    if (n_ != o.n_ || deg_ != o.deg_) throw DimensionMismatch("wedge form shape mismatch");
    WedgeForm r = *this;
    for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, c);
    return r;
}

WedgeForm WedgeForm::scaled(Residue s) const {
    WedgeForm r(field_, n_, deg_);
    for (const auto& [idx, c] : coeffs_) r.add_term(idx, field_.mul(c, s));
    return r;
}

bool WedgeForm::operator==(const WedgeForm& o) const noexcept {
    return field_ == o.field_ && n_ == o.n_ && deg_ == o.deg_ && coeffs_ == o.coeffs_;
}

Residue WedgeForm::evaluate(const std::vector<FpVector>& args) const {
    if (static_cast<int>(args.size()) != deg_)
        throw DimensionMismatch("wedge evaluation arity mismatch");
    Residue acc = 0;
    std::vector<int> rows(static_cast<std::size_t>(deg_));
    for (int i = 0; i < deg_; ++i) rows[static_cast<std::size_t>(i)] = i;
    FpMatrix coords(field_, deg_, deg_);
    for (const auto& [idx, c] : coeffs_) {
        for (int a = 0; a < deg_; ++a)
            for (int b = 0; b < deg_; ++b)
                coords.set_residue(a, b, args[static_cast<std::size_t>(a)][idx[static_cast<std::size_t>(b)]]);
        acc = field_.add(acc, field_.mul(c, det(coords)));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// SymForm

SymForm::SymForm(PrimeField field, int n, int degree) : field_(field), n_(n), deg_(degree) {
    if (degree != 2 && degree != 3) throw DimensionMismatch("symmetric degree must be 2 or 3");
}

void SymForm::add_term(std::vector<int> idx, std::int64_t c) {
    check_indices(idx, n_, deg_);
    std::sort(idx.begin(), idx.end());
    Residue add = field_.reduce(c);
    auto it = coeffs_.find(idx);
    Residue v = field_.add(it == coeffs_.end() ? 0 : it->second, add);
    if (v)
        coeffs_[std::move(idx)] = v;
    else if (it != coeffs_.end())
        coeffs_.erase(it);
}

Residue SymForm::coeff(std::vector<int> idx) const {
    check_indices(idx, n_, deg_);
    std::sort(idx.begin(), idx.end());
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? 0 : it->second;
}

SymForm SymForm::operator+(const SymForm& o) const {
    require_same_field(field_, o.field_);
    if (n_ != o.n_ || deg_ != o.deg_) throw DimensionMismatch("symmetric form shape mismatch");
    SymForm r = *this;
    for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, c);
    return r;
}

SymForm SymForm::scaled(Residue s) const {
    SymForm r(field_, n_, deg_);
    for (const auto& [idx, c] : coeffs_) r.add_term(idx, field_.mul(c, s));
    return r;
}

bool SymForm::operator==(const SymForm& o) const noexcept {
    return field_ == o.field_ && n_ == o.n_ && deg_ == o.deg_ && coeffs_ == o.coeffs_;
}

Residue SymForm::evaluate(const FpVector& v) const {
    Residue acc = 0;
    for (const auto& [idx, c] : coeffs_) {
        Residue t = c;
        for (int i : idx) t = field_.mul(t, v[i]);
        acc = field_.add(acc, t);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Pullbacks and actions

WedgeForm pullback(const FpMatrix& g, const WedgeForm& phi) {
    require_same_field(g.field(), phi.field());
    check_square_acts(g, phi.dim());
    const PrimeField& f = phi.field();
    WedgeForm out(f, phi.dim(), phi.degree());
    for_each_increasing(phi.dim(), phi.degree(), [&](const std::vector<int>& target) {
        Residue acc = 0;
        for (const auto& [src, c] : phi.terms())
            acc = f.add(acc, f.mul(c, minor_det(f, g, src, target)));
        if (acc) out.add_term(target, acc);
    });
    return out;
}

SymForm pullback(const FpMatrix& g, const SymForm& s) {
    require_same_field(g.field(), s.field());
    check_square_acts(g, s.dim());
    const PrimeField& f = s.field();
    const int n = s.dim();
    SymForm out(f, n, s.degree());
    for (const auto& [idx, c] : s.terms()) {
        if (s.degree() == 2) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    Residue t = f.mul(c, f.mul(g.at(idx[0], a), g.at(idx[1], b)));
                    if (t) out.add_term({a, b}, t);
                }
        } else {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int e = 0; e < n; ++e) {
                        Residue t = f.mul(c, f.mul(g.at(idx[0], a),
                                                   f.mul(g.at(idx[1], b), g.at(idx[2], e))));
                        if (t) out.add_term({a, b, e}, t);
                    }
        }
    }
    return out;
}

WedgeForm gl_act_wedge(const FpMatrix& g, const WedgeForm& phi) {
    return pullback(mat_inverse(g), phi);
}

SymForm gl_act_sym(const FpMatrix& g, const SymForm& s) {
    return pullback(mat_inverse(g), s);
}

WedgeForm interior_derivation(const FpVector& v, const WedgeForm& phi3) {
    require_same_field(v.field(), phi3.field());
    if (phi3.degree() != 3) throw DimensionMismatch("interior derivation expects degree 3");
    if (v.dim() != phi3.dim()) throw DimensionMismatch("vector/form dimension mismatch");
    const PrimeField& f = phi3.field();
    WedgeForm out(f, phi3.dim(), 2);
    for (const auto& [idx, c] : phi3.terms()) {
        const int i = idx[0], j = idx[1], k = idx[2];
        if (v[k]) out.add_term({i, j}, f.mul(c, v[k]));
        if (v[j]) out.add_term({i, k}, f.neg(f.mul(c, v[j])));
        if (v[i]) out.add_term({j, k}, f.mul(c, v[i]));
    }
    return out;
}

std::vector<FpVector> radical(const WedgeForm& phi3) {
    if (phi3.degree() != 3) throw DimensionMismatch("radical expects degree 3");
    const PrimeField& f = phi3.field();
    const int n = phi3.dim();
    // Matrix of v -> iota_v(phi) over the pair basis of Wedge^2.
    std::vector<std::vector<int>> pairs;
    for_each_increasing(n, 2, [&](const std::vector<int>& pr) { pairs.push_back(pr); });
    FpMatrix m(f, static_cast<int>(pairs.size()), n);
    for (int col = 0; col < n; ++col) {
        WedgeForm im = interior_derivation(FpVector::basis(f, n, col), phi3);
        for (std::size_t row = 0; row < pairs.size(); ++row)
            m.set_residue(static_cast<int>(row), col, im.coeff(pairs[row]));
    }
    return kernel_basis(m);
}

bool is_nondegenerate(const WedgeForm& phi3) { return radical(phi3).empty(); }

// ---------------------------------------------------------------------------
// Sym^3 cosets, p = 2

Sym3Coset sym3_reduce(const SymForm& s) {
    if (s.field().p() != 2) throw WrongCharacteristic("Sym^3 cosets exist only over F_2");
    if (s.degree() != 3) throw DimensionMismatch("sym3_reduce expects degree 3");
    SymForm rep(s.field(), s.dim(), 3);
    for (const auto& [idx, c] : s.terms()) {
        // idx is weakly increasing (a <= b <= e). The mixed-square case
        // a < b = e rewrites x_a x_b^2 -> x_a^2 x_b.
        if (idx[0] < idx[1] && idx[1] == idx[2])
            rep.add_term({idx[0], idx[0], idx[1]}, c);
        else
            rep.add_term(idx, c);
    }
    return Sym3Coset(std::move(rep));
}

Sym3Coset Sym3Coset::operator+(const Sym3Coset& o) const {
    return sym3_reduce(rep_ + o.rep_);
}

WedgeForm pi_alt(const Sym3Coset& c) {
    WedgeForm out(c.field(), c.dim(), 3);
    for (const auto& [idx, coef] : c.representative().terms())
        if (idx[0] < idx[1] && idx[1] < idx[2]) out.add_term(idx, coef);
    return out;
}

Sym3Coset pullback(const FpMatrix& g, const Sym3Coset& c) {
    return sym3_reduce(pullback(g, c.representative()));
}

Sym3Coset gl_act_sym3(const FpMatrix& g, const Sym3Coset& c) {
    return pullback(mat_inverse(g), c);
}

}  // namespace brpic
