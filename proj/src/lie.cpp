#include "brpic/lie.hpp"

#include <algorithm>

namespace brpic {

LieAlgebraFp::LieAlgebraFp(PrimeField field, int dim,
                           const std::map<std::pair<int, int>, std::vector<BracketTerm>>& brackets)
    : field_(field), dim_(dim),
      c_(static_cast<std::size_t>(dim) * dim * dim, 0) {
    if (field_.p() <= 3) throw WrongCharacteristic("Lie algebra machinery needs p > 3");
    if (dim < 1) throw WrongShape("Lie algebra needs positive dimension");
    std::map<std::pair<int, int>, bool> touched;
    for (const auto& [ij, terms] : brackets) {
        auto [i, j] = ij;
        if (i < 0 || j < 0 || i >= dim || j >= dim)
            throw IndexOutOfRange("bracket index out of range");
        if (i == j) {
            for (const auto& t : terms)
                if (field_.reduce(t.c))
                    throw WrongShape("[e_i, e_i] must vanish");
            continue;
        }
        auto key = std::minmax(i, j);
        if (touched[{key.first, key.second}])
            throw WrongShape("bracket [" + std::to_string(key.first) + "," +
                             std::to_string(key.second) + "] specified twice");
        touched[{key.first, key.second}] = true;
        for (const auto& t : terms) {
            if (t.k < 0 || t.k >= dim) throw IndexOutOfRange("bracket target out of range");
            Residue v = field_.reduce(t.c);
            c_[index(i, j, t.k)] = field_.add(c_[index(i, j, t.k)], v);
            c_[index(j, i, t.k)] = field_.sub(c_[index(j, i, t.k)], v);
        }
    }
    verify_jacobi();
}

void LieAlgebraFp::verify_jacobi() const {
    // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 on basis
    // triples; bilinearity and antisymmetry extend it to the whole algebra.
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k)
                for (int m = 0; m < dim_; ++m) {
                    std::uint64_t acc = 0;
                    for (int l = 0; l < dim_; ++l) {
                        acc += static_cast<std::uint64_t>(structure(i, j, l)) * structure(l, k, m);
                        acc += static_cast<std::uint64_t>(structure(j, k, l)) * structure(l, i, m);
                        acc += static_cast<std::uint64_t>(structure(k, i, l)) * structure(l, j, m);
                    }
                    if (acc % field_.p())
                        throw WrongShape("Jacobi identity fails on basis triple (" +
                                         std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(k) + ")");
                }
}

FpVector LieAlgebraFp::bracket(const FpVector& a, const FpVector& b) const {
    FpVector r(field_, dim_);
    for (int k = 0; k < dim_; ++k) {
        std::uint64_t acc = 0;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                acc += static_cast<std::uint64_t>(a[i]) * b[j] % field_.p() * structure(i, j, k);
        r.set(k, static_cast<std::int64_t>(acc % field_.p()));
    }
    return r;
}

bool LieAlgebraFp::is_abelian() const noexcept {
    for (Residue x : c_)
        if (x) return false;
    return true;
}

FpMatrix ad_matrix(const LieAlgebraFp& g, int i) {
    if (i < 0 || i >= g.dim()) throw IndexOutOfRange("basis index out of range");
    FpMatrix m(g.field(), g.dim(), g.dim());
    for (int j = 0; j < g.dim(); ++j)
        for (int k = 0; k < g.dim(); ++k) m.set_residue(k, j, g.structure(i, j, k));
    return m;
}

MetricForm::MetricForm(const LieAlgebraFp& g, FpMatrix b_) : b(std::move(b_)) {
    const PrimeField& f = g.field();
    require_same_field(f, b.field());
    if (!b.square() || b.rows() != g.dim()) throw WrongShape("form shape mismatch");
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            if (b.at(i, j) != b.at(j, i)) throw WrongShape("form is not symmetric");
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            for (int k = 0; k < g.dim(); ++k) {
                // ([e_i, e_j], e_k) vs (e_i, [e_j, e_k])
                std::uint64_t lhs = 0, rhs = 0;
                for (int l = 0; l < g.dim(); ++l) {
                    lhs += static_cast<std::uint64_t>(g.structure(i, j, l)) * b.at(l, k);
                    rhs += static_cast<std::uint64_t>(g.structure(j, k, l)) * b.at(i, l);
                }
                if (lhs % f.p() != rhs % f.p())
                    throw FormNotInvariant("invariance fails on basis triple (" +
                                           std::to_string(i) + "," + std::to_string(j) + "," +
                                           std::to_string(k) + ")");
            }
}

MetricForm killing_form(const LieAlgebraFp& g) {
    const PrimeField& f = g.field();
    const int d = g.dim();
    std::vector<FpMatrix> ads;
    ads.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) ads.push_back(ad_matrix(g, i));
    FpMatrix b(f, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::uint64_t tr = 0;
            for (int a = 0; a < d; ++a)
                for (int c = 0; c < d; ++c)
                    tr += static_cast<std::uint64_t>(ads[static_cast<std::size_t>(i)].at(a, c)) *
                          ads[static_cast<std::size_t>(j)].at(c, a);
            b.set_residue(i, j, static_cast<Residue>(tr % f.p()));
        }
    return MetricForm(g, std::move(b));
}

H3Class omega_from_metric(const LieAlgebraFp& g, const MetricForm& metric) {
    const PrimeField& f = g.field();
    const int d = g.dim();
    WedgeForm alt(f, d, 3);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                std::uint64_t acc = 0;
                for (int l = 0; l < d; ++l)
                    acc += static_cast<std::uint64_t>(g.structure(i, j, l)) * metric.b.at(l, k);
                if (acc % f.p()) alt.add_term({i, j, k}, static_cast<std::int64_t>(acc % f.p()));
            }
    SymForm sym(f, d, 2);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
            if (metric.b.at(i, j)) sym.add_term({i, j}, metric.b.at(i, j));
    return H3Class::odd(std::move(alt), std::move(sym));
}

BrPicReport autm_stab_report(const LieAlgebraFp& g, const MetricForm& metric,
                             const SearchOptions& opts) {
    H3Class omega = omega_from_metric(g, metric);
    if (!is_nondegenerate(omega.alt_part()))
        throw NondegenerateRequired(
            "omega_alt is degenerate (the algebra is not perfect or the form is degenerate)");
    return brpic_report(omega, opts);
}

BigInt metric_automorphism_order(const LieAlgebraFp& g, const MetricForm& metric,
                                 const SearchOptions& opts) {
    const PrimeField& f = g.field();
    const int d = g.dim();
    BigInt total = gl_order(f, d);
    if (total > BigInt(opts.max_group_order))
        throw SizeGuardExceeded("|GL_" + std::to_string(d) + "(F_" + std::to_string(f.p()) +
                                ")| exceeds the sweep guard");
    std::vector<FpVector> basis;
    for (int i = 0; i < d; ++i) basis.push_back(FpVector::basis(f, d, i));
    std::uint64_t count = 0;
    gl_enumerate_range(f, d, 1, detail::pow_u64(f.p(), d), [&](const FpMatrix& m) {
        std::vector<FpVector> img;
        img.reserve(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) img.push_back(apply(m, basis[static_cast<std::size_t>(i)]));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const FpVector& mi = img[static_cast<std::size_t>(i)];
                const FpVector& mj = img[static_cast<std::size_t>(j)];
                std::uint64_t acc = 0;
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b)
                        acc += static_cast<std::uint64_t>(mi[a]) * metric.b.at(a, b) % f.p() * mj[b];
                if (acc % f.p() != metric.b.at(i, j)) return;
                if (g.bracket(mi, mj) !=
                    apply(m, g.bracket(basis[static_cast<std::size_t>(i)],
                                       basis[static_cast<std::size_t>(j)])))
                    return;
            }
        ++count;
    });
    return count;
}

}  // namespace brpic
