#include "brpic/orders.hpp"

namespace brpic {

namespace {

BigInt pow_big(std::uint32_t p, long long e) {
    BigInt r = 1;
    for (long long i = 0; i < e; ++i) r *= p;
    return r;
}

long long choose2(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

}  // namespace

CenterProfile center_profile(const H3Class& omega) {
    CenterProfile c;
    c.p = omega.field().p();
    c.n = omega.dim();
    WedgeForm alt = omega.alt_part();
    c.rad_dim = static_cast<int>(radical(alt).size());
    c.inv_center_order = pow_big(c.p, c.n + c.rad_dim);
    c.is_center_pointed = alt.is_zero();
    c.pt_is_lagrangian = (c.rad_dim == 0);
    return c;
}

BigInt induction_image_order(const H3Class& omega, const SearchOptions& opts) {
    CenterProfile c = center_profile(omega);
    StabilizerReport stab = brute_force_stabilizer(omega, opts);
    return pow_big(c.p, choose2(c.n) - c.n + c.rad_dim) * stab.order;
}

BigInt brpic_order(const H3Class& omega, const SearchOptions& opts) {
    if (!is_nondegenerate(omega.alt_part()))
        throw NondegenerateRequired(
            "omega_alt is degenerate; the Brauer-Picard order formula does not apply");
    StabilizerReport stab = brute_force_stabilizer(omega, opts);
    return pow_big(omega.field().p(), choose2(omega.dim()) - omega.dim()) * stab.order;
}

BrPicReport brpic_report(const H3Class& omega, const SearchOptions& opts) {
    BrPicReport r;
    r.center = center_profile(omega);
    r.stab = brute_force_stabilizer(omega, opts);
    r.kernel_exponent = static_cast<int>(choose2(r.center.n)) - r.center.n + r.center.rad_dim;
    r.induction_image_order = pow_big(r.center.p, r.kernel_exponent) * r.stab.order;
    if (r.center.rad_dim == 0)
        r.brpic_order = pow_big(r.center.p, choose2(r.center.n) - r.center.n) * r.stab.order;
    return r;
}

}  // namespace brpic
