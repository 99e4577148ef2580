#include "brpic/extraspecial.hpp"

namespace brpic {

ExtraSpecialSpec::ExtraSpecialSpec(std::uint32_t p_, int n_, Kind kind_)
    : field(p_), n(n_), kind(kind_) {
    if (n < 1) throw WrongShape("extra special spec needs n >= 1");
}

H2FpClass kappa_class(const ExtraSpecialSpec& spec) {
    H2FpClass kappa(spec.field, 2 * spec.n);
    for (int i = 0; i < spec.n; ++i) kappa.add_pair(2 * i, 2 * i + 1, 1);
    if (spec.kind == ExtraSpecialSpec::Kind::Q) {
        if (spec.field.p() == 2) {
            kappa.add_carry(0, 1);
            kappa.add_carry(1, 1);
        } else {
            kappa.add_carry(0, 1);
        }
    }
    return kappa;
}

H3Class omega_class(const ExtraSpecialSpec& spec) { return cup_x0(kappa_class(spec)); }

ExpectedResult expected_result(const ExtraSpecialSpec& spec) {
    const std::uint32_t p = spec.field.p();
    const bool is_d = spec.kind == ExtraSpecialSpec::Kind::D;
    if (p == 2) {
        if (spec.n == 1) {
            if (is_d) return {"S_4", named_order("S", 4, 2), "stabilizer of omega_D on V_3 over F_2"};
            return {"S_3", named_order("S", 3, 2), "stabilizer of omega_Q on V_3 over F_2"};
        }
        return {"Sp_" + std::to_string(2 * spec.n) + "(F_2)", named_order("Sp", 2 * spec.n, 2),
                "both stabilizers are the full symplectic group for n > 1 over F_2"};
    }
    if (spec.n == 1) {
        if (is_d)
            return {"SL_3(F_" + std::to_string(p) + ")", named_order("SL", 3, p),
                    "stabilizer of omega_D on V_3, odd p"};
        return {"AffO_2(F_" + std::to_string(p) + ")", named_order("AffO2", 2, p),
                "stabilizer of omega_Q on V_3, odd p"};
    }
    if (is_d)
        return {"AffSp_" + std::to_string(2 * spec.n) + "(F_" + std::to_string(p) + ") x| F_" +
                    std::to_string(p) + "^x",
                named_order("AffSpx", 2 * spec.n, p), "stabilizer of omega_D, odd p, n > 1"};
    throw NotTabulated("no identification on record for kind Q with odd p and n > 1");
}

}  // namespace brpic
