#include "brpic/zoo.hpp"

namespace brpic {

namespace {

BigInt pow_big(std::uint32_t p, long long e) {
    BigInt r = 1;
    for (long long i = 0; i < e; ++i) r *= p;
    return r;
}

BigInt sp_order(int n, std::uint32_t p) {
    if (n <= 0 || n % 2) throw UnknownGroup("Sp needs positive even dimension");
    int m = n / 2;
    BigInt r = pow_big(p, static_cast<long long>(m) * m);
    for (int i = 1; i <= m; ++i) r *= pow_big(p, 2 * i) - 1;
    return r;
}

BigInt so_odd_order(int n, std::uint32_t p) {
    if (n <= 0 || n % 2 == 0) throw UnknownGroup("SO needs odd dimension");
    int m = (n - 1) / 2;
    BigInt r = pow_big(p, static_cast<long long>(m) * m);
    for (int i = 1; i <= m; ++i) r *= pow_big(p, 2 * i) - 1;
    return r;
}

BigInt o_even_order(int n, std::uint32_t p, int eps) {
    if (n <= 0 || n % 2) throw UnknownGroup("O+/O- need positive even dimension");
    int m = n / 2;
    BigInt r = 2 * pow_big(p, static_cast<long long>(m) * (m - 1));
    r *= pow_big(p, m) - eps;
    for (int i = 1; i <= m - 1; ++i) r *= pow_big(p, 2 * i) - 1;
    return r;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

BigInt named_order(std::string_view name, int n, std::uint32_t p) {
    PrimeField f = PrimeField::unguarded(p);
    if (name == "GL") return gl_order(f, n);
    if (name == "SL") return gl_order(f, n) / (p - 1);
    if (name == "Sp") return sp_order(n, p);
    if (name == "SO") return so_odd_order(n, p);
    if (name == "O+") return o_even_order(n, p, +1);
    if (name == "O-") return o_even_order(n, p, -1);
    if (name == "AffO2") {
        if (n != 2) throw UnknownGroup("AffO2 is 2-dimensional");
        return pow_big(p, 2) * 2 * (p - 1);
    }
    if (name == "AffSp") return pow_big(p, n) * sp_order(n, p);
    if (name == "AffSpx") return pow_big(p, n) * sp_order(n, p) * (p - 1);
    if (name == "S") return factorial(n);
    throw UnknownGroup("unknown group family: " + std::string(name));
}

std::optional<ZooMatch> find_named_match(const BigInt& order, std::uint32_t p, int ambient_dim) {
    auto fmt = [&](std::string_view family, int n) {
        std::string s(family);
        if (family == "S") return "S_" + std::to_string(n);
        return s + "_" + std::to_string(n) + "(F_" + std::to_string(p) + ")";
    };
    auto consider = [&](std::string_view family, int n) -> std::optional<ZooMatch> {
        try {
            BigInt o = named_order(family, n, p);
            if (o == order) return ZooMatch{fmt(family, n), o};
        } catch (const UnknownGroup&) {
        }
        return std::nullopt;
    };
    const int lo = 1, hi = ambient_dim + 1;
    for (int m = 2; m <= 12; ++m)
        if (auto r = consider("S", m)) return r;
    for (const char* family : {"SL", "Sp", "SO", "O+", "O-"})
        for (int n = lo; n <= hi; ++n)
            if (auto r = consider(family, n)) return r;
    if (auto r = consider("AffO2", 2)) return r;
    for (const char* family : {"AffSp", "AffSpx"})
        for (int n = 2; n <= hi; n += 2)
            if (auto r = consider(family, n)) return r;
    for (int n = lo; n <= hi; ++n)
        if (auto r = consider("GL", n)) return r;
    return std::nullopt;
}

}  // namespace brpic
