// brpic: inspect H^3(V_n, k^x), stabilizers in GL_n(F_p), and Brauer-Picard
// group orders for pointed categories on elementary abelian p-groups.
//
// Exit codes: 0 success, 1 oracle mismatch, 2 size guard, 3 hypothesis
// violation (degenerate alternating part).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "brpic/extraspecial.hpp"
#include "brpic/io.hpp"
#include "brpic/lie.hpp"
#include "brpic/orders.hpp"

using namespace brpic;
using nlohmann::json;

namespace {

constexpr int kExitOracleMismatch = 1;
constexpr int kExitSizeGuard = 2;
constexpr int kExitHypothesis = 3;

struct CommonOpts {
    int workers = 0;
    bool unguarded = false;
    bool emit_json = false;
};

SearchOptions search_options(const CommonOpts& c) {
    SearchOptions s;
    s.workers = c.workers;
    if (c.unguarded) s.max_group_order = ~0ull;
    return s;
}

void add_common(CLI::App* cmd, CommonOpts& c, bool with_workers = true) {
    if (with_workers)
        cmd->add_option("--workers", c.workers,
                        "worker threads (default: BRPIC_WORKERS, then hardware)");
    cmd->add_flag("--unguarded", c.unguarded, "lift the sweep size guards (can run very long)");
    cmd->add_flag("--json", c.emit_json, "print a JSON report to stdout");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string method_name(StabMethod m) {
    switch (m) {
        case StabMethod::brute_force: return "brute_force";
        case StabMethod::closure: return "closure";
        default: return "membership_only";
    }
}

json stab_json(const StabilizerReport& r) {
    json j;
    j["order"] = r.order.str();
    j["method"] = method_name(r.method);
    j["enumeration_order"] = r.enumeration_order;
    if (r.named_match) {
        j["named_match"] = {{"name", r.named_match->name},
                            {"order", r.named_match->order.str()},
                            {"relation", "order-consistent"}};
    }
    if (!r.element_sample.empty()) j["element_sample_size"] = r.element_sample.size();
    return j;
}

void print_stab(const StabilizerReport& r) {
    std::printf("  |Stab(omega)|     %s\n", r.order.str().c_str());
    std::printf("  method            %s\n", method_name(r.method).c_str());
    std::printf("  enumeration       %s\n", r.enumeration_order.c_str());
    if (r.named_match)
        std::printf("  named match       %s (order-consistent, order %s)\n",
                    r.named_match->name.c_str(), r.named_match->order.str().c_str());
    else
        std::printf("  named match       none in the zoo\n");
}

json form_summary(const H3Class& omega) {
    json j = dump_form(omega);
    j["alt_nondegenerate"] = is_nondegenerate(omega.alt_part());
    return j;
}

int cmd_h3(std::uint32_t p, int n, const CommonOpts& c) {
    PrimeField field = c.unguarded ? PrimeField::unguarded(p) : PrimeField(p);
    auto basis = h3_basis(field, n);
    long long dim = h3_dim(field, n);
    long long delta_rank = static_cast<long long>(n) * (n - 1) / 2;
    if (c.emit_json) {
        json j;
        j["p"] = p;
        j["n"] = n;
        j["dim"] = dim;
        if (field.p() != 2) {
            long long alt = 0, sym = 0;
            for (const auto& b : basis) (b.alt().is_zero() ? sym : alt)++;
            j["alt_dim"] = alt;
            j["sym_dim"] = sym;
            j["delta_image_rank"] = delta_rank;
        }
        json names = json::array();
        for (const auto& b : basis) names.push_back(dump_form(b));
        j["basis"] = names;
        emit(j);
        return 0;
    }
    std::printf("H^3(V_%d, k^x) over F_%u\n", n, p);
    std::printf("  dim               %lld\n", dim);
    if (field.p() != 2) {
        long long alt = 0, sym = 0;
        for (const auto& b : basis) (b.alt().is_zero() ? sym : alt)++;
        std::printf("  wedge^3 part      %lld\n", alt);
        std::printf("  sym^2 part        %lld\n", sym);
        std::printf("  delta image rank  %lld\n", delta_rank);
    } else {
        std::printf("  model             Sym^3 / <x_i^2 x_j + x_i x_j^2>\n");
    }
    std::printf("  basis\n");
    for (const auto& b : basis) {
        std::string line;
        if (field.p() != 2) {
            for (const auto& [idx, c] : b.alt().terms())
                line += (line.empty() ? "" : " + ") + std::to_string(c) + "*x" +
                        std::to_string(idx[0]) + "^x" + std::to_string(idx[1]) + "^x" +
                        std::to_string(idx[2]);
            for (const auto& [idx, c] : b.sym().terms())
                line += (line.empty() ? "" : " + ") + std::to_string(c) + "*z" +
                        std::to_string(idx[0]) + "z" + std::to_string(idx[1]);
        } else {
            for (const auto& [idx, c] : b.coset().representative().terms())
                line += (line.empty() ? "" : " + ") + std::to_string(c) + "*x" +
                        std::to_string(idx[0]) + "x" + std::to_string(idx[1]) + "x" +
                        std::to_string(idx[2]);
        }
        std::printf("    %s\n", line.c_str());
    }
    return 0;
}

int cmd_stab(const std::string& file, const std::string& method, const std::string& gens_file,
             const CommonOpts& c) {
    H3Class omega = load_form_file(file, c.unguarded);
    StabilizerReport report;
    if (method == "closure") {
        if (gens_file.empty())
            throw CLI::ValidationError("--method closure requires --gens FILE");
        auto gens = load_generators_file(gens_file, c.unguarded);
        ClosureOptions copts;
        if (c.unguarded) copts.memory_guard_bytes = static_cast<std::size_t>(4) << 30;
        report = closure(gens, omega, copts);
    } else {
        report = brute_force_stabilizer(omega, search_options(c));
    }
    if (c.emit_json) {
        json j;
        j["omega"] = form_summary(omega);
        j["stabilizer"] = stab_json(report);
        emit(j);
        return 0;
    }
    std::printf("stabilizer of %s in GL_%d(F_%u)\n", file.c_str(), omega.dim(),
                omega.field().p());
    print_stab(report);
    return 0;
}

int cmd_brpic(const std::string& file, const CommonOpts& c) {
    H3Class omega = load_form_file(file, c.unguarded);
    CenterProfile center = center_profile(omega);
    if (!center.pt_is_lagrangian) {
        std::fprintf(stderr,
                     "omega_alt is degenerate (radical dimension %d): the exact-sequence "
                     "order formula needs a non-degenerate alternating part, refusing.\n",
                     center.rad_dim);
        return kExitHypothesis;
    }
    BrPicReport report = brpic_report(omega, search_options(c));
    if (c.emit_json) {
        json j;
        j["omega"] = form_summary(omega);
        j["center"] = {{"rad_dim", center.rad_dim},
                       {"inv_center_order", center.inv_center_order.str()},
                       {"is_center_pointed", center.is_center_pointed},
                       {"pt_is_lagrangian", center.pt_is_lagrangian}};
        j["stabilizer"] = stab_json(report.stab);
        j["kernel_exponent"] = report.kernel_exponent;
        j["induction_image_order"] = report.induction_image_order.str();
        j["brpic_order"] = report.brpic_order->str();
        emit(j);
        return 0;
    }
    std::printf("Brauer-Picard order for %s (p = %u, n = %d)\n", file.c_str(), center.p,
                center.n);
    std::printf("  rad(omega_alt)    0 (non-degenerate)\n");
    std::printf("  |Inv(Z)|          %s\n", center.inv_center_order.str().c_str());
    print_stab(report.stab);
    std::printf("  kernel exponent   %d  (|BrPic| = p^%d * |Stab|)\n", report.kernel_exponent,
                report.kernel_exponent);
    std::printf("  |image of ind|    %s\n", report.induction_image_order.str().c_str());
    std::printf("  |BrPic|           %s\n", report.brpic_order->str().c_str());
    return 0;
}

int cmd_extraspecial(std::uint32_t p, int n, const std::string& type, bool verify,
                     const std::string& out, const CommonOpts& c) {
    ExtraSpecialSpec spec(p, n,
                          type == "D" ? ExtraSpecialSpec::Kind::D : ExtraSpecialSpec::Kind::Q);
    H2FpClass kappa = kappa_class(spec);
    H3Class omega = omega_class(spec);

    json kappa_json;
    {
        json pairs = json::array();
        for (const auto& [key, coef] : kappa.pairs)
            pairs.push_back({{"idx", {key.first, key.second}}, {"c", coef}});
        json carries = json::array();
        for (int i = 0; i < kappa.m; ++i)
            if (kappa.carry[static_cast<std::size_t>(i)])
                carries.push_back({{"i", i}, {"c", kappa.carry[static_cast<std::size_t>(i)]}});
        kappa_json = {{"pairs", pairs}, {"carries", carries}};
    }

    std::string expected_text;
    json expected_json;
    try {
        ExpectedResult e = expected_result(spec);
        expected_text = e.group_name + " of order " + e.order.str() + " (" + e.claim + ")";
        expected_json = {{"group", e.group_name}, {"order", e.order.str()}, {"claim", e.claim}};
    } catch (const NotTabulated& e) {
        expected_text = std::string("none on record (") + e.what() + ")";
        expected_json = nullptr;
    }

    if (!out.empty()) {
        json doc = dump_form(omega);
        std::ofstream f(out);
        if (!f) throw ParseError("cannot write " + out);
        f << doc.dump(2) << "\n";
    }

    json j;
    j["p"] = p;
    j["n"] = n;
    j["type"] = type;
    j["kappa"] = kappa_json;
    j["omega"] = form_summary(omega);
    j["expected"] = expected_json;

    bool pass = true;
    if (verify) {
        StabilizerReport report = brute_force_stabilizer(omega, search_options(c));
        j["stabilizer"] = stab_json(report);
        if (!expected_json.is_null()) {
            BigInt want(expected_json["order"].get<std::string>());
            pass = (report.order == want);
            j["verified"] = pass;
            if (!c.emit_json)
                std::printf("%s  |Stab| = %s, expected %s\n", pass ? "PASS" : "FAIL",
                            report.order.str().c_str(), want.str().c_str());
        } else if (!c.emit_json) {
            std::printf("computed |Stab| = %s (no tabulated identification to compare)\n",
                        report.order.str().c_str());
        }
    }
    if (c.emit_json) {
        emit(j);
    } else {
        std::printf("extra special group, p = %u, n = %d, kind %s (order p^%d)\n", p, n,
                    type.c_str(), 2 * n + 1);
        std::printf("  omega             %s\n", dump_form(omega).dump().c_str());
        std::printf("  expected          %s\n", expected_text.c_str());
        if (!out.empty()) std::printf("  wrote             %s\n", out.c_str());
    }
    return pass ? 0 : kExitOracleMismatch;
}

int cmd_lie(const std::string& file, bool verify, const CommonOpts& c) {
    LieDocument doc = load_lie_file(file);
    const LieAlgebraFp& g = doc.algebra;
    MetricForm metric = doc.form_given ? MetricForm(g, doc.form) : killing_form(g);
    H3Class omega = omega_from_metric(g, metric);

    json j;
    j["p"] = g.field().p();
    j["dim"] = g.dim();
    j["form_source"] = doc.form_given ? "file" : "killing";
    {
        json rows = json::array();
        for (int i = 0; i < g.dim(); ++i) {
            json row = json::array();
            for (int k = 0; k < g.dim(); ++k) row.push_back(metric.b.at(i, k));
            rows.push_back(row);
        }
        j["form"] = rows;
    }
    j["omega"] = form_summary(omega);

    if (!c.emit_json) {
        std::printf("metric Lie algebra from %s over F_%u, dim %d\n", file.c_str(),
                    g.field().p(), g.dim());
        std::printf("  form              %s\n", j["form"].dump().c_str());
        std::printf("  omega             %s\n", dump_form(omega).dump().c_str());
    }
    if (verify) {
        BrPicReport report = autm_stab_report(g, metric, search_options(c));
        j["stabilizer"] = stab_json(report.stab);
        j["brpic_order"] = report.brpic_order->str();
        if (!c.emit_json) {
            print_stab(report.stab);
            std::printf("  |BrPic|           %s\n", report.brpic_order->str().c_str());
        }
    }
    if (c.emit_json) emit(j);
    return 0;
}

int cmd_beta_check(std::uint32_t p, int n, int samples, const CommonOpts& c) {
    PrimeField field = c.unguarded ? PrimeField::unguarded(p) : PrimeField(p);
    constexpr std::uint64_t kSeed = 0xbe7a0bacULL;
    auto rng = std::mt19937_64(kSeed);
    std::uint64_t checked = 0, mismatches = 0;
    json failures = json::array();

    auto check_one = [&](const H3Class& omega, const FpVector& v, const char* tag) {
        Cocycle3 coc = explicit_representative(omega);
        WedgeForm lhs = two_cocycle_class(field, n, beta_map(v, coc));
        WedgeForm rhs = interior_derivation(v, omega.alt_part());
        ++checked;
        if (lhs != rhs) {
            ++mismatches;
            json f;
            f["omega"] = dump_form(omega);
            std::vector<int> coords;
            for (int i = 0; i < n; ++i) coords.push_back(static_cast<int>(v[i]));
            f["v"] = coords;
            f["kind"] = tag;
            failures.push_back(f);
        }
    };

    for (const auto& omega : h3_basis(field, n))
        for_each_point(field, n, [&](const FpVector& v) { check_one(omega, v, "basis"); });

    std::uint64_t side = 1;
    for (int i = 0; i < n; ++i) side *= field.p();
    for (int t = 0; t < samples; ++t) {
        H3Class omega = [&]() {
            if (field.p() == 2) {
                SymForm s(field, n, 3);
                for (int k = 0; k < 2 * n; ++k) {
                    std::vector<int> idx = {static_cast<int>(rng() % n),
                                            static_cast<int>(rng() % n),
                                            static_cast<int>(rng() % n)};
                    s.add_term(idx, static_cast<std::int64_t>(rng() % 2));
                }
                return H3Class::even(sym3_reduce(s));
            }
            WedgeForm a(field, n, 3);
            SymForm s(field, n, 2);
            for (int k = 0; k < 2 * n; ++k) {
                int i = static_cast<int>(rng() % n), jj = static_cast<int>(rng() % n),
                    kk = static_cast<int>(rng() % n);
                if (i != jj && jj != kk && i != kk)
                    a.add_term({i, jj, kk}, static_cast<std::int64_t>(rng() % field.p()));
                s.add_term({i, jj}, static_cast<std::int64_t>(rng() % field.p()));
            }
            return H3Class::odd(a, s);
        }();
        check_one(omega, FpVector::from_code(field, n, rng() % side), "sampled");
    }

    if (c.emit_json) {
        json j;
        j["p"] = p;
        j["n"] = n;
        j["checked"] = checked;
        j["mismatches"] = mismatches;
        j["failures"] = failures;
        emit(j);
    } else {
        std::printf("beta oracle over F_%u, n = %d: class(beta_v) vs iota_v(omega_alt)\n", p, n);
        std::printf("  checked           %llu\n", static_cast<unsigned long long>(checked));
        std::printf("  mismatches        %llu\n", static_cast<unsigned long long>(mismatches));
        if (mismatches) std::printf("%s\n", failures.dump(2).c_str());
        std::printf("%s\n", mismatches ? "FAIL" : "PASS");
    }
    return mismatches ? kExitOracleMismatch : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brauer-Picard group orders of pointed fusion p-categories on V_n"};
    app.require_subcommand(1);

    // h3
    std::uint32_t h3_p = 3;
    int h3_n = 3;
    CommonOpts h3_c;
    auto* h3 = app.add_subcommand("h3", "dimensions and basis of H^3(V_n, k^x)");
    h3->add_option("--p", h3_p, "prime")->required();
    h3->add_option("--n", h3_n, "dimension of V_n")->required();
    add_common(h3, h3_c, false);

    // stab
    std::string stab_file, stab_method = "brute", stab_gens;
    CommonOpts stab_c;
    auto* stab = app.add_subcommand("stab", "stabilizer of a form file in GL_n(F_p)");
    stab->add_option("file", stab_file, "*.form.json input")->required();
    stab->add_option("--method", stab_method, "brute|closure (default brute)")
        ->check(CLI::IsMember({"brute", "closure"}));
    stab->add_option("--gens", stab_gens, "*.gens.json generators for the closure method");
    add_common(stab, stab_c);

    // brpic
    std::string brpic_file;
    CommonOpts brpic_c;
    auto* brpic_cmd = app.add_subcommand("brpic", "Brauer-Picard order of a form file");
    brpic_cmd->add_option("file", brpic_file, "*.form.json input")->required();
    add_common(brpic_cmd, brpic_c);

    // extraspecial
    std::uint32_t es_p = 2;
    int es_n = 1;
    std::string es_type = "D", es_out;
    bool es_verify = false;
    CommonOpts es_c;
    auto* es = app.add_subcommand("extraspecial",
                                  "kappa, omega and stabilizer data for extra special groups");
    es->add_option("--p", es_p, "prime")->required();
    es->add_option("--n", es_n, "half-rank: the group has order p^(2n+1)")->required();
    es->add_option("--type", es_type, "D (exponent p) or Q (exponent p^2)")
        ->required()
        ->check(CLI::IsMember({"D", "Q"}));
    es->add_flag("--verify", es_verify, "run the stabilizer sweep and compare orders");
    es->add_option("--out", es_out, "write omega as a *.form.json file");
    add_common(es, es_c);

    // lie
    std::string lie_file;
    bool lie_verify = false;
    CommonOpts lie_c;
    auto* lie = app.add_subcommand("lie", "omega^g and stabilizer data for a metric Lie algebra");
    lie->add_option("file", lie_file, "*.lie.json input")->required();
    lie->add_flag("--verify", lie_verify, "run the stabilizer sweep");
    add_common(lie, lie_c);

    // beta-check
    std::uint32_t bc_p = 3;
    int bc_n = 3, bc_samples = 0;
    CommonOpts bc_c;
    auto* bc = app.add_subcommand("beta-check",
                                  "sweep the beta oracle: class(beta_v) = iota_v(omega_alt)");
    bc->add_option("--p", bc_p, "prime")->required();
    bc->add_option("--n", bc_n, "dimension of V_n")->required();
    bc->add_option("--samples", bc_samples, "extra random (omega, v) pairs");
    add_common(bc, bc_c, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (h3->parsed()) return cmd_h3(h3_p, h3_n, h3_c);
        if (stab->parsed()) return cmd_stab(stab_file, stab_method, stab_gens, stab_c);
        if (brpic_cmd->parsed()) return cmd_brpic(brpic_file, brpic_c);
        if (es->parsed()) return cmd_extraspecial(es_p, es_n, es_type, es_verify, es_out, es_c);
        if (lie->parsed()) return cmd_lie(lie_file, lie_verify, lie_c);
        if (bc->parsed()) return cmd_beta_check(bc_p, bc_n, bc_samples, bc_c);
    } catch (const SizeGuardExceeded& e) {
        std::fprintf(stderr, "size guard: %s\n", e.what());
        return kExitSizeGuard;
    } catch (const MemoryGuardExceeded& e) {
        std::fprintf(stderr, "memory guard: %s\n", e.what());
        return kExitSizeGuard;
    } catch (const NondegenerateRequired& e) {
        std::fprintf(stderr, "hypothesis violation: %s\n", e.what());
        return kExitHypothesis;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
