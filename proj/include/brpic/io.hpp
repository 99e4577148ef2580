#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "brpic/h3.hpp"
#include "brpic/lie.hpp"

namespace brpic {

// File schemas (all versioned with a top-level "schema": 1):
//
// *.form.json — an H^3(V_n, k^x) class:
//   odd p:  {"schema":1, "p":3, "n":3,
//            "alt":[{"idx":[0,1,2], "c":1}], "sym":[{"idx":[0,1], "c":1}]}
//   p = 2:  {"schema":1, "p":2, "n":3, "cubic":[{"idx":[0,1,2], "c":1}]}
//   Indices are 0-based and sorted per the model; coefficients are arbitrary
//   integers, reduced mod p on load.
//
// *.lie.json — a Lie algebra with an optional invariant form:
//   {"schema":1, "p":5, "dim":3, "basis":["e","f","h"],
//    "brackets":[{"i":0,"j":1,"terms":[{"k":2,"c":1}]}, ...],
//    "form":[[0,4,0],[4,0,0],[0,0,3]]}
//   Brackets are given once per unordered pair; the form defaults to the
//   Killing form when absent.
//
// *.gens.json — a generator list for the closure method:
//   {"schema":1, "p":3, "n":5, "generators":[[[row],[row],...], ...]}

H3Class load_form(const nlohmann::json& j, bool lift_guards = false);
H3Class load_form_file(const std::string& path, bool lift_guards = false);
nlohmann::json dump_form(const H3Class& omega);

struct LieDocument {
    LieAlgebraFp algebra;
    std::vector<std::string> basis_names;
    bool form_given = false;
    FpMatrix form;  // meaningful only when form_given
};

LieDocument load_lie(const nlohmann::json& j);
LieDocument load_lie_file(const std::string& path);
nlohmann::json dump_lie(const LieDocument& doc);

std::vector<FpMatrix> load_generators(const nlohmann::json& j, bool lift_guards = false);
std::vector<FpMatrix> load_generators_file(const std::string& path, bool lift_guards = false);

nlohmann::json read_json_file(const std::string& path);

}  // namespace brpic
