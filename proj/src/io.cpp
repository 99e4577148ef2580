#include "brpic/io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace brpic {

using nlohmann::json;

namespace {

void check_schema(const json& j, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
    if (!j.contains("schema") || !j.at("schema").is_number_integer() || j.at("schema") != 1)
        throw ParseError(std::string(what) + ": missing or unsupported \"schema\" (expected 1)");
}

std::uint32_t get_prime(const json& j, const char* what) {
    if (!j.contains("p") || !j.at("p").is_number_integer())
        throw ParseError(std::string(what) + ": missing prime \"p\"");
    std::int64_t p = j.at("p").get<std::int64_t>();
    if (p < 2 || p > (1 << 15)) throw ParseError(std::string(what) + ": \"p\" out of range");
    return static_cast<std::uint32_t>(p);
}

int get_dim(const json& j, const char* key, const char* what, bool lift_guards) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw ParseError(std::string(what) + ": missing dimension \"" + key + "\"");
    int n = j.at(key).get<int>();
    if (n < 1) throw ParseError(std::string(what) + ": dimension must be positive");
    if (n > 6 && !lift_guards)
        throw ParseError(std::string(what) + ": n > 6 exceeds the default guard");
    if (n > 8) throw ParseError(std::string(what) + ": n > 8 is not supported");
    return n;
}

std::vector<int> get_idx(const json& term, std::size_t arity, int n, const std::string& where) {
    if (!term.contains("idx") || !term.at("idx").is_array() || term.at("idx").size() != arity)
        throw ParseError(where + ": \"idx\" must be an array of " + std::to_string(arity) +
                         " indices");
    std::vector<int> idx;
    for (const auto& x : term.at("idx")) {
        if (!x.is_number_integer()) throw ParseError(where + ": non-integer index");
        int i = x.get<int>();
        if (i < 0 || i >= n) throw ParseError(where + ": index " + std::to_string(i) + " out of range");
        idx.push_back(i);
    }
    return idx;
}

std::int64_t get_coeff(const json& term, const std::string& where) {
    if (!term.contains("c") || !term.at("c").is_number_integer())
        throw ParseError(where + ": missing integer coefficient \"c\"");
    return term.at("c").get<std::int64_t>();
}

}  // namespace

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

H3Class load_form(const json& j, bool lift_guards) {
    check_schema(j, "form document");
    std::uint32_t p = get_prime(j, "form document");
    PrimeField field = lift_guards ? PrimeField::unguarded(p) : PrimeField(p);
    int n = get_dim(j, "n", "form document", lift_guards);

    if (field.p() == 2) {
        if (j.contains("alt") || j.contains("sym"))
            throw ParseError("form document: p = 2 uses \"cubic\" terms, not \"alt\"/\"sym\"");
        SymForm cubic(field, n, 3);
        if (j.contains("cubic")) {
            if (!j.at("cubic").is_array()) throw ParseError("form document: \"cubic\" must be an array");
            std::size_t t = 0;
            for (const auto& term : j.at("cubic")) {
                std::string where = "cubic[" + std::to_string(t++) + "]";
                cubic.add_term(get_idx(term, 3, n, where), get_coeff(term, where));
            }
        }
        return H3Class::even(sym3_reduce(cubic));
    }

    if (j.contains("cubic"))
        throw ParseError("form document: \"cubic\" terms are the p = 2 model");
    WedgeForm alt(field, n, 3);
    SymForm sym(field, n, 2);
    if (j.contains("alt")) {
        if (!j.at("alt").is_array()) throw ParseError("form document: \"alt\" must be an array");
        std::size_t t = 0;
        for (const auto& term : j.at("alt")) {
            std::string where = "alt[" + std::to_string(t++) + "]";
            auto idx = get_idx(term, 3, n, where);
            if (!(idx[0] < idx[1] && idx[1] < idx[2]))
                throw ParseError(where + ": wedge indices must be strictly increasing");
            alt.add_term(idx, get_coeff(term, where));
        }
    }
    if (j.contains("sym")) {
        if (!j.at("sym").is_array()) throw ParseError("form document: \"sym\" must be an array");
        std::size_t t = 0;
        for (const auto& term : j.at("sym")) {
            std::string where = "sym[" + std::to_string(t++) + "]";
            auto idx = get_idx(term, 2, n, where);
            if (idx[0] > idx[1]) throw ParseError(where + ": sym indices must be sorted");
            sym.add_term(idx, get_coeff(term, where));
        }
    }
    return H3Class::odd(std::move(alt), std::move(sym));
}

H3Class load_form_file(const std::string& path, bool lift_guards) {
    return load_form(read_json_file(path), lift_guards);
}

json dump_form(const H3Class& omega) {
    json j;
    j["schema"] = 1;
    j["p"] = omega.field().p();
    j["n"] = omega.dim();
    if (omega.odd_model()) {
        j["alt"] = json::array();
        for (const auto& [idx, c] : omega.alt().terms())
            j["alt"].push_back({{"idx", idx}, {"c", c}});
        j["sym"] = json::array();
        for (const auto& [idx, c] : omega.sym().terms())
            j["sym"].push_back({{"idx", idx}, {"c", c}});
    } else {
        j["cubic"] = json::array();
        for (const auto& [idx, c] : omega.coset().representative().terms())
            j["cubic"].push_back({{"idx", idx}, {"c", c}});
    }
    return j;
}

LieDocument load_lie(const json& j) {
    check_schema(j, "lie document");
    std::uint32_t p = get_prime(j, "lie document");
    PrimeField field(p);
    int dim = get_dim(j, "dim", "lie document", false);

    std::vector<std::string> names;
    if (j.contains("basis")) {
        if (!j.at("basis").is_array() || static_cast<int>(j.at("basis").size()) != dim)
            throw ParseError("lie document: \"basis\" must list exactly dim names");
        for (const auto& s : j.at("basis")) names.push_back(s.get<std::string>());
    } else {
        for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
    }

    std::map<std::pair<int, int>, std::vector<LieAlgebraFp::BracketTerm>> brackets;
    if (!j.contains("brackets") || !j.at("brackets").is_array())
        throw ParseError("lie document: missing \"brackets\" array");
    std::size_t t = 0;
    for (const auto& br : j.at("brackets")) {
        std::string where = "brackets[" + std::to_string(t++) + "]";
        if (!br.contains("i") || !br.contains("j") || !br.contains("terms"))
            throw ParseError(where + ": needs \"i\", \"j\", \"terms\"");
        int i = br.at("i").get<int>(), jj = br.at("j").get<int>();
        std::vector<LieAlgebraFp::BracketTerm> terms;
        for (const auto& term : br.at("terms")) {
            if (!term.contains("k") || !term.contains("c"))
                throw ParseError(where + ": each term needs \"k\" and \"c\"");
            terms.push_back({term.at("k").get<int>(), term.at("c").get<std::int64_t>()});
        }
        if (brackets.count({i, jj}))
            throw ParseError(where + ": duplicate bracket [" + std::to_string(i) + "," +
                             std::to_string(jj) + "]");
        brackets[{i, jj}] = std::move(terms);
    }

    LieAlgebraFp algebra = [&]() {
        try {
            return LieAlgebraFp(field, dim, brackets);
        } catch (const Error& e) {
            throw ParseError(std::string("lie document: ") + e.what());
        }
    }();

    bool form_given = j.contains("form");
    FpMatrix form(field, dim, dim);
    if (form_given) {
        const auto& fm = j.at("form");
        if (!fm.is_array() || static_cast<int>(fm.size()) != dim)
            throw ParseError("lie document: \"form\" must be a dim x dim matrix");
        for (int i = 0; i < dim; ++i) {
            if (!fm[static_cast<std::size_t>(i)].is_array() ||
                static_cast<int>(fm[static_cast<std::size_t>(i)].size()) != dim)
                throw ParseError("lie document: \"form\" row " + std::to_string(i) +
                                 " has the wrong length");
            for (int k = 0; k < dim; ++k)
                form.set(i, k, fm[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]
                                    .get<std::int64_t>());
        }
    }
    return LieDocument{std::move(algebra), std::move(names), form_given, std::move(form)};
}

LieDocument load_lie_file(const std::string& path) { return load_lie(read_json_file(path)); }

json dump_lie(const LieDocument& doc) {
    json j;
    j["schema"] = 1;
    j["p"] = doc.algebra.field().p();
    j["dim"] = doc.algebra.dim();
    j["basis"] = doc.basis_names;
    j["brackets"] = json::array();
    for (int i = 0; i < doc.algebra.dim(); ++i)
        for (int k = i + 1; k < doc.algebra.dim(); ++k) {
            json terms = json::array();
            for (int l = 0; l < doc.algebra.dim(); ++l)
                if (doc.algebra.structure(i, k, l))
                    terms.push_back({{"k", l}, {"c", doc.algebra.structure(i, k, l)}});
            if (!terms.empty()) j["brackets"].push_back({{"i", i}, {"j", k}, {"terms", terms}});
        }
    if (doc.form_given) {
        json rows = json::array();
        for (int i = 0; i < doc.algebra.dim(); ++i) {
            json row = json::array();
            for (int k = 0; k < doc.algebra.dim(); ++k) row.push_back(doc.form.at(i, k));
            rows.push_back(row);
        }
        j["form"] = rows;
    }
    return j;
}

std::vector<FpMatrix> load_generators(const json& j, bool lift_guards) {
    check_schema(j, "generators document");
    std::uint32_t p = get_prime(j, "generators document");
    PrimeField field = lift_guards ? PrimeField::unguarded(p) : PrimeField(p);
    int n = get_dim(j, "n", "generators document", lift_guards);
    if (!j.contains("generators") || !j.at("generators").is_array())
        throw ParseError("generators document: missing \"generators\" array");
    std::vector<FpMatrix> gens;
    std::size_t t = 0;
    for (const auto& gm : j.at("generators")) {
        std::string where = "generators[" + std::to_string(t++) + "]";
        if (!gm.is_array() || static_cast<int>(gm.size()) != n)
            throw ParseError(where + ": expected " + std::to_string(n) + " rows");
        FpMatrix m(field, n, n);
        for (int i = 0; i < n; ++i) {
            const auto& row = gm[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ParseError(where + ": row " + std::to_string(i) + " has the wrong length");
            for (int k = 0; k < n; ++k)
                m.set(i, k, row[static_cast<std::size_t>(k)].get<std::int64_t>());
        }
        gens.push_back(std::move(m));
    }
    return gens;
}

std::vector<FpMatrix> load_generators_file(const std::string& path, bool lift_guards) {
    return load_generators(read_json_file(path), lift_guards);
}

}  // namespace brpic
