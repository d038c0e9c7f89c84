// Command-line surface for the exact incidence-matrix toolkit: parses named
// matrix documents, runs the requested analyses, and emits a deterministic
// machine-readable report on stdout (human summary on stderr).
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation, 4 budget
// exhaustion or internal failure.

#include "staf/corpus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace staf;

namespace {

constexpr const char* kToolVersion = "1.0.0";

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& w) : std::runtime_error(w) {}
};

struct MatrixDocument {
    std::string name;
    IntMat matrix;
    std::optional<CompanionSpec> companion;
};

Integer parse_entry(const json& v, const std::string& where) {
    try {
        if (v.is_string()) {
            std::string s = v.get<std::string>();
            if (s.empty()) throw parse_error(where + ": empty entry");
            return Integer(s);
        }
        if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
    } catch (const std::invalid_argument&) {
        throw parse_error(where + ": entry is not a decimal integer");
    }
    throw parse_error(where + ": entry must be a decimal string or integer");
}

MatrixDocument parse_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("name") || !doc.contains("matrix"))
        throw parse_error(path + ": document needs 'name' and 'matrix'");
    MatrixDocument md;
    md.name = doc["name"].get<std::string>();
    const json& rows = doc["matrix"];
    if (!rows.is_array() || rows.empty()) throw parse_error(path + ": matrix must be a nonempty array");
    std::vector<std::vector<Integer>> entries;
    size_t width = 0;
    for (const auto& row : rows) {
        if (!row.is_array()) throw parse_error(path + ": matrix rows must be arrays");
        std::vector<Integer> r;
        for (const auto& v : row) {
            Integer x = parse_entry(v, path);
            if (x < 0) throw parse_error(path + ": negative entry");
            r.push_back(x);
        }
        if (width == 0)
            width = r.size();
        else if (r.size() != width)
            throw parse_error(path + ": ragged matrix");
        entries.push_back(std::move(r));
    }
    md.matrix = IntMat::from_rows(entries);
    if (doc.contains("companion_spec")) {
        CompanionSpec spec;
        for (const auto& v : doc["companion_spec"]) spec.m.push_back(parse_entry(v, path));
        try {
            spec.validate();
        } catch (const precondition_error& e) {
            throw parse_error(path + ": invalid companion_spec: " + e.what());
        }
        if (companion_matrix(spec) != md.matrix)
            throw parse_error(path + ": companion_spec does not regenerate the matrix");
        md.companion = spec;
    }
    return md;
}

json matrix_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json poly_json(const IntPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    json out;
    out["coefficients"] = std::move(coeffs);
    out["display"] = p.to_string();
    return out;
}

json algebraic_json(const AlgebraicNumber& a) {
    json out;
    out["minpoly"] = poly_json(a.minpoly());
    out["interval"] = json::array({a.lo().get_str(), a.hi().get_str()});
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", a.to_double());
    out["approx"] = buf;
    return out;
}

json nf_vector_json(const std::vector<NFElem>& v) {
    json out = json::array();
    for (const auto& e : v) {
        json coords = json::array();
        for (const auto& c : e.coords()) coords.push_back(c.get_str());
        out.push_back(std::move(coords));
    }
    return out;
}

json obstruction_json(const Obstruction& o) {
    json out;
    out["kind"] = to_string(o.kind);
    out["detail"] = o.detail;
    json ev;
    for (const auto& [k, v] : o.evidence) ev[k] = v;
    out["evidence"] = std::move(ev);
    return out;
}

json certificate_json(const CStarCertificate& cert) {
    json out;
    out["a1"] = matrix_json(cert.a1);
    out["n_exponents"] = cert.n_exponents;
    out["m_exponents"] = cert.m_exponents;
    json amats = json::array(), bmats = json::array();
    for (const auto& m : cert.a_mats) amats.push_back(matrix_json(m));
    for (const auto& m : cert.b_mats) bmats.push_back(matrix_json(m));
    out["a_matrices"] = std::move(amats);
    out["b_matrices"] = std::move(bmats);
    out["growth_constant"] = cert.growth.c_sufficient;
    out["growth_constant_window"] = cert.growth.c_window;
    out["window_start"] = cert.growth.n0;
    out["nilpotence_ok"] = cert.nilpotence_ok;
    json primes = json::array();
    for (const auto& p : cert.det_primes) primes.push_back(p.get_str());
    out["det_primes"] = std::move(primes);
    return out;
}

struct AnalyzeOptions {
    std::vector<std::string> files;
    bool want_charpoly = false, want_pf = false, want_dimgroup = false, want_primitive = false;
    std::vector<long> padic;  // p, m
    std::string check;
    std::string powers = "1..4";
    long budget = 64;
    std::string a1_file;
};

std::pair<unsigned, unsigned> parse_powers(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw parse_error("--powers expects a..b");
    unsigned a = 0, b = 0;
    try {
        a = static_cast<unsigned>(std::stoul(s.substr(0, dots)));
        b = static_cast<unsigned>(std::stoul(s.substr(dots + 2)));
    } catch (const std::exception&) {
        throw parse_error("--powers expects numeric bounds a..b");
    }
    if (a == 0 || b < a) throw parse_error("--powers expects 1 <= a <= b");
    return {a, b};
}

int run_analyze(const AnalyzeOptions& opt) {
    std::vector<MatrixDocument> docs;
    for (const auto& f : opt.files) docs.push_back(parse_document(f));
    json report;
    report["tool"] = "stationary-af";
    report["version"] = kToolVersion;
    report["seed"] = 0;  // placeholder; all computation is deterministic
    json subjects = json::array();
    for (const auto& d : docs) {
        json s;
        s["name"] = d.name;
        s["rows"] = d.matrix.rows();
        s["cols"] = d.matrix.cols();
        s["matrix"] = matrix_json(d.matrix);
        subjects.push_back(std::move(s));
    }
    report["subjects"] = std::move(subjects);
    json checks;

    if (opt.want_charpoly) {
        json arr = json::array();
        for (const auto& d : docs) {
            json c;
            c["name"] = d.name;
            IntPoly cp = charpoly(d.matrix);
            c["charpoly"] = poly_json(cp);
            json factors = json::array();
            for (const auto& [f, mult] : factor_over_Z(cp).factors) {
                json fj;
                fj["factor"] = poly_json(f);
                fj["multiplicity"] = mult;
                factors.push_back(std::move(fj));
            }
            c["factors"] = std::move(factors);
            arr.push_back(std::move(c));
        }
        checks["charpoly"] = std::move(arr);
        std::cerr << "charpoly: done\n";
    }
    if (opt.want_primitive) {
        json arr = json::array();
        for (const auto& d : docs) {
            json c;
            c["name"] = d.name;
            c["primitive"] = is_primitive(d.matrix);
            c["wielandt_bound"] = wielandt_bound(d.matrix.rows());
            arr.push_back(std::move(c));
        }
        checks["primitive"] = std::move(arr);
        std::cerr << "primitive: done\n";
    }
    if (opt.want_pf) {
        json arr = json::array();
        for (const auto& d : docs) {
            PerronData pd = perron_data(d.matrix);
            json c;
            c["name"] = d.name;
            c["lambda"] = algebraic_json(pd.lambda);
            c["pf_factor"] = poly_json(pd.pf_factor);
            c["left"] = nf_vector_json(pd.left);
            c["right"] = nf_vector_json(pd.right);
            c["lambda2_squared"] = algebraic_json(pd.lambda2_squared);
            c["lambda3_squared"] = algebraic_json(pd.lambda3_squared);
            arr.push_back(std::move(c));
        }
        checks["pf"] = std::move(arr);
        std::cerr << "pf: done\n";
    }
    if (opt.want_dimgroup) {
        json arr = json::array();
        for (const auto& d : docs) {
            DimensionGroupRealization dg = dim_group(d.matrix);
            json c;
            c["name"] = d.name;
            c["quotient_index"] = quotient_index(dg).get_str();
            json primes = json::array();
            for (const auto& p : dg.det_primes) primes.push_back(p.get_str());
            c["det_primes"] = std::move(primes);
            c["trace_vector"] = nf_vector_json(dg.perron.left);
            arr.push_back(std::move(c));
        }
        checks["dimgroup"] = std::move(arr);
        std::cerr << "dimgroup: done\n";
    }
    if (!opt.padic.empty()) {
        Integer p(opt.padic[0]);
        int m = static_cast<int>(opt.padic[1]);
        if (!is_probable_prime(p)) throw precondition_error("--padic: p must be prime");
        json arr = json::array();
        for (const auto& d : docs) {
            PAdicLimit lim = p_adic_limit(d.matrix, p, m);
            json c;
            c["name"] = d.name;
            c["p"] = p.get_str();
            json levels = json::array();
            for (const auto& lvl : lim.levels) {
                json l;
                l["m"] = lvl.m;
                l["exponent"] = lvl.exponent;
                l["idempotent"] = matrix_json(lvl.idempotent);
                levels.push_back(std::move(l));
            }
            c["levels"] = std::move(levels);
            arr.push_back(std::move(c));
        }
        checks["padic"] = std::move(arr);
        std::cerr << "padic: done\n";
    }
    if (!opt.check.empty()) {
        if (docs.size() != 2) throw precondition_error("--check needs exactly two matrix documents");
        const IntMat& j = docs[0].matrix;
        const IntMat& k = docs[1].matrix;
        IntMat a1 = opt.a1_file.empty() ? IntMat::identity(j.rows()) : parse_document(opt.a1_file).matrix;
        json c;
        if (opt.check == "se") {
            SESearchResult r = check_shift_equivalence(j, k, static_cast<int>(opt.budget > 8 ? 8 : opt.budget),
                                                       true, 5, 2000000);
            c["result"] = r.kind == SESearchResult::Kind::Found
                              ? "found"
                              : (r.kind == SESearchResult::Kind::NoneProved ? "none-proved" : "none-within-bounds");
            c["note"] = r.note;
            if (r.witness) {
                c["lag"] = r.witness->lag;
                c["a"] = matrix_json(r.witness->a);
                c["b"] = matrix_json(r.witness->b);
            }
        } else if (opt.check == "conjugate") {
            auto [lo, hi] = parse_powers(opt.powers);
            json grid = json::array();
            bool any = false;
            for (unsigned n = lo; n <= hi; ++n)
                for (unsigned m2 = lo; m2 <= hi; ++m2) {
                    ConjugacyWitness w = powers_conjugate_over_Q(j, k, n, m2);
                    json g;
                    g["n"] = n;
                    g["m"] = m2;
                    g["conjugate"] = w.conjugate;
                    grid.push_back(std::move(g));
                    if (w.conjugate) any = true;
                }
            c["grid"] = std::move(grid);
            c["any_conjugate"] = any;
            auto ob = no_power_conjugacy_obstruction(perron_data(j), perron_data(k));
            if (ob) c["obstruction"] = obstruction_json(*ob);
        } else if (opt.check == "t6") {
            SpectralConditions sc = spectral_necessary_conditions(perron_data(j), perron_data(k), a1);
            c["pass"] = sc.pass;
            c["map_respects_split"] = sc.map_respects_split;
            c["projections_positive"] = sc.projections_positive;
            c["inverse_row_nonneg"] = sc.inverse_row_nonneg;
            c["alternate_reading_positive"] = sc.alternate_reading_positive;
            c["repair_power"] = sc.repair_power;
            if (!sc.pass) {
                c["failure"] = sc.failure;
                Obstruction o{Obstruction::Kind::SpectralMapFailure, sc.failure, {}};
                c["obstruction"] = obstruction_json(o);
            }
        } else if (opt.check == "t7") {
            json arr = json::array();
            bool all = true;
            Integer dd = det(j) * det(k);
            for (const auto& p : prime_support(dd)) {
                for (int m2 = 1; m2 <= 3; ++m2) {
                    PAdicRowSpaceResult r = padic_row_space_condition(j, k, a1, p, m2);
                    json e;
                    e["p"] = p.get_str();
                    e["m"] = m2;
                    e["pass"] = r.pass;
                    e["replacement_power"] = r.replacement_power;
                    arr.push_back(std::move(e));
                    if (!r.pass) all = false;
                }
            }
            c["pass"] = all;
            c["levels"] = std::move(arr);
            if (!all) {
                Obstruction o{Obstruction::Kind::PAdicRowSpace,
                              "p-adic row spaces of the power limits do not match under A1",
                              {}};
                c["obstruction"] = obstruction_json(o);
            }
        } else if (opt.check == "t10") {
            ArithmeticConditions ac = arithmetic_necessary_conditions(perron_data(j), perron_data(k));
            c["pass"] = ac.pass;
            c["fields_match"] = ac.fields_match;
            c["prime_support_match"] = ac.prime_support_match;
            c["module_probe_applicable"] = ac.module_probe_applicable;
            c["module_probe_found"] = ac.module_probe_found;
            if (ac.module_probe_found) {
                c["module_witness"] = ac.module_witness;
                c["module_exponent"] = ac.module_probe_exponent;
            }
            if (ac.obstruction) c["obstruction"] = obstruction_json(*ac.obstruction);
        } else if (opt.check == "cstar") {
            CStarCertificate cert = build_cstar_certificate(j, k, a1, 2, opt.budget);
            c["pass"] = verify_certificate(j, k, cert);
            c["certificate"] = certificate_json(cert);
        } else {
            throw parse_error("--check must be one of se|conjugate|t6|t7|t10|cstar");
        }
        checks[opt.check] = std::move(c);
        std::cerr << "check " << opt.check << ": done\n";
    }
    report["checks"] = std::move(checks);
    std::cout << report.dump(2) << "\n";
    return 0;
}

int run_corpus(const std::string& mode, const std::string& only) {
    if (mode == "list") {
        json out = json::array();
        for (const auto& item : corpus::items()) {
            if (!only.empty() && item.tag.find(only) == std::string::npos) continue;
            json e;
            e["tag"] = item.tag;
            e["description"] = item.description;
            e["criterion"] = item.criterion;
            out.push_back(std::move(e));
            std::cerr << item.tag << ": " << item.description << "\n";
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    json results = json::array();
    bool all_pass = true;
    for (const auto& item : corpus::items()) {
        if (!only.empty() && item.tag.find(only) == std::string::npos) continue;
        if (only.empty() && item.criterion == 0) continue;  // experiments run only when selected
        corpus::Outcome o = corpus::run_item(item.tag);
        json e;
        e["tag"] = o.tag;
        e["pass"] = o.pass;
        e["experimental"] = o.experimental;
        e["detail"] = o.detail;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", o.seconds);
        e["seconds"] = buf;
        results.push_back(std::move(e));
        std::cerr << (o.pass ? "PASS" : "FAIL") << "  " << o.tag << " (" << buf << "s)"
                  << (o.detail.empty() ? "" : "  - " + o.detail) << "\n";
        if (!o.pass && !o.experimental) all_pass = false;
    }
    json report;
    report["tool"] = "stationary-af";
    report["version"] = kToolVersion;
    report["corpus"] = std::move(results);
    std::cout << report.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of nonnegative integer incidence matrices"};
    app.require_subcommand(1);

    AnalyzeOptions opt;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze one or two matrix documents");
    analyze->add_option("files", opt.files, "matrix documents (JSON)")->required();
    analyze->add_flag("--charpoly", opt.want_charpoly, "characteristic polynomial and factors");
    analyze->add_flag("--pf", opt.want_pf, "dominant eigendata over Q[lambda]");
    analyze->add_flag("--dimgroup", opt.want_dimgroup, "dimension group realization data");
    analyze->add_flag("--primitive", opt.want_primitive, "primitivity test");
    analyze->add_option("--padic", opt.padic, "p-adic limit levels: p m")->expected(2);
    analyze->add_option("--check", opt.check, "pairwise check: se|conjugate|t6|t7|t10|cstar");
    analyze->add_option("--powers", opt.powers, "power range a..b for --check conjugate");
    analyze->add_option("--budget", opt.budget, "exponent budget for --check cstar");
    analyze->add_option("--a1", opt.a1_file, "matrix document for the intertwining candidate A1");

    std::string corpus_mode, corpus_only;
    CLI::App* corpus_cmd = app.add_subcommand("corpus", "run or list the built-in example corpus");
    corpus_cmd->add_option("mode", corpus_mode, "run | list")->required();
    corpus_cmd->add_option("--only", corpus_only, "restrict to tags containing this substring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(opt);
        if (corpus_cmd->parsed()) {
            if (corpus_mode != "run" && corpus_mode != "list")
                throw parse_error("corpus mode must be 'run' or 'list'");
            return run_corpus(corpus_mode, corpus_only);
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
