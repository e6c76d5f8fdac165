// Command line interface: enumeration, boundary matrices, exact homology
// tables, Hopf operations, operad homology, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "bdiag/chord.hpp"
#include "bdiag/hopf.hpp"
#include "bdiag/operad.hpp"
#include "bdiag/parse.hpp"
#include "bdiag/suites.hpp"

using namespace bdiag;
using nlohmann::json;

namespace {

Parity parse_parity(const std::string& s) {
    if (s == "odd")
        return Parity::odd_d;
    if (s == "even")
        return Parity::even_d;
    throw Error("parity must be odd or even");
}

std::vector<Element> read_basis_file(const std::string& path, Parity mode) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open basis file: " + path);
    std::vector<Element> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed;
        for (char c : line)
            if (!std::isspace((unsigned char)c) || !trimmed.empty())
                trimmed += c;
        while (!trimmed.empty() && std::isspace((unsigned char)trimmed.back()))
            trimmed.pop_back();
        if (trimmed.empty() || trimmed[0] == '#')
            continue;
        out.push_back(parse_element(trimmed, mode));
    }
    return out;
}

int run_enumerate(Variant v, Parity mode, int i, int j, const std::string& format) {
    auto basis = enumerate_basis(v, mode, i, j);
    if (format == "json") {
        json out;
        out["variant"] = variant_name(v);
        out["parity"] = mode == Parity::odd_d ? "odd" : "even";
        out["i"] = i;
        out["j"] = j;
        out["dimension"] = basis.size();
        out["weight_parity"] = basis.empty() ? (mode == Parity::odd_d ? j % 2 : (i + j) % 2)
                                             : basis[0].weight_parity(mode);
        json list = json::array();
        for (const auto& m : basis)
            list.push_back(format_mono(m, mode));
        out["diagrams"] = list;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "# " << variant_name(v) << "/" << (mode == Parity::odd_d ? "odd" : "even")
                  << " bidegree (" << i << "," << j << "): dimension " << basis.size()
                  << ", weight parity "
                  << (mode == Parity::odd_d ? j % 2 : (i + j) % 2) << "\n";
        for (const auto& m : basis)
            std::cout << format_mono(m, mode) << "\n";
    }
    return 0;
}

int run_matrix(Variant v, Parity mode, int i, int j, const std::string& basis_path,
               const std::string& target_path, const std::string& format) {
    ZMat m;
    if (!basis_path.empty()) {
        auto src = read_basis_file(basis_path, mode);
        std::vector<Element> tgt;
        if (!target_path.empty()) {
            tgt = read_basis_file(target_path, mode);
        } else {
            for (const auto& mm : enumerate_basis(v, mode, i, j + 1))
                tgt.push_back(Element(mode, mm));
        }
        m = matrix_in_basis(v, mode, src, tgt);
    } else {
        auto c = BigradedComplex::build(v, mode, i, [j](int) { return j; });
        m = c.matrix(i, j);
    }
    if (format == "json") {
        json out;
        out["variant"] = variant_name(v);
        out["parity"] = mode == Parity::odd_d ? "odd" : "even";
        out["i"] = i;
        out["j"] = j;
        out["rows"] = m.rows();
        out["cols"] = m.cols();
        json rows = json::array();
        for (int r = 0; r < m.rows(); r++) {
            json row = json::array();
            for (int c = 0; c < m.cols(); c++)
                row.push_back(m.at(r, c).str());
            rows.push_back(row);
        }
        out["matrix"] = rows;
        std::cout << out.dump(2) << "\n";
    } else {
        for (int r = 0; r < m.rows(); r++) {
            for (int c = 0; c < m.cols(); c++)
                std::cout << (c ? (format == "csv" ? "," : " ") : "") << m.at(r, c).str();
            std::cout << "\n";
        }
    }
    return 0;
}

int run_homology(Variant v, Parity mode, int i_max, const std::string& coeff,
                 const std::string& format, double budget_seconds) {
    long long p = 0;
    if (coeff != "z" && coeff != "q") {
        if (coeff.size() > 2 && coeff.rfind("p:", 0) == 0)
            p = std::stoll(coeff.substr(2));
        else
            throw Error("coefficients must be z, q, or p:<prime>");
    }
    bool gen = v == Variant::GenB || v == Variant::GenBstar;
    auto c = BigradedComplex::build(v, mode, i_max,
                                    gen ? std::function<int(int)>([](int i) { return 2 * i + 1; })
                                        : nullptr);
    auto started = std::chrono::steady_clock::now();
    bool partial = false;
    json rows = json::array();
    std::vector<std::string> csv;
    for (int i = 0; i <= i_max && !partial; i++) {
        for (int j = 0; j <= 2 * i; j++) {
            if (budget_seconds > 0 &&
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count() >
                    budget_seconds) {
                partial = true;
                break;
            }
            long long dim = c.dimension(i, j);
            json row;
            row["variant"] = variant_name(v);
            row["parity"] = mode == Parity::odd_d ? "odd" : "even";
            row["i"] = i;
            row["j"] = j;
            row["dimension"] = dim;
            std::string torsion_text;
            long long rank = 0;
            if (coeff == "z") {
                HomologyGroup h = c.homology(i, j);
                rank = h.rank;
                json tor = json::array();
                for (const auto& t : h.torsion) {
                    tor.push_back(t.str());
                    torsion_text += (torsion_text.empty() ? "" : ";") + t.str();
                }
                row["torsion"] = tor;
            } else if (coeff == "q") {
                rank = c.homology_rank(i, j);
                row["torsion"] = json::array();
            } else {
                rank = c.homology_rank_p(i, j, p);
                row["torsion"] = json::array();
            }
            row["rank"] = rank;
            rows.push_back(row);
            csv.push_back(variant_name(v) + "," + (mode == Parity::odd_d ? "odd" : "even") + "," +
                          std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(dim) +
                          "," + std::to_string(rank) + "," + torsion_text);
        }
    }
    if (format == "json") {
        json out;
        out["rows"] = rows;
        out["partial"] = partial;
        std::cout << (partial ? out.dump(2) : rows.dump(2)) << "\n";
    } else if (format == "csv") {
        std::cout << "variant,parity,i,j,dimension,rank,torsion\n";
        for (const auto& line : csv)
            std::cout << line << "\n";
        if (partial)
            std::cout << "# partial: time budget exceeded\n";
    } else {
        for (const auto& row : rows) {
            std::cout << "(" << row["i"] << "," << row["j"] << ") dim " << row["dimension"]
                      << " rank " << row["rank"];
            if (!row["torsion"].empty()) {
                std::cout << " torsion ";
                for (const auto& t : row["torsion"])
                    std::cout << std::string(t) << " ";
            }
            std::cout << "\n";
        }
        if (partial)
            std::cout << "# partial: time budget exceeded\n";
    }
    return 0;
}

int print_suite(const SuiteResult& r) {
    for (const auto& [what, ok] : r.checks)
        std::cout << (ok ? "PASS" : "FAIL") << " " << r.name << ": " << what << "\n";
    std::cout << "# suite " << r.name << (r.pass() ? " passed" : " FAILED") << " in " << r.seconds
              << " s\n";
    return r.pass() ? 0 : 1;
}

int run_operad_homology(OperadKind k, int arity_max, const std::string& format) {
    auto hc = hochschild_complex(k, arity_max);
    json rows = json::array();
    for (int n = 1; n <= arity_max; n++) {
        int itop = k == OperadKind::bv ? 2 * n - 1 : n - 1;
        for (int i = 0; i <= itop; i++) {
            HomologyGroup h = hc.homology(i, n);
            json row;
            row["kind"] = operad_kind_name(k);
            row["i"] = i;
            row["arity"] = n;
            row["dimension"] = hc.dimension(i, n);
            row["rank"] = h.rank;
            json tor = json::array();
            for (const auto& t : h.torsion)
                tor.push_back(t.str());
            row["torsion"] = tor;
            rows.push_back(row);
        }
    }
    if (format == "json")
        std::cout << rows.dump(2) << "\n";
    else
        for (const auto& row : rows) {
            std::cout << operad_kind_name(k) << " (i=" << row["i"] << ", arity=" << row["arity"]
                      << ") dim " << row["dimension"] << " rank " << row["rank"];
            if (!row["torsion"].empty()) {
                std::cout << " torsion ";
                for (const auto& t : row["torsion"])
                    std::cout << std::string(t) << " ";
            }
            std::cout << "\n";
        }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bracket diagram complexes: exact bases, differentials, homology"};
    app.require_subcommand(1);

    std::string variant = "b", parity = "even", format = "text", coeff = "z";
    std::string basis_path, target_path, expr, suite, kind = "poisson";
    int i = 0, j = 0, i_max = 2, arity_max = 3;
    double budget_seconds = 0;
    bool with_1t = false, extended = false;

    auto* enumerate = app.add_subcommand("enumerate", "list the basis of one bidegree");
    enumerate->add_option("--variant", variant);
    enumerate->add_option("--parity", parity);
    enumerate->add_option("--i", i)->required();
    enumerate->add_option("--j", j)->required();
    enumerate->add_option("--format", format);

    auto* matrix = app.add_subcommand("matrix", "boundary matrix of one bidegree");
    matrix->add_option("--variant", variant);
    matrix->add_option("--parity", parity);
    matrix->add_option("--i", i)->required();
    matrix->add_option("--j", j)->required();
    matrix->add_option("--basis", basis_path, "file of source basis elements");
    matrix->add_option("--target-basis", target_path, "file of target basis elements");
    matrix->add_option("--format", format);

    auto* homology = app.add_subcommand("homology", "homology table through a complexity bound");
    homology->add_option("--variant", variant);
    homology->add_option("--parity", parity);
    homology->add_option("--imax", i_max);
    homology->add_option("--coeff", coeff, "z, q, or p:<prime>");
    homology->add_option("--format", format);
    homology->add_option("--budget-seconds", budget_seconds, "flag output partial past this budget");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "complex|hopf|homotopy|operad|quasi-iso|chord")->required();
    verify->add_option("--imax", i_max);
    verify->add_option("--arity-max", arity_max);
    verify->add_flag("--extended", extended, "include the next chord degree");

    auto* anti = app.add_subcommand("antipode", "antipode of a diagram combination");
    anti->add_option("--variant", variant);
    anti->add_option("--parity", parity);
    anti->add_option("--expr", expr)->required();

    auto* prim = app.add_subcommand("primitive-projection",
                                    "logarithm of the identity applied to a combination");
    prim->add_option("--variant", variant);
    prim->add_option("--parity", parity);
    prim->add_option("--expr", expr)->required();

    auto* oph = app.add_subcommand("operad-homology", "homology of a Hochschild complex");
    oph->add_option("--kind", kind, "poisson|gerstenhaber|bv");
    oph->add_option("--arity-max", arity_max);
    oph->add_option("--format", format);

    auto* chord = app.add_subcommand("chord", "chord-diagram bialgebra dimensions");
    chord->add_option("--parity", parity);
    chord->add_option("--imax", i_max);
    chord->add_flag("--with-1t", with_1t, "use the starred relations as well");
    chord->add_option("--format", format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Parity mode = parse_parity(parity);
        if (*enumerate)
            return run_enumerate(variant_from_name(variant), mode, i, j, format);
        if (*matrix)
            return run_matrix(variant_from_name(variant), mode, i, j, basis_path, target_path, format);
        if (*homology)
            return run_homology(variant_from_name(variant), mode, i_max, coeff, format, budget_seconds);
        if (*anti) {
            HopfOps ops{variant_from_name(variant), mode};
            std::cout << format_element(antipode(parse_element(expr, mode), ops)) << "\n";
            return 0;
        }
        if (*prim) {
            HopfOps ops{variant_from_name(variant), mode};
            std::cout << format_element(primitive_projection(parse_element(expr, mode), ops)) << "\n";
            return 0;
        }
        if (*oph)
            return run_operad_homology(operad_kind_from_name(kind), arity_max, format);
        if (*chord) {
            ChordAlgebra alg(mode, with_1t, i_max);
            json rows = json::array();
            for (int d = 1; d <= i_max; d++) {
                json row;
                row["i"] = d;
                row["dimension"] = alg.dimension(d);
                row["primitive_dimension"] = alg.primitive_dimension(d);
                rows.push_back(row);
            }
            if (format == "json")
                std::cout << rows.dump(2) << "\n";
            else
                for (const auto& row : rows)
                    std::cout << "i=" << row["i"] << " dim " << row["dimension"] << " primitive "
                              << row["primitive_dimension"] << "\n";
            return 0;
        }
        if (*verify) {
            int threads = default_thread_count();
            if (suite == "complex")
                return print_suite(suite_complex(i_max, threads));
            if (suite == "hopf")
                return print_suite(suite_hopf(std::min(i_max, 3)));
            if (suite == "homotopy")
                return print_suite(suite_homotopy(3));
            if (suite == "operad")
                return print_suite(suite_operad(arity_max));
            if (suite == "quasi-iso")
                return print_suite(suite_quasi_iso(std::min(i_max, 3)));
            if (suite == "chord")
                return print_suite(suite_chord(std::min(i_max, 5), extended));
            throw Error("unknown suite: " + suite);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
