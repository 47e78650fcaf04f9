// Command-line front end: exact counts and streams of pattern-avoiding
// involution classes, the individual bijections, and the named verification
// suites. Exit code 0 iff every requested check passed.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "wilf/json_io.hpp"

using namespace wilf;

namespace {

BaseClass parse_class(const std::string& s) {
    if (s == "inv") return BaseClass::Involutions;
    if (s == "ai") return BaseClass::AlternatingInvolutions;
    if (s == "rai") return BaseClass::ReverseAlternatingInvolutions;
    if (s == "perm") return BaseClass::Permutations;
    throw domain_error("unknown class '" + s + "' (expected inv|ai|rai|perm)");
}

ClassSpec build_spec(const std::string& cls, int length, const std::vector<std::string>& avoid,
                     const std::string& descents, const std::vector<std::string>& fixes, bool force) {
    ClassSpec spec = ClassSpec::of(parse_class(cls), length);
    for (const auto& s : avoid) spec.avoid.push_back(Permutation::parse(s));
    if (!descents.empty()) {
        std::set<int> d;
        std::stringstream ss(descents);
        std::string tok;
        while (std::getline(ss, tok, ',')) d.insert(std::stoi(tok));
        spec.descent_set = std::move(d);
    }
    for (const auto& f : fixes) {
        auto eq = f.find('=');
        if (eq == std::string::npos) throw domain_error("--fix expects POS=VALUE");
        spec.fixed_values[std::stoi(f.substr(0, eq))] = std::stoi(f.substr(eq + 1));
    }
    int cap = spec.base == BaseClass::Permutations ? kDefaultMaxPermutationLength : kDefaultMaxInvolutionLength;
    if (!force && length > cap)
        throw domain_error("length " + std::to_string(length) + " exceeds the default cap " +
                           std::to_string(cap) + "; pass --force to override");
    return spec;
}

json read_input(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw domain_error("cannot open input file: " + file);
    json j;
    in >> j;
    return j;
}

// Accepts either a permutation array (interpreted as a symmetric transversal
// of the square board) or a transversal object.
struct TransversalInput {
    Transversal t;
    bool was_permutation = false;
};

TransversalInput transversal_input(const json& j) {
    if (j.is_array()) return {Transversal::from_permutation(permutation_from_json(j)), true};
    return {transversal_from_json(j), false};
}

json transversal_output(const Transversal& t, bool as_permutation) {
    return as_permutation ? to_json(t.to_permutation()) : to_json(t);
}

int run_map(const std::string& bijection, const std::string& input_file, const std::string& tau_str,
            int west_k, bool trace) {
    const json in = read_input(input_file);
    json out;
    if (bijection == "f") {
        out = to_json(west_f(permutation_from_json(in), west_k));
    } else if (bijection == "f-inv") {
        out = to_json(west_f_inv(permutation_from_json(in), west_k));
    } else if (bijection == "gamma") {
        out = to_json(gamma_map(permutation_from_json(in)));
    } else if (bijection == "gamma-inv") {
        out = to_json(gamma_inv(permutation_from_json(in)));
    } else if (bijection == "chi") {
        out = to_json(chi(transversal_input(in).t));
    } else if (bijection == "chi-inv") {
        out = to_json(chi_inv(matching_from_json(in)));
    } else if (bijection == "phi") {
        out = to_json(phi(matching_from_json(in)));
    } else if (bijection == "phi-inv") {
        out = to_json(phi_inv(oscillating_from_json(in)));
    } else if (bijection == "psi") {
        out = to_json(psi(oscillating_from_json(in)));
    } else if (bijection == "psi-inv") {
        out = to_json(psi_inv(pair_from_json(in)));
    } else if (bijection == "psibar") {
        out = to_json(psibar(oscillating_from_json(in)));
    } else if (bijection == "psibar-inv") {
        out = to_json(psibar_inv(pair_from_json(in)));
    } else if (bijection == "theta") {
        out = to_json(theta(pair_from_json(in)));
    } else if (bijection == "theta-inv") {
        out = to_json(theta_inv(pair_from_json(in)));
    } else if (bijection == "Psi" || bijection == "Psi-inv") {
        auto [t, was_perm] = transversal_input(in);
        bool inv = bijection == "Psi-inv";
        if (trace) {
            out = to_json(inv ? psi_cap_inv_trace(t) : psi_cap_trace(t));
        } else {
            out = transversal_output(inv ? psi_cap_inv(t) : psi_cap(t), was_perm);
        }
    } else if (bijection == "Phi" || bijection == "Phi-inv") {
        auto [t, was_perm] = transversal_input(in);
        bool inv = bijection == "Phi-inv";
        Permutation tau = Permutation::parse(tau_str);
        if (tau.empty()) {
            if (trace) {
                out = to_json(inv ? psi_cap_inv_trace(t) : psi_cap_trace(t));
            } else {
                out = transversal_output(inv ? psi_cap_inv(t) : psi_cap(t), was_perm);
            }
        } else if (trace) {
            BoardMask mask = color_board(t, tau);
            Transversal result = inv ? phi_cap_inv(t, tau) : phi_cap(t, tau);
            json gray = json::array();
            for (auto [c, r] : mask.gray_cells()) gray.push_back(json::array({c, r}));
            out = json{{"mask", json{{"gray_cells", gray},
                                     {"white_columns", mask.white_cols},
                                     {"white_rows", mask.white_rows},
                                     {"white_diagram", mask.white_diagram.row_lengths}}},
                       {"result", transversal_output(result, was_perm)}};
        } else {
            out = transversal_output(inv ? phi_cap_inv(t, tau) : phi_cap(t, tau), was_perm);
        }
    } else {
        throw domain_error("unknown bijection '" + bijection + "'");
    }
    std::cout << out.dump() << std::endl;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern-avoiding involution classes: exact counts, bijections, verification"};
    app.require_subcommand(1);

    std::string cls = "inv", descents, format = "json";
    std::vector<std::string> avoid, fixes;
    int length = 0;
    bool force = false;

    auto add_class_options = [&](CLI::App* cmd) {
        cmd->add_option("--class", cls, "inv|ai|rai|perm")->capture_default_str();
        cmd->add_option("--length", length, "word length")->required();
        cmd->add_option("--avoid", avoid, "pattern to avoid, e.g. 1243 or (10)19...; repeatable");
        cmd->add_option("--descents", descents, "exact descent set, comma separated");
        cmd->add_option("--fix", fixes, "fixed value POS=VALUE; repeatable");
        cmd->add_flag("--force", force, "override the feasibility cap on length");
    };

    auto* count_cmd = app.add_subcommand("count", "count the members of a class");
    add_class_options(count_cmd);

    auto* enum_cmd = app.add_subcommand("enumerate", "list the members of a class in lexicographic order");
    add_class_options(enum_cmd);
    enum_cmd->add_option("--format", format, "json|csv")->capture_default_str();

    std::string bijection, input_file, tau_str;
    int west_k = 4;
    bool trace = false;
    auto* map_cmd = app.add_subcommand("map", "apply a bijection to a JSON input");
    map_cmd->add_option("--bijection", bijection,
                        "f|f-inv|gamma|chi|chi-inv|phi|phi-inv|psi|psibar|theta|Psi|Phi (plus -inv forms)")
        ->required();
    map_cmd->add_option("--input", input_file, "JSON input file")->required();
    map_cmd->add_option("--tau", tau_str, "suffix pattern for Phi");
    map_cmd->add_option("--k", west_k, "rank parameter for f/f-inv")->capture_default_str();
    map_cmd->add_flag("--trace", trace, "emit the stage-by-stage pipeline trace");

    std::string verify_name;
    int max_n = 0;
    bool slow = false;
    auto* verify_cmd = app.add_subcommand("verify", "run one named verification report");
    verify_cmd->add_option("name", verify_name, "one of: motzkin table1 conj1 conj2 conj3 lemma_f lemma_R "
                                                "lemma_P lemma_Q eq_O psi_bijection phi_bijection "
                                                "matching_suite path_suite")
        ->required();
    verify_cmd->add_option("--max-n", max_n, "largest parameter (0 = documented default)");
    verify_cmd->add_flag("--slow", slow, "include the slow extensions");

    bool selftest_slow = false;
    auto* selftest_cmd = app.add_subcommand("selftest", "run every verification report at its default size");
    selftest_cmd->add_flag("--slow", selftest_slow, "include the slow extensions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count_cmd->parsed()) {
            ClassSpec spec = build_spec(cls, length, avoid, descents, fixes, force);
            json out{{"class", cls}, {"length", length}, {"avoid", avoid},
                     {"count", count_avoiders(spec).str()}};
            std::cout << out.dump() << std::endl;
            return 0;
        }
        if (enum_cmd->parsed()) {
            ClassSpec spec = build_spec(cls, length, avoid, descents, fixes, force);
            if (format == "json") {
                json arr = json::array();
                generate(spec, [&](const Permutation& p) { arr.push_back(to_json(p)); });
                std::cout << arr.dump() << std::endl;
            } else if (format == "csv") {
                generate(spec, [&](const Permutation& p) {
                    for (int i = 1; i <= p.size(); ++i) std::cout << (i > 1 ? "," : "") << p.at(i);
                    std::cout << "\n";
                });
            } else {
                throw domain_error("unknown format '" + format + "' (expected json|csv)");
            }
            return 0;
        }
        if (map_cmd->parsed()) return run_map(bijection, input_file, tau_str, west_k, trace);
        if (verify_cmd->parsed()) {
            VerificationReport rep = verify(verify_name, max_n, slow);
            std::cout << to_json(rep).dump(2) << std::endl;
            return rep.pass ? 0 : 1;
        }
        if (selftest_cmd->parsed()) {
            bool all_pass = true;
            for (const auto& name : verification_names()) {
                VerificationReport rep = verify(name, 0, selftest_slow);
                all_pass = all_pass && rep.pass;
                std::cout << (rep.pass ? "pass  " : "FAIL  ") << name << "  (" << rep.rows.size()
                          << " rows, " << rep.wall_seconds << " s)" << std::endl;
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 0;
}
