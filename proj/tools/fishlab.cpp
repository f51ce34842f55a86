// fishlab: enumeration, statistics and verification for interval orders,
// Fishburn matrices, Catalan pairs and Fishburn triples.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fishlab/catalan.hpp"
#include "fishlab/fishburn.hpp"
#include "fishlab/ftriple.hpp"
#include "fishlab/perms.hpp"
#include "fishlab/series.hpp"
#include "fishlab/verify.hpp"

namespace {

using namespace fishlab;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

int require_within_cap(int n, const std::string& what) {
    int cap = max_weight_cap();
    if (n < 1 || n > cap)
        throw CLI::ValidationError(what + " must be between 1 and the FISHLAB_MAX_WEIGHT cap " +
                                   std::to_string(cap));
    return n;
}

ObjectKind parse_object(const std::string& name) {
    if (name == "matrices") return ObjectKind::Matrices;
    if (name == "dyck") return ObjectKind::Dyck;
    if (name == "perms") return ObjectKind::Perms;
    throw CLI::ValidationError("object must be matrices, dyck or perms");
}

AvoidFilter parse_avoid(const std::string& name) {
    if (name.empty()) return AvoidFilter::None;
    if (name == "nw") return AvoidFilter::StrictNW;
    if (name == "sw") return AvoidFilter::StrictSW;
    throw CLI::ValidationError("avoid must be nw or sw");
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

int run_enumerate(const std::string& object_name, int weight, int order, bool primitive,
                  const std::string& avoid, const std::string& format) {
    ObjectKind object = parse_object(object_name);
    bool json = format == "json";
    switch (object) {
        case ObjectKind::Matrices: {
            require_within_cap(weight, "--weight");
            EnumOptions options{primitive, parse_avoid(avoid)};
            bool first = true;
            enumerate_matrices(weight, options, [&](const FishburnMatrix& m) {
                if (json) {
                    std::cout << to_json(m) << '\n';
                } else {
                    if (!first) std::cout << '\n';
                    std::cout << to_text(m);
                }
                first = false;
            });
            break;
        }
        case ObjectKind::Dyck:
            require_within_cap(order, "--order");
            enumerate_dyck(order, [&](const DyckPath& p) { std::cout << p.steps() << '\n'; });
            break;
        case ObjectKind::Perms:
            require_within_cap(order, "--order");
            enumerate_avoiders(order,
                               [&](const Permutation& p) { std::cout << to_line(p) << '\n'; });
            break;
    }
    return kExitOk;
}

int run_stats(const std::string& object_name, int weight, int order, const std::string& stats_csv,
              bool primitive, const std::string& avoid, const std::string& format) {
    ObjectKind object = parse_object(object_name);
    int n = object == ObjectKind::Matrices ? weight : order;
    require_within_cap(n, object == ObjectKind::Matrices ? "--weight" : "--order");
    EnumOptions options{primitive, parse_avoid(avoid)};
    auto table = distribution_table(object, n, split_names(stats_csv), options);
    if (format == "json") std::cout << table_to_json(table) << '\n';
    else if (format == "csv") std::cout << table_to_csv(table);
    else std::cout << table_to_text(table);
    return kExitOk;
}

int run_involution(const std::string& map_name, const std::string& input_path, bool poset_input,
                   const std::string& format) {
    std::string input = read_input(input_path);
    std::size_t start = input.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw std::runtime_error("empty matrix input");
    bool json_input = !poset_input && input[start] == '{';
    FishburnMatrix m = poset_input   ? order_to_matrix(rel_structure_from_text(input))
                       : json_input  ? matrix_from_json(input)
                                     : matrix_from_text(input);

    FishburnMatrix image = map_name == "phi" ? phi(m) : antidiagonal_transpose(m);
    if (format == "rel") {
        std::cout << to_text(matrix_to_order(image).order);
        return kExitOk;
    }
    bool json_output = format == "json" || (format.empty() && json_input);
    std::cout << (json_output ? to_json(image) + "\n" : to_text(image));
    return kExitOk;
}

int run_series(const std::string& which, int degree, bool check, const std::string& format) {
    if (degree < 1) throw CLI::ValidationError("--degree must be positive");
    if (check) {
        auto p_report = P_checks(std::min(degree, 6));
        auto g1 = G_formula(std::min(degree, 8), 1);
        auto g2 = G_formula(std::min(degree, 8), 2);
        auto g3 = G_formula(std::min(degree, 8), 3);
        auto gf = G_from_F(std::min(degree, 8));
        bool g_agree = g1 == g2 && g1 == g3 && g1 == gf;
        std::cout << (p_report.functional_equation ? "PASS" : "FAIL")
                  << " series/functional-equation\n";
        std::cout << (p_report.closed_form ? "PASS" : "FAIL") << " series/p-closed-form\n";
        std::cout << (p_report.inflation_identity ? "PASS" : "FAIL")
                  << " series/inflation-identity\n";
        std::cout << (g_agree ? "PASS" : "FAIL") << " series/g-formulas\n";
        return p_report.all() && g_agree ? kExitOk : kExitCheckFailure;
    }
    TruncatedSeries s = [&] {
        if (which == "f") return F_formula(degree);
        if (which == "g1") return G_formula(degree, 1);
        if (which == "g2") return G_formula(degree, 2);
        if (which == "g3") return G_formula(degree, 3);
        if (which == "p") return P_closed_form(degree);
        if (which == "brute") return brute_series(degree, max_weight_cap());
        throw CLI::ValidationError("--which must be f, g1, g2, g3, p or brute");
    }();
    if (format == "json") std::cout << s.to_json() << '\n';
    else std::cout << s.to_text();
    return kExitOk;
}

int run_conjecture(const std::string& which, int order, const std::string& format) {
    if (which == "pat2") {
        auto report = conjecture_pat2(order);
        if (format == "csv") {
            std::cout << "lrmax,rlmax,count\n";
            for (const auto& [key, count] : report.table)
                std::cout << key.first << ',' << key.second << ',' << count << '\n';
        } else {
            std::cout << "lrmax\trlmax\tcount\n";
            for (const auto& [key, count] : report.table)
                std::cout << key.first << '\t' << key.second << '\t' << count << '\n';
        }
        std::cerr << "joint distribution symmetric: " << (report.symmetric ? "yes" : "no")
                  << '\n';
        return kExitOk;
    }
    if (which == "pat1") {
        auto report = conjecture_pat1_necessary(order);
        const char sep = format == "csv" ? ',' : '\t';
        if (format == "csv") std::cout << "side,lrmax_fr,rlmin_lc,rlmax_ne,lrmin_diag,count\n";
        else std::cout << "side\tlrmax_fr\trlmin_lc\trlmax_ne\tlrmin_diag\tcount\n";
        for (const auto& [key, count] : report.permutation_side)
            std::cout << "perm" << sep << key[0] << sep << key[1] << sep << key[2] << sep
                      << key[3] << sep << count << '\n';
        for (const auto& [key, count] : report.matrix_side)
            std::cout << "matrix" << sep << key[0] << sep << key[1] << sep << key[2] << sep
                      << key[3] << sep << count << '\n';
        std::cerr << "multisets equal: " << (report.multisets_equal ? "yes" : "no")
                  << ", inverse-closed: " << (report.inverse_closed ? "yes" : "no") << '\n';
        return kExitOk;
    }
    throw CLI::ValidationError("--which must be pat1 or pat2");
}

int run_verify(int weight, int order, int degree, int jobs) {
    SuiteOptions options;
    options.max_weight = weight;
    options.max_dyck_order = order;
    options.series_degree = degree;
    options.jobs = jobs;
    auto reports = run_suite(options);
    bool all_pass = true;
    double total_ms = 0.0;
    for (const auto& r : reports) {
        std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << " (" << r.params << ')';
        if (!r.counterexample.empty()) std::cout << ": " << r.counterexample;
        std::cout << '\n';
        all_pass = all_pass && r.pass;
        total_ms += r.elapsed_ms;
    }
    std::cerr << reports.size() << " checks in " << static_cast<long>(total_ms) << " ms\n";
    return all_pass ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of interval orders and Fishburn matrices"};
    app.require_subcommand(1);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "stream objects of a given size");
    std::string enum_object = "matrices", enum_avoid, enum_format = "text";
    int enum_weight = 0, enum_order = 0;
    bool enum_primitive = false;
    cmd_enum->add_option("--object", enum_object, "matrices|dyck|perms");
    cmd_enum->add_option("-w,--weight", enum_weight, "matrix weight");
    cmd_enum->add_option("-n,--order", enum_order, "dyck order / permutation size");
    cmd_enum->add_flag("--primitive", enum_primitive, "primitive matrices only");
    cmd_enum->add_option("--avoid", enum_avoid, "discard strict nw|sw cell pairs");
    cmd_enum->add_option("--format", enum_format, "text|json");

    // stats
    auto* cmd_stats = app.add_subcommand("stats", "distribution table of statistics");
    std::string stats_object = "matrices", stats_names, stats_avoid, stats_format = "csv";
    int stats_weight = 0, stats_order = 0;
    bool stats_primitive = false;
    cmd_stats->add_option("--object", stats_object, "matrices|dyck|perms");
    cmd_stats->add_option("-w,--weight", stats_weight, "matrix weight");
    cmd_stats->add_option("-n,--order", stats_order, "dyck order / permutation size");
    cmd_stats->add_option("--stats", stats_names, "comma-separated statistic names");
    cmd_stats->add_flag("--primitive", stats_primitive, "primitive matrices only");
    cmd_stats->add_option("--avoid", stats_avoid, "discard strict nw|sw cell pairs");
    cmd_stats->add_option("--format", stats_format, "text|csv|json");

    // involution
    auto* cmd_inv = app.add_subcommand("involution", "apply an involution to a matrix");
    std::string inv_map = "phi", inv_input, inv_format;
    bool inv_poset = false;
    cmd_inv->add_option("--map", inv_map, "phi|transpose");
    cmd_inv->add_option("input", inv_input, "matrix file, - for stdin");
    cmd_inv->add_flag("--poset", inv_poset, "input is a poset in relation text format");
    cmd_inv->add_option("--format", inv_format, "text|json|rel output");

    // series
    auto* cmd_series = app.add_subcommand("series", "print or check generating functions");
    std::string series_which = "f", series_format = "text";
    int series_degree = 8;
    bool series_check = false;
    cmd_series->add_option("--which", series_which, "f|g1|g2|g3|p|brute");
    cmd_series->add_option("-N,--degree", series_degree, "truncation total degree");
    cmd_series->add_flag("--check", series_check, "verify the series identities");
    cmd_series->add_option("--format", series_format, "text|json");

    // conjecture
    auto* cmd_conj = app.add_subcommand("conjecture", "desk-scale conjecture reports");
    std::string conj_which = "pat2", conj_format = "csv";
    int conj_order = 6;
    cmd_conj->add_option("--which", conj_which, "pat1|pat2");
    cmd_conj->add_option("-n,--order", conj_order, "permutation size");
    cmd_conj->add_option("--format", conj_format, "text|csv");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the full verification suite");
    int verify_weight = 7, verify_order = 8, verify_degree = 8, verify_jobs = 1;
    cmd_verify->add_option("-w,--weight", verify_weight, "exhaustive matrix weight bound");
    cmd_verify->add_option("-n,--order", verify_order, "dyck order bound");
    cmd_verify->add_option("-N,--degree", verify_degree, "series truncation degree");
    cmd_verify->add_option("--jobs", verify_jobs, "parallel workers for the checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_enum->parsed())
            return run_enumerate(enum_object, enum_weight, enum_order, enum_primitive, enum_avoid,
                                 enum_format);
        if (cmd_stats->parsed())
            return run_stats(stats_object, stats_weight, stats_order, stats_names,
                             stats_primitive, stats_avoid, stats_format);
        if (cmd_inv->parsed()) return run_involution(inv_map, inv_input, inv_poset, inv_format);
        if (cmd_series->parsed())
            return run_series(series_which, series_degree, series_check, series_format);
        if (cmd_conj->parsed()) return run_conjecture(conj_which, conj_order, conj_format);
        if (cmd_verify->parsed())
            return run_verify(verify_weight, verify_order, verify_degree, verify_jobs);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }
    return kExitUsage;
}
