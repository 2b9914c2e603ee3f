#include "toric/cluster.hpp"
#include "toric/io.hpp"
#include "toric/models.hpp"
#include "toric/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGuard = 1;
constexpr int kExitInput = 2;

int default_oracle_guard() {
    if (const char* env = std::getenv("TORIC_MAX_K")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (...) {
            throw toric::InputError("TORIC_MAX_K is not a number");
        }
    }
    return 12;
}

// Column arguments are 1-based on the command line; column 1 is the constant.
int to_internal_column(int col, const toric::ModelMatrix& A) {
    if (col < 1 || col > A.cols())
        throw toric::InputError("column " + std::to_string(col) + " out of range 1.." +
                                std::to_string(A.cols()));
    return col - 1;
}

int run_ideal(const std::string& path, const std::string& order_name, bool as_json) {
    toric::ModelMatrix A = toric::read_matrix_file(path);
    toric::TermOrder ord = toric::TermOrder::parse(order_name, A.rows());
    toric::IdealPresentation I = toric::toric_ideal(A, ord);
    if (as_json)
        std::cout << toric::ideal_to_json(I, A.var_names()).dump(2) << "\n";
    else
        std::cout << toric::ideal_text(I, A.var_names());
    return kExitOk;
}

int run_merge(const std::string& path, int col_a, int col_b, const std::string& order_name) {
    toric::ModelMatrix A = toric::read_matrix_file(path);
    toric::TermOrder ord = toric::TermOrder::parse(order_name, A.rows());
    int a = to_internal_column(col_a, A), b = to_internal_column(col_b, A);
    toric::MergeReport rep;
    try {
        rep = toric::analyze_merge(A, a, b, ord);
    } catch (const std::invalid_argument& e) {
        throw toric::InputError(e.what());
    }
    std::cout << toric::merge_report_to_json(rep, A.var_names()).dump(2) << "\n";
    return kExitOk;
}

int run_kernel(const std::string& path) {
    toric::ModelMatrix A = toric::read_matrix_file(path);
    toric::LatticeBasis L = toric::integer_kernel(A);
    std::cout << "# kernel rank " << L.size() << ", ambient " << L.ambient_dim << "\n";
    for (const auto& v : L.vectors) {
        for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i];
        std::cout << "\n";
    }
    return kExitOk;
}

int run_cluster(const std::string& path, int steps, const std::string& trace_out) {
    toric::ContingencyTable t = toric::read_table_csv_file(path);
    toric::TermOrder ord = toric::TermOrder::degrevlex(t.rows() * t.cols());
    toric::MergeTrace trace = toric::full_dendrogram(t, ord, steps);
    int n = 0;
    for (const auto& s : trace.steps) {
        if (s.terminal) {
            std::cout << "terminal: grand cluster of " << s.label_a << " and " << s.label_b
                      << "\n";
            continue;
        }
        ++n;
        std::cout << "step " << n << ": merge " << s.label_a << " with " << s.label_b << " (d^2 = "
                  << numerator(s.distance) << "/" << denominator(s.distance) << "), +"
                  << s.report->added_linear.size() << " linear binomials\n";
    }
    nlohmann::json j = toric::trace_to_json(trace, t);
    if (trace_out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(trace_out);
        if (!out) throw toric::InputError("cannot write " + trace_out);
        out << j.dump(2) << "\n";
        std::cout << "trace written to " << trace_out << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& path, const std::vector<int>& merge_cols, int bound,
               const std::string& ideal_path) {
    toric::ModelMatrix A = toric::read_matrix_file(path);
    if (!merge_cols.empty()) {
        int a = to_internal_column(merge_cols[0], A), b = to_internal_column(merge_cols[1], A);
        try {
            A = toric::merge_columns(A, a, b);
        } catch (const std::invalid_argument& e) {
            throw toric::InputError(e.what());
        }
    }
    const int guard = default_oracle_guard();
    toric::TermOrder ord = toric::TermOrder::degrevlex(A.rows());

    toric::IdealPresentation I;
    if (ideal_path.empty()) {
        I = toric::toric_ideal(A, ord);
    } else {
        std::ifstream in(ideal_path);
        if (!in) throw toric::InputError("cannot open " + ideal_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw toric::InputError(std::string("bad ideal JSON: ") + e.what());
        }
        I = toric::ideal_from_json(j, A.var_names());
    }
    bool ok = toric::check_completeness(I, A, bound, guard);
    std::cout << (ok ? "pass" : "fail") << ": kernel completeness at bound " << bound << " ("
              << I.groebner.size() << " basis elements)\n";
    return ok ? kExitOk : kExitGuard;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric ideals of log-linear model matrices and contingency-table clustering"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for batch reduction (output unchanged)");

    auto* ideal = app.add_subcommand("ideal", "print the toric ideal of a matrix");
    std::string ideal_file, ideal_order = "degrevlex";
    bool ideal_json = false, ideal_text_flag = false;
    ideal->add_option("matrix", ideal_file, "matrix file (text or JSON)")->required();
    ideal->add_option("--order", ideal_order, "term order: degrevlex (default) or lex");
    ideal->add_flag("--json", ideal_json, "JSON output");
    ideal->add_flag("--text", ideal_text_flag, "text output (default)");

    auto* merge = app.add_subcommand("merge", "analyze a column merge");
    std::string merge_file, merge_order = "degrevlex";
    std::vector<int> merge_cols;
    merge->add_option("matrix", merge_file)->required();
    merge->add_option("--cols", merge_cols, "two 1-based column indices (column 1 is constant)")
        ->expected(2)
        ->required();
    merge->add_option("--order", merge_order);

    auto* cluster = app.add_subcommand("cluster", "agglomerate a contingency table");
    std::string cluster_file, trace_out;
    int steps = -1;
    bool full = false;
    cluster->add_option("table", cluster_file, "CSV table")->required();
    cluster->add_option("--steps", steps, "run only this many merge steps");
    cluster->add_flag("--full", full, "run to the two-cluster stage (default)");
    cluster->add_option("--trace-out", trace_out, "write the trace JSON to a file");

    auto* verify = app.add_subcommand("verify", "brute-force kernel completeness check");
    std::string verify_file, verify_ideal;
    std::vector<int> verify_merge;
    int bound = 3;
    verify->add_option("matrix", verify_file)->required();
    verify->add_option("--merge", verify_merge, "merge these 1-based columns first")->expected(2);
    verify->add_option("--bound", bound, "max absolute exponent (default 3)");
    verify->add_option("--ideal", verify_ideal, "check this ideal JSON instead of recomputing");

    auto* kernel = app.add_subcommand("kernel", "print a kernel lattice basis");
    std::string kernel_file;
    kernel->add_option("matrix", kernel_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }

    toric::set_reduction_threads(threads);
    try {
        if (app.got_subcommand(ideal)) return run_ideal(ideal_file, ideal_order, ideal_json);
        if (app.got_subcommand(merge))
            return run_merge(merge_file, merge_cols[0], merge_cols[1], merge_order);
        if (app.got_subcommand(cluster))
            return run_cluster(cluster_file, full ? -1 : steps, trace_out);
        if (app.got_subcommand(verify)) return run_verify(verify_file, verify_merge, bound, verify_ideal);
        if (app.got_subcommand(kernel)) return run_kernel(kernel_file);
    } catch (const toric::GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const toric::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitGuard;
    }
    return kExitOk;
}
