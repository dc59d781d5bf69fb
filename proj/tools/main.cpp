#include "fdstencil/convergence.hpp"
#include "fdstencil/emit.hpp"
#include "fdstencil/error_bounds.hpp"
#include "fdstencil/selftest.hpp"
#include "fdstencil/stream.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fdstencil;

NodeSet parse_nodes(const std::string& csv) {
    RationalVector offsets;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        offsets.push_back(Rational::parse(item));
    }
    return NodeSet(std::move(offsets));
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        values.push_back(std::stod(item));
    }
    return values;
}

int cmd_gen(const std::string& nodes_csv, int k, const std::string& format) {
    const Stencil stencil = generate_stencil(parse_nodes(nodes_csv), k);
    std::cout << render_stencil(stencil, parse_emit_format(format)) << "\n";
    return 0;
}

int cmd_bound(const std::string& nodes_csv, int k, double m, double h) {
    const Stencil stencil = generate_stencil(parse_nodes(nodes_csv), k);
    std::cout << bound_report_json(ErrorModel(stencil, m, h)).dump() << "\n";
    return 0;
}

int cmd_leading(const std::string& nodes_csv, int k) {
    const Stencil stencil = generate_stencil(parse_nodes(nodes_csv), k);
    const LeadingTerm term = leading_error_term(stencil);
    std::cout << leading_term_json(term).dump() << "\n";

    const std::string fn = derivative_label(term.derivative_order) + "(t)";
    if (term.vanishes) {
        std::cout << "bias indeterminate: leading coefficient is zero\n";
    } else if (term.coefficient.sign() > 0) {
        std::cout << "underestimate when " << fn << " > 0\n";
        std::cout << "overestimate when " << fn << " < 0\n";
    } else {
        std::cout << "overestimate when " << fn << " > 0\n";
        std::cout << "underestimate when " << fn << " < 0\n";
    }
    return 0;
}

int cmd_apply(const std::string& input, const std::string& output, int n, int k,
              int quantization) {
    const StreamConfig config{n, k, quantization};

    std::ifstream file_in;
    if (input != "-") {
        file_in.open(input);
        if (!file_in) {
            throw std::invalid_argument("cannot open input file: '" + input + "'");
        }
    }
    std::istream& in = input == "-" ? std::cin : file_in;

    std::ofstream file_out;
    if (output != "-") {
        file_out.open(output);
        if (!file_out) {
            throw std::invalid_argument("cannot open output file: '" + output + "'");
        }
    }
    std::ostream& out = output == "-" ? std::cout : file_out;

    const StreamStats stats = run_csv_stream(in, out, std::cerr, config);
    if (stats.emitted == 0) {
        std::cerr << "insufficient samples\n";
        return 1;
    }
    return 0;
}

int cmd_study(const std::string& nodes_csv, int k, const std::string& fn_name,
              const std::string& coeffs_csv, double t0, double h_max, double h_min,
              int points, const std::string& format) {
    const NodeSet nodes = parse_nodes(nodes_csv);
    const TestFunction fn = fn_name == "poly" ? TestFunction::poly(parse_doubles(coeffs_csv))
                                              : TestFunction::named(fn_name);

    ConvergenceReport report;
    try {
        report = convergence_study(nodes, k, fn, t0, geometric_grid(h_max, h_min, points));
    } catch (const std::runtime_error&) {
        std::cout << "exact regime: every grid error is at the roundoff floor\n";
        return 0;
    }

    if (format == "json") {
        std::cout << report_to_json(report) << "\n";
    } else if (format == "csv") {
        std::cout << report_to_csv(report);
    } else if (format == "text") {
        std::cout << report_to_text(report);
    } else {
        throw std::invalid_argument("unknown format: '" + format + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-difference stencils for past-only derivative estimation"};
    app.require_subcommand(1);

    std::string nodes_csv;
    std::string format = "text";
    std::string fn_name;
    std::string coeffs_csv;
    std::string input = "-";
    std::string output = "-";
    int k = 1;
    int n = 5;
    int quantization = 6;
    int points = 12;
    double m_bound = 1.0;
    double h = 0.1;
    double t0 = 1.0;
    double h_max = 0.1;
    double h_min = 0.001;

    auto* gen = app.add_subcommand("gen", "Generate a derivative stencil");
    gen->add_option("--nodes", nodes_csv, "Comma-separated node offsets")->required();
    gen->add_option("--k", k, "Derivative order")->required();
    gen->add_option("--format", format, "text|latex|c-expr|json");

    auto* bound = app.add_subcommand("bound", "Worst-case truncation bound");
    bound->set_help_flag("--help", "Print this help message and exit");
    bound->add_option("--nodes", nodes_csv)->required();
    bound->add_option("--k", k)->required();
    bound->add_option("--M", m_bound, "Bound on |f^(n)| over the sample interval")->required();
    bound->add_option("--h", h, "Step size")->required();

    auto* leading = app.add_subcommand("leading", "Leading error term and bias");
    leading->add_option("--nodes", nodes_csv)->required();
    leading->add_option("--k", k)->required();

    auto* apply = app.add_subcommand("apply", "Stream derivative estimates over CSV data");
    apply->add_option("--input", input, "CSV path or - for stdin");
    apply->add_option("--output", output, "CSV path or - for stdout");
    apply->add_option("--n", n, "Window size")->required();
    apply->add_option("--k", k, "Derivative order")->required();
    apply->add_option("--quantization", quantization, "Node snapping digits (1..12)");

    auto* study = app.add_subcommand("study", "Convergence-order study");
    study->add_option("--nodes", nodes_csv)->required();
    study->add_option("--k", k)->required();
    study->add_option("--fn", fn_name, "sin|exp|log1p|runge|poly")->required();
    study->add_option("--coeffs", coeffs_csv, "Polynomial coefficients a0,a1,...");
    study->add_option("--t0", t0, "Expansion point");
    study->add_option("--h-max", h_max);
    study->add_option("--h-min", h_min);
    study->add_option("--points", points, "Grid size");
    study->add_option("--format", format, "text|json|csv");

    app.add_subcommand("selftest", "Run the cross-module identity suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(nodes_csv, k, format);
        if (bound->parsed()) return cmd_bound(nodes_csv, k, m_bound, h);
        if (leading->parsed()) return cmd_leading(nodes_csv, k);
        if (apply->parsed()) return cmd_apply(input, output, n, k, quantization);
        if (study->parsed())
            return cmd_study(nodes_csv, k, fn_name, coeffs_csv, t0, h_max, h_min, points,
                             format);
        return run_selftest(std::cout) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
