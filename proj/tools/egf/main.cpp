// egf: exact computations with truncated generating functions: composita
// tables, series composition, integer-sequence dumps and congruence scans
// whose non-integer values certify compositeness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "composita/builtins.hpp"
#include "composita/compose.hpp"
#include "composita/congruence.hpp"
#include "composita/numbers.hpp"
#include "composita/text_io.hpp"
#include "format.hpp"

using namespace composita;
using egf::Format;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitBoundExceeded = 2;

int order_cap() {
    if (const char* raw = std::getenv("EGF_MAX_ORDER")) {
        try {
            size_t used = 0;
            int cap = std::stoi(raw, &used);
            if (used != std::string(raw).size() || cap < 0) throw std::invalid_argument("");
            return cap;
        } catch (const std::exception&) {
            throw std::invalid_argument("EGF_MAX_ORDER is set to '" + std::string(raw) +
                                        "', expected a nonnegative integer");
        }
    }
    return kDefaultMaxOrder;
}

void check_order(int requested) {
    int cap = order_cap();
    if (requested > cap) throw order_limit_error(requested, cap);
}

bool is_builtin(const std::string& spec) {
    for (std::string_view name : builtin_series_names()) {
        if (spec == name) return true;
    }
    return false;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// A series spec is a built-in name or a path. Files holding a TAB are in
// the index<TAB>value text form; otherwise one integer EGF coefficient
// e(n) per line.
Series resolve_series(const std::string& spec, int order, Kind file_kind) {
    if (is_builtin(spec)) return builtin_series(spec, order);
    std::string text = read_file(spec);
    bool tabbed = text.find('\t') != std::string::npos;
    Series s = tabbed ? series_from_text(text, file_kind) : egf_from_integer_lines(text);
    if (s.order() < order) {
        throw std::invalid_argument("file '" + spec + "' provides coefficients up to order " +
                                    std::to_string(s.order()) + ", requested order " +
                                    std::to_string(order));
    }
    return s.truncated(order);
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
    out << data;
}

Kind parse_kind(const std::string& name) {
    if (name == "egf") return Kind::exponential;
    if (name == "ogf") return Kind::ordinary;
    throw std::invalid_argument("unknown kind '" + name + "', expected egf or ogf");
}

struct CompositaArgs {
    std::string series;
    int order = 0;
    std::string format = "csv";
    std::string output;
    std::string emit_series;
};

int run_composita(const CompositaArgs& args) {
    check_order(args.order);
    Series f = resolve_series(args.series, args.order, Kind::exponential);
    if (!args.emit_series.empty()) write_output(args.emit_series, series_to_text(f));
    CompositaTable table = composita_by_power(f);
    write_output(args.output, egf::format_table(table, egf::parse_format(args.format)));
    return 0;
}

struct ComposeArgs {
    std::string outer;
    std::string inner;
    int order = 0;
    std::string outer_kind = "egf";
    std::string format = "text";
    std::string output;
    std::string emit_series;
};

int run_compose(const ComposeArgs& args) {
    check_order(args.order);
    Series inner = resolve_series(args.inner, args.order, Kind::exponential);
    if (!args.emit_series.empty()) write_output(args.emit_series, series_to_text(inner));
    Series outer = resolve_series(args.outer, args.order, parse_kind(args.outer_kind));
    Series g = outer.kind() == Kind::ordinary ? compose_ogf_egf(outer, inner)
                                              : compose_egf_egf(outer, inner);
    write_output(args.output, egf::format_egf_sequence(g, egf::parse_format(args.format)));
    return 0;
}

struct ScanArgs {
    std::string family;
    std::string egf_file;
    int from = 0;
    int to = 0;
    std::string format = "jsonl";
    std::string output;
};

int run_scan(const ScanArgs& args) {
    int cap = order_cap();
    std::optional<Family> family;
    if (!args.egf_file.empty()) {
        std::string text = read_file(args.egf_file);
        std::string name = args.family.empty() ? args.egf_file : args.family;
        family = make_corollary1_family(
            name,
            [text](int order) {
                Series s = egf_from_integer_lines(text);
                if (s.order() < order) {
                    throw std::invalid_argument(
                        "EGF file provides coefficients up to order " +
                        std::to_string(s.order()) + ", scan needs order " +
                        std::to_string(order));
                }
                return s.truncated(order);
            },
            cap);
    } else {
        family = make_family(args.family, cap);
    }
    ScanResult result = scan(*family, args.from, args.to);
    write_output(args.output, egf::format_scan(result, egf::parse_format(args.format)));
    return 0;
}

struct SeqArgs {
    std::string name;
    int count = 0;
    std::string format = "text";
    std::string output;
};

int run_seq(const SeqArgs& args) {
    std::vector<Integer> values;
    if (args.name == "bell" || args.name == "euler_zigzag") {
        check_order(args.count - 1);
        for (int n = 0; n < args.count; ++n) {
            values.push_back(args.name == "bell" ? bell(n) : euler_zigzag(n));
        }
    } else if (args.name == "stirling2_row" || args.name == "stirling1_row") {
        check_order(args.count);
        for (int k = 0; k <= args.count; ++k) {
            values.push_back(args.name == "stirling2_row" ? stirling2(args.count, k)
                                                          : stirling1_unsigned(args.count, k));
        }
    } else if (args.name == "a001680_style" || args.name == "a000246_style") {
        check_order(args.count - 1);
        const char* inner = args.name == "a001680_style" ? "poly3" : "artanh";
        Series g = compose_egf_egf(builtin_series("exp", args.count - 1),
                                   builtin_series(inner, args.count - 1));
        for (int n = 0; n < args.count; ++n) {
            values.push_back(g.egf_coefficient(n).to_integer());
        }
    } else {
        throw std::invalid_argument("unknown sequence '" + args.name + "'");
    }
    write_output(args.output, egf::format_integers(values, egf::parse_format(args.format)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact composita tables, EGF composition and prime-congruence scans"};
    app.require_subcommand(1);

    CompositaArgs composita_args;
    CLI::App* cmd_composita = app.add_subcommand("composita", "triangular table F^Delta(n,k) of a series");
    cmd_composita->add_option("--series", composita_args.series,
                              "built-in name (x, exp, expm1, sin, artanh, poly3, geom) or coefficient file")
        ->required();
    cmd_composita->add_option("--order", composita_args.order, "truncation order N")
        ->required()->check(CLI::Range(1, 1 << 20));
    cmd_composita->add_option("--format", composita_args.format, "csv, text or jsonl");
    cmd_composita->add_option("--output", composita_args.output, "output path (default stdout)");
    cmd_composita->add_option("--emit-series", composita_args.emit_series,
                              "also write the resolved series in the index<TAB>value form");

    ComposeArgs compose_args;
    CLI::App* cmd_compose = app.add_subcommand("compose", "coefficients g(0..N) of outer(inner(x))");
    cmd_compose->add_option("--outer", compose_args.outer, "outer series (name or file)")->required();
    cmd_compose->add_option("--inner", compose_args.inner, "inner series (name or file, zero free term)")
        ->required();
    cmd_compose->add_option("--order", compose_args.order, "truncation order N")
        ->required()->check(CLI::Range(0, 1 << 20));
    cmd_compose->add_option("--outer-kind", compose_args.outer_kind,
                            "how to read an outer coefficient file: egf or ogf");
    cmd_compose->add_option("--format", compose_args.format, "text, csv or jsonl");
    cmd_compose->add_option("--output", compose_args.output, "output path (default stdout)");
    cmd_compose->add_option("--emit-series", compose_args.emit_series,
                            "also write the resolved inner series in the index<TAB>value form");

    ScanArgs scan_args;
    CLI::App* cmd_scan = app.add_subcommand("scan", "evaluate a congruence family over a range of n");
    cmd_scan->add_option("--family", scan_args.family,
                         "touchard_k0, euler, expm1, sin, artanh or poly3");
    cmd_scan->add_option("--egf", scan_args.egf_file,
                         "file of integer EGF coefficients e(1..N), one per line");
    cmd_scan->add_option("--from", scan_args.from, "first n")->required();
    cmd_scan->add_option("--to", scan_args.to, "last n")->required();
    cmd_scan->add_option("--format", scan_args.format, "jsonl, csv or text");
    cmd_scan->add_option("--output", scan_args.output, "output path (default stdout)");

    SeqArgs seq_args;
    CLI::App* cmd_seq = app.add_subcommand("seq", "dump a special sequence as decimal integers");
    cmd_seq->add_option("name", seq_args.name,
                        "bell, euler_zigzag, stirling2_row, stirling1_row, a001680_style or a000246_style")
        ->required();
    cmd_seq->add_option("count", seq_args.count, "number of terms (row index for *_row)")
        ->required()->check(CLI::Range(1, 1 << 20));
    cmd_seq->add_option("--format", seq_args.format, "text, csv or jsonl");
    cmd_seq->add_option("--output", seq_args.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_composita) return run_composita(composita_args);
        if (*cmd_compose) return run_compose(compose_args);
        if (*cmd_scan) {
            if (scan_args.family.empty() && scan_args.egf_file.empty()) {
                throw std::invalid_argument("scan needs --family or --egf");
            }
            return run_scan(scan_args);
        }
        if (*cmd_seq) return run_seq(seq_args);
    } catch (const order_limit_error& e) {
        std::cerr << "egf: " << e.what() << '\n';
        return kExitBoundExceeded;
    } catch (const std::exception& e) {
        std::cerr << "egf: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
