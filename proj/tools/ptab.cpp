// Command-line front end for the permutation-tableau library.
//
// Exit codes: 0 success, 1 semantic failure (invalid tableau, count
// mismatch, round-trip counterexample), 2 usage or syntax errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptab/bijection.hpp"
#include "ptab/enumeration.hpp"
#include "ptab/error.hpp"
#include "ptab/statistics.hpp"
#include "ptab/tableau.hpp"
#include "ptab/textio.hpp"

namespace {

using namespace ptab;

std::string read_stream(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::syntax_error, "cannot read file '" + path + "'");
    return read_stream(in);
}

// Input for the commands that accept either kind: a positional argument is
// permutation text; --file and standard input are sniffed by the document
// header line.
struct Input {
    std::string text;
    bool is_document = false;
};

Input gather_input(const std::string& positional, const std::string& file) {
    if (!positional.empty()) return {positional, false};
    std::string text = file.empty() ? read_stream(std::cin) : read_file(file);
    const bool doc = text.rfind("permutation-tableau", 0) == 0;
    return {std::move(text), doc};
}

std::string comma_join(const std::vector<int>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i];
    }
    return out.str();
}

std::string fill_event_line(const FillEvent& event) {
    std::ostringstream out;
    out << "cell " << to_string(event.cell) << " <- " << (event.value ? 1 : 0)
        << " [" << to_string(event.fill_case) << ']';
    if (event.deleted) out << " [delete " << *event.deleted << ']';
    out << " word: " << to_string(event.word_after);
    return out.str();
}

int run_to_tableau(const std::string& positional, const std::string& file,
                   bool render, bool trace) {
    const std::string text = file.empty() ? positional : read_file(file);
    const Permutation p = parse_permutation(text);
    const ForwardResult result = perm_to_tableau(p);
    std::cout << serialize_tableau(result.tableau);
    if (render) std::cout << render_tableau(result.tableau);
    if (trace) {
        for (const FillEvent& event : result.trace) {
            std::cout << fill_event_line(event) << '\n';
        }
    }
    return 0;
}

int run_to_perm(const std::string& file, bool trace) {
    const std::string text = file.empty() ? read_stream(std::cin) : read_file(file);
    const PermutationTableau t = parse_tableau(text);
    const InverseResult result = tableau_to_perm_traced(t);
    if (trace) {
        std::cout << "start " << to_string(result.trace.initial_word) << '\n';
        for (const InsertionStep& step : result.trace.steps) {
            std::cout << "column " << step.column << ": insert " << step.column
                      << " before " << step.before_row;
            if (!step.restricted_rows.empty()) {
                std::cout << "; insert " << comma_join(step.restricted_rows)
                          << " before " << step.column;
            }
            std::cout << "; word: " << to_string(step.word_after) << '\n';
        }
    }
    std::cout << format_permutation(result.permutation) << '\n';
    return 0;
}

int run_validate(const Input& input) {
    if (!input.is_document) {
        parse_permutation(input.text);  // throws on bad text
        std::cout << "OK\n";
        return 0;
    }
    try {
        parse_tableau(input.text);
    } catch (const AxiomViolationError& e) {
        for (const Violation& v : e.report().violations) {
            std::cout << to_string(v) << '\n';
        }
        return 1;
    }
    std::cout << "OK\n";
    return 0;
}

int run_render(const Input& input) {
    if (input.is_document) {
        std::cout << render_tableau(parse_tableau(input.text));
    } else {
        std::cout << render_tableau(perm_to_tableau(parse_permutation(input.text)).tableau);
    }
    return 0;
}

int run_stats(const Input& input) {
    if (!input.is_document) {
        const std::vector<int> descents = descent_set(parse_permutation(input.text));
        std::cout << "descents " << (descents.empty() ? "-" : comma_join(descents)) << '\n';
        return 0;
    }
    const PermutationTableau t = parse_tableau(input.text);
    std::cout << "rows " << comma_join(t.shape().row_labels()) << '\n';
    const auto& cols = t.shape().column_labels();
    std::cout << "columns " << (cols.empty() ? "-" : comma_join(cols)) << '\n';
    std::cout << "unrestricted rows " << comma_join(unrestricted_rows(t)) << '\n';
    std::cout << "rightmost restricted zeros ";
    const auto rrz = rightmost_restricted_zeros(t);
    if (rrz.empty()) {
        std::cout << '-';
    } else {
        bool first = true;
        for (const auto& [row, cell] : rrz) {
            if (!first) std::cout << ' ';
            std::cout << to_string(cell);
            first = false;
        }
    }
    std::cout << '\n';
    return 0;
}

int run_count(int n, std::optional<int> columns) {
    if (columns && (*columns < 0 || *columns >= n)) {
        throw Error(errc::out_of_range,
                    "column count " + std::to_string(*columns) + " outside [0, " +
                        std::to_string(n - 1) + "]");
    }
    const std::vector<std::uint64_t> tabs = tableau_counts(n);
    const std::vector<std::uint64_t> perms = descent_counts(n);
    const std::vector<std::uint64_t> euler = eulerian_row(n);
    bool match = true;
    for (int k = 0; k < n; ++k) {
        if (columns && k != *columns) continue;
        std::cout << k << ' ' << tabs[k] << ' ' << perms[k] << ' ' << euler[k] << '\n';
        if (tabs[k] != perms[k] || perms[k] != euler[k]) match = false;
    }
    std::cout << (match ? "MATCH" : "MISMATCH") << '\n';
    return match ? 0 : 1;
}

int run_verify(int n) {
    std::uint64_t perm_count = 0;
    PermutationStream perms(n);
    while (auto p = perms.next()) {
        ++perm_count;
        const ForwardResult forward = perm_to_tableau(*p);
        const Permutation back = tableau_to_perm(forward.tableau);
        if (!(back == *p)) {
            std::cout << "FAIL: " << format_permutation(*p) << " came back as "
                      << format_permutation(back) << '\n';
            return 1;
        }
    }
    std::uint64_t tableau_count = 0;
    TableauStream tableaux(n);
    while (auto t = tableaux.next()) {
        ++tableau_count;
        const Permutation p = tableau_to_perm(*t);
        const ForwardResult forward = perm_to_tableau(p);
        if (!(forward.tableau == *t)) {
            std::cout << "FAIL: tableau with steps " << t->shape().to_string()
                      << " does not survive the round trip via "
                      << format_permutation(p) << '\n';
            return 1;
        }
    }
    if (perm_count != tableau_count) {
        std::cout << "FAIL: " << perm_count << " permutations vs " << tableau_count
                  << " tableaux\n";
        return 1;
    }
    std::cout << perm_count << " permutations, " << tableau_count
              << " tableaux, all round trips OK\n";
    return 0;
}

int run_enumerate(int n, std::optional<int> columns, bool count_only) {
    TableauStream tableaux(n, columns);
    std::uint64_t count = 0;
    while (auto t = tableaux.next()) {
        ++count;
        if (!count_only) std::cout << serialize_tableau(*t);
    }
    if (count_only) std::cout << count << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation tableaux: bijections, statistics, enumeration"};
    app.require_subcommand(1);

    std::string perm_arg, file_arg;
    bool flag_render = false, flag_trace = false, flag_count_only = false;
    int arg_n = 0;
    int arg_columns = -1;
    bool has_columns = false;

    CLI::App* to_tableau = app.add_subcommand(
        "to-tableau", "map a permutation to its tableau document");
    to_tableau->add_option("perm", perm_arg, "permutation, e.g. 2,4,8,5,1,6,3,7");
    to_tableau->add_option("--file", file_arg, "read the permutation from a file");
    to_tableau->add_flag("--render", flag_render, "also print the ASCII grid");
    to_tableau->add_flag("--trace", flag_trace, "also print one line per fill event");

    CLI::App* to_perm = app.add_subcommand(
        "to-perm", "map a tableau document (stdin or --file) back to its permutation");
    to_perm->add_option("--file", file_arg, "read the document from a file");
    to_perm->add_flag("--trace", flag_trace, "print the column insertion steps");

    CLI::App* validate = app.add_subcommand(
        "validate", "check a tableau document (or permutation text) and report violations");
    validate->add_option("input", perm_arg, "permutation text");
    validate->add_option("--file", file_arg, "read input from a file");

    CLI::App* render = app.add_subcommand(
        "render", "print the labeled ASCII grid of a tableau or of a permutation's tableau");
    render->add_option("input", perm_arg, "permutation text");
    render->add_option("--file", file_arg, "read input from a file");

    CLI::App* stats = app.add_subcommand(
        "stats", "descent set of a permutation, or row/column statistics of a tableau");
    stats->add_option("input", perm_arg, "permutation text");
    stats->add_option("--file", file_arg, "read input from a file");

    CLI::App* count = app.add_subcommand(
        "count", "tableau, descent and Eulerian counts per column count k");
    count->add_option("--n", arg_n, "length / permutation size")->required();
    count->add_option("--columns", arg_columns, "restrict to one k")
        ->each([&](const std::string&) { has_columns = true; });

    CLI::App* verify = app.add_subcommand(
        "verify", "exhaustively round-trip every permutation and tableau of size n");
    verify->add_option("--n", arg_n, "length / permutation size")->required();

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "stream every tableau of length n as documents");
    enumerate->add_option("--n", arg_n, "tableau length")->required();
    enumerate->add_option("--columns", arg_columns, "only shapes with this many columns")
        ->each([&](const std::string&) { has_columns = true; });
    enumerate->add_flag("--count-only", flag_count_only, "print only the number of tableaux");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::optional<int> columns =
        has_columns ? std::optional<int>(arg_columns) : std::nullopt;

    try {
        if (*to_tableau) return run_to_tableau(perm_arg, file_arg, flag_render, flag_trace);
        if (*to_perm) return run_to_perm(file_arg, flag_trace);
        if (*validate) return run_validate(gather_input(perm_arg, file_arg));
        if (*render) return run_render(gather_input(perm_arg, file_arg));
        if (*stats) return run_stats(gather_input(perm_arg, file_arg));
        if (*count) return run_count(arg_n, columns);
        if (*verify) return run_verify(arg_n);
        if (*enumerate) return run_enumerate(arg_n, columns, flag_count_only);
    } catch (const AxiomViolationError& e) {
        for (const Violation& v : e.report().violations) {
            std::cerr << to_string(v) << '\n';
        }
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
            case errc::axiom_violation:
            case errc::insertion_target_missing:
            case errc::internal_invariant_violation:
                return 1;
            default:
                return 2;
        }
    }
    return 0;
}
