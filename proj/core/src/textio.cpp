#include "ptab/textio.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "ptab/error.hpp"

namespace ptab {

namespace {

constexpr std::string_view kHeader = "permutation-tableau v1";

std::string row_bits(const PermutationTableau& t, int row) {
    std::string bits;
    for (int j : t.shape().row_columns(row)) {  // descending = west to east
        bits += t.at({row, j}) ? '1' : '0';
    }
    return bits;
}

[[noreturn]] void syntax(const std::string& message) {
    throw Error(errc::syntax_error, message);
}

[[noreturn]] void mismatch(const std::string& message) {
    throw Error(errc::shape_mismatch, message);
}

// Splits on '\n'. The document must end with a newline, so a well-formed
// text produces no dangling last fragment.
std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            return lines;
        }
        lines.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

bool parse_int(std::string_view token, int& out) {
    if (token.empty() || token.size() > 9) return false;
    long value = 0;
    for (char ch : token) {
        if (ch < '0' || ch > '9') return false;
        value = value * 10 + (ch - '0');
    }
    if (token.size() > 1 && token[0] == '0') return false;  // no leading zeros
    out = static_cast<int>(value);
    return true;
}

}  // namespace

std::string serialize_tableau(const PermutationTableau& t) {
    std::ostringstream out;
    out << kHeader << '\n';
    out << "steps " << t.shape().to_string() << '\n';
    for (int i : t.shape().row_labels()) {
        const std::string bits = row_bits(t, i);
        out << "row " << i << ' ' << (bits.empty() ? "-" : bits.c_str()) << '\n';
    }
    out << "end\n";
    return out.str();
}

PermutationTableau parse_tableau(std::string_view text) {
    const std::vector<std::string> lines = lines_of(text);
    std::size_t at = 0;
    auto next_line = [&]() -> const std::string& {
        if (at >= lines.size()) syntax("document ends early");
        return lines[at++];
    };

    if (next_line() != kHeader) syntax("expected header '" + std::string(kHeader) + "'");

    const std::string& steps_line = next_line();
    if (steps_line.rfind("steps ", 0) != 0) syntax("expected 'steps ...' line");
    const std::string steps_text = steps_line.substr(6);
    if (steps_text.empty()) syntax("steps line has no steps");
    for (char ch : steps_text) {
        if (ch != 'S' && ch != 'W') syntax(std::string("bad step character '") + ch + "'");
    }
    if (steps_text[0] != 'S') syntax("first step must be S");
    BoundaryWord shape = BoundaryWord::from_string(steps_text);

    std::map<Cell, int> filling;
    for (int expected : shape.row_labels()) {
        const std::string& line = next_line();
        if (line == "end") mismatch("missing row line for row " + std::to_string(expected));
        std::istringstream fields(line);
        std::string keyword, label_text, bits;
        if (!(fields >> keyword >> label_text >> bits) || keyword != "row" ||
            !(fields >> std::ws).eof()) {
            syntax("malformed row line '" + line + "'");
        }
        int label = 0;
        if (!parse_int(label_text, label)) syntax("bad row label '" + label_text + "'");
        if (label != expected) {
            mismatch("expected row " + std::to_string(expected) + ", got row " +
                     std::to_string(label));
        }
        const auto cols = shape.row_columns(label);  // descending = west to east
        if (bits == "-") {
            if (!cols.empty()) {
                mismatch("row " + std::to_string(label) + " has " +
                         std::to_string(cols.size()) + " cells but no bits");
            }
            continue;
        }
        for (char ch : bits) {
            if (ch != '0' && ch != '1') syntax(std::string("bad bit character '") + ch + "'");
        }
        if (bits.size() != cols.size()) {
            mismatch("row " + std::to_string(label) + " needs " +
                     std::to_string(cols.size()) + " bits, got " +
                     std::to_string(bits.size()));
        }
        for (std::size_t c = 0; c < cols.size(); ++c) {
            filling[{label, cols[c]}] = bits[c] - '0';
        }
    }

    if (next_line() != "end") mismatch("extra row line where 'end' was expected");
    if (at != lines.size()) syntax("unexpected content after 'end'");

    return PermutationTableau::create(std::move(shape), filling);
}

std::string render_tableau(const PermutationTableau& t) {
    std::ostringstream out;
    const auto& cols = t.shape().column_labels();
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        if (it != cols.rbegin()) out << ' ';
        out << *it;
    }
    out << '\n';
    for (int i : t.shape().row_labels()) {
        for (int j : t.shape().row_columns(i)) {
            out << (t.at({i, j}) ? '1' : '0') << ' ';
        }
        out << "| " << i << '\n';
    }
    return out.str();
}

Permutation parse_permutation(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
            s.remove_prefix(1);
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
            s.remove_suffix(1);
        }
        return s;
    };

    std::string_view body = trim(text);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
        body = trim(body.substr(1, body.size() - 2));
    }
    if (body.empty()) syntax("empty permutation");

    std::vector<int> word;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = body.find(',', start);
        std::string_view token =
            trim(comma == std::string_view::npos ? body.substr(start)
                                                 : body.substr(start, comma - start));
        int value = 0;
        if (!parse_int(token, value)) {
            syntax("bad permutation entry '" + std::string(token) + "'");
        }
        word.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Permutation::from_word(std::move(word));
}

std::string format_permutation(const Permutation& p) {
    std::ostringstream out;
    out << '(';
    const auto& word = p.word();
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out << ',';
        out << word[i];
    }
    out << ')';
    return out.str();
}

}  // namespace ptab
