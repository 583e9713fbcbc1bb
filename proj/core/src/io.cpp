#include "twuality/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

namespace twuality {
namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

bool skippable(const std::string& line) {
    for (const char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;  // blank
}

struct LineReader {
    std::istream& in;
    std::string filename;
    std::size_t line_number = 0;

    // Next content line, with its number; comment and blank lines skipped.
    std::optional<std::pair<std::string, std::size_t>> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_number;
            if (!skippable(line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                return std::make_pair(line, line_number);
            }
        }
        return std::nullopt;
    }

    [[noreturn]] void fail(std::size_t at, const std::string& message) const {
        throw parse_error(filename, at, message);
    }
};

}  // namespace

SetSystem parse_set_system(std::istream& in, std::string_view filename) {
    LineReader reader{in, std::string(filename)};
    const auto header = reader.next();
    if (!header) reader.fail(reader.line_number + 1, "missing 'elements:' header");
    auto tokens = split_tokens(header->first);
    if (tokens.empty() || tokens.front() != "elements:") {
        reader.fail(header->second, "expected 'elements: <name>...'");
    }
    std::vector<std::string> names(tokens.begin() + 1, tokens.end());
    const auto index_of = [&](const std::string& name) {
        return std::find(names.begin(), names.end(), name) - names.begin();
    };

    std::vector<SubsetMask> family;
    while (const auto line = reader.next()) {
        const auto set_tokens = split_tokens(line->first);
        if (set_tokens.size() == 1 && set_tokens.front() == "-") {
            family.push_back(SubsetMask::empty_set());
            continue;
        }
        SubsetMask subset;
        for (const auto& name : set_tokens) {
            const auto idx = static_cast<std::size_t>(index_of(name));
            if (idx == names.size()) {
                reader.fail(line->second, "unknown element '" + name + "'");
            }
            if (subset.test(idx)) {
                reader.fail(line->second, "element '" + name + "' repeated in a feasible set");
            }
            subset = subset.with(idx);
        }
        family.push_back(subset);
    }
    try {
        return SetSystem(std::move(names), std::move(family));
    } catch (const error& e) {
        throw parse_error(std::string(filename), reader.line_number, e.what());
    }
}

std::string to_ss_format(const SetSystem& system) {
    std::string out = "elements:";
    for (const auto& name : system.element_names()) {
        out += ' ';
        out += name;
    }
    out += '\n';
    for (const SubsetMask f : system.family()) {
        if (f.empty()) {
            out += "-\n";
            continue;
        }
        bool first = true;
        for_each_element(f, [&](std::size_t e) {
            if (!first) out += ' ';
            out += system.element_names()[e];
            first = false;
        });
        out += '\n';
    }
    return out;
}

Gf2SymMatrix parse_gf2_matrix(std::istream& in, std::string_view filename) {
    LineReader reader{in, std::string(filename)};
    const auto header = reader.next();
    if (!header) reader.fail(reader.line_number + 1, "missing dimension line");
    const auto dim_tokens = split_tokens(header->first);
    std::size_t n = 0;
    try {
        if (dim_tokens.size() != 1) throw std::invalid_argument("token count");
        n = std::stoul(dim_tokens.front());
    } catch (const std::exception&) {
        reader.fail(header->second, "expected the dimension as a single integer");
    }
    if (n > max_ground_size) {
        reader.fail(header->second, "dimension exceeds " + std::to_string(max_ground_size));
    }
    std::vector<std::uint64_t> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto line = reader.next();
        if (!line) reader.fail(reader.line_number + 1, "missing matrix row");
        const auto entries = split_tokens(line->first);
        if (entries.size() != n) {
            reader.fail(line->second, "expected " + std::to_string(n) + " entries");
        }
        std::uint64_t row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (entries[j] == "1") {
                row |= std::uint64_t{1} << j;
            } else if (entries[j] != "0") {
                reader.fail(line->second, "entries must be 0 or 1");
            }
        }
        rows.push_back(row);
    }
    try {
        return Gf2SymMatrix::from_rows(std::move(rows));
    } catch (const error& e) {
        throw parse_error(std::string(filename), reader.line_number, e.what());
    }
}

std::string to_gf2_format(const Gf2SymMatrix& matrix) {
    std::string out = std::to_string(matrix.dimension());
    out += '\n';
    for (std::size_t i = 0; i < matrix.dimension(); ++i) {
        for (std::size_t j = 0; j < matrix.dimension(); ++j) {
            if (j > 0) out += ' ';
            out += matrix.entry(i, j) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

SignedChordDiagram parse_chord_diagram(std::istream& in, std::string_view filename) {
    LineReader reader{in, std::string(filename)};
    const auto word_line = reader.next();
    if (!word_line) reader.fail(reader.line_number + 1, "missing 'word:' line");
    auto word_tokens = split_tokens(word_line->first);
    if (word_tokens.empty() || word_tokens.front() != "word:") {
        reader.fail(word_line->second, "expected 'word: <token>...'");
    }
    word_tokens.erase(word_tokens.begin());

    const auto twisted_line = reader.next();
    if (!twisted_line) reader.fail(reader.line_number + 1, "missing 'twisted:' line");
    auto twisted_tokens = split_tokens(twisted_line->first);
    if (twisted_tokens.empty() || twisted_tokens.front() != "twisted:") {
        reader.fail(twisted_line->second, "expected 'twisted: <label>...'");
    }
    twisted_tokens.erase(twisted_tokens.begin());

    if (const auto extra = reader.next()) {
        reader.fail(extra->second, "unexpected content after the twisted line");
    }
    try {
        return SignedChordDiagram(std::move(word_tokens), std::move(twisted_tokens));
    } catch (const error& e) {
        throw parse_error(std::string(filename), twisted_line->second, e.what());
    }
}

std::string to_cd_format(const SignedChordDiagram& diagram) {
    std::string out = "word:";
    for (const auto& token : diagram.word()) {
        out += ' ';
        out += token;
    }
    out += "\ntwisted:";
    for_each_element(diagram.twisted(), [&](std::size_t c) {
        out += ' ';
        out += diagram.labels()[c];
    });
    out += '\n';
    return out;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw error("cannot open '" + path + "'");
    }
    return in;
}

}  // namespace

SetSystem load_set_system(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_set_system(in, path);
}

Gf2SymMatrix load_gf2_matrix(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_gf2_matrix(in, path);
}

SignedChordDiagram load_chord_diagram(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_chord_diagram(in, path);
}

}  // namespace twuality
