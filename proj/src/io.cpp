#include "hnt/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace hnt {

namespace {

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::uint64_t> parse_numbers(const std::string& text, std::size_t line_no) {
    std::istringstream stream(text);
    std::vector<std::uint64_t> out;
    std::string token;
    while (stream >> token) {
        try {
            std::size_t used = 0;
            const unsigned long long value = std::stoull(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            const std::string at = line_no ? "line " + std::to_string(line_no) + ": " : "";
            throw ParameterError(at + "expected a nonnegative integer, got '" + token + "'");
        }
    }
    return out;
}

GraphParams parse_header(std::istream& in, std::size_t& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        const auto numbers = parse_numbers(line, line_no);
        if (numbers.size() != 2)
            throw ParameterError("line " + std::to_string(line_no) +
                                 ": header must be 'm q'");
        if (numbers[0] > 64)
            throw ParameterError("line " + std::to_string(line_no) +
                                 ": m is too large");
        return GraphParams(static_cast<std::uint32_t>(numbers[0]), numbers[1]);
    }
    throw ParameterError("missing 'm q' header line");
}

}  // namespace

Code read_code(std::istream& in) {
    std::size_t line_no = 0;
    const GraphParams params = parse_header(in, line_no);
    std::vector<Vertex> words;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        const auto numbers = parse_numbers(line, line_no);
        if (numbers.size() != params.m())
            throw ParameterError("line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(params.m()) + " symbols, got " +
                                 std::to_string(numbers.size()));
        std::vector<Symbol> symbols;
        symbols.reserve(numbers.size());
        for (std::uint64_t n : numbers) {
            if (n >= params.q())
                throw ParameterError("line " + std::to_string(line_no) + ": symbol " +
                                     std::to_string(n) + " outside alphabet");
            symbols.push_back(static_cast<Symbol>(n));
        }
        words.emplace_back(params, std::move(symbols));
    }
    return Code::from_vertices(params, words);
}

void write_code(std::ostream& out, const Code& code) {
    out << code.params().m() << " " << code.params().q() << "\n";
    for (std::size_t i = 0; i < code.size(); ++i) {
        const Vertex w = code.word(i);
        for (std::uint32_t j = 0; j < w.size(); ++j) {
            if (j) out << " ";
            out << w[j];
        }
        out << "\n";
    }
}

GroupGens read_group(std::istream& in) {
    std::size_t line_no = 0;
    const GraphParams params = parse_header(in, line_no);
    std::vector<AutElem> gens;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        try {
            const std::size_t bar = line.find('|');
            if (bar == std::string::npos)
                throw ParameterError("generator line needs '|' before the entry permutation");
            std::vector<Perm> base;
            std::string chunk;
            std::istringstream left(line.substr(0, bar));
            while (std::getline(left, chunk, ';'))
                base.push_back(perm_from_images_text(chunk, static_cast<std::uint32_t>(params.q())));
            if (base.size() != params.m())
                throw ParameterError("expected " + std::to_string(params.m()) +
                                     " alphabet permutations, got " +
                                     std::to_string(base.size()));
            const Perm top = perm_from_images_text(line.substr(bar + 1), params.m());
            gens.emplace_back(params, std::move(base), top);
        } catch (const ParameterError& e) {
            throw ParameterError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (gens.empty())
        throw ParameterError("group file contains no generators");
    return GroupGens(params, std::move(gens));
}

void write_group(std::ostream& out, const GroupGens& group) {
    out << group.params.m() << " " << group.params.q() << "\n";
    for (const AutElem& x : group.gens) {
        for (std::uint32_t j = 0; j < group.params.m(); ++j) {
            if (j) out << "; ";
            out << image_string(x.base[j]);
        }
        out << " | " << image_string(x.top) << "\n";
    }
}

std::string image_string(const Perm& p) {
    std::string out;
    for (std::uint32_t i = 0; i < p.degree(); ++i) {
        if (i) out += " ";
        out += std::to_string(p[i]);
    }
    return out;
}

Perm perm_from_images_text(const std::string& text, std::uint32_t degree) {
    const auto numbers = parse_numbers(text, 0);
    if (numbers.size() != degree)
        throw ParameterError("permutation '" + text + "' must list " +
                             std::to_string(degree) + " images");
    std::vector<std::uint32_t> images;
    images.reserve(numbers.size());
    for (std::uint64_t n : numbers) images.push_back(static_cast<std::uint32_t>(n));
    return Perm::from_images(std::move(images));
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open '" + path + "' for writing");
    return out;
}

}  // namespace

Code read_code_file(const std::string& path) {
    auto in = open_input(path);
    return read_code(in);
}

void write_code_file(const std::string& path, const Code& code) {
    auto out = open_output(path);
    write_code(out, code);
}

GroupGens read_group_file(const std::string& path) {
    auto in = open_input(path);
    return read_group(in);
}

void write_group_file(const std::string& path, const GroupGens& group) {
    auto out = open_output(path);
    write_group(out, group);
}

}  // namespace hnt
