#pragma once

// The "chip-closure v1" wire format: a header naming the closure kind and the
// game parameters, followed by one canonical state line per entry, sorted
// byte-wise. Produced by the solver, consumed by the verifier; both sides
// must agree bit-exactly.

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chipgame/core.hpp"

namespace chipgame {

enum class ClosureKind { Winning, Losing };

inline const char* to_string(ClosureKind kind) {
    return kind == ClosureKind::Winning ? "winning" : "losing";
}

struct ClosureFile {
    ClosureKind kind = ClosureKind::Winning;
    GameSpec spec;
    std::vector<Board> states;  // canonical boards
};

inline std::string closure_header(ClosureKind kind, const GameSpec& spec) {
    std::string out = "chip-closure v1; kind=";
    out += to_string(kind);
    out += "; ";
    out += kGammaKey;
    out += '=';
    out += std::to_string(spec.threshold);
    out += "; sizes=";
    out += encode_sizes(spec);
    return out;
}

inline std::string serialize(const ClosureFile& file) {
    std::vector<std::string> lines;
    lines.reserve(file.states.size());
    for (const auto& board : file.states)
        lines.push_back(state_line(file.spec, board));
    std::sort(lines.begin(), lines.end());
    std::string out = closure_header(file.kind, file.spec);
    out += '\n';
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

inline ClosureFile parse_closure(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw std::invalid_argument("closure file: empty input");

    std::string_view rest = header;
    auto expect = [&](std::string_view prefix) {
        if (rest.substr(0, prefix.size()) != prefix)
            throw std::invalid_argument("closure file: bad header: " + header);
        rest.remove_prefix(prefix.size());
    };
    expect("chip-closure v1; kind=");
    ClosureFile file;
    if (rest.substr(0, 7) == "winning") {
        file.kind = ClosureKind::Winning;
        rest.remove_prefix(7);
    } else if (rest.substr(0, 6) == "losing") {
        file.kind = ClosureKind::Losing;
        rest.remove_prefix(6);
    } else {
        throw std::invalid_argument("closure file: unknown kind in header: " + header);
    }
    expect("; ");
    expect(kGammaKey);
    expect("=");
    std::size_t semi = rest.find(';');
    if (semi == std::string_view::npos)
        throw std::invalid_argument("closure file: bad header: " + header);
    Row gamma = detail::parse_int(rest.substr(0, semi), "threshold");
    rest.remove_prefix(semi + 1);
    expect(" sizes=");
    file.spec = GameSpec(gamma, detail::parse_int_list(rest, "size"));

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ParsedStateLine parsed = parse_state_line(line);
        if (!(parsed.spec == file.spec))
            throw std::invalid_argument("closure file: state line disagrees with header: " + line);
        file.states.push_back(std::move(parsed.board));
    }
    return file;
}

inline ClosureFile parse_closure(const std::string& text) {
    std::istringstream in(text);
    return parse_closure(in);
}

inline ClosureFile read_closure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open closure file: " + path);
    return parse_closure(in);
}

inline void write_closure_file(const std::string& path, const ClosureFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write closure file: " + path);
    out << serialize(file);
}

}  // namespace chipgame
