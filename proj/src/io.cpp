#include "ddc/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <vector>

namespace ddc {

DdcSet read_ddc(std::istream& in, std::optional<int> rank) {
    static const std::regex header(R"(^\s*#\s*ddc\s+n\s*=\s*(\d+)\s*$)");
    std::optional<int> header_rank;
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::smatch m;
        if (std::regex_match(line, m, header)) {
            header_rank = std::stoi(m[1].str());
            continue;
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }

    int n = rank.value_or(header_rank.value_or(0));
    if (n == 0) {
        const GroupCtx unbounded(1 << 30);
        for (const auto& l : lines) n = std::max(n, parse_word(l, unbounded).max_generator());
        n = std::max(n, 1);
    }
    const GroupCtx ctx(n);
    std::vector<Word> words;
    words.reserve(lines.size());
    for (const auto& l : lines) words.push_back(parse_word(l, ctx));
    return DdcSet(ctx, std::move(words));
}

DdcSet read_ddc_file(const std::string& path, std::optional<int> rank) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    return read_ddc(in, rank);
}

void write_ddc(std::ostream& out, const DdcSet& set) {
    out << "# ddc n=" << set.ctx().rank() << '\n';
    for (const Word& w : set.elements()) out << to_string(w) << '\n';
}

void write_ddc_file(const std::string& path, const DdcSet& set) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    write_ddc(out, set);
}

}  // namespace ddc
