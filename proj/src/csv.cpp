#include "blockade/csv.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "blockade/config.hpp"
#include "blockade/errors.hpp"

namespace blockade::cli {

namespace {

std::string one_line(std::string s) {
    for (char& c : s) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    for (;;) {
        const auto comma = line.find(',', begin);
        out.push_back(line.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin));
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    return out;
}

Cell parse_cell(const std::string& text, std::size_t line_no) {
    if (text == kGapMarker) return std::nullopt;
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw ConfigError("csv line " + std::to_string(line_no) + ": bad cell '" + text + "'");
    }
    return v;
}

Gap parse_gap(const std::string& body, std::size_t line_no) {
    // body: "row=<i> kind=<k>: <message>"
    const auto bad = [&] { return ConfigError("csv line " + std::to_string(line_no) + ": malformed gap record"); };
    if (body.rfind("row=", 0) != 0) throw bad();
    const auto space = body.find(' ');
    const auto colon = body.find(": ");
    if (space == std::string::npos || colon == std::string::npos || body.compare(space + 1, 5, "kind=") != 0) {
        throw bad();
    }
    Gap g;
    g.row = std::stoul(body.substr(4, space - 4));
    g.kind = body.substr(space + 6, colon - space - 6);
    g.message = body.substr(colon + 2);
    return g;
}

}  // namespace

void write_csv(std::ostream& out, const SweepResult& result) {
    for (const auto& line : result.echo) out << "# " << one_line(line) << '\n';
    for (std::size_t c = 0; c < result.columns.size(); ++c) out << (c ? "," : "") << result.columns[c];
    out << '\n';
    for (const auto& row : result.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << (row[c] ? format_number(*row[c]) : std::string(kGapMarker));
        }
        out << '\n';
    }
    for (const auto& g : result.gaps) {
        out << "# gap row=" << g.row << " kind=" << g.kind << ": " << one_line(g.message) << '\n';
    }
}

void emit_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_csv(out, result);
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

SweepResult read_csv(std::istream& in) {
    SweepResult r;
    bool have_header = false;
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("# ", 0) == 0) {
            const std::string body = line.substr(2);
            if (have_header && body.rfind("gap ", 0) == 0) r.gaps.push_back(parse_gap(body.substr(4), line_no));
            else if (!have_header) r.echo.push_back(body);
            continue;
        }
        if (!have_header) {
            r.columns = split(line);
            have_header = true;
            continue;
        }
        const auto cells = split(line);
        if (cells.size() != r.columns.size()) {
            throw ConfigError("csv line " + std::to_string(line_no) + ": expected " +
                              std::to_string(r.columns.size()) + " cells, found " + std::to_string(cells.size()));
        }
        std::vector<Cell> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(parse_cell(c, line_no));
        r.rows.push_back(std::move(row));
    }
    if (!have_header) throw ConfigError("csv: missing header row");
    return r;
}

}  // namespace blockade::cli
