#include "deviant/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace deviant {

namespace {

// strips comments; true when something non-blank remains
bool data_line(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line.find_first_not_of(" \t\r") != std::string::npos;
}

[[noreturn]] void bad_line(int no, const std::string& why) {
    throw std::invalid_argument("edge list, line " + std::to_string(no) + ": " + why);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!data_line(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string extra;
            if (!(ls >> n) || n < 1) bad_line(lineno, "expected vertex count");
            if (ls >> extra) bad_line(lineno, "expected vertex count alone");
            continue;
        }
        int i = 0, j = 0;
        std::string extra;
        if (!(ls >> i >> j)) bad_line(lineno, "expected edge `i j`");
        if (ls >> extra) bad_line(lineno, "expected edge `i j` alone");
        if (i < 1 || j < 1 || i > n || j > n || i == j)
            bad_line(lineno, "edge endpoints out of range");
        edges.emplace_back(i, j);
    }
    if (n < 0) throw std::invalid_argument("edge list: empty input");
    return graph_from_edges(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_edge_list(in);
}

Json json_int(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return Json(to_int64(v));
    return Json(v.str());
}

Json json_vector(const ExponentVector& v) {
    Json a = Json::array();
    for (int i = 0; i < v.n(); ++i) a.push_back(v[i]);
    return a;
}

Json deviations_rows(const DeviationTable& t) {
    Json rows = Json::array();
    for (const auto& [s, e] : t.graded) {
        Json row;
        row["s"] = s;
        row["epsilon"] = json_int(e);
        rows.push_back(std::move(row));
    }
    return rows;
}

Json multigraded_rows(const DeviationTable& t) {
    Json rows = Json::array();
    for (const auto& [v, e] : t.multigraded) {
        Json row;
        row["v"] = json_vector(v);
        row["epsilon"] = json_int(e);
        rows.push_back(std::move(row));
    }
    return rows;
}

Json betti_rows(const BettiTable& t) {
    Json rows = Json::array();
    for (const auto& [key, beta] : t.entries) {
        Json row;
        row["i"] = key.first;
        row["v"] = json_vector(key.second);
        row["beta"] = json_int(beta);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string deviations_text(const DeviationTable& t) {
    std::string out = "s\tepsilon\n";
    for (const auto& [s, e] : t.graded)
        out += std::to_string(s) + "\t" + e.str() + "\n";
    return out;
}

std::string multigraded_text(const DeviationTable& t) {
    std::string out = "v\tepsilon\n";
    for (const auto& [v, e] : t.multigraded)
        out += v.str() + "\t" + e.str() + "\n";
    return out;
}

namespace {

std::string betti_grid(const BettiTable& t, const char* sep, bool pad) {
    auto graded = t.graded();
    int imax = t.max_i(), jmax = t.max_j();
    std::vector<std::vector<std::string>> cells(imax + 2);
    cells[0].push_back("i\\j");
    for (int j = 0; j <= jmax; ++j) cells[0].push_back(std::to_string(j));
    for (int i = 0; i <= imax; ++i) {
        auto& row = cells[i + 1];
        row.push_back(std::to_string(i));
        for (int j = 0; j <= jmax; ++j) {
            auto it = graded.find({i, j});
            row.push_back(it == graded.end() ? "" : it->second.str());
        }
    }
    std::vector<size_t> width(jmax + 2, 0);
    if (pad)
        for (const auto& row : cells)
            for (size_t c = 0; c < row.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out += sep;
            if (pad && row[c].size() < width[c])
                out += std::string(width[c] - row[c].size(), ' ');
            out += row[c];
        }
        out += "\n";
    }
    return out;
}

}  // namespace

std::string betti_text(const BettiTable& t) { return betti_grid(t, "  ", true); }

std::string betti_csv(const BettiTable& t) { return betti_grid(t, ",", false); }

}  // namespace deviant
