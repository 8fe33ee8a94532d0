#include "gridhom/gridio.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gridhom {

namespace {

GridDiagram parse_json(const std::string& content, const std::string& origin) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw GridError(GridErrorCode::ParseError, origin + ": " + e.what());
    }
    if (!j.contains("n") || !j.contains("X") || !j.contains("O"))
        throw GridError(GridErrorCode::ParseError,
                        origin + ": expected keys \"n\", \"X\", \"O\"");
    try {
        int n = j["n"].get<int>();
        auto X = j["X"].get<std::vector<int>>();
        auto O = j["O"].get<std::vector<int>>();
        return validate_grid(n, std::move(X), std::move(O));
    } catch (const nlohmann::json::exception& e) {
        throw GridError(GridErrorCode::ParseError, origin + ": " + e.what());
    }
}

GridDiagram parse_text(const std::string& content, const std::string& origin) {
    std::istringstream is(content);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> std::string {
        while (std::getline(is, line)) {
            ++lineno;
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '%') continue;
            return line.substr(i);
        }
        throw GridError(GridErrorCode::ParseError,
                        origin + ":" + std::to_string(lineno) + ": unexpected end of file");
    };
    auto fail = [&](const std::string& msg) -> GridError {
        return GridError(GridErrorCode::ParseError,
                         origin + ":" + std::to_string(lineno) + ": " + msg);
    };

    std::string first = next_line();
    int n = 0;
    {
        std::istringstream ls(first);
        if (!(ls >> n)) throw fail("expected grid size");
        std::string extra;
        if (ls >> extra) throw fail("trailing content after grid size");
    }
    auto read_row = [&](char tag) {
        std::string l = next_line();
        if (l.size() < 2 || (l[0] != tag && l[0] != static_cast<char>(tag + 32)) || l[1] != ':')
            throw fail(std::string("expected line \"") + tag + ": ...\"");
        std::istringstream ls(l.substr(2));
        std::vector<int> vals;
        int v;
        while (ls >> v) vals.push_back(v);
        if (!ls.eof()) throw fail("non-integer entry");
        if (static_cast<int>(vals.size()) != n)
            throw fail(std::string("expected ") + std::to_string(n) + " entries");
        return vals;
    };
    auto X = read_row('X');
    auto O = read_row('O');
    try {
        return validate_grid(n, std::move(X), std::move(O));
    } catch (const GridError& e) {
        if (e.code == GridErrorCode::ParseError) throw;
        throw GridError(e.code, origin + ": " + e.what());
    }
}

}  // namespace

GridDiagram parse_grid(const std::string& content, const std::string& origin) {
    size_t i = content.find_first_not_of(" \t\r\n");
    if (i == std::string::npos)
        throw GridError(GridErrorCode::ParseError, origin + ": empty input");
    if (content[i] == '{') return parse_json(content, origin);
    return parse_text(content, origin);
}

GridDiagram load_grid(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw GridError(GridErrorCode::ParseError, path + ": cannot open file");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_grid(ss.str(), path);
}

std::string grid_to_json(const GridDiagram& G) {
    nlohmann::json j;
    j["n"] = G.n;
    j["X"] = G.X;
    j["O"] = G.O;
    return j.dump();
}

}  // namespace gridhom
