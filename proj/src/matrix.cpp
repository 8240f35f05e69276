#include "detkit/matrix.hpp"

#include <sstream>

namespace detkit {

RationalMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<BigRational>> rows;
    std::size_t want = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<BigRational> row;
        std::string token;
        while (ls >> token) row.push_back(BigRational::parse(token));
        if (row.empty()) continue;
        if (rows.empty())
            want = row.size();
        else if (row.size() != want)
            throw RaggedRows(lineno, row.size(), want);
        rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.size() != want) throw NotSquare(rows.size(), want);
    return RationalMatrix::from_rows(rows);
}

std::string serialize_matrix(const RationalMatrix& m) {
    std::string out;
    for (int i = 1; i <= m.order(); ++i) {
        for (int j = 1; j <= m.order(); ++j) {
            if (j > 1) out += " ";
            out += m.at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

} // namespace detkit
