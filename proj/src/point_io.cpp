#include "fibdisp/point_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace fibdisp {

GridPointSet read_points(std::istream& in) {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> row_lines;
    std::string line;
    std::size_t lineno = 0;
    int dim = 0;
    BigInt den = 1;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::vector<Rational> row;
        std::string tok;
        while (ss >> tok) {
            Rational r;
            try {
                r = Rational::parse(tok);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            if (r.sign() < 0 || r >= Rational(1)) {
                throw ParseError(lineno, "coordinate " + r.str() + " outside [0, 1)");
            }
            den = lcm(den, r.den());
            row.push_back(std::move(r));
        }
        if (row.empty()) continue;
        if (dim == 0) {
            dim = static_cast<int>(row.size());
        } else if (static_cast<int>(row.size()) != dim) {
            throw ParseError(lineno, "expected " + std::to_string(dim) + " coordinates, got " +
                                         std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
        row_lines.push_back(lineno);
    }
    if (rows.empty()) throw ParseError(lineno, "no points");
    if (den > BigInt(std::int64_t{1} << 40)) throw ParseError(lineno, "common denominator too large");

    const auto d = den.convert_to<std::int64_t>();
    std::vector<std::int64_t> coords;
    std::set<std::vector<std::int64_t>> seen;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::int64_t> p;
        for (const auto& r : rows[i]) p.push_back((r * Rational(d)).num().convert_to<std::int64_t>());
        if (!seen.insert(p).second) throw ParseError(row_lines[i], "duplicate point");
        coords.insert(coords.end(), p.begin(), p.end());
    }
    return {dim, d, std::move(coords)};
}

void write_points(std::ostream& out, const GridPointSet& p) {
    out << "# dim=" << p.dim() << " n=" << p.size() << " den=" << p.den() << '\n';
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (int a = 0; a < p.dim(); ++a) {
            if (a) out << ' ';
            out << p.coordinate(i, a);
        }
        out << '\n';
    }
}

GridPointSet load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return read_points(in);
}

void save(const GridPointSet& p, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    write_points(out, p);
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace fibdisp
