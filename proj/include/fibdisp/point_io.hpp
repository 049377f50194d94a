#pragma once

// Point-set text files: one point per line, coordinates as rationals in
// [0, 1) ("p/q", integers or decimals) separated by whitespace. '#' starts
// a comment and blank lines are skipped. The writer emits a header comment
// "# dim=<d> n=<count> den=<D>".

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fibdisp/point_set.hpp"

namespace fibdisp {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GridPointSet read_points(std::istream& in);
void write_points(std::ostream& out, const GridPointSet& p);

GridPointSet load(const std::filesystem::path& path);
void save(const GridPointSet& p, const std::filesystem::path& path);

}  // namespace fibdisp
