#pragma once

#include <cstddef>
#include <vector>

#include "posetq/gf.hpp"

namespace posetq::linalg {

/// Reduced row echelon form over a field. Zero rows are dropped.
struct Echelon {
    std::vector<gf::Vec> rows;
    std::vector<std::size_t> pivots;  // pivot column of each row, strictly increasing

    std::size_t rank() const { return rows.size(); }
};

Echelon rref(const gf::Field& f, std::vector<gf::Vec> rows);

/// Reduces v in place against e; v ends up zero iff it lies in the row space.
void reduce(const gf::Field& f, const Echelon& e, gf::Vec& v);
bool in_span(const gf::Field& f, const Echelon& e, gf::Vec v);

/// Basis of { x : row . x = 0 for every row } in f^ncols.
std::vector<gf::Vec> nullspace(const gf::Field& f, const std::vector<gf::Vec>& rows, std::size_t ncols);

std::size_t rank(const gf::Field& f, std::vector<gf::Vec> rows);

/// Splits each entry into `parts` digits in base `radix`, least significant first.
gf::Vec expand(const gf::Vec& v, std::uint32_t radix, int parts);
/// Inverse of expand.
gf::Vec collapse(const gf::Vec& v, std::uint32_t radix, int parts);

}  // namespace posetq::linalg
