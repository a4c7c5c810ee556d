#include "posetq/linalg.hpp"

#include <utility>

namespace posetq::linalg {

Echelon rref(const gf::Field& f, std::vector<gf::Vec> rows) {
    Echelon out;
    if (rows.empty()) return out;
    const std::size_t ncols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const gf::Elem s = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const gf::Elem factor = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

void reduce(const gf::Field& f, const Echelon& e, gf::Vec& v) {
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const gf::Elem factor = v[e.pivots[i]];
        if (factor == 0) continue;
        const auto& row = e.rows[i];
        for (std::size_t j = e.pivots[i]; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(factor, row[j]));
    }
}

bool in_span(const gf::Field& f, const Echelon& e, gf::Vec v) {
    reduce(f, e, v);
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

std::vector<gf::Vec> nullspace(const gf::Field& f, const std::vector<gf::Vec>& rows, std::size_t ncols) {
    const Echelon e = rref(f, rows);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<gf::Vec> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        gf::Vec v(ncols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = f.neg(e.rows[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const gf::Field& f, std::vector<gf::Vec> rows) { return rref(f, std::move(rows)).rank(); }

gf::Vec expand(const gf::Vec& v, std::uint32_t radix, int parts) {
    gf::Vec out;
    out.reserve(v.size() * static_cast<std::size_t>(parts));
    for (auto x : v) {
        for (int i = 0; i < parts; ++i) {
            out.push_back(x % radix);
            x /= radix;
        }
    }
    return out;
}

gf::Vec collapse(const gf::Vec& v, std::uint32_t radix, int parts) {
    gf::Vec out(v.size() / static_cast<std::size_t>(parts), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        gf::Elem x = 0;
        for (int j = parts; j-- > 0;) x = x * radix + v[i * static_cast<std::size_t>(parts) + static_cast<std::size_t>(j)];
        out[i] = x;
    }
    return out;
}

}  // namespace posetq::linalg
