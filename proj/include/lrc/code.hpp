// Linear codes presented by an m x n generator matrix over GF(q), stored
// column-wise.  Codes built from point sets carry canonical, sorted, distinct
// columns; codes loaded from matrix files keep their file column order and are
// only required to have nonzero in-range columns (consumers that need distinct
// projective points check for themselves).
//
// analyze() computes exact parameters and the full weight distribution by
// enumerating the row space from a reduced row-echelon basis, so each
// codeword is visited exactly once; the codeword count q^rank must fit the
// enumeration budget.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/geometry.hpp"
#include "lrc/util.hpp"

namespace lrc {

struct CodeParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t d = 0;  // 0 for the zero code
    bool operator==(const CodeParams&) const = default;
};

class LinearCode {
public:
    LinearCode(Field field, std::uint32_t m, std::vector<Point> columns)
        : field_(std::move(field)), m_(m), cols_(std::move(columns)) {
        if (m_ == 0) throw std::invalid_argument("LinearCode: message length must be >= 1");
        if (cols_.empty()) throw std::invalid_argument("LinearCode: need at least one column");
        for (const auto& c : cols_) {
            if (c.size() != m_) throw std::invalid_argument("LinearCode: column has wrong length");
            bool nonzero = false;
            for (auto v : c) {
                if (v >= field_.q()) throw std::invalid_argument("LinearCode: entry out of range");
                if (v != 0) nonzero = true;
            }
            if (!nonzero) throw std::invalid_argument("LinearCode: zero column");
        }
    }

    const Field& field() const { return field_; }
    std::uint32_t m() const { return m_; }
    std::size_t n() const { return cols_.size(); }
    const std::vector<Point>& columns() const { return cols_; }
    const Point& column(std::size_t i) const { return cols_[i]; }

    // Generator matrix rows (m rows of n entries).
    std::vector<std::vector<std::uint32_t>> rows() const {
        std::vector<std::vector<std::uint32_t>> g(m_, std::vector<std::uint32_t>(cols_.size()));
        for (std::size_t c = 0; c < cols_.size(); ++c)
            for (std::uint32_t r = 0; r < m_; ++r) g[r][c] = cols_[c][r];
        return g;
    }

    // True when the columns are pairwise distinct as projective points.
    bool columns_distinct_points() const {
        std::vector<Point> canon;
        canon.reserve(cols_.size());
        for (const auto& c : cols_) canon.push_back(canonicalize(field_, c));
        std::sort(canon.begin(), canon.end());
        return std::adjacent_find(canon.begin(), canon.end()) == canon.end();
    }

private:
    Field field_;
    std::uint32_t m_;
    std::vector<Point> cols_;
};

// The code whose generator columns are the given projective points.
inline LinearCode build_code(const PointSet& columns) {
    if (columns.empty()) throw std::invalid_argument("build_code: empty column set");
    return LinearCode(columns.field(), columns.ambient_m(), columns.points());
}

// Weight of the codeword for message x: n minus the number of columns
// orthogonal to x.
inline std::int64_t codeword_weight(const LinearCode& code, const std::vector<std::uint32_t>& x) {
    if (x.size() != code.m()) throw std::invalid_argument("codeword_weight: wrong message length");
    std::int64_t zeros = 0;
    for (const auto& col : code.columns())
        if (dot(code.field(), x, col) == 0) ++zeros;
    return static_cast<std::int64_t>(code.n()) - zeros;
}

// Keeps exactly the columns indexed by `keep` (0-based, strictly increasing).
inline LinearCode puncture(const LinearCode& code, const std::vector<std::uint32_t>& keep) {
    if (keep.empty()) throw std::invalid_argument("puncture: empty index set");
    std::vector<Point> cols;
    cols.reserve(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= code.n()) throw std::invalid_argument("puncture: index out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw std::invalid_argument("puncture: indices must be strictly increasing");
        cols.push_back(code.column(keep[i]));
    }
    return LinearCode(code.field(), code.m(), std::move(cols));
}

namespace detail {

// Reduced row-echelon basis of the row space; the returned rows are the code's
// basis and their count is its rank.
inline std::vector<std::vector<std::uint32_t>> row_echelon_basis(
    const Field& f, std::vector<std::vector<std::uint32_t>> rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && rows[piv][c] == 0) ++piv;
        if (piv == m) continue;
        std::swap(rows[r], rows[piv]);
        std::uint32_t inv = f.inv(rows[r][c]);
        for (std::size_t j = c; j < n; ++j) rows[r][j] = f.mul(inv, rows[r][j]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            std::uint32_t fac = rows[i][c];
            for (std::size_t j = c; j < n; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(fac, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

inline std::int64_t codeword_count_or_throw(std::uint32_t q, std::size_t k, std::int64_t budget) {
    std::int64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total = checked_mul(total, q);
        if (total > budget)
            throw BudgetExceeded("enumeration of " + std::to_string(q) + "^" + std::to_string(k) +
                                 " codewords exceeds the budget of " + std::to_string(budget) +
                                 " (set LRC_MAX_ENUM to raise it)");
    }
    return total;
}

// Calls leaf(word) for every element of the row space of basis, each once.
template <class Leaf>
void enumerate_row_space(const Field& f, const std::vector<std::vector<std::uint32_t>>& basis,
                         std::size_t n, Leaf&& leaf) {
    const std::size_t k = basis.size();
    std::vector<std::vector<std::uint32_t>> buf(k + 1, std::vector<std::uint32_t>(n, 0));
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == k) {
            leaf(const_cast<const std::vector<std::uint32_t>&>(buf[k]));
            return;
        }
        const auto& row = basis[depth];
        for (std::uint32_t v = 0; v < f.q(); ++v) {
            auto& out = buf[depth + 1];
            const auto& in = buf[depth];
            if (v == 0) {
                out = in;
            } else {
                for (std::size_t j = 0; j < n; ++j) out[j] = f.add(in[j], f.mul(v, row[j]));
            }
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace detail

struct AnalyzeResult {
    CodeParams params;
    std::map<std::int64_t, std::int64_t> weight_distribution;
};

inline AnalyzeResult analyze(const LinearCode& code, std::int64_t budget = enumeration_budget()) {
    const Field& f = code.field();
    auto basis = detail::row_echelon_basis(f, code.rows());
    const std::size_t k = basis.size();
    std::int64_t total = detail::codeword_count_or_throw(f.q(), k, budget);

    AnalyzeResult res;
    res.params.n = static_cast<std::int64_t>(code.n());
    res.params.k = static_cast<std::int64_t>(k);
    detail::enumerate_row_space(f, basis, code.n(), [&](const std::vector<std::uint32_t>& w) {
        std::int64_t wt = 0;
        for (auto v : w)
            if (v != 0) ++wt;
        ++res.weight_distribution[wt];
    });

    std::int64_t seen = 0;
    for (auto& [w, c] : res.weight_distribution) seen += c;
    if (seen != total || res.weight_distribution[0] != 1)
        throw std::logic_error("analyze: weight distribution is inconsistent");
    res.params.d = 0;
    for (auto& [w, c] : res.weight_distribution)
        if (w > 0) {
            res.params.d = w;
            break;
        }
    return res;
}

// Minimum distance only, skipping per-codeword work as soon as a codeword is
// at least as heavy as the best minimum found so far.
inline std::int64_t min_distance(const LinearCode& code, std::int64_t budget = enumeration_budget()) {
    const Field& f = code.field();
    auto basis = detail::row_echelon_basis(f, code.rows());
    if (basis.empty()) return 0;
    detail::codeword_count_or_throw(f.q(), basis.size(), budget);

    std::int64_t best = static_cast<std::int64_t>(code.n()) + 1;
    detail::enumerate_row_space(f, basis, code.n(), [&](const std::vector<std::uint32_t>& w) {
        std::int64_t wt = 0;
        for (auto v : w) {
            if (v == 0) continue;
            if (++wt >= best) return;  // cannot improve the minimum
        }
        if (wt > 0 && wt < best) best = wt;
    });
    return best;
}

// Matrix file format:
//   line 1: p e <modulus coefficients, lowest degree first, e+1 of them>
//   line 2: q m n
//   then m rows of n space-separated element encodings.
inline void write_matrix(std::ostream& os, const LinearCode& code) {
    const Field& f = code.field();
    os << f.p() << ' ' << f.e();
    for (auto c : f.modulus()) os << ' ' << c;
    os << '\n' << f.q() << ' ' << code.m() << ' ' << code.n() << '\n';
    for (std::uint32_t r = 0; r < code.m(); ++r) {
        for (std::size_t c = 0; c < code.n(); ++c) {
            if (c) os << ' ';
            os << code.column(c)[r];
        }
        os << '\n';
    }
}

namespace detail {

inline std::vector<std::uint64_t> parse_int_line(const std::string& line, std::size_t lineno) {
    std::istringstream ls(line);
    std::vector<std::uint64_t> vals;
    std::string tok;
    while (ls >> tok) {
        std::uint64_t v = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9')
                throw ParseError("matrix line " + std::to_string(lineno) + ", token " +
                                 std::to_string(vals.size() + 1) + ": not a number: '" + tok + "'");
            v = v * 10 + static_cast<std::uint64_t>(ch - '0');
            if (v > (1ull << 32))
                throw ParseError("matrix line " + std::to_string(lineno) + ": number too large");
        }
        vals.push_back(v);
    }
    return vals;
}

}  // namespace detail

inline LinearCode read_matrix(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("matrix line 1: missing field header");
    auto head = detail::parse_int_line(line, 1);
    if (head.size() < 2) throw ParseError("matrix line 1: expected 'p e modulus...'");
    std::uint64_t p = head[0], e = head[1];
    if (head.size() != 2 + e + 1)
        throw ParseError("matrix line 1: expected " + std::to_string(e + 1) + " modulus coefficients");
    Poly modulus(head.begin() + 2, head.end());
    Field f = [&] {
        try {
            return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e), &modulus);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(std::string("matrix line 1: ") + ex.what());
        }
    }();

    if (!std::getline(is, line)) throw ParseError("matrix line 2: missing dimensions");
    auto dims = detail::parse_int_line(line, 2);
    if (dims.size() != 3) throw ParseError("matrix line 2: expected 'q m n'");
    if (dims[0] != f.q()) throw ParseError("matrix line 2: q does not equal p^e");
    std::uint64_t m = dims[1], n = dims[2];
    if (m < 1 || n < 1) throw ParseError("matrix line 2: m and n must be >= 1");

    std::vector<Point> cols(n, Point(m));
    for (std::uint64_t r = 0; r < m; ++r) {
        if (!std::getline(is, line))
            throw ParseError("matrix line " + std::to_string(3 + r) + ": missing row");
        auto vals = detail::parse_int_line(line, 3 + r);
        if (vals.size() != n)
            throw ParseError("matrix line " + std::to_string(3 + r) + ": expected " + std::to_string(n) +
                             " entries, got " + std::to_string(vals.size()));
        for (std::uint64_t c = 0; c < n; ++c) {
            if (vals[c] >= f.q())
                throw ParseError("matrix line " + std::to_string(3 + r) + ", column " +
                                 std::to_string(c + 1) + ": encoding out of range for GF(" +
                                 std::to_string(f.q()) + ")");
            cols[c][r] = static_cast<std::uint32_t>(vals[c]);
        }
    }
    while (std::getline(is, line))
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError("matrix: unexpected trailing content");
    try {
        return LinearCode(std::move(f), static_cast<std::uint32_t>(m), std::move(cols));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("matrix: ") + ex.what());
    }
}

inline void write_matrix_file(const std::string& path, const LinearCode& code) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_matrix(os, code);
    if (!os) throw std::runtime_error("write failed: " + path);
}

inline LinearCode read_matrix_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_matrix(is);
}

}  // namespace lrc
