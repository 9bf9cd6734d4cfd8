// Projective geometry over GF(q): canonical representatives of the points of
// PG(m-1, q), sorted point sets, coordinate-subspace slices, weight-2 slices,
// and lines.
//
// A point is stored as its canonical representative: the vector scaled so the
// first nonzero coordinate equals 1.  Point sets keep their points sorted
// ascending by the lexicographic order of coordinate encodings.
#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/util.hpp"

namespace lrc {

using Point = std::vector<std::uint32_t>;
using Support = std::vector<std::uint32_t>;  // 0-based coordinate indices, sorted

inline bool is_canonical(const Field& f, const Point& v) {
    for (auto c : v) {
        if (c >= f.q()) return false;
        if (c != 0) return c == 1;
    }
    return false;  // the zero vector is not a projective point
}

// Scales a nonzero vector so its first nonzero coordinate becomes 1.
inline Point canonicalize(const Field& f, Point v) {
    for (auto c : v)
        if (c >= f.q()) throw std::invalid_argument("canonicalize: coordinate out of range");
    for (auto c : v) {
        if (c == 0) continue;
        if (c != 1) {
            std::uint32_t s = f.inv(c);
            for (auto& x : v) x = f.mul(x, s);
        }
        return v;
    }
    throw std::invalid_argument("canonicalize: zero vector has no projective representative");
}

inline std::uint32_t dot(const Field& f, const std::vector<std::uint32_t>& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

// A sorted, duplicate-free set of canonical points in a fixed ambient space.
class PointSet {
public:
    PointSet(Field field, std::uint32_t m, std::vector<Point> pts)
        : field_(std::move(field)), m_(m), pts_(std::move(pts)) {
        if (m_ == 0) throw std::invalid_argument("PointSet: ambient dimension must be >= 1");
        for (const auto& p : pts_) {
            if (p.size() != m_) throw std::invalid_argument("PointSet: point has wrong length");
            if (!is_canonical(field_, p)) throw std::invalid_argument("PointSet: point not canonical");
        }
        std::sort(pts_.begin(), pts_.end());
        pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    }

    const Field& field() const { return field_; }
    std::uint32_t ambient_m() const { return m_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const std::vector<Point>& points() const { return pts_; }
    const Point& operator[](std::size_t i) const { return pts_[i]; }

    bool contains(const Point& p) const {
        return std::binary_search(pts_.begin(), pts_.end(), p);
    }
    // Index of p in the sorted order, or -1.
    std::int64_t index_of(const Point& p) const {
        auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
        if (it == pts_.end() || *it != p) return -1;
        return it - pts_.begin();
    }

    bool operator==(const PointSet& o) const {
        return field_ == o.field_ && m_ == o.m_ && pts_ == o.pts_;
    }

private:
    Field field_;
    std::uint32_t m_;
    std::vector<Point> pts_;
};

namespace detail {

inline void require_same_ambient(const PointSet& a, const PointSet& b, const char* what) {
    if (a.field() != b.field() || a.ambient_m() != b.ambient_m())
        throw std::invalid_argument(std::string(what) + ": ambient mismatch");
}

// All canonical points with coordinates in the s given slots of an
// m-dimensional vector (s = m gives the full point set).
inline std::vector<Point> canonical_points_on(const Field& f, std::uint32_t m, const Support& slots) {
    std::vector<Point> out;
    const std::uint32_t q = f.q();
    const std::size_t s = slots.size();
    for (std::size_t lead = 0; lead < s; ++lead) {
        std::size_t free = s - lead - 1;
        std::vector<std::uint32_t> suffix(free, 0);
        while (true) {
            Point p(m, 0);
            p[slots[lead]] = 1;
            for (std::size_t j = 0; j < free; ++j) p[slots[lead + 1 + j]] = suffix[j];
            out.push_back(std::move(p));
            std::size_t pos = free;
            while (pos > 0) {
                if (++suffix[pos - 1] < q) break;
                suffix[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return out;
}

}  // namespace detail

inline void validate_support(std::uint32_t m, const Support& a, const char* what) {
    if (a.empty()) throw std::invalid_argument(std::string(what) + ": empty coordinate set");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= m) throw std::invalid_argument(std::string(what) + ": coordinate out of range");
        if (i > 0 && a[i] <= a[i - 1])
            throw std::invalid_argument(std::string(what) + ": coordinates must be strictly increasing");
    }
}

// Every point of PG(m-1, q); there are (q^m - 1)/(q - 1) of them.
inline PointSet pg_points(const Field& f, std::uint32_t m) {
    if (m < 2) throw std::invalid_argument("pg_points: need m >= 2");
    Support all(m);
    for (std::uint32_t i = 0; i < m; ++i) all[i] = i;
    return PointSet(f, m, detail::canonical_points_on(f, m, all));
}

// Points supported inside the coordinate set a: a copy of PG(|a|-1, q).
inline PointSet subspace_points(const Field& f, std::uint32_t m, const Support& a) {
    validate_support(m, a, "subspace_points");
    return PointSet(f, m, detail::canonical_points_on(f, m, a));
}

// Points of weight exactly 2 supported inside a; |a| must be at least 3.
inline PointSet weight2_points(const Field& f, std::uint32_t m, const Support& a) {
    validate_support(m, a, "weight2_points");
    if (a.size() < 3) throw std::invalid_argument("weight2_points: need |a| >= 3");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            for (std::uint32_t lam = 1; lam < f.q(); ++lam) {
                Point p(m, 0);
                p[a[i]] = 1;
                p[a[j]] = lam;
                pts.push_back(std::move(p));
            }
    return PointSet(f, m, std::move(pts));
}

// The q+1 points of the unique line through two distinct points.
inline PointSet line_through(const Field& f, std::uint32_t m, const Point& a, const Point& b) {
    if (a.size() != m || b.size() != m) throw std::invalid_argument("line_through: wrong point length");
    if (!is_canonical(f, a) || !is_canonical(f, b))
        throw std::invalid_argument("line_through: points must be canonical");
    if (a == b) throw std::invalid_argument("line_through: points must be distinct");
    std::vector<Point> pts{a, b};
    for (std::uint32_t lam = 1; lam < f.q(); ++lam) {
        Point v(m);
        for (std::uint32_t i = 0; i < m; ++i) v[i] = f.add(a[i], f.mul(lam, b[i]));
        pts.push_back(canonicalize(f, std::move(v)));
    }
    PointSet line(f, m, std::move(pts));
    if (line.size() != f.q() + 1) throw std::logic_error("line_through: degenerate line");
    return line;
}

// All lines through g, each as its full point set, sorted by point list;
// there are (q^(m-1) - 1)/(q - 1) of them.
inline std::vector<PointSet> lines_through(const Field& f, std::uint32_t m, const Point& g) {
    if (g.size() != m || !is_canonical(f, g))
        throw std::invalid_argument("lines_through: g must be a canonical point of the ambient");
    PointSet all = pg_points(f, m);
    std::vector<bool> covered(all.size(), false);
    covered[static_cast<std::size_t>(all.index_of(g))] = true;
    std::vector<std::vector<Point>> lines;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (covered[i]) continue;
        PointSet line = line_through(f, m, g, all[i]);
        for (const auto& p : line.points())
            if (p != g) covered[static_cast<std::size_t>(all.index_of(p))] = true;
        lines.push_back(line.points());
    }
    std::sort(lines.begin(), lines.end());
    std::vector<PointSet> out;
    out.reserve(lines.size());
    for (auto& l : lines) out.emplace_back(f, m, std::move(l));
    return out;
}

inline PointSet union_of(const PointSet& a, const PointSet& b) {
    detail::require_same_ambient(a, b, "union_of");
    std::vector<Point> pts;
    std::set_union(a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
                   std::back_inserter(pts));
    return PointSet(a.field(), a.ambient_m(), std::move(pts));
}

inline PointSet intersection_of(const PointSet& a, const PointSet& b) {
    detail::require_same_ambient(a, b, "intersection_of");
    std::vector<Point> pts;
    std::set_intersection(a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
                          std::back_inserter(pts));
    return PointSet(a.field(), a.ambient_m(), std::move(pts));
}

inline PointSet difference_of(const PointSet& a, const PointSet& b) {
    detail::require_same_ambient(a, b, "difference_of");
    std::vector<Point> pts;
    std::set_difference(a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
                        std::back_inserter(pts));
    return PointSet(a.field(), a.ambient_m(), std::move(pts));
}

// One point per line, coordinates space-separated.
inline void write_points(std::ostream& os, const PointSet& s) {
    for (const auto& p : s.points()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) os << ' ';
            os << p[i];
        }
        os << '\n';
    }
}

inline PointSet read_points(std::istream& is, const Field& f, std::uint32_t m) {
    std::vector<Point> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        Point p;
        std::uint64_t v;
        while (ls >> v) {
            if (v >= f.q())
                throw ParseError("point list line " + std::to_string(lineno) + ": encoding out of range");
            p.push_back(static_cast<std::uint32_t>(v));
        }
        if (!ls.eof())
            throw ParseError("point list line " + std::to_string(lineno) + ": malformed coordinate");
        if (p.size() != m)
            throw ParseError("point list line " + std::to_string(lineno) + ": expected " +
                             std::to_string(m) + " coordinates");
        pts.push_back(std::move(p));
    }
    return PointSet(f, m, std::move(pts));
}

}  // namespace lrc
