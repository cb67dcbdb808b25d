#pragma once

#include <assoc/matrix.hpp>
#include <assoc/polynomial.hpp>
#include <assoc/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace assoc {

/// Point of P^n with primitive integer coordinates whose first nonzero
/// entry is positive.
class ProjectivePoint {
public:
    ProjectivePoint() = default;

    /// Clears denominators, divides out the content and fixes the sign.
    static ProjectivePoint canonicalize(const RationalVector& raw) {
        if (raw.empty()) throw Error("empty coordinate vector");
        Integer den = 1;
        bool nonzero = false;
        for (const auto& q : raw) {
            if (sgn(q) != 0) nonzero = true;
            den = lcm(den, q.get_den());
        }
        if (!nonzero) throw Error("zero vector is not a projective point");
        IntegerVector ints(raw.size());
        Integer content = 0;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            Rational scaled = raw[i] * den;
            ints[i] = scaled.get_num();
            content = gcd(content, ints[i]);
        }
        int sign = 0;
        for (const auto& z : ints)
            if ((sign = sgn(z)) != 0) break;
        if (sign < 0) content = -content;
        for (auto& z : ints) z /= content;
        ProjectivePoint p;
        p.coords_ = std::move(ints);
        return p;
    }

    static ProjectivePoint canonicalize(const IntegerVector& raw) {
        RationalVector q(raw.begin(), raw.end());
        return canonicalize(q);
    }

    static ProjectivePoint of(std::initializer_list<long> coords) {
        RationalVector q;
        for (long c : coords) q.emplace_back(c);
        return canonicalize(q);
    }

    /// The i-th coordinate point of P^n.
    static ProjectivePoint coordinate(std::size_t n, std::size_t i) {
        RationalVector v(n + 1);
        v[i] = 1;
        return canonicalize(v);
    }

    static ProjectivePoint unit(std::size_t n) { return canonicalize(RationalVector(n + 1, Rational(1))); }

    std::size_t ambient_dim() const { return coords_.size() - 1; }
    const IntegerVector& coords() const { return coords_; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }

    RationalVector rational() const { return {coords_.begin(), coords_.end()}; }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ < b.coords_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ",";
            s += coords_[i].get_str();
        }
        return s + ")";
    }

private:
    IntegerVector coords_;
};

inline ProjectivePoint canonicalize(const RationalVector& raw) { return ProjectivePoint::canonicalize(raw); }

/// Ordered list of pairwise distinct points in a common P^n.
class PointConfiguration {
public:
    PointConfiguration() = default;

    PointConfiguration(std::size_t n, std::vector<ProjectivePoint> points) : n_(n), points_(std::move(points)) {
        for (const auto& p : points_)
            if (p.ambient_dim() != n_) throw Error("point " + p.to_string() + " is not in P^" + std::to_string(n_));
        for (std::size_t i = 0; i < points_.size(); ++i)
            for (std::size_t j = i + 1; j < points_.size(); ++j)
                if (points_[i] == points_[j])
                    throw Error("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
    }

    std::size_t ambient_dim() const { return n_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<ProjectivePoint>& points() const { return points_; }
    const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }

    /// (n+1) x m matrix with the points as columns.
    Matrix coordinate_matrix() const {
        Matrix a(n_ + 1, points_.size());
        for (std::size_t j = 0; j < points_.size(); ++j)
            for (std::size_t i = 0; i <= n_; ++i) a(i, j) = points_[j][i];
        return a;
    }

    /// Configuration with points listed in the order perm[0], perm[1], ...
    PointConfiguration permuted(const std::vector<std::size_t>& perm) const {
        std::vector<ProjectivePoint> pts;
        pts.reserve(perm.size());
        for (auto i : perm) pts.push_back(points_.at(i));
        return {n_, std::move(pts)};
    }

    friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

private:
    std::size_t n_ = 0;
    std::vector<ProjectivePoint> points_;
};

/// Linear map between projective spaces given by a matrix acting on
/// column coordinate vectors.
class ProjectiveMap {
public:
    ProjectiveMap() = default;
    explicit ProjectiveMap(Matrix m) : matrix_(std::move(m)) {}

    const Matrix& matrix() const { return matrix_; }
    std::size_t source_dim() const { return matrix_.cols() - 1; }
    std::size_t target_dim() const { return matrix_.rows() - 1; }

    ProjectivePoint operator()(const ProjectivePoint& p) const {
        if (p.ambient_dim() != source_dim()) throw Error("map applied to point of wrong dimension");
        RationalVector image = matrix_ * p.rational();
        return canonicalize(image);
    }

    PointConfiguration operator()(const PointConfiguration& c) const {
        std::vector<ProjectivePoint> pts;
        pts.reserve(c.size());
        for (const auto& p : c.points()) pts.push_back((*this)(p));
        return {target_dim(), std::move(pts)};
    }

    /// Rescales to primitive integer entries with a positive first nonzero entry.
    ProjectiveMap normalized() const {
        RationalVector flat;
        for (std::size_t i = 0; i < matrix_.rows(); ++i)
            for (std::size_t j = 0; j < matrix_.cols(); ++j) flat.push_back(matrix_(i, j));
        ProjectivePoint p = canonicalize(flat);
        Matrix m(matrix_.rows(), matrix_.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = p[i * m.cols() + j];
        return ProjectiveMap(std::move(m));
    }

private:
    Matrix matrix_;
};

namespace detail {

inline std::string index_list(const std::vector<std::size_t>& idx) {
    std::string s = "{";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(idx[k] + 1);
    }
    return s + "}";
}

}  // namespace detail

/// Invertible map sending p_1..p_{n+1} to the coordinate points and p_{n+2}
/// to (1,...,1). Entries are primitive integers.
inline ProjectiveMap frame_transform(const PointConfiguration& config) {
    const std::size_t n = config.ambient_dim();
    if (config.size() < n + 2) throw Error("frame needs at least n+2 points");
    Matrix basis(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n; ++i) basis(i, j) = config[j][i];

    std::vector<std::size_t> first;
    for (std::size_t i = 0; i <= n; ++i) first.push_back(i);
    if (rank(basis) <= n) throw Error("points " + detail::index_list(first) + " are not in general position");

    RationalVector lambda = solve(basis, config[n + 1].rational());
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(lambda[i]) != 0) continue;
        std::vector<std::size_t> subset;
        for (std::size_t k = 0; k <= n + 1; ++k)
            if (k != i) subset.push_back(k);
        throw Error("points " + detail::index_list(subset) + " are not in general position");
    }
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n; ++i) basis(i, j) *= lambda[j];
    return ProjectiveMap(inverse(basis)).normalized();
}

/// Image of the configuration under its own frame transform.
inline PointConfiguration frame_normal_form(const PointConfiguration& config) {
    return frame_transform(config)(config);
}

/// Ordered projective equivalence, decided by full-frame normalization.
inline bool equivalent(const PointConfiguration& a, const PointConfiguration& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.size() != b.size())
        throw Error("configurations differ in dimension or size");
    if (a.size() < a.ambient_dim() + 2) throw Error("equivalence needs at least n+2 points");
    return frame_normal_form(a) == frame_normal_form(b);
}

/// Cross-ratio of four distinct points of P^1, with the convention that
/// (0, inf, 1, t) has cross-ratio t:
///   cr = [p1 p4][p2 p3] / ([p1 p3][p2 p4]),  [a b] = a_0 b_1 - a_1 b_0.
inline Rational cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2, const ProjectivePoint& p3,
                            const ProjectivePoint& p4) {
    for (const auto* p : {&p1, &p2, &p3, &p4})
        if (p->ambient_dim() != 1) throw Error("cross-ratio needs points of P^1");
    auto bracket = [](const ProjectivePoint& a, const ProjectivePoint& b) -> Integer {
        return a[0] * b[1] - a[1] * b[0];
    };
    Integer d13 = bracket(p1, p3), d24 = bracket(p2, p4), d14 = bracket(p1, p4), d23 = bracket(p2, p3);
    if (d13 == 0 || d24 == 0 || d14 == 0 || d23 == 0 || bracket(p1, p2) == 0 || bracket(p3, p4) == 0)
        throw Error("cross-ratio of coincident points");
    return ratio(d14 * d23, d13 * d24);
}

inline Rational cross_ratio(const PointConfiguration& c) {
    if (c.size() != 4) throw Error("cross-ratio needs exactly four points");
    return cross_ratio(c[0], c[1], c[2], c[3]);
}

/// Veronese map by all degree-k monomials in graded-lex order.
inline ProjectivePoint veronese(const ProjectivePoint& p, int degree) {
    if (degree < 1) throw Error("Veronese degree must be positive");
    auto mons = monomials(p.ambient_dim() + 1, degree);
    RationalVector image;
    image.reserve(mons.size());
    for (const auto& e : mons) image.push_back(monomial_value(e, p.coords()));
    return canonicalize(image);
}

inline PointConfiguration veronese(const PointConfiguration& c, int degree) {
    std::vector<ProjectivePoint> pts;
    for (const auto& p : c.points()) pts.push_back(veronese(p, degree));
    std::size_t dim = pts.empty() ? 0 : pts.front().ambient_dim();
    return {dim, std::move(pts)};
}

/// True when every (n+1)-subset of the first n+2 points spans P^n.
inline bool first_frame_general(const PointConfiguration& c) {
    try {
        frame_transform(c);
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace assoc
