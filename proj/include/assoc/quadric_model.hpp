#pragma once

#include <assoc/matrix.hpp>
#include <assoc/polynomial.hpp>
#include <assoc/projective.hpp>

#include <string>
#include <vector>

namespace assoc {

/// Hyperplanes l_i = sum_s a_{is} t_s of P^4, one row per point.
struct HyperplaneArrangement {
    Matrix rows;
};

/// Row i is v_4(q_i): the condition that a binary quartic
/// sum_j c_j x^{4-j} y^j vanishes at q_i, as a linear form in the c_j.
inline HyperplaneArrangement hyperplanes_from_points(const std::vector<ProjectivePoint>& q) {
    if (q.size() < 5) throw Error("need at least five points on P^1");
    for (const auto& p : q)
        if (p.ambient_dim() != 1) throw Error("expected points of P^1");
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            if (q[i] == q[j])
                throw Error("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
    Matrix rows(q.size(), 5);
    for (std::size_t i = 0; i < q.size(); ++i) {
        ProjectivePoint v = veronese(q[i], 4);
        for (std::size_t s = 0; s < 5; ++s) rows(i, s) = v[s];
    }
    return {std::move(rows)};
}

/// Changes coordinates on P^4 so that the first five hyperplanes are the
/// coordinate hyperplanes: rows <- rows * T^{-1}, T the top 5x5 block.
inline HyperplaneArrangement normalize_arrangement(const HyperplaneArrangement& arr) {
    if (arr.rows.cols() != 5 || arr.rows.rows() < 5) throw Error("arrangement needs at least five rows in P^4");
    for (std::size_t i = 0; i < arr.rows.rows(); ++i) {
        bool zero = true;
        for (std::size_t s = 0; s < 5 && zero; ++s) zero = sgn(arr.rows(i, s)) == 0;
        if (zero) throw Error("hyperplane " + std::to_string(i + 1) + " is zero");
    }
    Matrix top = arr.rows.row_block(0, 5);
    if (sgn(determinant(top)) == 0) throw Error("first five hyperplanes are dependent");
    return {arr.rows * inverse(top)};
}

/// Diagonal quadrics y_i^2 - sum_{s<5} a_{is} y_s^2, i = 5..n+2, in n+3 variables.
struct QuadricModel {
    std::size_t n = 0;
    HyperplaneArrangement arrangement;
    std::vector<Polynomial> quadrics;

    std::size_t variables() const { return n + 3; }
};

/// Quadrics cut out by a normalized arrangement with n+3 rows.
inline QuadricModel model_from_arrangement(const HyperplaneArrangement& normalized) {
    const std::size_t count = normalized.rows.rows();
    if (count < 5) throw Error("arrangement needs at least five rows");
    QuadricModel model{count - 3, normalized, {}};
    for (std::size_t i = 5; i < count; ++i) {
        Polynomial q(count);
        Exponent e(count, 0);
        e[i] = 2;
        q.add_term(e, 1);
        for (std::size_t s = 0; s < 5; ++s) {
            Exponent f(count, 0);
            f[s] = 2;
            q.add_term(f, -normalized.rows(i, s));
        }
        model.quadrics.push_back(std::move(q));
    }
    return model;
}

inline QuadricModel build_model(const std::vector<ProjectivePoint>& q) {
    if (q.size() < 5) throw Error("need n+3 >= 5 points");
    return model_from_arrangement(normalize_arrangement(hyperplanes_from_points(q)));
}

namespace detail {

inline void require_model_point(const QuadricModel& model, const ProjectivePoint& y) {
    if (y.ambient_dim() + 1 != model.variables())
        throw Error("point has " + std::to_string(y.ambient_dim() + 1) + " coordinates, model has " +
                    std::to_string(model.variables()) + " variables");
}

}  // namespace detail

inline bool membership(const QuadricModel& model, const ProjectivePoint& y) {
    detail::require_model_point(model, y);
    for (const auto& q : model.quadrics)
        if (sgn(q.evaluate(y.coords())) != 0) return false;
    return true;
}

/// Image under the squaring cover: t = (y_0^2, ..., y_4^2), after checking
/// l_i(t) = y_i^2 for the remaining rows.
inline ProjectivePoint cover_image(const QuadricModel& model, const ProjectivePoint& y) {
    if (!membership(model, y)) throw Error("point " + y.to_string() + " is not on the model");
    RationalVector t(5);
    for (std::size_t s = 0; s < 5; ++s) t[s] = y[s] * y[s];
    const Matrix& a = model.arrangement.rows;
    for (std::size_t i = 5; i < a.rows(); ++i) {
        Rational l = 0;
        for (std::size_t s = 0; s < 5; ++s) l += a(i, s) * t[s];
        if (l != Rational(y[i] * y[i])) throw Error("cover image inconsistent at row " + std::to_string(i));
    }
    return canonicalize(t);
}

/// All sign changes of a member with no zero coordinate, modulo the global
/// sign: 2^{n+2} distinct points.
inline std::vector<ProjectivePoint> sign_orbit(const QuadricModel& model, const ProjectivePoint& y) {
    detail::require_model_point(model, y);
    if (!membership(model, y)) throw Error("point " + y.to_string() + " is not on the model");
    const std::size_t nv = model.variables();
    for (std::size_t i = 0; i < nv; ++i)
        if (y[i] == 0) throw Error("branch locus: coordinate " + std::to_string(i) + " vanishes");
    std::vector<ProjectivePoint> orbit;
    // Fixing the sign of y_0 picks one representative per projective point.
    for (unsigned long mask = 0; mask < (1UL << (nv - 1)); ++mask) {
        IntegerVector v = y.coords();
        for (std::size_t i = 1; i < nv; ++i)
            if (mask & (1UL << (i - 1))) v[i] = -v[i];
        orbit.push_back(ProjectivePoint::canonicalize(v));
    }
    return orbit;
}

/// Jacobian of the quadrics at y has full rank n-2.
inline bool is_smooth_at(const QuadricModel& model, const ProjectivePoint& y) {
    if (!membership(model, y)) throw Error("point " + y.to_string() + " is not on the model");
    const std::size_t nv = model.variables();
    Matrix jac(model.quadrics.size(), nv);
    for (std::size_t r = 0; r < model.quadrics.size(); ++r)
        for (std::size_t k = 0; k < nv; ++k) jac(r, k) = model.quadrics[r].partial(k).evaluate(y.coords());
    return rank(jac) == model.quadrics.size();
}

/// Member over the binary quartic G^2, G = g0 x^2 + g1 xy + g2 y^2:
/// y_i = G(q_i) rescaled to the normalized coordinates. Returns the
/// coordinates before canonicalization so callers can see zero entries.
inline ProjectivePoint member_from_quadratic(const QuadricModel& model, const std::vector<ProjectivePoint>& q,
                                             const RationalVector& g) {
    if (q.size() != model.variables()) throw Error("expected one point per model variable");
    // With F = G^2, F(q_i) = G(q_i)^2; the normalization changes t but keeps
    // l_i(t) = F(q_i) because the rows are only re-expressed in new coordinates.
    RationalVector y;
    for (const auto& p : q) y.push_back(g[0] * p[0] * p[0] + g[1] * p[0] * p[1] + g[2] * p[1] * p[1]);
    ProjectivePoint pt = canonicalize(y);
    if (!membership(model, pt)) throw Error("constructed point is not a member");
    return pt;
}

}  // namespace assoc
