#pragma once

#include <assoc/gale.hpp>
#include <assoc/generate.hpp>
#include <assoc/matrix.hpp>
#include <assoc/polynomial.hpp>
#include <assoc/projective.hpp>

#include <optional>
#include <string>
#include <vector>

namespace assoc {

/// A base point with multiplicity, optionally with a prescribed tangent
/// line (plane curves only).
struct BaseCondition {
    ProjectivePoint point;
    int multiplicity = 1;
    std::optional<RationalVector> tangent_line;
};

inline BaseCondition simple_point(const ProjectivePoint& p) { return {p, 1, std::nullopt}; }
inline BaseCondition fat_point(const ProjectivePoint& p, int multiplicity) { return {p, multiplicity, std::nullopt}; }

/// Line of P^2 through two distinct points (cross product).
inline RationalVector line_through(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.ambient_dim() != 2 || b.ambient_dim() != 2) throw Error("lines are only defined in P^2");
    RationalVector l{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    if (std::all_of(l.begin(), l.end(), [](const Rational& x) { return sgn(x) == 0; }))
        throw Error("line through coincident points");
    return l;
}

inline void validate(const BaseCondition& c, std::size_t n) {
    if (c.point.ambient_dim() != n) throw Error("base point " + c.point.to_string() + " is not in P^" + std::to_string(n));
    if (c.multiplicity < 1) throw Error("multiplicity must be at least 1");
    if (!c.tangent_line) return;
    if (n != 2) throw Error("tangency conditions are only supported in P^2");
    const auto& l = *c.tangent_line;
    if (l.size() != 3) throw Error("tangent line needs three coefficients");
    if (std::all_of(l.begin(), l.end(), [](const Rational& x) { return sgn(x) == 0; }))
        throw Error("tangent line is zero");
    Rational dot = l[0] * c.point[0] + l[1] * c.point[1] + l[2] * c.point[2];
    if (sgn(dot) != 0) throw Error("tangent line does not pass through " + c.point.to_string());
}

/// Degree-d forms on P^n satisfying a list of base conditions. The basis is
/// the reduced echelon form of the solution space over graded-lex monomials.
struct HypersurfaceSystem {
    std::size_t n = 0;
    int degree = 0;
    std::vector<BaseCondition> conditions;
    std::vector<Polynomial> basis;
    /// Scalar conditions before rank reduction.
    std::size_t condition_count = 0;
    std::size_t monomial_count = 0;

    std::size_t dimension() const { return basis.size(); }
    std::size_t rank() const { return monomial_count - basis.size(); }
};

namespace detail {

/// Some point of the line other than p.
inline RationalVector direction_along(const RationalVector& line, const ProjectivePoint& p) {
    for (std::size_t k = 0; k < 3; ++k) {
        RationalVector e(3);
        e[k] = 1;
        RationalVector r{line[1] * e[2] - line[2] * e[1], line[2] * e[0] - line[0] * e[2],
                         line[0] * e[1] - line[1] * e[0]};
        if (std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; })) continue;
        if (canonicalize(r) == p) continue;
        return r;
    }
    throw Error("could not find a direction along the tangent line");
}

/// Falling factorial coefficient of d^alpha x^beta, zero unless beta >= alpha.
inline Rational derivative_weight(const Exponent& beta, const Exponent& alpha) {
    Rational w = 1;
    for (std::size_t k = 0; k < beta.size(); ++k) {
        if (beta[k] < alpha[k]) return 0;
        for (int r = 0; r < alpha[k]; ++r) w *= beta[k] - r;
    }
    return w;
}

/// Rows of linear conditions on the coefficients of a degree-d form.
inline std::vector<RationalVector> condition_rows(const MonomialBasis& basis, const RationalVector& point,
                                                  int multiplicity,
                                                  const std::optional<RationalVector>& direction) {
    const std::size_t nv = basis.variables();
    const int order = std::min(multiplicity - 1, basis.degree());
    std::vector<RationalVector> rows;
    for (const auto& alpha : monomials(nv, order)) {
        RationalVector row(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Rational w = derivative_weight(basis[j], alpha);
            if (sgn(w) == 0) continue;
            Exponent rest = basis[j];
            for (std::size_t k = 0; k < nv; ++k) rest[k] -= alpha[k];
            row[j] = w * monomial_value(rest, point);
        }
        rows.push_back(std::move(row));
    }
    if (direction && multiplicity == 1) {
        // Directional derivative along the tangent direction.
        RationalVector row(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            for (std::size_t k = 0; k < nv; ++k) {
                if (basis[j][k] == 0 || sgn((*direction)[k]) == 0) continue;
                Exponent rest = basis[j];
                --rest[k];
                row[j] += (*direction)[k] * basis[j][k] * monomial_value(rest, point);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Number of rows a condition contributes to the condition matrix.
inline std::size_t scalar_condition_count(std::size_t n, int d, const BaseCondition& c) {
    auto order = static_cast<unsigned long>(std::min(c.multiplicity - 1, d));
    std::size_t count = binomial(order + n, n).get_ui();
    if (c.tangent_line && c.multiplicity == 1) ++count;
    return count;
}

inline std::optional<RationalVector> tangent_direction(const BaseCondition& c) {
    if (!c.tangent_line) return std::nullopt;
    return direction_along(*c.tangent_line, c.point);
}

inline std::vector<Polynomial> canonical_basis(const MonomialBasis& basis, const std::vector<RationalVector>& vectors) {
    if (vectors.empty()) return {};
    Matrix m = Matrix::from_rows(vectors, basis.size());
    RrefResult r = rref(std::move(m));
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < r.rank; ++i) out.push_back(Polynomial::from_coefficients(basis, r.matrix.row(i)));
    return out;
}

}  // namespace detail

/// Full condition matrix: one row per scalar condition, one column per
/// degree-d monomial in graded-lex order.
inline Matrix condition_matrix(std::size_t n, int d, const std::vector<BaseCondition>& conditions) {
    MonomialBasis basis(n + 1, d);
    std::vector<RationalVector> rows;
    for (const auto& c : conditions) {
        validate(c, n);
        auto r = detail::condition_rows(basis, c.point.rational(), c.multiplicity, detail::tangent_direction(c));
        rows.insert(rows.end(), r.begin(), r.end());
    }
    return Matrix::from_rows(rows, basis.size());
}

enum class SolveStrategy {
    /// Move n+1 independent base points to the coordinate points first.
    frame,
    /// Eliminate on the full condition matrix.
    dense,
};

namespace detail {

inline HypersurfaceSystem solve_dense(std::size_t n, int d, const std::vector<BaseCondition>& conditions) {
    MonomialBasis basis(n + 1, d);
    Matrix cm = condition_matrix(n, d, conditions);
    Matrix null = nullspace_basis(cm);
    std::vector<RationalVector> vectors;
    for (std::size_t i = 0; i < null.rows(); ++i) vectors.push_back(null.row_vector(i));
    return {n, d, conditions, canonical_basis(basis, vectors), cm.rows(), basis.size()};
}

/// Indices of n+1 linearly independent untangented base points, if any.
inline std::optional<std::vector<std::size_t>> frame_points(std::size_t n, const std::vector<BaseCondition>& conditions) {
    std::vector<std::size_t> chosen;
    std::vector<RationalVector> cols;
    for (std::size_t i = 0; i < conditions.size() && chosen.size() <= n; ++i) {
        if (conditions[i].tangent_line) continue;
        cols.push_back(conditions[i].point.rational());
        if (rank(Matrix::from_columns(cols, n + 1)) == cols.size()) {
            chosen.push_back(i);
        } else {
            cols.pop_back();
        }
    }
    if (chosen.size() != n + 1) return std::nullopt;
    return chosen;
}

inline HypersurfaceSystem solve_frame(std::size_t n, int d, const std::vector<BaseCondition>& conditions,
                                      const std::vector<std::size_t>& chosen) {
    MonomialBasis basis(n + 1, d);
    std::size_t condition_count = 0;
    for (const auto& c : conditions) condition_count += scalar_condition_count(n, d, c);

    // x = g y sends the k-th coordinate point to the k-th chosen base point.
    Matrix g(n + 1, n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t i = 0; i <= n; ++i) g(i, k) = conditions[chosen[k]].point[i];
    Matrix g_inv = inverse(g);

    // A form vanishes to order mu at e_k iff it has no monomial with
    // exponent of y_k above d - mu.
    std::vector<int> max_exponent(n + 1, d);
    for (std::size_t k = 0; k <= n; ++k) max_exponent[k] = d - conditions[chosen[k]].multiplicity;
    std::vector<std::size_t> allowed;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        bool ok = true;
        for (std::size_t k = 0; k <= n && ok; ++k) ok = basis[j][k] <= max_exponent[k];
        if (ok) allowed.push_back(j);
    }

    std::vector<bool> is_chosen(conditions.size(), false);
    for (auto i : chosen) is_chosen[i] = true;
    std::vector<RationalVector> rows;
    for (std::size_t i = 0; i < conditions.size(); ++i) {
        if (is_chosen[i]) continue;
        const auto& c = conditions[i];
        BaseCondition moved{canonicalize(g_inv * c.point.rational()), c.multiplicity, std::nullopt};
        if (c.tangent_line) {
            RationalVector l(n + 1);
            for (std::size_t j = 0; j <= n; ++j)
                for (std::size_t k = 0; k <= n; ++k) l[j] += (*c.tangent_line)[k] * g(k, j);
            moved.tangent_line = std::move(l);
        }
        for (auto& full : detail::condition_rows(basis, moved.point.rational(), moved.multiplicity,
                                                 detail::tangent_direction(moved))) {
            RationalVector row(allowed.size());
            for (std::size_t a = 0; a < allowed.size(); ++a) row[a] = full[allowed[a]];
            rows.push_back(std::move(row));
        }
    }

    Matrix null;
    if (rows.empty()) {
        null = Matrix::identity(allowed.size());
    } else {
        null = nullspace_basis(Matrix::from_rows(rows, allowed.size()));
    }

    // The basis is only needed up to scale, so pull back along an integer
    // multiple of g^-1 and use primitive integer null vectors.
    LinearPullback pullback(ProjectiveMap(g_inv).normalized().matrix());
    std::vector<RationalVector> vectors;
    for (std::size_t i = 0; i < null.rows(); ++i) {
        IntegerVector coeffs = primitive_integer_vector(null.row_vector(i));
        Polynomial moved_form(n + 1);
        for (std::size_t a = 0; a < allowed.size(); ++a) moved_form.add_term(basis[allowed[a]], coeffs[a]);
        vectors.push_back(pullback(moved_form).coefficients(basis));
    }
    return {n, d, conditions, canonical_basis(basis, vectors), condition_count, basis.size()};
}

}  // namespace detail

/// Degree-d forms on P^n through the given base conditions. Multiplicity mu
/// at p means all partial derivatives of order mu-1 vanish at p; tangency
/// to a line adds the directional derivative along it.
inline HypersurfaceSystem solve_system(std::size_t n, int d, const std::vector<BaseCondition>& conditions,
                                       SolveStrategy strategy = SolveStrategy::frame) {
    if (d < 1) throw Error("degree must be at least 1");
    for (const auto& c : conditions) validate(c, n);
    if (strategy == SolveStrategy::frame) {
        if (auto chosen = detail::frame_points(n, conditions)) return detail::solve_frame(n, d, conditions, *chosen);
    }
    return detail::solve_dense(n, d, conditions);
}

/// True when every partial derivative of order < multiplicity vanishes at p.
/// Works on a primitive integer multiple of f, which vanishes at the same places.
inline bool vanishes_to_order(const Polynomial& f, const ProjectivePoint& p, int multiplicity) {
    if (f.is_zero()) return true;
    const std::size_t nv = f.variables();
    if (p.ambient_dim() + 1 != nv) throw Error("point has wrong dimension");
    std::vector<Exponent> exps;
    RationalVector coeffs;
    for (const auto& [e, c] : f.terms()) {
        exps.push_back(e);
        coeffs.push_back(c);
    }
    IntegerVector ints = primitive_integer_vector(coeffs);

    const int degree = f.degree();
    std::vector<IntegerVector> powers(nv, IntegerVector(degree + 1));
    for (std::size_t k = 0; k < nv; ++k) {
        powers[k][0] = 1;
        for (int r = 1; r <= degree; ++r) powers[k][r] = powers[k][r - 1] * p[k];
    }

    Integer sum, term;
    for (int order = 0; order < multiplicity && order <= degree; ++order)
        for (const auto& alpha : monomials(nv, order)) {
            sum = 0;
            for (std::size_t t = 0; t < exps.size(); ++t) {
                const Exponent& e = exps[t];
                bool divisible = true;
                for (std::size_t k = 0; k < nv && divisible; ++k) divisible = e[k] >= alpha[k];
                if (!divisible) continue;
                term = ints[t];
                for (std::size_t k = 0; k < nv; ++k) {
                    for (int r = 0; r < alpha[k]; ++r) term *= e[k] - r;
                    term *= powers[k][e[k] - alpha[k]];
                }
                sum += term;
            }
            if (sgn(sum) != 0) return false;
        }
    return true;
}

/// Degree-d form is tangent at p to the line, i.e. vanishes at p and its
/// gradient at p is proportional to the line coefficients.
inline bool tangent_at(const Polynomial& f, const ProjectivePoint& p, const RationalVector& line) {
    const RationalVector pt = p.rational();
    if (sgn(f.evaluate(pt)) != 0) return false;
    RationalVector grad;
    for (std::size_t k = 0; k < f.variables(); ++k) grad.push_back(f.partial(k).evaluate(pt));
    // grad x line == 0
    return sgn(grad[1] * line[2] - grad[2] * line[1]) == 0 && sgn(grad[2] * line[0] - grad[0] * line[2]) == 0 &&
           sgn(grad[0] * line[1] - grad[1] * line[0]) == 0;
}

/// Expected dimension (n+1)^2 - m(n-1) of the family of normal elliptic
/// curves in P^n through m general points.
inline long expected_dimension(long n, long m) { return (n + 1) * (n + 1) - m * (n - 1); }

namespace detail {

inline std::vector<BaseCondition> simple_points(const std::vector<ProjectivePoint>& pts) {
    std::vector<BaseCondition> out;
    for (const auto& p : pts) out.push_back(simple_point(p));
    return out;
}

inline void require_plane_points(const std::vector<ProjectivePoint>& pts, std::size_t count) {
    if (pts.size() != count) throw Error("expected " + std::to_string(count) + " points");
    for (const auto& p : pts)
        if (p.ambient_dim() != 2) throw Error("expected points of P^2");
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw Error("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
}

}  // namespace detail

struct NinthPoint {
    ProjectivePoint point;
    /// Basis of the pencil of cubics through the eight given points.
    Polynomial first;
    Polynomial second;
};

/// Ninth base point of the pencil of plane cubics through eight points.
/// Eliminates z by a resultant in coordinates where the eight points have
/// distinct projections, divides out the known roots and back-substitutes.
inline NinthPoint ninth_base_point(const std::vector<ProjectivePoint>& q) {
    detail::require_plane_points(q, 8);
    HypersurfaceSystem pencil = solve_system(2, 3, detail::simple_points(q));
    if (pencil.dimension() != 2)
        throw Error("pencil dimension " + std::to_string(pencil.dimension()) + " != 2");
    const Polynomial& f = pencil.basis[0];
    const Polynomial& g = pencil.basis[1];

    Rng rng(0x9e3779b97f4a7c15ULL);
    bool saw_nonzero_resultant = false;
    constexpr int kAttempts = 40;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        // x = M y; identity first, then small random changes of coordinates.
        Matrix m = Matrix::identity(3);
        if (attempt > 0) {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) m(i, j) = rng.uniform(-3, 3);
            if (sgn(determinant(m)) == 0) continue;
        }
        Matrix m_inv = inverse(m);
        Polynomial fm = substitute_linear(f, m);
        Polynomial gm = substitute_linear(g, m);
        if (sgn(fm.coefficient({0, 0, 3})) == 0 || sgn(gm.coefficient({0, 0, 3})) == 0) continue;

        RationalVector roots;
        bool usable = true;
        for (const auto& p : q) {
            RationalVector y = m_inv * p.rational();
            if (sgn(y[1]) == 0) {
                usable = false;
                break;
            }
            Rational t = y[0] / y[1];
            if (std::find(roots.begin(), roots.end(), t) != roots.end()) {
                usable = false;
                break;
            }
            roots.push_back(t);
        }
        if (!usable) continue;

        auto slice = [](const Polynomial& form, const Rational& x, const Rational& y) {
            univariate::Coeffs c(4);
            for (const auto& [e, coef] : form.terms()) {
                Rational v = coef;
                for (int r = 0; r < e[0]; ++r) v *= x;
                for (int r = 0; r < e[1]; ++r) v *= y;
                c[e[2]] += v;
            }
            univariate::trim(c);
            return c;
        };

        RationalVector xs, ys;
        for (int t = 0; t <= 9; ++t) {
            xs.emplace_back(t);
            ys.push_back(univariate::resultant(slice(fm, t, 1), slice(gm, t, 1)));
        }
        univariate::Coeffs res = univariate::interpolate(xs, ys);
        if (res.empty()) continue;
        saw_nonzero_resultant = true;

        for (const auto& t : roots) {
            auto [quot, rem] = univariate::divmod(res, {-t, Rational(1)});
            if (!rem.empty()) throw Error("base point is not a root of the eliminant");
            res = std::move(quot);
        }

        // Projection (x : y) of the ninth point.
        Rational px, py;
        if (univariate::degree(res) == 1) {
            px = -res[0] / res[1];
            py = 1;
            if (std::find(roots.begin(), roots.end(), px) != roots.end()) continue;
        } else if (univariate::degree(res) == 0) {
            px = 1;
            py = 0;
        } else {
            continue;
        }

        univariate::Coeffs h = univariate::gcd(slice(fm, px, py), slice(gm, px, py));
        if (univariate::degree(h) != 1) continue;
        Rational pz = -h[0] / h[1];

        ProjectivePoint ninth = canonicalize(m * RationalVector{px, py, pz});
        if (std::find(q.begin(), q.end(), ninth) != q.end()) throw Error("non-reduced base locus");
        if (sgn(f.evaluate(ninth.coords())) != 0 || sgn(g.evaluate(ninth.coords())) != 0)
            throw Error("ninth point does not lie on the pencil");
        return {ninth, f, g};
    }
    if (!saw_nonzero_resultant) throw Error("resultant identically zero after coordinate changes");
    throw Error("non-reduced base locus");
}

struct QuinticWitness {
    std::size_t nullity = 0;
    std::vector<Polynomial> basis;
};

/// Plane quintics with a triple point at q_9 that are tangent at q_i to the
/// line through q_i and q_9, for i = 1..8.
inline std::vector<BaseCondition> quintic_conditions(const std::vector<ProjectivePoint>& q) {
    detail::require_plane_points(q, 9);
    std::vector<BaseCondition> conds;
    for (std::size_t i = 0; i < 8; ++i) conds.push_back({q[i], 1, line_through(q[i], q[8])});
    conds.push_back(fat_point(q[8], 3));
    return conds;
}

inline QuinticWitness quintic_witness(const std::vector<ProjectivePoint>& q) {
    HypersurfaceSystem sys = solve_system(2, 5, quintic_conditions(q));
    return {sys.dimension(), std::move(sys.basis)};
}

struct CobleWitness {
    /// The nine associated points in P^2.
    PointConfiguration associated;
    /// The unique plane cubic through them.
    Polynomial cubic;
};

inline HypersurfaceSystem associated_cubics(const std::vector<ProjectivePoint>& p) {
    if (p.size() != 9) throw Error("expected 9 points in P^5");
    PointConfiguration config(5, p);
    AssociationResult assoc = associate(config);
    return solve_system(2, 3, detail::simple_points(assoc.target.points()));
}

/// Certificate that exactly one elliptic sextic passes through nine points
/// of P^5: the associated plane points lie on a unique cubic.
inline CobleWitness coble_sextic_witness(const std::vector<ProjectivePoint>& p) {
    if (p.size() != 9) throw Error("expected 9 points in P^5");
    PointConfiguration config(5, p);
    AssociationResult assoc = associate(config);
    HypersurfaceSystem cubics = solve_system(2, 3, detail::simple_points(assoc.target.points()));
    if (cubics.dimension() == 0) throw Error("no elliptic curve");
    if (cubics.dimension() >= 2) throw Error("pencil: p_9 on Weddle locus");
    return {assoc.target, cubics.basis.front()};
}

/// p lies on the Weddle variety of p_1..p_8 iff the associated nine plane
/// points lie on a pencil of cubics.
inline bool weddle_membership(const std::vector<ProjectivePoint>& base, const ProjectivePoint& p) {
    if (base.size() != 8) throw Error("expected 8 base points in P^5");
    std::vector<ProjectivePoint> all = base;
    all.push_back(p);
    return associated_cubics(all).dimension() >= 2;
}

}  // namespace assoc
