#pragma once

#include <assoc/matrix.hpp>
#include <assoc/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace assoc {

using Exponent = std::vector<int>;

/// Graded lexicographic comparison: higher total degree first, then
/// lexicographic with x_0 > x_1 > ... . Returns true when a precedes b.
struct GrlexBefore {
    bool operator()(const Exponent& a, const Exponent& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// All exponent vectors of `variables` entries summing to `degree`, in
/// graded-lex order (x_0^degree first).
inline std::vector<Exponent> monomials(std::size_t variables, int degree) {
    std::vector<Exponent> out;
    if (variables == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Exponent e(variables, 0);
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == variables) {
            e[pos] = remaining;
            out.push_back(e);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[pos] = k;
            self(self, pos + 1, remaining - k);
        }
        e[pos] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Indexed list of the degree-d monomials in a fixed number of variables.
class MonomialBasis {
public:
    MonomialBasis(std::size_t variables, int degree)
        : variables_(variables), degree_(degree), list_(monomials(variables, degree)) {
        for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
    }

    std::size_t variables() const { return variables_; }
    int degree() const { return degree_; }
    std::size_t size() const { return list_.size(); }
    const Exponent& operator[](std::size_t i) const { return list_[i]; }
    const std::vector<Exponent>& list() const { return list_; }

    std::size_t index_of(const Exponent& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw Error("monomial not in basis");
        return it->second;
    }

private:
    std::size_t variables_;
    int degree_;
    std::vector<Exponent> list_;
    std::map<Exponent, std::size_t> index_;
};

/// x^e evaluated at a point.
template <typename Scalar>
Rational monomial_value(const Exponent& e, const std::vector<Scalar>& point) {
    Rational v = 1;
    for (std::size_t k = 0; k < e.size(); ++k)
        for (int p = 0; p < e[k]; ++p) v *= point[k];
    return v;
}

/// Sparse multivariate polynomial with exact coefficients; terms are kept
/// in graded-lex order and zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<Exponent, Rational, GrlexBefore>;

    Polynomial() = default;
    explicit Polynomial(std::size_t variables) : variables_(variables) {}

    static Polynomial constant(std::size_t variables, const Rational& c) {
        Polynomial p(variables);
        p.add_term(Exponent(variables, 0), c);
        return p;
    }

    static Polynomial variable(std::size_t variables, std::size_t index) {
        Polynomial p(variables);
        Exponent e(variables, 0);
        e[index] = 1;
        p.add_term(e, 1);
        return p;
    }

    /// Form with the given dense coefficients over a monomial basis.
    static Polynomial from_coefficients(const MonomialBasis& basis, std::span<const Rational> coeffs) {
        if (coeffs.size() != basis.size()) throw Error("coefficient count does not match basis");
        Polynomial p(basis.variables());
        for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
        return p;
    }

    /// Univariate polynomial from coefficients listed by increasing degree.
    static Polynomial univariate(const RationalVector& low_to_high) {
        Polynomial p(1);
        for (std::size_t k = 0; k < low_to_high.size(); ++k) p.add_term({static_cast<int>(k)}, low_to_high[k]);
        return p;
    }

    std::size_t variables() const { return variables_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const Rational& c) {
        if (e.size() != variables_) throw Error("exponent length does not match variable count");
        for (int x : e)
            if (x < 0) throw Error("negative exponent");
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    /// Dense coefficients over a monomial basis; throws if a term falls outside it.
    RationalVector coefficients(const MonomialBasis& basis) const {
        RationalVector out(basis.size());
        for (const auto& [e, c] : terms_) out[basis.index_of(e)] = c;
        return out;
    }

    template <typename Scalar>
    Rational evaluate(const std::vector<Scalar>& point) const {
        if (point.size() != variables_) throw Error("evaluation point has wrong length");
        Rational v = 0;
        for (const auto& [e, c] : terms_) v += c * monomial_value(e, point);
        return v;
    }

    Polynomial partial(std::size_t var) const {
        Polynomial out(variables_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponent f = e;
            --f[var];
            out.add_term(f, c * e[var]);
        }
        return out;
    }

    /// Mixed partial derivative d^alpha.
    Polynomial partial(const Exponent& alpha) const {
        Polynomial out = *this;
        for (std::size_t k = 0; k < alpha.size(); ++k)
            for (int r = 0; r < alpha[k]; ++r) out = out.partial(k);
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial out(a.variables_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(ea.size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.variables_ == b.variables_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const Polynomial& o) const {
        if (o.variables_ != variables_) throw Error("polynomials in different variable counts");
    }

    std::size_t variables_ = 0;
    Terms terms_;
};

/// Pullback of forms along the linear map x = M y, i.e. F |-> F(M y).
/// Images of monomials are memoized, so one instance serves many forms.
class LinearPullback {
public:
    explicit LinearPullback(const Matrix& m) : nv_(m.rows()) {
        if (m.rows() != m.cols()) throw Error("substitution matrix must be square");
        for (std::size_t i = 0; i < nv_; ++i) {
            Polynomial l(nv_);
            for (std::size_t j = 0; j < nv_; ++j) {
                Exponent e(nv_, 0);
                e[j] = 1;
                l.add_term(e, m(i, j));
            }
            forms_.push_back(std::move(l));
        }
    }

    Polynomial operator()(const Polynomial& f) {
        if (f.variables() != nv_) throw Error("substitution matrix has wrong shape");
        Polynomial out(nv_);
        for (const auto& [e, c] : f.terms()) out += image(e) * c;
        return out;
    }

    /// (M y)^e.
    const Polynomial& image(const Exponent& e) {
        auto it = cache_.find(e);
        if (it != cache_.end()) return it->second;
        std::size_t k = 0;
        while (k < nv_ && e[k] == 0) ++k;
        Polynomial value = Polynomial::constant(nv_, 1);
        if (k < nv_) {
            Exponent prev = e;
            --prev[k];
            value = image(prev) * forms_[k];
        }
        return cache_.emplace(e, std::move(value)).first->second;
    }

private:
    std::size_t nv_;
    std::vector<Polynomial> forms_;
    std::map<Exponent, Polynomial> cache_;
};

/// F(M y) for a square matrix M with one row per variable of F.
inline Polynomial substitute_linear(const Polynomial& f, const Matrix& m) {
    if (m.rows() != f.variables()) throw Error("substitution matrix has wrong shape");
    LinearPullback pullback(m);
    return pullback(f);
}

// Dense univariate helpers; coefficient vectors are listed by increasing degree.
namespace univariate {

using Coeffs = RationalVector;

inline void trim(Coeffs& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

/// -1 for the zero polynomial.
inline int degree(const Coeffs& p) {
    for (std::size_t k = p.size(); k > 0; --k)
        if (sgn(p[k - 1]) != 0) return static_cast<int>(k - 1);
    return -1;
}

inline Coeffs from_polynomial(const Polynomial& f) {
    if (f.variables() != 1) throw Error("expected a univariate polynomial");
    Coeffs out(std::max(f.degree(), 0) + 1);
    for (const auto& [e, c] : f.terms()) out[e[0]] = c;
    trim(out);
    return out;
}

inline Rational evaluate(const Coeffs& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t k = p.size(); k > 0; --k) v = v * x + p[k - 1];
    return v;
}

/// Quotient and remainder of a by b (b nonzero).
inline std::pair<Coeffs, Coeffs> divmod(Coeffs a, Coeffs b) {
    trim(a);
    trim(b);
    if (b.empty()) throw Error("division by the zero polynomial");
    int db = degree(b);
    Coeffs q(std::max<int>(degree(a) - db + 1, 0));
    while (degree(a) >= db) {
        int da = degree(a);
        Rational f = a[da] / b[db];
        q[da - db] = f;
        for (int k = 0; k <= db; ++k) a[da - db + k] -= f * b[k];
        trim(a);
    }
    trim(q);
    return {q, a};
}

/// Monic greatest common divisor; zero if both inputs are zero.
inline Coeffs gcd(Coeffs a, Coeffs b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline Coeffs multiply(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

/// Interpolating polynomial through (xs[i], ys[i]) with distinct xs.
inline Coeffs interpolate(const RationalVector& xs, const RationalVector& ys) {
    Coeffs out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Coeffs basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = multiply(basis, Coeffs{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        Rational scale = ys[i] / denom;
        if (out.size() < basis.size()) out.resize(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) out[k] += basis[k] * scale;
    }
    trim(out);
    return out;
}

/// Determinant of the Sylvester matrix of f and g taken at their exact degrees.
inline Rational resultant(Coeffs f, Coeffs g) {
    trim(f);
    trim(g);
    int m = degree(f);
    int n = degree(g);
    if (m < 1 || n < 1) throw Error("degree too low");
    const std::size_t size = static_cast<std::size_t>(m + n);
    Matrix s(size, size);
    // Rows hold coefficients from the leading one down.
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s(r, r + k) = f[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s(n + r, r + k) = g[n - k];
    return determinant(std::move(s));
}

}  // namespace univariate

/// Resultant of two univariate polynomials (Sylvester determinant).
inline Rational resultant(const Polynomial& f, const Polynomial& g) {
    return univariate::resultant(univariate::from_polynomial(f), univariate::from_polynomial(g));
}

}  // namespace assoc
