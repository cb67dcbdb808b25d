#pragma once

#include <assoc/matrix.hpp>
#include <assoc/projective.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace assoc {

/// Source configuration in P^n, associated configuration in P^{m-n-2}, and
/// the nullspace matrix whose columns give the target coordinates.
struct AssociationResult {
    PointConfiguration source;
    PointConfiguration target;
    Matrix certificate;
};

/// Classical association: the columns of a nullspace basis of the
/// coordinate matrix, read as points of P^{m-n-2}.
inline AssociationResult associate(const PointConfiguration& config) {
    const std::size_t n = config.ambient_dim();
    const std::size_t m = config.size();
    if (m < n + 3) throw Error("association needs m >= n+3 points");

    Matrix a = config.coordinate_matrix();
    if (rank(a) != n + 1) throw Error("points do not span P^" + std::to_string(n));

    Matrix b = nullspace_basis(a);
    std::vector<ProjectivePoint> target;
    target.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        RationalVector col = b.column(j);
        bool zero = std::all_of(col.begin(), col.end(), [](const Rational& x) { return sgn(x) == 0; });
        if (zero) throw Error("point " + std::to_string(j + 1) + " in special position");
        target.push_back(canonicalize(col));
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (target[i] == target[j])
                throw Error("associated points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                            " coincide");
    return {config, PointConfiguration(m - n - 2, std::move(target)), std::move(b)};
}

/// Ordered self-association test for m = 2n+2 points.
inline bool is_self_associated(const PointConfiguration& config) {
    if (config.size() != 2 * config.ambient_dim() + 2) throw Error("self-association needs m = 2n+2");
    return equivalent(config, associate(config).target);
}

}  // namespace assoc
