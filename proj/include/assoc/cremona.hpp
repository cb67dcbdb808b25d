#pragma once

#include <assoc/projective.hpp>
#include <assoc/weyl.hpp>

#include <string>
#include <vector>

namespace assoc {

/// Generator word acting on ordered configurations of m points in P^n.
struct CremonaWord {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::size_t> letters;

    CremonaWord(std::size_t n_, std::size_t m_, std::vector<std::size_t> letters_)
        : n(n_), m(m_), letters(std::move(letters_)) {
        for (auto l : letters)
            if (l >= m) throw Error("generator s" + std::to_string(l) + " out of range for m = " + std::to_string(m));
    }

    CremonaWord inverse() const { return {n, m, {letters.rbegin(), letters.rend()}}; }
};

/// (z_0, ..., z_n) -> (prod_{j != 0} z_j, ..., prod_{j != n} z_j).
inline ProjectivePoint standard_cremona(const ProjectivePoint& p) {
    const auto& z = p.coords();
    std::size_t zeros = 0;
    for (const auto& c : z)
        if (c == 0) ++zeros;
    if (zeros >= 2) throw Error("indeterminacy locus: " + p.to_string());
    IntegerVector out(z.size(), 1);
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != i) out[i] *= z[j];
    return ProjectivePoint::canonicalize(out);
}

/// Applies the letters left to right. s_i (i >= 1) swaps points i and i+1;
/// s_0 moves the first n+2 points to the standard frame and applies the
/// standard Cremona transformation to points n+2..m.
inline PointConfiguration cr_apply(const CremonaWord& word, const PointConfiguration& config) {
    const std::size_t n = config.ambient_dim();
    if (word.n != n || word.m != config.size()) throw Error("word and configuration differ in (n, m)");
    if (config.size() < n + 3) throw Error("Cremona action needs m >= n+3");
    PointConfiguration current = config;
    for (std::size_t step = 0; step < word.letters.size(); ++step) {
        const std::size_t letter = word.letters[step];
        std::vector<ProjectivePoint> pts = current.points();
        if (letter >= 1) {
            std::swap(pts[letter - 1], pts[letter]);
        } else {
            try {
                ProjectiveMap frame = frame_transform(current);
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    pts[i] = frame(pts[i]);
                    if (i >= n + 1) pts[i] = standard_cremona(pts[i]);
                }
            } catch (const Error& e) {
                throw Error("step " + std::to_string(step + 1) + " (s0): " + e.what());
            }
        }
        try {
            current = PointConfiguration(n, std::move(pts));
        } catch (const Error& e) {
            throw Error("step " + std::to_string(step + 1) + ": " + e.what());
        }
    }
    return current;
}

/// Whether the word for w_J fixes the configuration's orbit (m = n+3).
inline bool kernel_check(const IndexSet& even_set, const PointConfiguration& config) {
    const std::size_t n = config.ambient_dim();
    if (config.size() != n + 3) throw Error("kernel check needs m = n+3");
    CremonaWord word(n, n + 3, w_word(even_set, n));
    return equivalent(cr_apply(word, config), config);
}

}  // namespace assoc
