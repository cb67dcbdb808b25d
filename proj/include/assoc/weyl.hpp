#pragma once

#include <assoc/rational.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace assoc {

/// Subset of {1, ..., N}, kept sorted.
using IndexSet = std::set<std::size_t>;

inline IndexSet symmetric_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
    return out;
}

inline IndexSet complement(const IndexSet& a, std::size_t size) {
    IndexSet out;
    for (std::size_t i = 1; i <= size; ++i)
        if (!a.count(i)) out.insert(i);
    return out;
}

/// All subsets of {1..size} with the given cardinality parity, ordered by bitmask.
inline std::vector<IndexSet> subsets_with_parity(std::size_t size, bool odd) {
    std::vector<IndexSet> out;
    for (unsigned long mask = 0; mask < (1UL << size); ++mask) {
        if ((__builtin_popcountl(mask) % 2 == 1) != odd) continue;
        IndexSet s;
        for (std::size_t i = 0; i < size; ++i)
            if (mask & (1UL << i)) s.insert(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

/// Class in the Picard lattice of P^n blown up in m points, with
/// coefficients in the basis e_0, e_1, ..., e_m.
struct DivisorClass {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<long> coeffs;

    static DivisorClass zero(std::size_t n, std::size_t m) { return {n, m, std::vector<long>(m + 1, 0)}; }

    static DivisorClass basis(std::size_t n, std::size_t m, std::size_t i) {
        DivisorClass c = zero(n, m);
        c.coeffs.at(i) = 1;
        return c;
    }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
        if (a.coeffs.size() != b.coeffs.size()) throw Error("classes from different lattices");
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
        return a;
    }

    std::string to_string() const {
        std::string s = "(" + std::to_string(coeffs[0]) + ";";
        for (std::size_t i = 1; i < coeffs.size(); ++i) s += (i > 1 ? "," : "") + std::to_string(coeffs[i]);
        return s + ")";
    }
};

/// Invariant form: <e_0,e_0> = n-1, <e_i,e_i> = -1, off-diagonal zero.
inline long pairing(const DivisorClass& a, const DivisorClass& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw Error("classes from different lattices");
    long v = static_cast<long>(a.n - 1) * a.coeffs[0] * b.coeffs[0];
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) v -= a.coeffs[i] * b.coeffs[i];
    return v;
}

/// Lattice automorphism; column j holds the coefficients of the image of e_j.
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(std::size_t n, std::size_t m) : n_(n), m_(m), entries_((m + 1) * (m + 1), 0) {}

    static WeylElement identity(std::size_t n, std::size_t m) {
        WeylElement w(n, m);
        for (std::size_t i = 0; i <= m; ++i) w(i, i) = 1;
        return w;
    }

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    std::size_t size() const { return m_ + 1; }

    long& operator()(std::size_t i, std::size_t j) { return entries_[i * (m_ + 1) + j]; }
    long operator()(std::size_t i, std::size_t j) const { return entries_[i * (m_ + 1) + j]; }

    /// Image of e_j.
    DivisorClass image(std::size_t j) const {
        DivisorClass c = DivisorClass::zero(n_, m_);
        for (std::size_t i = 0; i <= m_; ++i) c.coeffs[i] = (*this)(i, j);
        return c;
    }

    friend bool operator==(const WeylElement&, const WeylElement&) = default;

    /// Composition: (a * b)(x) = a(b(x)).
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
        if (a.m_ != b.m_ || a.n_ != b.n_) throw Error("Weyl elements of different lattices");
        WeylElement c(a.n_, a.m_);
        for (std::size_t i = 0; i <= a.m_; ++i)
            for (std::size_t k = 0; k <= a.m_; ++k) {
                long aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j <= a.m_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<long> entries_;
};

inline DivisorClass apply(const WeylElement& w, const DivisorClass& c) {
    if (c.m != w.m() || c.coeffs.size() != w.size()) throw Error("dimension mismatch between element and class");
    DivisorClass out = DivisorClass::zero(c.n, c.m);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) out.coeffs[i] += w(i, j) * c.coeffs[j];
    return out;
}

/// Coxeter generator s_i of W_{n,m}. s_i (i >= 1) swaps e_i and e_{i+1};
/// s_0 is the reflection in e_0 - e_1 - ... - e_{n+1}.
inline WeylElement generator(std::size_t index, std::size_t n, std::size_t m) {
    if (m < n + 2) throw Error("W_{n,m} needs m >= n+2");
    if (index >= m) throw Error("generator index " + std::to_string(index) + " out of range");
    WeylElement w = WeylElement::identity(n, m);
    if (index >= 1) {
        std::size_t a = index, b = index + 1;
        w(a, a) = 0;
        w(b, b) = 0;
        w(a, b) = 1;
        w(b, a) = 1;
        return w;
    }
    // e_0 -> n e_0 - (n-1)(e_1 + ... + e_{n+1})
    w(0, 0) = static_cast<long>(n);
    for (std::size_t k = 1; k <= n + 1; ++k) w(k, 0) = -static_cast<long>(n - 1);
    // e_j -> e_0 - sum_{k <= n+1, k != j} e_k
    for (std::size_t j = 1; j <= n + 1; ++j) {
        for (std::size_t i = 0; i <= m; ++i) w(i, j) = 0;
        w(0, j) = 1;
        for (std::size_t k = 1; k <= n + 1; ++k)
            if (k != j) w(k, j) = -1;
    }
    return w;
}

/// Element of a generator word; the letters act right to left as matrices,
/// i.e. the word [a, b] is s_b * s_a (s_a applied first).
inline WeylElement word_element(const std::vector<std::size_t>& word, std::size_t n, std::size_t m) {
    WeylElement w = WeylElement::identity(n, m);
    for (auto letter : word) w = generator(letter, n, m) * w;
    return w;
}

/// -K = (n+1) e_0 - (n-1) sum e_i.
inline DivisorClass anticanonical(std::size_t n, std::size_t m) {
    DivisorClass c = DivisorClass::zero(n, m);
    c.coeffs[0] = static_cast<long>(n + 1);
    for (std::size_t i = 1; i <= m; ++i) c.coeffs[i] = -static_cast<long>(n - 1);
    return c;
}

/// D_I = k e_0 - (k-1) sum_{i in I} e_i - k sum_{i not in I} e_i, |I| = 2k+1,
/// in the lattice with m = n+3.
inline DivisorClass d_class(const IndexSet& odd_set, std::size_t n) {
    const std::size_t m = n + 3;
    if (odd_set.size() % 2 == 0) throw Error("D_I needs an odd subset");
    for (auto i : odd_set)
        if (i < 1 || i > m) throw Error("subset index out of range");
    const long k = static_cast<long>((odd_set.size() - 1) / 2);
    DivisorClass c = DivisorClass::zero(n, m);
    c.coeffs[0] = k;
    for (std::size_t i = 1; i <= m; ++i) c.coeffs[i] = odd_set.count(i) ? -(k - 1) : -k;
    return c;
}

/// Word of adjacent transpositions whose element is the permutation matrix
/// sending e_i to e_{perm[i]} (perm is 1-based, perm[0] unused).
inline std::vector<std::size_t> permutation_word(std::vector<std::size_t> perm) {
    // Bubble sort records the transpositions that reduce perm to the identity.
    std::vector<std::size_t> sorting;
    const std::size_t m = perm.size() - 1;
    for (std::size_t pass = 1; pass <= m; ++pass)
        for (std::size_t i = 1; i < m; ++i)
            if (perm[i] > perm[i + 1]) {
                std::swap(perm[i], perm[i + 1]);
                sorting.push_back(i);
            }
    // perm * s_{l1} * ... * s_{lk} = id, so perm = s_{lk} * ... * s_{l1}; as a
    // word (first letter applied first) that is l1, ..., lk.
    return sorting;
}

/// Generator word for w_J in G_n (m = n+3): J is split into consecutive
/// pairs {a, b}; each pair contributes sigma . (s_0 s_{n+2}) . sigma^{-1}
/// with sigma sending n+2 -> a, n+3 -> b.
inline std::vector<std::size_t> w_word(const IndexSet& even_set, std::size_t n) {
    const std::size_t m = n + 3;
    if (even_set.size() % 2 != 0) throw Error("w_J needs an even subset");
    for (auto i : even_set)
        if (i < 1 || i > m) throw Error("subset index out of range");
    std::vector<std::size_t> items(even_set.begin(), even_set.end());
    std::vector<std::size_t> word;
    for (std::size_t p = 0; p + 1 < items.size(); p += 2) {
        const std::size_t a = items[p], b = items[p + 1];
        // sigma: n+2 -> a, n+3 -> b, remaining indices in increasing order.
        std::vector<std::size_t> perm(m + 1, 0);
        perm[n + 2] = a;
        perm[n + 3] = b;
        std::size_t next = 1;
        for (std::size_t i = 1; i <= n + 1; ++i) {
            while (next == a || next == b) ++next;
            perm[i] = next++;
        }
        std::vector<std::size_t> sigma = permutation_word(perm);
        std::vector<std::size_t> sigma_inv(sigma.rbegin(), sigma.rend());
        // Matrix sigma * s_0 * s_{n+2} * sigma^{-1}: sigma^{-1} acts first.
        word.insert(word.end(), sigma_inv.begin(), sigma_inv.end());
        word.push_back(n + 2);
        word.push_back(0);
        word.insert(word.end(), sigma.begin(), sigma.end());
    }
    return word;
}

/// w_J in G_n for an even subset J of {1..n+3}.
inline WeylElement w_element(const IndexSet& even_set, std::size_t n) {
    return word_element(w_word(even_set, n), n, n + 3);
}

/// Closed form of w_J(e_0) for |J| = 2k:
/// (k(n-1)+1) e_0 - (k-1)(n-1) sum_{i in J} e_i - k(n-1) sum_{i not in J} e_i.
inline DivisorClass w_image_of_e0(const IndexSet& even_set, std::size_t n) {
    const std::size_t m = n + 3;
    const long k = static_cast<long>(even_set.size() / 2);
    const long nm1 = static_cast<long>(n) - 1;
    DivisorClass c = DivisorClass::zero(n, m);
    c.coeffs[0] = k * nm1 + 1;
    for (std::size_t i = 1; i <= m; ++i) c.coeffs[i] = even_set.count(i) ? -(k - 1) * nm1 : -k * nm1;
    return c;
}

/// Pairing with the proper transform of an elliptic normal curve through
/// all m points: e_0 -> n+1, e_i -> 1.
inline long curve_pairing(const DivisorClass& c) {
    long v = static_cast<long>(c.n + 1) * c.coeffs[0];
    for (std::size_t i = 1; i < c.coeffs.size(); ++i) v += c.coeffs[i];
    return v;
}

inline bool preserves_form(const WeylElement& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) {
            DivisorClass ei = DivisorClass::basis(w.n(), w.m(), i);
            DivisorClass ej = DivisorClass::basis(w.n(), w.m(), j);
            if (pairing(w.image(i), w.image(j)) != pairing(ei, ej)) return false;
        }
    return true;
}

/// Parses "s0 s3 s0" (or "0 3 0") into generator indices.
inline std::vector<std::size_t> parse_word(const std::string& text) {
    std::vector<std::size_t> word;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::string digits = (token[0] == 's' || token[0] == 'S') ? token.substr(1) : token;
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
            throw Error("bad generator \"" + token + "\"");
        word.push_back(std::stoul(digits));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ' ' || ch == ',' || ch == '\t') {
            flush();
        } else {
            token += ch;
        }
    }
    flush();
    return word;
}

/// Parses "1,4" into an index set.
inline IndexSet parse_index_set(const std::string& text) {
    IndexSet s;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        if (!std::all_of(token.begin(), token.end(), ::isdigit)) throw Error("bad index \"" + token + "\"");
        s.insert(std::stoul(token));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ') {
            flush();
        } else {
            token += ch;
        }
    }
    flush();
    return s;
}

}  // namespace assoc
