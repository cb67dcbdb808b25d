#pragma once

#include <assoc/cremona.hpp>
#include <assoc/gale.hpp>
#include <assoc/generate.hpp>
#include <assoc/json_io.hpp>
#include <assoc/linsys.hpp>
#include <assoc/quadric_model.hpp>
#include <assoc/weyl.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace assoc::suites {

using nlohmann::json;
using json_io::to_json;

struct Options {
    std::uint64_t seed = 1;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> n;
    long bound = kDefaultBound;
};

namespace detail {

class Tally {
public:
    void add(json entry, bool ok) {
        entry["passed"] = ok;
        cases_.push_back(std::move(entry));
        ++total_;
        if (ok) ++passed_;
    }

    /// Runs one case; an Error inside it counts as a failure and is recorded.
    void run(json entry, const std::function<bool(json&)>& body) {
        bool ok = false;
        try {
            ok = body(entry);
        } catch (const Error& e) {
            entry["error"] = e.what();
        }
        add(std::move(entry), ok);
    }

    json report(const std::string& name, const Options& opt, json extra = json::object()) const {
        json out{{"suite", name},        {"seed", opt.seed},  {"bound", opt.bound},
                 {"passed", passed_ == total_}, {"passed_cases", passed_}, {"total_cases", total_}};
        for (auto& [k, v] : extra.items()) out[k] = v;
        out["cases"] = cases_;
        return out;
    }

private:
    std::size_t total_ = 0;
    std::size_t passed_ = 0;
    json cases_ = json::array();
};

inline std::vector<ProjectivePoint> lift(const std::vector<ProjectivePoint>& q) {
    std::vector<ProjectivePoint> p;
    for (const auto& x : q) p.push_back(veronese(x, 2));
    return p;
}

inline std::vector<std::size_t> dims_or(const Options& opt, std::vector<std::size_t> defaults) {
    if (opt.n) return {*opt.n};
    return defaults;
}

inline unsigned long mask_of(const IndexSet& s) {
    unsigned long mask = 0;
    for (auto i : s) mask |= 1UL << (i - 1);
    return mask;
}

}  // namespace detail

/// associate twice returns an equivalent configuration.
inline json association_involution(const Options& opt) {
    const std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 5}, {2, 6}, {2, 9}, {3, 8}, {5, 9}};
    const std::size_t trials = opt.trials.value_or(100);
    Rng master(opt.seed);
    detail::Tally tally;
    for (std::size_t t = 0; t < trials; ++t) {
        auto [n, m] = shapes[t % shapes.size()];
        const std::uint64_t seed = master.fork();
        tally.run({{"trial", t}, {"seed", seed}, {"n", n}, {"m", m}}, [&](json& c) {
            Rng rng(seed);
            PointConfiguration source = generate_config(rng, n, m, opt.bound);
            AssociationResult once = associate(source);
            AssociationResult twice = associate(once.target);
            c["source"] = to_json(source);
            c["target"] = to_json(once.target);
            c["certificate"] = to_json(once.certificate);
            c["double"] = to_json(twice.target);
            return equivalent(twice.target, source);
        });
    }
    return tally.report("association-involution", opt);
}

/// Six points on xz = y^2 are self-associated; random six-point sets are not.
inline json self_association(const Options& opt) {
    const std::size_t trials = opt.trials.value_or(20);
    Rng master(opt.seed);
    detail::Tally tally;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t seed = master.fork();
        tally.run({{"trial", t}, {"seed", seed}, {"kind", "conic"}}, [&](json& c) {
            Rng rng(seed);
            std::vector<long> params;
            while (params.size() < 6) {
                long s = rng.uniform(-opt.bound, opt.bound);
                if (std::find(params.begin(), params.end(), s) == params.end()) params.push_back(s);
            }
            std::vector<ProjectivePoint> pts;
            for (long s : params) pts.push_back(ProjectivePoint::of({1, s, s * s}));
            PointConfiguration config(2, pts);
            c["parameters"] = params;
            c["config"] = to_json(config);
            c["associated"] = to_json(associate(config).target);
            return is_self_associated(config);
        });
    }
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t seed = master.fork();
        tally.run({{"trial", t}, {"seed", seed}, {"kind", "random"}}, [&](json& c) {
            Rng rng(seed);
            PointConfiguration config = generate_config(rng, 2, 6, opt.bound);
            c["config"] = to_json(config);
            c["associated"] = to_json(associate(config).target);
            return !is_self_associated(config);
        });
    }
    return tally.report("self-assoc", opt);
}

/// Forms of degree g with multiplicity g-1 at n+3 points of P^n, n = 2g-1:
/// the vector dimension is 2^g.
inline json half_anticanonical(const Options& opt) {
    const std::size_t trials = opt.trials.value_or(10);
    Rng master(opt.seed);
    detail::Tally tally;
    json dims = json::object();
    for (std::size_t n : detail::dims_or(opt, {3, 5, 7})) {
        if (n % 2 == 0 || n < 3) throw Error("halfK needs odd n >= 3");
        const std::size_t g = (n + 1) / 2;
        const int degree = static_cast<int>(g);
        const int multiplicity = static_cast<int>(g) - 1;
        const std::size_t expected = 1UL << g;
        std::vector<std::size_t> observed;
        for (std::size_t t = 0; t < trials; ++t) {
            const std::uint64_t seed = master.fork();
            tally.run({{"trial", t}, {"seed", seed}, {"n", n}, {"degree", degree}, {"multiplicity", multiplicity}},
                      [&](json& c) {
                          Rng rng(seed);
                          PointConfiguration config = generate_config(rng, n, n + 3, opt.bound);
                          std::vector<BaseCondition> conds;
                          for (const auto& p : config.points()) conds.push_back(fat_point(p, multiplicity));
                          HypersurfaceSystem sys = solve_system(n, degree, conds);
                          bool vanish = true;
                          for (const auto& f : sys.basis)
                              for (const auto& p : config.points()) vanish = vanish && vanishes_to_order(f, p, multiplicity);
                          observed.push_back(sys.dimension());
                          c["points"] = to_json(config);
                          c["monomials"] = sys.monomial_count;
                          c["scalar_conditions"] = sys.condition_count;
                          c["rank"] = sys.rank();
                          c["dimension"] = sys.dimension();
                          c["expected"] = expected;
                          c["basis_vanishes"] = vanish;
                          // The basis for n = 7 runs to megabytes; it is recomputable from the points.
                          if (sys.monomial_count <= 56) c["basis"] = to_json(sys.basis);
                          return vanish && sys.dimension() == expected;
                      });
        }
        dims[std::to_string(n)] = observed;
    }
    return tally.report("halfK", opt, {{"dimensions", dims}});
}

/// Nine general points of P^5 on v_2 of a plane cubic: the associated plane
/// points lie on exactly one cubic.
inline json coble(const Options& opt) {
    const std::size_t trials = opt.trials.value_or(50);
    Rng master(opt.seed);
    detail::Tally tally;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t seed = master.fork();
        tally.run({{"trial", t}, {"seed", seed}}, [&](json& c) {
            Rng rng(seed);
            auto q = generate_config(rng, 2, 9, opt.bound).points();
            auto p = detail::lift(q);
            c["plane_points"] = to_json(q);
            c["points"] = to_json(p);
            CobleWitness w = coble_sextic_witness(p);
            c["associated"] = to_json(w.associated);
            c["cubic"] = to_json(w.cubic);
            bool on = true;
            for (const auto& x : w.associated.points()) on = on && sgn(w.cubic.evaluate(x.coords())) == 0;
            return on;
        });
    }
    return tally.report("coble", opt);
}

/// v_2 of the ninth base point lies on the Weddle locus of v_2 of the
/// eight; a random point of P^5 does not.
inline json weddle(const Options& opt) {
    const std::size_t trials = opt.trials.value_or(20);
    Rng master(opt.seed);
    detail::Tally tally;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t seed = master.fork();
        tally.run({{"trial", t}, {"seed", seed}, {"kind", "pencil"}}, [&](json& c) {
            Rng rng(seed);
            auto q = generate_config(rng, 2, 8, opt.bound).points();
            NinthPoint ninth = ninth_base_point(q);
            auto base = detail::lift(q);
            ProjectivePoint p = veronese(ninth.point, 2);
            std::vector<ProjectivePoint> all = base;
            all.push_back(p);
            std::size_t dim = associated_cubics(all).dimension();
            c["plane_points"] = to_json(q);
            c["ninth_point"] = to_json(ninth.point);
            c["base"] = to_json(base);
            c["point"] = to_json(p);
            c["cubic_dimension"] = dim;
            return dim >= 2 && weddle_membership(base, p);
        });
    }
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t seed = master.fork();
        tally.run({{"trial", t}, {"seed", seed}, {"kind", "random"}}, [&](json& c) {
            Rng rng(seed);
            auto base = detail::lift(generate_config(rng, 2, 8, opt.bound).points());
            ProjectivePoint p = random_point(rng, 5, opt.bound);
            std::vector<ProjectivePoint> all = base;
            all.push_back(p);
            std::size_t dim = associated_cubics(all).dimension();
            c["base"] = to_json(base);
            c["point"] = to_json(p);
            c["cubic_dimension"] = dim;
            return dim == 1 && !weddle_membership(base, p);
        });
    }
    return tally.report("weddle", opt);
}

/// Quintics with a triple point at q_9 tangent to the lines q_i q_9: one on
/// pencil base points, none on random points.
inline json quintic(const Options& opt) {
    const std::size_t trials = opt.trials.value_or(20);
    Rng master(opt.seed);
    detail::Tally tally;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t seed = master.fork();
        tally.run({{"trial", t}, {"seed", seed}, {"kind", "pencil"}}, [&](json& c) {
            Rng rng(seed);
            auto q = generate_config(rng, 2, 8, opt.bound).points();
            q.push_back(ninth_base_point(q).point);
            QuinticWitness w = quintic_witness(q);
            c["points"] = to_json(q);
            c["nullity"] = w.nullity;
            if (w.nullity != 1) return false;
            const Polynomial& f = w.basis.front();
            c["quintic"] = to_json(f);
            bool ok = vanishes_to_order(f, q[8], 3);
            for (std::size_t i = 0; i < 8; ++i) ok = ok && tangent_at(f, q[i], line_through(q[i], q[8]));
            c["post_check"] = ok;
            return ok;
        });
    }
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t seed = master.fork();
        tally.run({{"trial", t}, {"seed", seed}, {"kind", "random"}}, [&](json& c) {
            Rng rng(seed);
            auto q = generate_config(rng, 2, 9, opt.bound).points();
            QuinticWitness w = quintic_witness(q);
            c["points"] = to_json(q);
            c["nullity"] = w.nullity;
            return w.nullity == 0;
        });
    }
    return tally.report("quintic", opt);
}

/// Lattice identities for m = n+3, exhaustive over subsets: form and -K
/// preserved, w_J(D_I) = D_{I+J}, closed form of w_J(e_0), group table of
/// G_n, and for odd n the full-set element exchanging D_I and its complement.
inline json lemma_wj(const Options& opt) {
    detail::Tally tally;
    json tables = json::array();
    for (std::size_t n : detail::dims_or(opt, {2, 3, 4, 5, 6})) {
        const std::size_t m = n + 3;
        auto evens = subsets_with_parity(m, false);
        auto odds = subsets_with_parity(m, true);
        std::vector<WeylElement> ws;
        for (const auto& j : evens) ws.push_back(w_element(j, n));
        const DivisorClass k = anticanonical(n, m);

        bool generators_ok = true;
        for (std::size_t i = 0; i < m; ++i) {
            WeylElement s = generator(i, n, m);
            generators_ok = generators_ok && preserves_form(s) && apply(s, k) == k;
        }
        tally.add({{"n", n}, {"check", "generators preserve form and -K"}}, generators_ok);

        bool elements_ok = true, closed_form_ok = true;
        for (std::size_t t = 0; t < ws.size(); ++t) {
            elements_ok = elements_ok && preserves_form(ws[t]) && apply(ws[t], k) == k;
            closed_form_ok = closed_form_ok && ws[t].image(0) == w_image_of_e0(evens[t], n);
        }
        tally.add({{"n", n}, {"check", "w_J preserve form and -K"}, {"elements", ws.size()}}, elements_ok);
        tally.add({{"n", n}, {"check", "closed form of w_J(e_0)"}, {"elements", ws.size()}}, closed_form_ok);

        // table[J][I] = mask of the set whose D-class equals w_J(D_I), or -1.
        json table = json::array();
        bool lemma_ok = true;
        for (std::size_t t = 0; t < ws.size(); ++t) {
            json row = json::array();
            for (const auto& i : odds) {
                IndexSet target = symmetric_difference(i, evens[t]);
                bool ok = apply(ws[t], d_class(i, n)) == d_class(target, n);
                lemma_ok = lemma_ok && ok;
                row.push_back(ok ? static_cast<long>(detail::mask_of(target)) : -1L);
            }
            table.push_back(row);
        }
        tally.add({{"n", n}, {"check", "w_J(D_I) = D_{I+J}"}, {"pairs", evens.size() * odds.size()}}, lemma_ok);

        bool group_ok = true;
        const WeylElement id = WeylElement::identity(n, m);
        for (std::size_t a = 0; a < ws.size() && group_ok; ++a) {
            group_ok = ws[a] * ws[a] == id;
            for (std::size_t b = 0; b < ws.size() && group_ok; ++b)
                group_ok = ws[a] * ws[b] == w_element(symmetric_difference(evens[a], evens[b]), n);
        }
        for (std::size_t a = 0; a < ws.size() && group_ok; ++a)
            for (std::size_t b = a + 1; b < ws.size() && group_ok; ++b) group_ok = !(ws[a] == ws[b]);
        tally.add({{"n", n}, {"check", "G_n is elementary abelian of order 2^(n+2)"}, {"order", ws.size()}}, group_ok);

        if (n % 2 == 1) {
            const long g = static_cast<long>(n + 1) / 2;
            DivisorClass half = DivisorClass::zero(n, m);
            half.coeffs[0] = g;
            for (std::size_t i = 1; i <= m; ++i) half.coeffs[i] = -(g - 1);
            WeylElement full = w_element(complement({}, m), n);
            bool ok = half + half == k;
            for (const auto& i : odds) {
                IndexSet bar = complement(i, m);
                ok = ok && apply(full, d_class(i, n)) == d_class(bar, n) && d_class(i, n) + d_class(bar, n) == half;
            }
            tally.add({{"n", n}, {"check", "w_[n+3](D_I) = D_complement, D_I + D_complement = -K/2"},
                       {"half_anticanonical", to_json(half)}},
                      ok);
        }

        json even_masks = json::array(), odd_masks = json::array();
        for (const auto& j : evens) even_masks.push_back(detail::mask_of(j));
        for (const auto& i : odds) odd_masks.push_back(detail::mask_of(i));
        tables.push_back({{"n", n}, {"even_subsets", even_masks}, {"odd_subsets", odd_masks}, {"table", table}});
    }
    return tally.report("lemma-wj", opt, {{"subset_encoding", "bit i-1 set iff i in the subset"}, {"tables", tables}});
}

/// Pairing with the elliptic curve class: n+1 on w_J(e_0), 1 on w_J(e_i),
/// 4 on -K.
inline json curve_pairing_suite(const Options& opt) {
    detail::Tally tally;
    for (std::size_t n : detail::dims_or(opt, {2, 3, 4, 5, 6})) {
        const std::size_t m = n + 3;
        bool e0_ok = true, ei_ok = true;
        for (const auto& j : subsets_with_parity(m, false)) {
            WeylElement w = w_element(j, n);
            e0_ok = e0_ok && curve_pairing(w.image(0)) == static_cast<long>(n + 1);
            for (std::size_t i = 1; i <= m; ++i) ei_ok = ei_ok && curve_pairing(w.image(i)) == 1;
        }
        tally.add({{"n", n}, {"check", "beta(w_J(e_0)) = n+1"}}, e0_ok);
        tally.add({{"n", n}, {"check", "beta(w_J(e_i)) = 1"}}, ei_ok);
        long beta_k = curve_pairing(anticanonical(n, m));
        tally.add({{"n", n}, {"check", "beta(-K) = 4"}, {"value", beta_k}}, beta_k == 4);
    }
    return tally.report("curve-pairing", opt);
}

/// Every w_J acts trivially on ordered configurations of n+3 points, and
/// the plane worked example with a = (2,3,5).
inline json cremona_kernel(const Options& opt) {
    const std::size_t trials = opt.trials.value_or(20);
    Rng master(opt.seed);
    detail::Tally tally;

    tally.run({{"check", "worked example a = (2,3,5)"}}, [&](json& c) {
        auto pt = [](std::initializer_list<long> v) { return ProjectivePoint::of(v); };
        PointConfiguration input(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1}), pt({2, 3, 5})});
        PointConfiguration reflected = cr_apply(CremonaWord(2, 5, {0}), input);
        PointConfiguration swapped = cr_apply(CremonaWord(2, 5, {0, 4}), input);
        PointConfiguration kernel = cr_apply(CremonaWord(2, 5, {4, 0}), input);
        c["input"] = to_json(input);
        c["after_s0"] = to_json(reflected);
        c["after_s0_s4"] = to_json(swapped);
        c["after_s4_s0"] = to_json(kernel);
        // (1/2, 1/3, 1/5) = (15, 10, 6)
        return reflected[4] == pt({15, 10, 6}) && swapped[3] == pt({15, 10, 6}) && swapped[4] == pt({1, 1, 1}) &&
               kernel == input;
    });

    for (std::size_t n : detail::dims_or(opt, {2, 3, 4, 5})) {
        auto evens = subsets_with_parity(n + 3, false);
        for (std::size_t t = 0; t < trials; ++t) {
            const std::uint64_t seed = master.fork();
            tally.run({{"n", n}, {"trial", t}, {"seed", seed}}, [&](json& c) {
                Rng rng(seed);
                PointConfiguration config = generate_config(rng, n, n + 3, opt.bound);
                c["config"] = to_json(config);
                json failures = json::array();
                for (const auto& j : evens) {
                    try {
                        if (!kernel_check(j, config)) failures.push_back(to_json(j));
                    } catch (const Error& e) {
                        failures.push_back({{"J", to_json(j)}, {"error", e.what()}});
                    }
                }
                c["subsets_checked"] = evens.size();
                c["failures"] = failures;
                return failures.empty();
            });
        }
    }
    return tally.report("cremona-kernel", opt);
}

/// Quadric counts, sign fibres, cover round trips and smoothness of the
/// diagonal model.
inline json quadrics(const Options& opt) {
    const std::size_t trials = opt.trials.value_or(10);
    Rng master(opt.seed);
    detail::Tally tally;
    for (std::size_t n : detail::dims_or(opt, {3, 5, 7})) {
        const std::uint64_t model_seed = master.fork();
        Rng model_rng(model_seed);
        auto q = generate_config(model_rng, 1, n + 3, opt.bound).points();
        QuadricModel model = build_model(q);
        tally.add({{"n", n}, {"seed", model_seed}, {"check", "quadric count n-2"}, {"points", to_json(q)},
                   {"model", to_json(model)}},
                  model.quadrics.size() == n - 2);
        for (std::size_t t = 0; t < trials; ++t) {
            const std::uint64_t seed = master.fork();
            tally.run({{"n", n}, {"trial", t}, {"seed", seed}}, [&](json& c) {
                Rng rng(seed);
                RationalVector g;
                ProjectivePoint y;
                // Retry until the member avoids the branch locus.
                for (;;) {
                    g = {rng.uniform(-opt.bound, opt.bound), rng.uniform(-opt.bound, opt.bound),
                         rng.uniform(1, opt.bound)};
                    y = member_from_quadratic(model, q, g);
                    if (std::none_of(y.coords().begin(), y.coords().end(), [](const Integer& z) { return z == 0; }))
                        break;
                }
                RationalVector t_expected;
                for (std::size_t s = 0; s < 5; ++s) {
                    Rational v = g[0] * q[s][0] * q[s][0] + g[1] * q[s][0] * q[s][1] + g[2] * q[s][1] * q[s][1];
                    t_expected.push_back(v * v);
                }
                ProjectivePoint t_point = cover_image(model, y);
                auto orbit = sign_orbit(model, y);
                std::set<ProjectivePoint> distinct(orbit.begin(), orbit.end());
                bool fibre_ok = distinct.size() == (1UL << (n + 2));
                for (const auto& z : orbit) fibre_ok = fibre_ok && membership(model, z) && cover_image(model, z) == t_point;
                bool smooth = is_smooth_at(model, y);
                c["quadratic"] = to_json(g);
                c["member"] = to_json(y);
                c["cover_image"] = to_json(t_point);
                c["fibre_size"] = distinct.size();
                c["round_trip"] = t_point == canonicalize(t_expected);
                c["smooth"] = smooth;
                return fibre_ok && t_point == canonicalize(t_expected) && smooth;
            });
        }
    }
    return tally.report("quadrics", opt);
}

struct Entry {
    const char* name;
    json (*run)(const Options&);
};

/// Declared suites; the CLI exit code is the 1-based position of the first failure.
inline const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries{
        {"association-involution", association_involution},
        {"self-assoc", self_association},
        {"halfK", half_anticanonical},
        {"coble", coble},
        {"weddle", weddle},
        {"quintic", quintic},
        {"lemma-wj", lemma_wj},
        {"curve-pairing", curve_pairing_suite},
        {"cremona-kernel", cremona_kernel},
        {"quadrics", quadrics},
    };
    return entries;
}

inline std::size_t index_of(const std::string& name) {
    const auto& r = registry();
    for (std::size_t i = 0; i < r.size(); ++i)
        if (name == r[i].name) return i;
    std::string known;
    for (const auto& e : r) known += std::string(known.empty() ? "" : ", ") + e.name;
    throw Error("unknown suite \"" + name + "\" (known: " + known + ")");
}

inline json run(const std::string& name, const Options& opt) { return registry()[index_of(name)].run(opt); }

}  // namespace assoc::suites
