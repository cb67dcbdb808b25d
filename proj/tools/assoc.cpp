#include <assoc/suites.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace assoc;
using json_io::to_json;
using nlohmann::json;

namespace {

constexpr int kExitError = 70;

struct Args {
    std::string input, output, conditions, config, points, model, point, word, subset, suite_name;
    std::uint64_t seed = 1;
    std::optional<std::size_t> trials, n, m;
    int d = 0;
    long bound = kDefaultBound;
};

std::string require(const std::string& value, const char* flag) {
    if (value.empty()) throw Error(std::string("missing ") + flag);
    return value;
}

std::size_t require(const std::optional<std::size_t>& value, const char* flag) {
    if (!value) throw Error(std::string("missing ") + flag);
    return *value;
}

/// Points from --input, or generated plane points when no input is given.
std::vector<ProjectivePoint> plane_points_or_generated(const Args& a, std::size_t count, Rng& rng) {
    if (!a.input.empty()) return json_io::points_from_json(json_io::read_file(a.input));
    return generate_config(rng, 2, count, a.bound).points();
}

json cmd_associate(const Args& a) {
    PointConfiguration source = a.input.empty() ? generate_config(require(a.n, "--n"), require(a.m, "--m"), a.seed, a.bound)
                                                : json_io::config_from_json(json_io::read_file(a.input));
    AssociationResult r = associate(source);
    return {{"source", to_json(r.source)}, {"target", to_json(r.target)}, {"certificate", to_json(r.certificate)}};
}

json cmd_self_assoc(const Args& a) {
    PointConfiguration config = json_io::config_from_json(json_io::read_file(require(a.input, "--input")));
    return {{"config", to_json(config)},
            {"associated", to_json(associate(config).target)},
            {"self_associated", is_self_associated(config)}};
}

json cmd_linsys_dim(const Args& a) {
    const std::size_t n = require(a.n, "--n");
    if (a.d < 1) throw Error("missing --d");
    std::vector<BaseCondition> conds;
    if (!a.conditions.empty()) {
        conds = json_io::conditions_from_json(json_io::read_file(a.conditions));
    } else {
        PointConfiguration config = generate_config(n, require(a.m, "--m"), a.seed, a.bound);
        for (const auto& p : config.points()) conds.push_back(simple_point(p));
    }
    return to_json(solve_system(n, a.d, conds));
}

json cmd_ninth_point(const Args& a) {
    Rng rng(a.seed);
    auto q = plane_points_or_generated(a, 8, rng);
    NinthPoint r = ninth_base_point(q);
    return {{"points", to_json(q)},
            {"ninth_point", to_json(r.point)},
            {"pencil", to_json(std::vector<Polynomial>{r.first, r.second})}};
}

/// Without --input, eight generated points plus their ninth base point.
json cmd_quintic(const Args& a) {
    Rng rng(a.seed);
    std::vector<ProjectivePoint> q;
    if (!a.input.empty()) {
        q = json_io::points_from_json(json_io::read_file(a.input));
    } else {
        q = generate_config(rng, 2, 8, a.bound).points();
        q.push_back(ninth_base_point(q).point);
    }
    QuinticWitness w = quintic_witness(q);
    return {{"points", to_json(q)}, {"nullity", w.nullity}, {"basis", to_json(w.basis)}};
}

/// Without --input, the v_2 images of nine generated plane points.
json cmd_coble_check(const Args& a) {
    std::vector<ProjectivePoint> p;
    if (!a.input.empty()) {
        p = json_io::points_from_json(json_io::read_file(a.input));
    } else {
        PointConfiguration plane = generate_config(2, 9, a.seed, a.bound);
        for (const auto& x : plane.points()) p.push_back(veronese(x, 2));
    }
    CobleWitness w = coble_sextic_witness(p);
    return {{"points", to_json(p)}, {"associated", to_json(w.associated)}, {"cubic", to_json(w.cubic)}};
}

/// Input {"base": [8 points of P^5], "point": [...]}; without it, the ninth
/// base point of eight generated plane points is lifted.
json cmd_weddle_test(const Args& a) {
    std::vector<ProjectivePoint> base;
    ProjectivePoint p;
    json out;
    if (!a.input.empty()) {
        json j = json_io::read_file(a.input);
        base = json_io::points_from_json(j.at("base"));
        p = json_io::point_from_json(j.at("point"));
    } else {
        auto q = generate_config(2, 8, a.seed, a.bound).points();
        ProjectivePoint ninth = ninth_base_point(q).point;
        for (const auto& x : q) base.push_back(veronese(x, 2));
        p = veronese(ninth, 2);
        out["plane_points"] = to_json(q);
        out["ninth_point"] = to_json(ninth);
    }
    out["base"] = to_json(base);
    out["point"] = to_json(p);
    out["on_weddle"] = weddle_membership(base, p);
    return out;
}

json cmd_weyl(const Args& a) {
    const std::size_t n = require(a.n, "--n"), m = require(a.m, "--m");
    auto letters = parse_word(a.word);
    WeylElement w = word_element(letters, n, m);
    return {{"n", n}, {"m", m}, {"word", letters}, {"matrix", to_json(w)}, {"preserves_form", preserves_form(w)}};
}

json cmd_weyl_gn(const Args& a) {
    const std::size_t n = require(a.n, "--n");
    IndexSet j = parse_index_set(require(a.subset, "--J"));
    WeylElement w = w_element(j, n);
    DivisorClass closed = w_image_of_e0(j, n);
    return {{"n", n},
            {"J", to_json(j)},
            {"matrix", to_json(w)},
            {"image_of_e0", to_json(w.image(0))},
            {"closed_form", to_json(closed)},
            {"closed_form_matches", w.image(0) == closed}};
}

json cmd_cremona(const Args& a) {
    PointConfiguration config = json_io::config_from_json(json_io::read_file(require(a.config, "--config")));
    CremonaWord word(config.ambient_dim(), config.size(), parse_word(a.word));
    PointConfiguration result = cr_apply(word, config);
    return {{"input", to_json(config)},
            {"word", word.letters},
            {"result", to_json(result)},
            {"equivalent_to_input", equivalent(result, config)}};
}

/// Checks one J on --config, or on --trials generated configurations of P^n.
json cmd_cremona_kernel(const Args& a) {
    IndexSet j = parse_index_set(require(a.subset, "--J"));
    std::vector<PointConfiguration> configs;
    if (!a.config.empty()) {
        configs.push_back(json_io::config_from_json(json_io::read_file(a.config)));
    } else {
        const std::size_t n = require(a.n, "--n");
        Rng master(a.seed);
        for (std::size_t t = 0; t < a.trials.value_or(20); ++t) {
            Rng rng(master.fork());
            configs.push_back(generate_config(rng, n, n + 3, a.bound));
        }
    }
    json cases = json::array();
    bool all = true;
    for (const auto& c : configs) {
        bool ok = kernel_check(j, c);
        all = all && ok;
        cases.push_back({{"config", to_json(c)}, {"trivial", ok}});
    }
    return {{"J", to_json(j)}, {"passed", all}, {"cases", cases}};
}

json cmd_quadrics(const Args& a) {
    auto q = json_io::points_from_json(json_io::read_file(require(a.points, "--points")));
    json out = to_json(build_model(q));
    out["points"] = to_json(q);
    return out;
}

json cmd_quadrics_check(const Args& a) {
    QuadricModel model = json_io::model_from_json(json_io::read_file(require(a.model, "--model")));
    ProjectivePoint y = json_io::point_from_json(json_io::read_file(require(a.point, "--point")));
    json out{{"point", to_json(y)}, {"member", membership(model, y)}};
    if (out["member"].get<bool>()) {
        out["cover_image"] = to_json(cover_image(model, y));
        out["smooth"] = is_smooth_at(model, y);
        bool branch = std::any_of(y.coords().begin(), y.coords().end(), [](const Integer& z) { return z == 0; });
        out["branch_locus"] = branch;
        if (!branch) out["fibre_size"] = sign_orbit(model, y).size();
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact association, Weyl/Cremona actions and linear systems through points"};
    app.require_subcommand(1);
    Args a;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--output", a.output, "Output JSON path (default stdout)");
        cmd->add_option("--seed", a.seed, "Generator seed");
        cmd->add_option("--bound", a.bound, "Coordinate box for generated points")->check(CLI::NonNegativeNumber);
    };
    auto add = [&](const char* name, const char* help, json (*fn)(const Args&)) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_common(cmd);
        cmd->callback([&, fn] { json_io::write(fn(a), a.output); });
        return cmd;
    };

    auto* associate_cmd = add("associate", "Associated configuration with its nullspace certificate", cmd_associate);
    associate_cmd->add_option("--input", a.input, "Configuration JSON");
    associate_cmd->add_option("--n", a.n);
    associate_cmd->add_option("--m", a.m);

    add("self-assoc", "Test ordered self-association", cmd_self_assoc)->add_option("--input", a.input)->required();

    auto* linsys = add("linsys-dim", "Hypersurfaces of degree d through base conditions", cmd_linsys_dim);
    linsys->add_option("--n", a.n);
    linsys->add_option("--d", a.d);
    linsys->add_option("--m", a.m, "Generate m simple points when no conditions file is given");
    linsys->add_option("--conditions", a.conditions, "Conditions JSON");

    add("ninth-point", "Ninth base point of the cubic pencil through 8 plane points", cmd_ninth_point)
        ->add_option("--input", a.input);
    add("quintic", "Quintics with a triple point at q_9 tangent to the lines q_i q_9", cmd_quintic)
        ->add_option("--input", a.input);
    add("coble-check", "Unique cubic through the associated plane points", cmd_coble_check)->add_option("--input", a.input);
    add("weddle-test", "Pencil criterion for the Weddle locus", cmd_weddle_test)->add_option("--input", a.input);

    auto* weyl = add("weyl", "Matrix of a word in the generators", cmd_weyl);
    weyl->add_option("--n", a.n);
    weyl->add_option("--m", a.m);
    weyl->add_option("--word", a.word)->required();

    auto* gn = add("weyl-gn", "The element w_J and its image of e_0", cmd_weyl_gn);
    gn->add_option("--n", a.n);
    gn->add_option("--J", a.subset);

    auto* cremona = add("cremona", "Apply a Cremona word to a configuration", cmd_cremona);
    cremona->add_option("--word", a.word)->required();
    cremona->add_option("--config", a.config);

    auto* kernel = add("cremona-kernel", "Check that w_J acts trivially", cmd_cremona_kernel);
    kernel->add_option("--J", a.subset);
    kernel->add_option("--config", a.config);
    kernel->add_option("--n", a.n);
    kernel->add_option("--trials", a.trials);

    add("quadrics", "Diagonal quadric model from points of P^1", cmd_quadrics)->add_option("--points", a.points);

    auto* qcheck = add("quadrics-check", "Membership, cover image and smoothness at a point", cmd_quadrics_check);
    qcheck->add_option("--model", a.model);
    qcheck->add_option("--point", a.point);

    int suite_exit = 0;
    CLI::App* suite = app.add_subcommand("suite", "Run a reproduction suite, or all of them");
    add_common(suite);
    suite->add_option("name", a.suite_name, "Suite name or \"all\"")->required();
    suite->add_option("--trials", a.trials);
    suite->add_option("--n", a.n);
    suite->callback([&] {
        suites::Options opt{a.seed, a.trials, a.n, a.bound};
        if (a.suite_name == "all") {
            json reports = json::array();
            const auto& reg = suites::registry();
            for (std::size_t i = 0; i < reg.size(); ++i) {
                json r = reg[i].run(opt);
                if (!r["passed"].get<bool>() && suite_exit == 0) suite_exit = static_cast<int>(i) + 1;
                reports.push_back(std::move(r));
            }
            json_io::write({{"seed", a.seed}, {"passed", suite_exit == 0}, {"suites", reports}}, a.output);
        } else {
            const std::size_t index = suites::index_of(a.suite_name);
            json r = suites::run(a.suite_name, opt);
            if (!r["passed"].get<bool>()) suite_exit = static_cast<int>(index) + 1;
            json_io::write(r, a.output);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return kExitError;
    }
    return suite_exit;
}
