#include "snakefrac/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "snakefrac/asymptotics.hpp"
#include "snakefrac/identities.hpp"
#include "snakefrac/svg.hpp"

namespace snakefrac {

namespace {

using nlohmann::ordered_json;

struct CliState {
    std::ostream& out;
    std::string format = "text";
    int precision = 40;
    unsigned long long seed = 1;
    int exit_code = 0;

    bool json() const { return format == "json"; }
    void emit(const ordered_json& j) { out << j.dump(2) << "\n"; }
};

std::array<Rational, 3> parse_point(const std::string& text) {
    std::stringstream ss(text);
    std::string tok;
    std::vector<Rational> parts;
    while (std::getline(ss, tok, ',')) parts.push_back(parse_rational(tok));
    if (parts.size() != 3) throw Error("point format is x1,x2,x3");
    return {parts[0], parts[1], parts[2]};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LabeledSnakeGraph load_graph(const std::string& path) {
    LabeledSnakeGraph g = parse_labeled_graph(read_file(path));
    check_labeled(g);
    return g;
}

void report_identity(CliState& st, const IdentityReport& r) {
    if (st.json()) {
        st.emit({{"instance", r.instance},
                 {"lhs", r.lhs.get_str()},
                 {"rhs", r.rhs.get_str()},
                 {"holds", r.holds}});
    } else {
        st.out << r.lhs.get_str() << " = " << r.rhs.get_str() << (r.holds ? " PASS" : " FAIL")
               << "\n";
    }
    if (!r.holds) st.exit_code = 1;
}

void add_cf_commands(CLI::App& app, CliState& st) {
    auto* cf = app.add_subcommand("cf", "continued fraction arithmetic");
    cf->require_subcommand(1);

    auto* eval = cf->add_subcommand("eval", "value of a positive continued fraction");
    auto arg_eval = std::make_shared<std::string>();
    eval->add_option("cf", *arg_eval, "comma-separated coefficients")->required();
    eval->callback([&st, arg_eval] {
        Rational v = evaluate(parse_cf(*arg_eval));
        if (st.json())
            st.emit({{"value", rational_str(v)}});
        else
            st.out << rational_str(v) << "\n";
    });

    auto* cont = cf->add_subcommand("continuant", "numerator of the continued fraction");
    auto arg_cont = std::make_shared<std::string>();
    cont->add_option("cf", *arg_cont)->required();
    cont->callback([&st, arg_cont] {
        BigInt n = continuant(parse_cf(*arg_cont));
        if (st.json())
            st.emit({{"value", n.get_str()}});
        else
            st.out << n.get_str() << "\n";
    });

    auto* fromr = cf->add_subcommand("from-rational", "continued fraction of a rational > 1");
    auto arg_fromr = std::make_shared<std::string>();
    fromr->add_option("rational", *arg_fromr, "p/q")->required();
    fromr->callback([&st, arg_fromr] {
        ContinuedFraction out = from_rational(parse_rational(*arg_fromr));
        if (st.json())
            st.emit({{"cf", cf_str(out)}});
        else
            st.out << cf_str(out) << "\n";
    });

    auto* scale = cf->add_subcommand("scale", "rescale entries as [r a1, a2/r, r a3, ...]");
    auto arg_scale = std::make_shared<std::pair<std::string, std::string>>();
    scale->add_option("cf", arg_scale->first)->required();
    scale->add_option("r", arg_scale->second, "nonzero rational")->required();
    scale->callback([&st, arg_scale] {
        auto entries = cf_entries(parse_cf(arg_scale->first));
        GaussRational r{parse_rational(arg_scale->second)};
        auto scaled = scale_general(entries, r);
        GaussRational value = evaluate_general(scaled);
        std::string list;
        for (size_t k = 0; k < scaled.size(); ++k)
            list += (k ? "," : "") + gauss_str(scaled[k]);
        if (st.json()) {
            st.emit({{"entries", list}, {"value", gauss_str(value)}});
        } else {
            st.out << list << "\n";
            st.out << "value " << gauss_str(value) << "\n";
        }
    });

    auto* rev = cf->add_subcommand("reverse", "reverse the coefficient sequence");
    auto arg_rev = std::make_shared<std::string>();
    rev->add_option("cf", *arg_rev)->required();
    rev->callback([&st, arg_rev] {
        ContinuedFraction out = reverse_cf(parse_cf(*arg_rev));
        if (st.json())
            st.emit({{"cf", cf_str(out)}});
        else
            st.out << cf_str(out) << "\n";
    });
}

NeChoice canonical_choice(const SnakeShape& s) {
    Sign last = interior_signs(s).back();
    return ne_sign(s, NeChoice::East) == last ? NeChoice::East : NeChoice::North;
}

void add_snake_commands(CLI::App& app, CliState& st) {
    auto* sn = app.add_subcommand("snake", "snake graph construction and maps");
    sn->require_subcommand(1);

    auto* fromcf = sn->add_subcommand("from-cf", "snake graph of a continued fraction");
    auto arg_fc = std::make_shared<std::string>();
    fromcf->add_option("cf", *arg_fc)->required();
    fromcf->callback([&st, arg_fc] {
        CfSnake built = cf_to_snake(parse_cf(*arg_fc));
        std::string signs;
        for (Sign s : built.signs) signs += s == Sign::Minus ? '-' : '+';
        std::string ne = built.shape.d >= 1 ? (built.ne == NeChoice::North ? "N" : "E") : "";
        if (st.json()) {
            st.emit({{"shape", shape_str(built.shape)}, {"ne", ne}, {"signs", signs}});
        } else {
            st.out << shape_str(built.shape) << "\n";
            if (!ne.empty()) st.out << "ne " << ne << "\n";
            st.out << "signs " << signs << "\n";
        }
    });

    auto* tocf = sn->add_subcommand("to-cf", "continued fraction of a snake graph");
    auto arg_tc = std::make_shared<std::pair<std::string, std::string>>();
    tocf->add_option("shape", arg_tc->first, "d:TURNS")->required();
    tocf->add_option("--ne", arg_tc->second, "N or E (default: canonical)");
    tocf->callback([&st, arg_tc] {
        SnakeShape s = parse_shape(arg_tc->first);
        NeChoice ne;
        if (arg_tc->second.empty())
            ne = canonical_choice(s);
        else if (arg_tc->second == "N")
            ne = NeChoice::North;
        else if (arg_tc->second == "E")
            ne = NeChoice::East;
        else
            throw Error("--ne must be N or E");
        ContinuedFraction cf = snake_to_cf(s, ne);
        if (st.json())
            st.emit({{"cf", cf_str(cf)}});
        else
            st.out << cf_str(cf) << "\n";
    });

    auto* chi_cmd = sn->add_subcommand("chi", "matching-count quotient m(G)/m(G\\H1)");
    auto arg_chi = std::make_shared<std::string>();
    chi_cmd->add_option("shape", *arg_chi)->required();
    chi_cmd->callback([&st, arg_chi] {
        Rational v = chi(parse_shape(*arg_chi));
        if (st.json())
            st.emit({{"value", rational_str(v)}});
        else
            st.out << rational_str(v) << "\n";
    });

    auto* rot = sn->add_subcommand("rotate", "180-degree rotation");
    auto arg_rot = std::make_shared<std::string>();
    rot->add_option("shape", *arg_rot)->required();
    rot->callback([&st, arg_rot] {
        SnakeShape s = rotate180(parse_shape(*arg_rot));
        if (st.json())
            st.emit({{"shape", shape_str(s)}});
        else
            st.out << shape_str(s) << "\n";
    });
}

void add_matching_commands(CLI::App& app, CliState& st) {
    auto* count = app.add_subcommand("count-matchings", "number of perfect matchings");
    auto arg_count = std::make_shared<std::string>();
    count->add_option("shape", *arg_count)->required();
    count->callback([&st, arg_count] {
        BigInt n = count_matchings(parse_shape(*arg_count));
        if (st.json())
            st.emit({{"count", n.get_str()}});
        else
            st.out << n.get_str() << "\n";
    });

    auto* list = app.add_subcommand("list-matchings", "all perfect matchings, one per line");
    auto arg_list = std::make_shared<std::string>();
    list->add_option("shape", *arg_list)->required();
    list->callback([&st, arg_list] {
        auto ms = enumerate_matchings(parse_shape(*arg_list));
        if (st.json()) {
            ordered_json arr = ordered_json::array();
            for (const auto& m : ms) arr.push_back(matching_str(m));
            st.emit({{"count", ms.size()}, {"matchings", arr}});
        } else {
            for (const auto& m : ms) st.out << matching_str(m) << "\n";
        }
    });

    auto* tot = app.add_subcommand("totient-count", "snake graphs with N perfect matchings");
    auto arg_tot = std::make_shared<std::string>();
    tot->add_option("N", *arg_tot)->required();
    tot->callback([&st, arg_tot] {
        auto snakes = snakes_with_matching_count(BigInt(*arg_tot));
        if (st.json()) {
            ordered_json arr = ordered_json::array();
            for (const auto& [cf, shape] : snakes)
                arr.push_back({{"cf", cf_str(cf)}, {"shape", shape_str(shape)}});
            st.emit({{"count", snakes.size()}, {"snakes", arr}});
        } else {
            st.out << snakes.size() << "\n";
            for (const auto& [cf, shape] : snakes) st.out << cf_str(cf) << "\n";
        }
    });
}

void add_expansion_commands(CLI::App& app, CliState& st) {
    auto* expand = app.add_subcommand("expand", "Laurent expansion of a labeled snake graph");
    auto arg_exp = std::make_shared<std::string>();
    expand->add_option("file", *arg_exp, "labeled graph description")->required();
    expand->callback([&st, arg_exp] {
        LaurentPoly p = cluster_expansion(load_graph(*arg_exp));
        if (st.json())
            st.emit({{"poly", poly_str(p)}});
        else
            st.out << poly_str(p) << "\n";
    });

    auto* vq = app.add_subcommand("verify-quotient", "check x_gamma/x_gamma' = [L1,...,Ln]");
    auto arg_vq = std::make_shared<std::string>();
    vq->add_option("file", *arg_vq)->required();
    vq->callback([&st, arg_vq] {
        QuotientReport r = verify_quotient(load_graph(*arg_vq));
        if (st.json()) {
            st.emit({{"lhs", poly_str(r.lhs)}, {"rhs", poly_str(r.rhs)}, {"holds", r.holds}});
        } else {
            st.out << "lhs " << poly_str(r.lhs) << "\n";
            st.out << "rhs " << poly_str(r.rhs) << "\n";
            st.out << (r.holds ? "PASS" : "FAIL") << "\n";
        }
        if (!r.holds) st.exit_code = 1;
    });

    auto* cc = app.add_subcommand("complex-continuant", "continuant of Gaussian rationals");
    auto arg_cc = std::make_shared<std::string>();
    cc->add_option("entries", *arg_cc, "comma-separated, e.g. 2i,-3+i")->required();
    cc->callback([&st, arg_cc] {
        GaussRational v = continuant_ring(parse_gauss_list(*arg_cc));
        if (st.json())
            st.emit({{"value", gauss_str(v)}});
        else
            st.out << gauss_str(v) << "\n";
    });
}

void add_identity_commands(CLI::App& app, CliState& st) {
    auto* id = app.add_subcommand("identity", "continuant identity checkers");
    id->require_subcommand(1);

    struct Args {
        std::string cf, cfa, cfb;
        int i = 0, j = 0, k = 0;
        int count = 100;
    };
    auto args = std::make_shared<Args>();

    auto* a = id->add_subcommand("a", "grafting identity");
    a->add_option("--cf", args->cf)->required();
    a->add_option("--i", args->i)->required();
    a->callback([&st, args] { report_identity(st, check_a(parse_cf(args->cf), args->i)); });

    auto* b = id->add_subcommand("b", "crossing-overlap identity within one sequence");
    b->add_option("--cf", args->cf)->required();
    b->add_option("--i", args->i)->required();
    b->add_option("--j", args->j)->required();
    b->callback(
        [&st, args] { report_identity(st, check_b(parse_cf(args->cf), args->i, args->j)); });

    auto* c = id->add_subcommand("c", "overlap identity between two sequences");
    c->add_option("--a", args->cfa)->required();
    c->add_option("--b", args->cfb)->required();
    c->add_option("--i", args->i)->required();
    c->add_option("--j", args->j)->required();
    c->add_option("--k", args->k)->required();
    c->callback([&st, args] {
        report_identity(
            st, check_c(parse_cf(args->cfa), parse_cf(args->cfb), args->i, args->j, args->k));
    });

    auto* fuzz = id->add_subcommand("fuzz", "randomized identity sweep");
    fuzz->add_option("--count", args->count, "instances per identity");
    fuzz->callback([&st, args] {
        std::mt19937_64 rng(st.seed);
        int pass_a = 0, pass_b = 0, pass_c = 0;
        std::vector<std::string> failures;
        for (int t = 0; t < args->count; ++t) {
            ContinuedFraction cf = random_cf(rng, 8, 9);
            std::uniform_int_distribution<int> pick_i(1, cf.n());
            IdentityReport ra = check_a(cf, pick_i(rng));
            ra.holds ? ++pass_a : (failures.push_back(ra.instance), 0);
            if (cf.n() >= 2) {
                std::uniform_int_distribution<int> pi(1, cf.n() - 1);
                int i = pi(rng);
                std::uniform_int_distribution<int> pj(0, cf.n() - 1 - i);
                IdentityReport rb = check_b(cf, i, pj(rng));
                rb.holds ? ++pass_b : (failures.push_back(rb.instance), 0);
            } else {
                ++pass_b;
            }
            COverlapInstance inst = random_c_instance(rng, t % 2 == 0);
            IdentityReport rc = check_c(inst.a, inst.b, inst.i, inst.j, inst.k);
            rc.holds ? ++pass_c : (failures.push_back(rc.instance), 0);
        }
        if (st.json()) {
            st.emit({{"count", args->count},
                     {"pass_a", pass_a},
                     {"pass_b", pass_b},
                     {"pass_c", pass_c},
                     {"failures", failures}});
        } else {
            st.out << "a " << pass_a << "/" << args->count << " pass\n";
            st.out << "b " << pass_b << "/" << args->count << " pass\n";
            st.out << "c " << pass_c << "/" << args->count << " pass\n";
            for (const auto& f : failures) st.out << "counterexample " << f << "\n";
        }
        if (!failures.empty()) st.exit_code = 1;
    });
}

void add_limit_commands(CLI::App& app, CliState& st) {
    auto* limit = app.add_subcommand("limit", "cluster-variable quotient table and limits");
    struct Args {
        std::string point = "1,1,1";
        int imax = 25;
    };
    auto args = std::make_shared<Args>();
    limit->add_option("--point", args->point, "x1,x2,x3 positive rationals");
    limit->add_option("--imax", args->imax);
    limit->callback([&st, args] {
        LimitTable t = limit_table(parse_point(args->point), args->imax);
        int digits = st.precision;
        if (st.json()) {
            ordered_json rows = ordered_json::array();
            for (const auto& r : t.rows) {
                ordered_json row = {{"i", r.i}, {"u_over_v", rational_str(r.u_over_v)}};
                if (r.u_ratio) row["u_ratio"] = rational_str(*r.u_ratio);
                rows.push_back(row);
            }
            st.emit({{"rows", rows},
                     {"alpha", surd_str(t.alpha)},
                     {"alpha_decimal", surd_decimal(t.alpha, digits)},
                     {"beta", surd_str(t.beta)},
                     {"beta_decimal", surd_decimal(t.beta, digits)}});
        } else {
            for (const auto& r : t.rows) {
                st.out << r.i << " " << decimal_str(r.u_over_v, digits);
                if (r.u_ratio) st.out << " " << decimal_str(*r.u_ratio, digits);
                st.out << "\n";
            }
            st.out << "alpha " << surd_str(t.alpha) << " ~ " << surd_decimal(t.alpha, digits)
                   << "\n";
            st.out << "beta " << surd_str(t.beta) << " ~ " << surd_decimal(t.beta, digits) << "\n";
        }
    });

    auto* met = app.add_subcommand("metallic", "closed-form limit identities");
    auto nmax = std::make_shared<int>(10);
    met->add_option("--n", *nmax, "largest n");
    met->callback([&st, nmax] {
        auto rows = metallic_checks(*nmax);
        bool all = true;
        if (st.json()) {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                arr.push_back({{"row", r.name}, {"detail", r.detail}, {"holds", r.holds}});
                all = all && r.holds;
            }
            st.emit({{"rows", arr}, {"all_pass", all}});
        } else {
            for (const auto& r : rows) {
                st.out << (r.holds ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
                all = all && r.holds;
            }
        }
        if (!all) st.exit_code = 1;
    });
}

void add_render_command(CLI::App& app, CliState& st) {
    auto* render = app.add_subcommand("render", "write an SVG figure");
    struct Args {
        std::string input, out_path;
        bool matchings = false;
    };
    auto args = std::make_shared<Args>();
    render->add_option("input", args->input, "shape string d:TURNS or labeled graph file")
        ->required();
    render->add_option("-o,--out", args->out_path, "output path")->required();
    render->add_flag("--matchings", args->matchings, "one panel per perfect matching");
    render->callback([&st, args] {
        std::string svg;
        if (args->input.find(':') != std::string::npos) {
            svg = render_shape_svg(parse_shape(args->input), args->matchings);
        } else {
            svg = render_labeled_svg(load_graph(args->input), args->matchings);
        }
        std::ofstream out(args->out_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + args->out_path + "'");
        out << svg;
    });
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact snake-graph and continued-fraction toolkit", "snakefrac"};
    app.require_subcommand(1);
    CliState st{out};
    app.add_option("--format", st.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--precision", st.precision, "decimal digits for surd output")
        ->check(CLI::Range(1, 200));
    app.add_option("--seed", st.seed, "seed for randomized commands");

    add_cf_commands(app, st);
    add_snake_commands(app, st);
    add_matching_commands(app, st);
    add_expansion_commands(app, st);
    add_identity_commands(app, st);
    add_limit_commands(app, st);
    add_render_command(app, st);

    // let --format/--precision/--seed appear after a subcommand too
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    std::vector<const char*> argv;
    argv.push_back("snakefrac");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return st.exit_code;
}

}  // namespace snakefrac
