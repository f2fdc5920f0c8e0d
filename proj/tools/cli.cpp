#include "cli.hpp"

#include "mixchrom/decomposition.hpp"
#include "mixchrom/errors.hpp"
#include "mixchrom/graph_io.hpp"
#include "mixchrom/identities.hpp"
#include "mixchrom/oracle.hpp"
#include "mixchrom/order_poly.hpp"
#include "mixchrom/random_graphs.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <random>

namespace mixchrom::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string file;
    std::string method = "decomposition";
    std::string format = "plain";
    std::string identity;
    Count x = 0;
    Count y = 0;
    Count xmax = 4;
    std::optional<std::uint64_t> seed;
    std::size_t count = 50;
    std::size_t max_vertices = 4;
    std::size_t bound = kDefaultOracleBound;
};

Polynomial compute_chi(const MixedGraph& g, const std::string& method, std::size_t bound) {
    if (method == "interpolate") {
        return interpolate_chi(g, bound);
    }
    if (method == "delcontr") {
        return chi_by_delcontr(g, bound);
    }
    return chi_by_decomposition(g, bound);
}

int cmd_compute(const Options& opt, std::ostream& out) {
    const MixedGraph g = read_graph_file(opt.file);
    out << render(compute_chi(g, opt.method, opt.bound), parse_format(opt.format)) << '\n';
    return ok;
}

int cmd_eval(const Options& opt, std::ostream& out, std::ostream& err) {
    const MixedGraph g = read_graph_file(opt.file);
    const Count value = count_colorings(g, opt.x, opt.y);
    if (g.vertex_count() <= opt.bound) {
        const Rational predicted =
            chi_by_decomposition(g, opt.bound).eval(Rational(to_integer(opt.x)), Rational(to_integer(opt.y)));
        if (predicted != Rational(to_integer(value))) {
            err << "internal error: count " << value << " disagrees with polynomial value " << predicted.get_str()
                << '\n';
            return internal_mismatch;
        }
    }
    out << value << '\n';
    return ok;
}

struct Verdict {
    std::size_t instances = 0;
    std::optional<std::string> failure;
};

Verdict verify_graph(const MixedGraph& g, const Options& opt) {
    Verdict v;
    auto fail = [&](const std::string& what) { v.failure = what; };
    if (opt.identity == "delcontr-edge") {
        for (const auto& e : g.edges()) {
            ++v.instances;
            if (auto r = check_edge_delcontr(g, e, opt.bound); !r) {
                fail(r.detail);
                break;
            }
        }
    } else if (opt.identity == "delcontr-arc") {
        for (const auto& a : g.arcs()) {
            ++v.instances;
            if (auto r = check_arc_delcontr(g, a, opt.bound); !r) {
                fail(r.detail);
                break;
            }
        }
    } else if (opt.identity == "decomposition") {
        ++v.instances;
        const Polynomial oracle = interpolate_chi(g, opt.bound);
        const Polynomial decomposed = chi_by_decomposition(g, opt.bound);
        const Polynomial eliminated = chi_by_delcontr(g, opt.bound);
        if (decomposed != oracle) {
            fail("decomposition = " + to_plain(decomposed) + ", interpolation = " + to_plain(oracle));
        } else if (eliminated != oracle) {
            fail("delcontr = " + to_plain(eliminated) + ", interpolation = " + to_plain(oracle));
        } else {
            std::mt19937_64 rng(opt.seed.value_or(0));
            const Count top = 2 * g.vertex_count() + 3;
            for (int i = 0; i < 10 && !v.failure; ++i) {
                const Count x = std::uniform_int_distribution<Count>(0, top)(rng);
                const Count y = std::uniform_int_distribution<Count>(0, x)(rng);
                const Count counted = count_colorings(g, x, y);
                const Rational value = oracle.eval(Rational(to_integer(x)), Rational(to_integer(y)));
                if (value != Rational(to_integer(counted))) {
                    fail("at (" + std::to_string(x) + ", " + std::to_string(y) + "): polynomial " + value.get_str() +
                         ", count " + std::to_string(counted));
                }
            }
        }
    } else if (opt.identity == "reciprocity") {
        ++v.instances;
        if (auto r = check_chromatic_reciprocity(g, opt.xmax, opt.bound); !r) {
            fail(r.detail);
        }
    } else if (opt.identity == "bop-reciprocity") {
        for (const Flat& flat : enumerate_flats(g)) {
            for (const auto& sigma : enumerate_acyclic_orientations(underlying(flat.quotient))) {
                ++v.instances;
                if (!check_bop_reciprocity(poset_from_orientation(flat, sigma))) {
                    fail("poset of flat " + describe_partition(g, flat) + " with orientation [" + describe(sigma) +
                         "]");
                    return v;
                }
            }
        }
    }
    return v;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    std::vector<MixedGraph> graphs;
    if (!opt.file.empty()) {
        graphs.push_back(read_graph_file(opt.file));
    }
    if (opt.seed && opt.file.empty()) {
        graphs = verification_corpus(*opt.seed, opt.count, opt.max_vertices);
    }
    if (graphs.empty()) {
        err << "verify needs a graph file or --seed\n";
        return usage_error;
    }
    std::size_t instances = 0;
    for (const auto& g : graphs) {
        const Verdict v = verify_graph(g, opt);
        instances += v.instances;
        if (v.failure) {
            out << "FAIL " << opt.identity << '\n' << *v.failure << '\n' << "graph:\n" << format_graph(g);
            return verification_failed;
        }
    }
    out << "PASS " << opt.identity << " (" << graphs.size() << (graphs.size() == 1 ? " graph, " : " graphs, ")
        << instances << (instances == 1 ? " instance" : " instances") << ")\n";
    return ok;
}

int cmd_report(const Options& opt, std::ostream& out) {
    const MixedGraph g = read_graph_file(opt.file);
    const Format format = parse_format(opt.format);
    const DecompositionReport report = decomposition_report(g, opt.bound);
    out << (format == Format::json ? report_to_json(report) + "\n" : report_to_text(report, format));
    return ok;
}

std::vector<std::string> names_of(const MixedGraph& g, const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (Vertex v : vs) {
        out.push_back(g.name(v));
    }
    return out;
}

int cmd_flats(const Options& opt, std::ostream& out) {
    const MixedGraph g = read_graph_file(opt.file);
    const Format format = parse_format(opt.format);
    const auto flats = enumerate_flats(g);
    ordered_json list = ordered_json::array();
    for (const auto& flat : flats) {
        const auto contracted = names_of(flat.quotient, flat.contracted);
        if (format == Format::json) {
            ordered_json blocks = ordered_json::array();
            for (const auto& block : flat.blocks) {
                blocks.push_back(names_of(g, block));
            }
            list.push_back({{"partition", describe_partition(g, flat)},
                            {"blocks", std::move(blocks)},
                            {"contracted", contracted},
                            {"quotient", format_graph(flat.quotient)}});
            continue;
        }
        std::string c;
        for (const auto& name : contracted) {
            c += (c.empty() ? "" : ",") + name;
        }
        out << describe_partition(g, flat) << "  C(H) = {" << c << "}\n";
    }
    if (format == Format::json) {
        out << list.dump(2) << '\n';
    }
    return ok;
}

int cmd_orientations(const Options& opt, std::ostream& out) {
    const MixedGraph g = read_graph_file(opt.file);
    const Format format = parse_format(opt.format);
    ordered_json list = ordered_json::array();
    for (const auto& sigma : enumerate_acyclic_orientations(underlying(g))) {
        if (format == Format::json) {
            ordered_json arcs = ordered_json::array();
            for (const auto& a : sigma.directed) {
                arcs.push_back({g.name(a.tail), g.name(a.head)});
            }
            list.push_back(std::move(arcs));
        } else {
            out << '[' << describe(sigma) << "]\n";
        }
    }
    if (format == Format::json) {
        out << list.dump(2) << '\n';
    }
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bivariate chromatic polynomials of mixed graphs", "mixchrom"};
    app.require_subcommand(1);
    Options opt;

    const std::vector<std::string> formats{"plain", "latex", "json"};
    auto add_common = [&](CLI::App* sub, bool with_format) {
        sub->add_option("--bound", opt.bound, "Vertex limit for exhaustive methods")->check(CLI::PositiveNumber);
        if (with_format) {
            sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(formats));
        }
    };

    auto* compute = app.add_subcommand("compute", "Compute chi_G(x, y)");
    compute->add_option("file", opt.file, "Graph file")->required();
    compute->add_option("--method", opt.method, "decomposition | interpolate | delcontr")
        ->check(CLI::IsMember({"decomposition", "interpolate", "delcontr"}));
    add_common(compute, true);

    auto* eval = app.add_subcommand("eval", "Count colorings at one point");
    eval->add_option("file", opt.file, "Graph file")->required();
    eval->add_option("-x", opt.x, "Palette size")->required();
    eval->add_option("-y", opt.y, "Threshold")->required();
    add_common(eval, false);

    auto* verify = app.add_subcommand("verify", "Check an identity on a graph or a random corpus");
    verify->add_option("identity", opt.identity, "delcontr-edge | delcontr-arc | decomposition | reciprocity | bop-reciprocity")
        ->required()
        ->check(CLI::IsMember({"delcontr-edge", "delcontr-arc", "decomposition", "reciprocity", "bop-reciprocity"}));
    verify->add_option("file", opt.file, "Graph file");
    verify->add_option("--xmax", opt.xmax, "Largest palette for pointwise reciprocity checks");
    verify->add_option("--seed", opt.seed, "Verify a random corpus generated from this seed");
    verify->add_option("--count", opt.count, "Corpus size");
    verify->add_option("--max-vertices", opt.max_vertices, "Largest corpus graph");
    add_common(verify, false);

    auto* report = app.add_subcommand("report", "Per-flat, per-orientation decomposition terms");
    report->add_option("file", opt.file, "Graph file")->required();
    add_common(report, true);

    auto* flats = app.add_subcommand("flats", "List flats");
    flats->add_option("file", opt.file, "Graph file")->required();
    add_common(flats, true);

    auto* orientations = app.add_subcommand("orientations", "List acyclic orientations of the underlying graph");
    orientations->add_option("file", opt.file, "Graph file")->required();
    add_common(orientations, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage_error;
    }

    try {
        if (compute->parsed()) {
            return cmd_compute(opt, out);
        }
        if (eval->parsed()) {
            return cmd_eval(opt, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(opt, out, err);
        }
        if (report->parsed()) {
            return cmd_report(opt, out);
        }
        if (flats->parsed()) {
            return cmd_flats(opt, out);
        }
        return cmd_orientations(opt, out);
    } catch (const ParseError& e) {
        err << opt.file << ": " << e.what() << '\n';
        return usage_error;
    } catch (const BoundError& e) {
        err << e.what() << '\n';
        return bound_exceeded;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return usage_error;
    }
}

} // namespace mixchrom::cli
