#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "twuality/bouquet.hpp"
#include "twuality/element_types.hpp"
#include "twuality/enumeration.hpp"
#include "twuality/errors.hpp"
#include "twuality/gf2.hpp"
#include "twuality/io.hpp"
#include "twuality/set_system.hpp"
#include "twuality/width_polynomial.hpp"

namespace twuality::cli {
namespace {

constexpr const char* kWordHelp =
    "twuality word over {*, x} (ASCII for the twist and loop-complementation "
    "operators); \"\" is the identity";
constexpr const char* kRibbonWordHelp =
    "ribbon word over {d, t} (ASCII for the partial dual and partial Petrial)";

// vf-safe verdicts cost 6^n; past this size `info` reports them as skipped.
constexpr std::size_t kVfSafeInfoLimit = 6;

std::size_t enumeration_cap() {
    const char* raw = std::getenv("TWUALITY_MAX_N");
    if (raw == nullptr || *raw == '\0') return default_enumeration_cap;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || value < 1 ||
        value > static_cast<long>(max_ground_size)) {
        throw error("TWUALITY_MAX_N must be an integer in [1, " +
                    std::to_string(max_ground_size) + "]");
    }
    return static_cast<std::size_t>(value);
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

void print_info(const SetSystem& d, std::ostream& out) {
    out << "elements: " << d.ground_size() << "\n";
    out << "proper: " << yes_no(d.proper()) << "\n";
    out << "normal: " << yes_no(d.normal()) << "\n";
    out << "dual-normal: " << yes_no(d.dual_normal()) << "\n";
    if (d.proper()) {
        const WidthStats stats = width_stats(d);
        out << "r-min: " << stats.r_min << "\n";
        out << "r-max: " << stats.r_max << "\n";
        out << "width: " << stats.width << "\n";
    }
    out << "delta-matroid: " << yes_no(is_delta_matroid(d)) << "\n";
    if (d.ground_size() <= kVfSafeInfoLimit) {
        out << "vf-safe: " << yes_no(is_vf_safe(d)) << "\n";
    } else {
        out << "vf-safe: skipped (needs 6^" << d.ground_size() << " checks)\n";
    }
}

void print_polynomial(const WidthPolynomial& p, bool csv, std::ostream& out) {
    if (!csv) {
        out << p.str() << "\n";
        return;
    }
    out << "width,count\n";
    for (std::size_t k = 0; k <= p.degree(); ++k) {
        out << k << "," << p.coefficient(k) << "\n";
    }
}

void print_graph(const LoopedSimpleGraph& g, std::ostream& out) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out << g.vertex_names[v] << ": " << (g.has_loop(v) ? "loop" : "no-loop") << "\n";
    }
    out << "edges:\n";
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v)) {
                out << g.vertex_names[u] << " -- " << g.vertex_names[v] << "\n";
            }
        }
    }
}

struct PolyOptions {
    std::string input;
    std::optional<std::string> word;
    std::optional<std::string> ribbon_word;
    bool csv = false;
    unsigned jobs = 1;
};

struct CheckOptions {
    std::string property;
    std::optional<int> n;
    int m = 3;
    int samples = 1000;
    unsigned jobs = 1;
    std::optional<std::uint64_t> seed;
};

struct EnumerateOptions {
    std::string kind;
    int n = 0;
    int m = 0;
    int samples = 1000;
    std::optional<std::uint64_t> seed;
};

bool chord_property(const std::string& id) { return id.rfind("bouquet-", 0) == 0; }

int run_check(const CheckOptions& options, std::ostream& out) {
    EnumerationBudget budget;
    // vf-safe sweeps default to three elements, matrix sweeps to four
    budget.max_ground_size =
        options.n.value_or(options.property == "star-monomial-binary" ? 4 : 3);
    budget.max_chords = options.m;
    budget.sample_count = options.samples;
    budget.jobs = options.jobs;
    const bool samples_needed =
        chord_property(options.property) ? options.m > 3 : budget.max_ground_size > 4;
    if (samples_needed) {
        if (!options.seed) {
            throw error("this budget samples instances; --seed is required");
        }
        budget.seed = *options.seed;
    }
    const auto witness = counterexample_search(options.property, budget);
    if (!witness) {
        out << "no counterexample found\n";
        return 0;
    }
    out << "counterexample to '" << witness->property << "': " << witness->description << "\n"
        << witness->serialized;
    return 1;
}

int run_enumerate(const EnumerateOptions& options, std::ostream& out) {
    if (options.kind == "proper" || options.kind == "dm") {
        if (options.n < 1) throw error("enumerate requires --n");
        const auto systems = options.kind == "dm"
                                 ? enumerate_delta_matroids(options.n)
                                 : enumerate_proper_set_systems(options.n);
        for (std::size_t i = 0; i < systems.size(); ++i) {
            if (i > 0) out << "\n";
            out << to_ss_format(systems[i]);
        }
        return 0;
    }
    if (options.kind == "cd") {
        if (options.m < 1) throw error("enumerate --kind cd requires --m");
        std::vector<SignedChordDiagram> diagrams;
        if (options.m <= 3) {
            diagrams = enumerate_signed_chord_diagrams(options.m);
        } else {
            if (!options.seed) {
                throw error("chord diagrams with m > 3 are sampled; --seed is required");
            }
            diagrams = sample_signed_chord_diagrams(options.m, options.samples, *options.seed);
        }
        for (std::size_t i = 0; i < diagrams.size(); ++i) {
            if (i > 0) out << "\n";
            out << to_cd_format(diagrams[i]);
        }
        return 0;
    }
    throw error("unknown kind '" + options.kind + "' (expected proper, dm or cd)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "partial-twuality operations on set systems, delta-matroids and bouquets\n"
        "word letters:        * = twist        x = loop complementation\n"
        "ribbon word letters: d = partial dual t = partial Petrial\n"
        "(\"\" is the identity word; any spelling is reduced via *^2 = x^2 = (*x)^3 = 1)"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every subcommand");

    std::string input_path;
    auto* info = app.add_subcommand(
        "info", "ground size, properness, width and class verdicts of a set system");
    info->add_option("--input", input_path, "set system (.ss)")->required();

    PolyOptions poly_options;
    auto* poly = app.add_subcommand("poly", "partial-twuality polynomial by width");
    poly->add_option("--input", poly_options.input, "set system (.ss) or, with --ribbon-word, "
                                                    "chord diagram (.cd)")
        ->required();
    auto* word_opt = poly->add_option("--word", poly_options.word, kWordHelp);
    auto* ribbon_opt =
        poly->add_option("--ribbon-word", poly_options.ribbon_word, kRibbonWordHelp);
    word_opt->excludes(ribbon_opt);
    poly->add_flag("--csv", poly_options.csv, "emit width,count rows");
    poly->add_option("--jobs", poly_options.jobs, "threads for the subset sweep (0 = all cores)");

    std::string types_path;
    auto* types = app.add_subcommand("types", "primal/dual type of every element");
    types->add_option("--input", types_path, "set system (.ss)")->required();

    CheckOptions check_options;
    auto* check = app.add_subcommand("check", "search a property for counterexamples");
    check->add_option("--property", check_options.property, "property id; see --help-all")
        ->required();
    check->add_option("--n", check_options.n,
                      "largest ground size (exhaustive to 4, sampled above; default 3, "
                      "or 4 for matrix sweeps)");
    check->add_option("--m", check_options.m, "largest chord count (exhaustive to 3, sampled at 4)");
    check->add_option("--samples", check_options.samples, "samples per size in sampled mode");
    check->add_option("--seed", check_options.seed, "seed for sampled sizes");
    check->add_option("--jobs", check_options.jobs,
                      "threads for the instance sweep (0 = all cores); the witness is the "
                      "first in canonical order regardless");

    std::string matrix_path;
    auto* from_matrix_cmd =
        app.add_subcommand("from-matrix", "set system of a symmetric GF(2) matrix");
    from_matrix_cmd->add_option("file", matrix_path, "matrix (.gf2)")->required();

    std::string bouquet_path;
    auto* from_bouquet = app.add_subcommand(
        "from-bouquet", "genus, delta-matroid and interleavement graph of a chord diagram");
    from_bouquet->add_option("file", bouquet_path, "chord diagram (.cd)")->required();

    std::string graph_path;
    auto* igraph =
        app.add_subcommand("intersection-graph", "intersection graph of a normal binary delta-matroid");
    igraph->add_option("file", graph_path, "set system (.ss)")->required();

    EnumerateOptions enum_options;
    auto* enumerate = app.add_subcommand("enumerate", "stream small instances exhaustively");
    enumerate->add_option("--kind", enum_options.kind, "proper | dm | cd")->required();
    enumerate->add_option("--n", enum_options.n, "ground size for proper/dm");
    enumerate->add_option("--m", enum_options.m, "chord count for cd");
    enumerate->add_option("--samples", enum_options.samples, "sample count for cd with m > 3");
    enumerate->add_option("--seed", enum_options.seed, "seed for cd with m > 3");

    std::vector<const char*> argv;
    argv.push_back("twuality");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        std::string ids;
        for (const auto& id : registered_properties()) ids += "  " + id + "\n";
        out << "Check properties:\n" << ids;
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        const std::size_t cap = enumeration_cap();
        if (info->parsed()) {
            print_info(load_set_system(input_path), out);
            return 0;
        }
        if (poly->parsed()) {
            if (!poly_options.word && !poly_options.ribbon_word) {
                throw error("poly requires --word or --ribbon-word");
            }
            const WidthPolynomial p =
                poly_options.ribbon_word
                    ? bouquet_twuality_polynomial(load_chord_diagram(poly_options.input),
                                                  RWord::parse(*poly_options.ribbon_word),
                                                  poly_options.jobs, cap)
                    : twuality_polynomial(load_set_system(poly_options.input),
                                          TwualWord::parse(*poly_options.word),
                                          poly_options.jobs, cap);
            print_polynomial(p, poly_options.csv, out);
            return 0;
        }
        if (types->parsed()) {
            const SetSystem d = load_set_system(types_path);
            for (std::size_t e = 0; e < d.ground_size(); ++e) {
                out << d.element_names()[e] << ": " << classify(d, e).str() << "\n";
            }
            return 0;
        }
        if (check->parsed()) {
            return run_check(check_options, out);
        }
        if (from_matrix_cmd->parsed()) {
            out << to_ss_format(from_matrix(load_gf2_matrix(matrix_path), {}, cap));
            return 0;
        }
        if (from_bouquet->parsed()) {
            const SignedChordDiagram b = load_chord_diagram(bouquet_path);
            out << "genus: " << euler_genus(b) << "\n";
            out << to_ss_format(delta_matroid(b, cap));
            print_graph(interleavement_graph(b), out);
            return 0;
        }
        if (igraph->parsed()) {
            print_graph(intersection_graph(load_set_system(graph_path), cap), out);
            return 0;
        }
        if (enumerate->parsed()) {
            return run_enumerate(enum_options, out);
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace twuality::cli
