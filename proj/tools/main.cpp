#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <corona/charpoly.hpp>
#include <corona/corona.hpp>
#include <corona/coronal_formulas.hpp>
#include <corona/digraph.hpp>
#include <corona/json_io.hpp>
#include <corona/roots.hpp>
#include <corona/verify.hpp>

namespace {

using namespace corona;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Digraph load_digraph(const std::string& path) { return parse_digraph(read_input(path)); }

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------------ family

struct FamilyArgs {
    std::string family;
    int n = 0;
    bool dot = false;
};

int run_family(const FamilyArgs& args) {
    const Digraph d = make_family(family_from_name(args.family), args.n);
    std::cout << (args.dot ? to_dot(d) : serialize_digraph(d));
    return 0;
}

// ------------------------------------------------------------------ corona

struct CoronaArgs {
    std::string op;
    std::string dir;
    std::string d1;
    std::string d2;
    bool json = false;
    bool dot = false;
};

int run_corona(const CoronaArgs& args) {
    const CoronaOp op = corona_op_from_name(args.op);
    const CoronaDirection dir = corona_direction_from_name(args.dir);
    const Digraph d1 = load_digraph(args.d1);
    const Digraph d2 = load_digraph(args.d2);
    const Digraph c = op == CoronaOp::vertex ? vertex_corona(d1, d2, dir) : arc_corona(d1, d2, dir);
    const int copies = op == CoronaOp::vertex ? d1.vertex_count() : arc_corona_copy_count(d1, dir);
    if (args.json) {
        emit({{"op", args.op},
              {"dir", args.dir},
              {"vertices", c.vertex_count()},
              {"arcs", c.arc_count()},
              {"copies", copies},
              {"digraph", serialize_digraph(c)}});
    } else {
        std::cout << (args.dot ? to_dot(c) : serialize_digraph(c));
    }
    return 0;
}

// ------------------------------------------------------------------ charpoly

struct CharpolyArgs {
    std::string file;
    std::string matrix = "A";
    std::string op;
    std::string dir;
    std::string d1;
    std::string d2;
    std::string method = "formula";
};

int run_charpoly(const CharpolyArgs& args) {
    const MatrixKind kind = matrix_kind_from_name(args.matrix);
    const bool product_mode = !args.d1.empty() || !args.d2.empty() || !args.op.empty();
    if (product_mode == !args.file.empty())
        throw UsageError("pass either a digraph file or a product (--op/--dir/--d1/--d2)");

    if (!product_mode) {
        emit({{"matrix", args.matrix}, {"charpoly", to_json(charpoly(matrix_of(load_digraph(args.file), kind)))}});
        return 0;
    }

    if (args.op.empty() || args.dir.empty() || args.d1.empty() || args.d2.empty())
        throw UsageError("product mode needs --op, --dir, --d1 and --d2");
    const CoronaOp op = corona_op_from_name(args.op);
    const CoronaDirection dir = corona_direction_from_name(args.dir);
    const Digraph d1 = load_digraph(args.d1);
    const Digraph d2 = load_digraph(args.d2);

    if (args.method == "direct") {
        const Digraph c =
            op == CoronaOp::vertex ? vertex_corona(d1, d2, dir) : arc_corona(d1, d2, dir);
        emit({{"matrix", args.matrix},
              {"method", "direct"},
              {"charpoly", to_json(charpoly(matrix_of(c, kind)))}});
        return 0;
    }
    if (args.method == "formula") {
        Polynomial f;
        if (op == CoronaOp::arc) {
            f = arc_corona_charpoly(d1, d2, dir, kind);
        } else if (dir == CoronaDirection::symmetric) {
            f = vertex_corona_charpoly(d1, d2, kind);
        } else {
            throw std::domain_error(
                "the vertex corona product formula covers the sym direction; "
                "use --method direct for fwd and bwd");
        }
        emit({{"matrix", args.matrix}, {"method", "formula"}, {"charpoly", to_json(f)}});
        return 0;
    }
    if (args.method == "closed") {
        if (op != CoronaOp::arc)
            throw UsageError("--method closed applies to the arc corona only");
        const ClosedFormResult res = arc_corona_charpoly_closed(d1, d2, dir, kind);
        nlohmann::json doc = {{"matrix", args.matrix}, {"method", "closed"}, {"detail", res.detail}};
        switch (res.status) {
            case ClosedFormStatus::ok:
                doc["status"] = "ok";
                doc["charpoly"] = to_json(res.value);
                emit(doc);
                return 0;
            case ClosedFormStatus::no_applicable_corollary:
                doc["status"] = "no-applicable-corollary";
                break;
            case ClosedFormStatus::hypothesis_failed:
                doc["status"] = "hypothesis-failed";
                break;
        }
        emit(doc);
        return 1;
    }
    throw UsageError("unknown --method '" + args.method + "' (formula, direct or closed)");
}

// ------------------------------------------------------------------ coronal

struct CoronalArgs {
    std::string file;
    std::string matrix = "A";
    std::string method = "direct";
    std::string family;
    std::string params;
};

std::vector<Rational> parse_params(const std::string& text) {
    std::vector<Rational> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(rational_from_string(item));
    return out;
}

/// Closed-form detection on an explicit digraph: constant row sums first,
/// then the directed path shape.
RationalFunction coronal_by_structure(const Digraph& d, MatrixKind kind) {
    const ExactMatrix m = matrix_of(d, kind);
    const std::size_t n = m.rows();
    Rational rowsum(0);
    bool constant = true;
    for (std::size_t i = 0; i < n && constant; ++i) {
        Rational sum(0);
        for (std::size_t j = 0; j < n; ++j) sum += m(i, j);
        if (i == 0)
            rowsum = sum;
        else
            constant = sum == rowsum;
    }
    if (constant) return coronal_constant_rowsum(static_cast<int>(n), rowsum);
    if (kind != MatrixKind::laplacian && d == make_family(Family::path, d.vertex_count()))
        return coronal_path(d.vertex_count(), kind);
    throw std::domain_error(
        "no closed-form family matched this digraph; use --method direct");
}

int run_coronal(const CoronalArgs& args) {
    const MatrixKind kind = matrix_kind_from_name(args.matrix);
    if (!args.family.empty()) {
        if (!args.file.empty()) throw UsageError("pass either a digraph file or --family");
        const RationalFunction chi = coronal_family({args.family, parse_params(args.params)}, kind);
        emit({{"matrix", args.matrix}, {"family", args.family}, {"coronal", to_json(chi)}});
        return 0;
    }
    if (args.file.empty()) throw UsageError("pass a digraph file ('-' for stdin) or --family");
    const Digraph d = load_digraph(args.file);
    RationalFunction chi;
    if (args.method == "direct") {
        chi = coronal(matrix_of(d, kind));
    } else if (args.method == "formula") {
        chi = coronal_by_structure(d, kind);
    } else {
        throw UsageError("unknown --method '" + args.method + "' (direct or formula)");
    }
    emit({{"matrix", args.matrix}, {"method", args.method}, {"coronal", to_json(chi)}});
    return 0;
}

// ------------------------------------------------------------------ spectrum

struct SpectrumArgs {
    std::string file;
    std::string matrix = "A";
    std::string d1;
    std::string d2;
    bool numeric = false;
    double tolerance = 1e-8;
};

int run_spectrum(const SpectrumArgs& args) {
    const MatrixKind kind = matrix_kind_from_name(args.matrix);
    const bool product_mode = !args.d1.empty() || !args.d2.empty();
    if (product_mode == !args.file.empty())
        throw UsageError("pass either a digraph file or a product (--d1/--d2)");

    if (!product_mode) {
        const Polynomial f = charpoly(matrix_of(load_digraph(args.file), kind));
        emit({{"matrix", args.matrix},
              {"charpoly", to_json(f)},
              {"roots", to_json(numeric_roots(f, args.tolerance))}});
        return 0;
    }
    if (args.d1.empty() || args.d2.empty()) throw UsageError("product mode needs --d1 and --d2");
    const SpectrumDescription s = vertex_corona_spectrum_outregular(
        load_digraph(args.d1), load_digraph(args.d2), kind);
    nlohmann::json doc = to_json(s);
    doc["matrix"] = args.matrix;
    doc["expanded"] = to_json(s.expand());
    if (args.numeric) doc["roots"] = to_json(numeric_roots(s.expand(), args.tolerance));
    emit(doc);
    return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
    std::vector<std::string> suites;
    std::uint64_t seed = 1;
    int trials = 25;
    int max_vertices = 8;
    double min_density = 0.15;
    double max_density = 0.85;
    int threads = 0;
    bool json = false;
    bool list = false;
};

int run_verify(const VerifyArgs& args) {
    if (args.list) {
        for (const std::string& name : verify::all_suite_names()) std::cout << name << "\n";
        return 0;
    }
    verify::SweepConfig cfg;
    cfg.seed = args.seed;
    cfg.trials = args.trials;
    cfg.max_vertices = args.max_vertices;
    cfg.min_density = args.min_density;
    cfg.max_density = args.max_density;
    cfg.suites = args.suites;
    cfg.threads = args.threads;
    const verify::SweepSummary summary = verify::run_sweep(cfg);
    if (args.json) {
        emit(to_json(summary));
    } else {
        for (const verify::Report& r : summary.reports)
            if (r.verdict == verify::Verdict::mismatch)
                std::cout << "MISMATCH [" << r.suite << "] " << r.instance
                          << "\n  expected: " << r.expected << "\n  actual:   " << r.actual << "\n";
        std::cout << "checked " << summary.reports.size() << " instances: " << summary.matches
                  << " matches, " << summary.mismatches << " mismatches, "
                  << summary.hypothesis_violations << " hypothesis-violations, " << summary.skips
                  << " skips\n";
    }
    return summary.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectra of corona products of digraphs"};
    app.require_subcommand(1);

    FamilyArgs family_args;
    CLI::App* family_cmd = app.add_subcommand("family", "Construct a named digraph family");
    family_cmd->add_option("family", family_args.family, "path | cycle | empty | complete")
        ->required();
    family_cmd->add_option("n", family_args.n, "vertex count")->required();
    family_cmd->add_flag("--dot", family_args.dot, "emit Graphviz DOT instead of the digraph format");

    CoronaArgs corona_args;
    CLI::App* corona_cmd = app.add_subcommand("corona", "Construct a corona product of two digraphs");
    corona_cmd->add_option("--op", corona_args.op, "vertex | arc")->required();
    corona_cmd->add_option("--dir", corona_args.dir, "fwd | bwd | sym")->required();
    corona_cmd->add_option("--d1", corona_args.d1, "first factor ('-' for stdin)")->required();
    corona_cmd->add_option("--d2", corona_args.d2, "second factor")->required();
    corona_cmd->add_flag("--json", corona_args.json, "emit JSON with construction metadata");
    corona_cmd->add_flag("--dot", corona_args.dot, "emit Graphviz DOT");

    CharpolyArgs charpoly_args;
    CLI::App* charpoly_cmd =
        app.add_subcommand("charpoly", "Characteristic polynomial of a digraph or corona product");
    charpoly_cmd->add_option("file", charpoly_args.file, "digraph file ('-' for stdin)");
    charpoly_cmd->add_option("--matrix", charpoly_args.matrix, "A | L | Q (default A)");
    charpoly_cmd->add_option("--op", charpoly_args.op, "vertex | arc (product mode)");
    charpoly_cmd->add_option("--dir", charpoly_args.dir, "fwd | bwd | sym (product mode)");
    charpoly_cmd->add_option("--d1", charpoly_args.d1, "first factor (product mode)");
    charpoly_cmd->add_option("--d2", charpoly_args.d2, "second factor (product mode)");
    charpoly_cmd->add_option("--method", charpoly_args.method,
                             "formula | direct | closed (default formula)");

    CoronalArgs coronal_args;
    CLI::App* coronal_cmd = app.add_subcommand("coronal", "Coronal 1ᵀ(λI−M)⁻¹1 of a digraph matrix");
    coronal_cmd->add_option("file", coronal_args.file, "digraph file ('-' for stdin)");
    coronal_cmd->add_option("--matrix", coronal_args.matrix, "A | L | Q (default A)");
    coronal_cmd->add_option("--method", coronal_args.method, "direct | formula (default direct)");
    coronal_cmd->add_option("--family", coronal_args.family,
                            "closed-form family name (numeric mode, no file)");
    coronal_cmd->add_option("--params", coronal_args.params,
                            "comma-separated rational parameters for --family");

    SpectrumArgs spectrum_args;
    CLI::App* spectrum_cmd = app.add_subcommand(
        "spectrum", "Numeric spectrum of a digraph, or the symmetric vertex corona spectrum");
    spectrum_cmd->add_option("file", spectrum_args.file, "digraph file ('-' for stdin)");
    spectrum_cmd->add_option("--matrix", spectrum_args.matrix, "A | L | Q (default A)");
    spectrum_cmd->add_option("--d1", spectrum_args.d1, "first factor (product mode)");
    spectrum_cmd->add_option("--d2", spectrum_args.d2, "second factor, out-regular and strongly connected");
    spectrum_cmd->add_flag("--numeric", spectrum_args.numeric,
                           "also report numeric roots in product mode");
    spectrum_cmd->add_option("--tolerance", spectrum_args.tolerance,
                             "root clustering tolerance (default 1e-8)");

    VerifyArgs verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run randomized verification sweeps against oracles");
    verify_cmd->add_option("--suite", verify_args.suites, "suite name (repeatable; default: all)");
    verify_cmd->add_option("--seed", verify_args.seed, "sweep seed (default 1)");
    verify_cmd->add_option("--trials", verify_args.trials, "randomized trials per suite (default 25)");
    verify_cmd->add_option("--max-n", verify_args.max_vertices, "vertex cap for random instances");
    verify_cmd->add_option("--min-density", verify_args.min_density, "minimum arc density");
    verify_cmd->add_option("--max-density", verify_args.max_density, "maximum arc density");
    verify_cmd->add_option("--threads", verify_args.threads,
                           "worker threads (0 = auto; capped by CORONA_SPECTRA_THREADS)");
    verify_cmd->add_flag("--json", verify_args.json, "emit the full JSON report");
    verify_cmd->add_flag("--list-suites", verify_args.list, "list suite names and exit");

    std::string dot_file;
    CLI::App* dot_cmd = app.add_subcommand("export-dot", "Render a digraph file as Graphviz DOT");
    dot_cmd->add_option("file", dot_file, "digraph file ('-' for stdin)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (family_cmd->parsed()) return run_family(family_args);
        if (corona_cmd->parsed()) return run_corona(corona_args);
        if (charpoly_cmd->parsed()) return run_charpoly(charpoly_args);
        if (coronal_cmd->parsed()) return run_coronal(coronal_args);
        if (spectrum_cmd->parsed()) return run_spectrum(spectrum_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (dot_cmd->parsed()) {
            std::cout << to_dot(load_digraph(dot_file));
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
