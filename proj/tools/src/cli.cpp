#include "eulerloc/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "eulerloc/bundle_model.hpp"
#include "eulerloc/cochain.hpp"
#include "eulerloc/document.hpp"
#include "eulerloc/error.hpp"
#include "eulerloc/generators.hpp"

namespace eulerloc {

namespace {

// Input that could not be read or parsed; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot write " + path);
    file << text;
}

template <typename T, typename F>
T parse_input(F&& parse)
{
    try {
        return parse();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidInput)
            throw UsageError(e.what());
        throw;
    }
}

TriangulatedBundle load_bundle(const std::string& path)
{
    const std::string text = read_file(path);
    return parse_input<TriangulatedBundle>([&] { return TriangulatedBundle(parse_bundle(text)); });
}

BundleData generate(const std::string& kind, const std::string& base, const std::string& fiber, std::uint64_t seed,
                    int subdivide)
{
    BundleData data = kind == "hopf" ? hopf_fixture() : gen_trivial(named_base(base), named_fiber(fiber), seed);
    if (kind == "hopf" && seed != 0)
        data = relabel_total(data, seeded_permutation(data.total_vertices.size(), seed));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < subdivide; ++i) {
        const auto edges = fiber_edges(data);
        const auto& [a, b] = edges[rng() % edges.size()];
        data = subdivide_fiber_edge(data, a, b);
    }
    return data;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Local rational Euler cocycles of triangulated sphere bundles", "eulerloc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string input;
    std::string output;
    std::string formula = "harmonic";
    std::size_t jobs = 1;

    auto* validate = app.add_subcommand("validate", "Check a bundle file and print one line per check");
    validate->add_option("bundle", input, "Bundle JSON")->required();
    validate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* euler = app.add_subcommand("euler", "Compute the local Euler cochain");
    euler->add_option("bundle", input, "Bundle JSON")->required();
    euler->add_option("--formula", formula, "harmonic, winding or necklace")
        ->check(CLI::IsMember({"harmonic", "winding", "necklace"}));
    euler->add_option("-o,--output", output, "Cochain JSON (default: stdout)");
    euler->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::string cycle_path;
    auto* pairing = app.add_subcommand("pair", "Evaluate a cochain on a base cycle");
    pairing->add_option("cochain", input, "Cochain JSON")->required();
    pairing->add_option("cycle", cycle_path, "Cycle JSON")->required();

    std::string kind;
    std::string base = "boundary3";
    std::string fiber = "cycle3";
    std::uint64_t seed = 0;
    int subdivide = 0;
    auto* gen = app.add_subcommand("generate", "Write a fixture bundle");
    gen->add_option("--kind", kind, "trivial or hopf")->required()->check(CLI::IsMember({"trivial", "hopf"}));
    gen->add_option("--base", base, "simplex2, simplex3, boundary3, boundary4 or torus7");
    gen->add_option("--fiber", fiber, "cycleM or boundaryK");
    gen->add_option("--seed", seed, "Vertex-order seed (0 keeps the natural order)");
    gen->add_option("--subdivide", subdivide, "Number of fiber-edge subdivisions")->check(CLI::NonNegativeNumber);
    gen->add_option("-o,--output", output, "Bundle JSON (default: stdout)");

    auto* fundamental = app.add_subcommand("fundamental-cycle", "Write the fundamental cycle of a closed base");
    fundamental->add_option("bundle", input, "Bundle JSON")->required();
    fundamental->add_option("-o,--output", output, "Cycle JSON (default: stdout)");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) {
            const auto bundle = load_bundle(input);
            ModelOptions options;
            options.jobs = jobs;
            const auto report = validate_bundle(bundle, options);
            out << report.to_text();
            return report.passed() ? kExitOk : kExitFailed;
        }
        if (euler->parsed()) {
            const auto bundle = load_bundle(input);
            const auto cochain = euler_cochain(bundle, *parse_formula(formula), jobs);
            write_output(output, dump_cochain(make_cochain_document(bundle, cochain)), out);
            return kExitOk;
        }
        if (pairing->parsed()) {
            const std::string ctext = read_file(input);
            const std::string ztext = read_file(cycle_path);
            const auto cdoc = parse_input<CochainDocument>([&] { return parse_cochain(ctext); });
            const auto zdoc = parse_input<CycleDocument>([&] { return parse_cycle(ztext); });
            if (cdoc.base_digest != zdoc.base_digest)
                throw Error(ErrorKind::DigestMismatch, "cochain and cycle belong to different bases");
            const auto cochain = parse_input<EulerCochain>([&] { return cochain_from_document(cdoc); });
            out << to_string(pair(cochain, zdoc.cycle)) << '\n';
            return kExitOk;
        }
        if (gen->parsed()) {
            const auto data = parse_input<BundleData>([&] { return generate(kind, base, fiber, seed, subdivide); });
            write_output(output, dump_bundle(data), out);
            return kExitOk;
        }
        if (fundamental->parsed()) {
            const auto bundle = load_bundle(input);
            CycleDocument doc{base_digest(bundle.data()), fundamental_cycle(bundle)};
            write_output(output, dump_cycle(doc), out);
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}

}  // namespace eulerloc
