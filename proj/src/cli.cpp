#include "dyadic/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dyadic/bounds.hpp"
#include "dyadic/error.hpp"
#include "dyadic/gains.hpp"
#include "dyadic/generators.hpp"
#include "dyadic/metrics.hpp"
#include "dyadic/phase_diagram.hpp"
#include "dyadic/report.hpp"

namespace dyadic::cli {
namespace {

constexpr const char* formats_help = R"(File formats:
  edge list      one edge per line, two whitespace-separated node tokens; '#'
                 starts a comment; blank lines ignored. Nodes are numbered in
                 order of first appearance.
  generator cfg  key=value lines: family (er|ba|regular), n, one of
                 mean_degree|density|edges, seed, connected (true|false).
  labels         --label-format vector: one 0/1 per line in node order;
                 --label-format set: one node token per line (the 1-labelled nodes).
  metrics        JSON: N, M, n1, n0, m11, m10, m00, density, expected_m11,
                 expected_m10, D, H ("undefined" when the expectation is 0).
  bounds         CSV/JSON: n1, ub_m11_old, ub_m10_old, ub_m11, ub_m10, lb_m11,
                 lb_m10, d_min, d_max, h_min, h_max.
  phase          CSV m10,m11,count sorted by (m10, m11); SVG grayscale heatmap
                 with m10 on x and m11 on y.
  gains, bench   CSV n1,area_old,area_new,gain_ub_m11,gain_ub_m10,gain_lb_m11,
                 gain_lb_m10,gain_total.
  expected       CSV n1,fraction,density,expected_m11,expected_m10.
Numbers use '.' as decimal separator and 12 significant digits.
Exit codes: 0 ok, 2 usage, 3 parse, 4 validation, 5 range/domain, 6 config,
7 generation, 8 enumeration budget exceeded, 9 I/O.)";

struct GraphSource {
    std::string input;
    std::string config;
    std::string family;
    std::int64_t n = 0;
    std::optional<std::int64_t> m;
    std::string mean_degree;
    std::string density;
    std::uint64_t seed = 1;
    bool allow_disconnected = false;

    void attach(CLI::App* app, bool allow_input)
    {
        if (allow_input)
            app->add_option("--input", input, "Edge-list file");
        app->add_option("--gen,--family", family, "Generator family: er | ba | regular");
        app->add_option("--gen-config", config, "Generator key=value config file");
        app->add_option("--n", n, "Number of nodes for the generator");
        app->add_option("--m", m, "Exact edge count target");
        app->add_option("--mean-degree", mean_degree, "Mean degree target");
        app->add_option("--density", density, "Density target in [0, 1]");
        app->add_option("--seed", seed, "Generator seed");
        app->add_flag("--allow-disconnected", allow_disconnected,
                      "Do not regenerate until the graph is connected");
    }

    bool generator_given() const { return !family.empty() || !config.empty(); }

    GeneratorSpec spec() const
    {
        GeneratorSpec s;
        if (!config.empty()) {
            std::ifstream in(config);
            if (!in)
                throw Error(ErrorKind::io, "cannot open '" + config + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            s = parse_generator_config(buf.str());
            return s;
        }
        s.family = parse_family(family);
        s.node_count = n;
        s.seed = seed;
        s.require_connected = !allow_disconnected;
        int targets = int(m.has_value()) + int(!mean_degree.empty()) + int(!density.empty());
        if (targets != 1)
            throw Error(ErrorKind::config, "give exactly one of --m, --mean-degree, --density");
        if (m)
            s.target = EdgeCount{*m};
        else if (!mean_degree.empty())
            s.target = MeanDegree{parse_decimal(mean_degree)};
        else
            s.target = Density{parse_decimal(density)};
        return s;
    }

    Graph load() const
    {
        if (input.empty() == !generator_given())
            throw CLI::ValidationError("graph source",
                                       "give exactly one of --input or generator flags");
        if (!input.empty())
            return read_edge_list(input);
        return generate(spec());
    }
};

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}

    std::ostream& stream() { return path_.empty() ? fallback_ : buffer_; }

    void commit()
    {
        if (path_.empty())
            return;
        std::ofstream f(path_, std::ios::binary);
        if (!f)
            throw Error(ErrorKind::io, "cannot write '" + path_ + "'");
        f << buffer_.str();
        f.flush();
        if (!f)
            throw Error(ErrorKind::io, "failed writing '" + path_ + "'");
    }

private:
    std::string path_;
    std::ostream& fallback_;
    std::ostringstream buffer_;
};

void warn_if_disconnected(const Graph& g, std::ostream& err)
{
    if (!g.is_connected())
        err << "warning: graph is not connected; lb_m10 uses a floor of 0 instead of 1\n";
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dyadic effect metrics, degree-sequence bounds and exact phase diagrams", "dyadic"};
    app.footer(formats_help);
    app.require_subcommand(1);

    GraphSource source;
    std::string output, format = "csv", labels_path, label_format = "vector", svg_path;
    std::optional<std::int64_t> n1;
    int workers = 0, runs = 10;
    std::uint64_t budget = default_enumeration_budget;
    std::vector<std::string> densities;

    auto* metrics = app.add_subcommand("metrics", "Dyad counts, expected counts, D and H (JSON)");
    source.attach(metrics, true);
    metrics->add_option("--labels", labels_path, "Characteristic file")->required();
    metrics->add_option("--label-format", label_format, "vector | set")
        ->check(CLI::IsMember({"vector", "set"}));
    metrics->add_option("--output", output, "Output file (default stdout)");

    auto* bounds = app.add_subcommand("bounds", "Old and new bounds for n1 = 0..N");
    source.attach(bounds, true);
    bounds->add_option("--n1", n1, "Restrict to one n1");
    bounds->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    bounds->add_option("--output", output, "Output file (default stdout)");

    auto* phase = app.add_subcommand("phase", "Exact phase diagram for one n1");
    source.attach(phase, true);
    phase->add_option("--n1", n1, "Number of 1-labelled nodes")->required();
    phase->add_option("--format", format, "csv | svg")->check(CLI::IsMember({"csv", "svg"}));
    phase->add_option("--svg", svg_path, "Also write an SVG heatmap here");
    phase->add_option("--workers", workers, "Worker threads (default: all)");
    phase->add_option("--budget", budget, "Maximum number of subsets to enumerate");
    phase->add_option("--output", output, "Output file (default stdout)");

    auto* gains = app.add_subcommand("gains", "Feasible-area gains of each new bound");
    source.attach(gains, true);
    gains->add_option("--n1", n1, "Restrict to one n1");
    gains->add_option("--output", output, "Output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "Mean gain curves over a seeded ensemble");
    source.attach(bench, false);
    bench->add_option("--runs", runs, "Number of instances (seeds seed..seed+runs-1)");
    bench->add_option("--workers", workers, "Worker threads (default: all)");
    bench->add_option("--output", output, "Output file (default stdout)");

    auto* gen = app.add_subcommand("gen", "Generate a graph and write its edge list");
    source.attach(gen, false);
    gen->add_option("--output", output, "Output file (default stdout)");

    std::int64_t expected_n = 0;
    std::optional<std::int64_t> expected_m;
    auto* expected = app.add_subcommand("expected", "Expected m11 and m10 as functions of n1/N");
    expected->add_option("--n", expected_n, "Number of nodes")->required();
    expected->add_option("--m", expected_m, "Edge count (density 2M/N(N-1))");
    expected->add_option("--density", densities, "Density value(s)");
    expected->add_option("--output", output, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error[usage]: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        Output sink(output, out);
        std::ostream& os = sink.stream();

        if (metrics->parsed()) {
            Graph g = source.load();
            auto fmt = label_format == "set" ? LabelFormat::set : LabelFormat::vector;
            auto a = parse_characteristic(read_file(labels_path), fmt, g);
            os << metrics_json(g, a).dump(2) << '\n';
        } else if (bounds->parsed()) {
            Graph g = source.load();
            warn_if_disconnected(g, err);
            std::vector<BoundsReport> rows;
            const auto n = static_cast<std::int64_t>(g.node_count());
            for (std::int64_t k = n1.value_or(0); k <= n1.value_or(n); ++k)
                rows.push_back(bounds_report(g, k));
            if (format == "json") {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& r : rows)
                    arr.push_back(bounds_json(r));
                os << arr.dump(2) << '\n';
            } else {
                write_bounds_csv(rows, os);
            }
        } else if (phase->parsed()) {
            Graph g = source.load();
            EnumerationOptions opts{budget, workers};
            PhaseDiagram d = enumerate_phase_diagram(g, *n1, opts);
            if (format == "svg")
                write_phase_svg(d, os);
            else
                write_phase_csv(d, os);
            if (!svg_path.empty()) {
                Output svg(svg_path, out);
                write_phase_svg(d, svg.stream());
                svg.commit();
            }
        } else if (gains->parsed()) {
            Graph g = source.load();
            warn_if_disconnected(g, err);
            std::vector<GainRow> rows;
            if (n1)
                rows.push_back(gain_row(bounds_report(g, *n1)));
            else
                rows = gain_curves(g);
            write_gain_csv(rows, os);
        } else if (bench->parsed()) {
            write_gain_csv(ensemble_gain(source.spec(), runs, workers), os);
        } else if (gen->parsed()) {
            if (!source.generator_given())
                throw CLI::ValidationError("gen", "generator flags required");
            write_edge_list(generate(source.spec()), os);
        } else if (expected->parsed()) {
            std::vector<Rational> ds;
            if (expected_n < 2)
                throw Error(ErrorKind::domain, "density undefined for N < 2");
            if (expected_m)
                ds.emplace_back(2 * *expected_m, expected_n * (expected_n - 1));
            for (const auto& text : densities)
                ds.push_back(parse_decimal(text));
            if (ds.empty())
                throw CLI::ValidationError("expected", "give --m or at least one --density");
            write_expected_csv(expected_n, ds, os);
        }
        sink.commit();
    } catch (const CLI::ValidationError& e) {
        err << "error[usage]: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error[internal]: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_ok;
}

} // namespace dyadic::cli
