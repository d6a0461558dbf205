// plabel: generate planar graphs, build distance labels, answer queries from
// labels alone, verify against BFS, and benchmark label sizes.
//
// Exit codes: 0 = ok, 1 = verification or runtime failure, 2 = usage.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "plabel/gadget.hpp"
#include "plabel/generators.hpp"
#include "plabel/labeling.hpp"
#include "plabel/query.hpp"
#include "plabel/rotation_graph.hpp"
#include "plabel/separator.hpp"

using namespace plabel;

namespace {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::uint8_t> read_binary_file(const std::string& path) {
    const std::string text = read_text_file(path);
    return {text.begin(), text.end()};
}

void write_file(const std::string& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
}

void emit_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text.data(), text.size());
}

Scheme parse_scheme(const std::string& name) {
    if (name == "improved")
        return Scheme::improved;
    if (name == "baseline")
        return Scheme::baseline;
    throw CLI::ValidationError("--scheme", "expected 'improved' or 'baseline'");
}

int run_gen(const std::string& family, std::uint32_t rows, std::uint32_t cols, std::uint32_t n,
            std::uint32_t size, std::uint32_t chords, std::uint64_t seed,
            const std::string& out) {
    RotationGraph g;
    if (family == "grid" || family == "cylinder") {
        if (!(rows && cols) && n == 0)
            throw std::invalid_argument(family + " needs --rows/--cols or --n");
        if (rows && cols)
            g = family == "grid" ? gen_grid(rows, cols) : gen_cylinder(rows, cols);
        else
            g = generate_family(family, n, seed);
    }
    else if (family == "random-triangulation")
        g = gen_random_triangulation(n, seed);
    else if (family == "big-face")
        g = gen_big_face(size ? size : n, chords, seed);
    else if (family == "tree")
        g = gen_tree(n, seed);
    else
        throw std::invalid_argument("unknown family '" + family + "'");
    emit_text(out, write_graph(g));
    return 0;
}

int run_build(const std::string& graph_path, const std::string& scheme_name,
              std::uint32_t base_threshold, const std::string& out) {
    const RotationGraph g = load_graph(read_text_file(graph_path));
    BuildConfig config;
    config.scheme = parse_scheme(scheme_name);
    config.base_threshold = base_threshold;
    BuildStats stats;
    const LabelSet labels = build_labels(g, config, &stats);
    const std::vector<std::uint8_t> bytes = serialize_labels(labels);
    write_file(out, bytes.data(), bytes.size());
    std::cout << "n=" << g.vertex_count() << " scheme=" << scheme_name
              << " max_bits=" << labels.max_label_bits()
              << " mean_bits=" << labels.mean_label_bits() << " depth=" << stats.depth
              << " c=" << stats.top_separator_size << " log_sum=" << stats.top_log_sum
              << " file_bytes=" << bytes.size() << "\n";
    return 0;
}

int run_query(const std::string& labels_path, std::uint64_t u, std::uint64_t v) {
    const LabelSet labels = deserialize_labels(read_binary_file(labels_path));
    if (u >= labels.size() || v >= labels.size()) {
        std::cerr << "vertex id out of range (n=" << labels.size() << ")\n";
        return 2;
    }
    const Distance d = decode_distance(labels, static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (d == kUnreachable)
        std::cout << "INF\n";
    else
        std::cout << d << "\n";
    return 0;
}

int run_check(const std::string& graph_path, std::uint32_t base_threshold) {
    const RotationGraph g = load_graph(read_text_file(graph_path));
    const auto n = static_cast<Vertex>(g.vertex_count());

    BuildConfig config;
    config.base_threshold = base_threshold;
    BuildStats stats;
    const LabelSet improved = build_labels(g, config, &stats);
    const LabelSet baseline = build_labels_baseline(g);

    // exercise the full file path, not just in-memory labels
    const LabelSet reloaded = deserialize_labels(serialize_labels(improved));

    std::vector<Distance> dist;
    std::vector<Vertex> scratch;
    for (Vertex u = 0; u < n; ++u) {
        bfs_into(g, u, dist, scratch);
        for (Vertex v = 0; v < n; ++v) {
            const Distance want = dist[v];
            for (const LabelSet* set : {&reloaded, &baseline}) {
                const Distance got = decode_distance(*set, u, v);
                if (got != want) {
                    std::cerr << "MISMATCH scheme="
                              << (set->scheme() == Scheme::improved ? "improved" : "baseline")
                              << " u=" << u << " v=" << v << " decoded=" << got
                              << " bfs=" << want << "\n";
                    return 1;
                }
            }
        }
    }
    std::cout << "PASS n=" << n << " pairs=" << static_cast<std::uint64_t>(n) * n
              << " max_bits=" << improved.max_label_bits()
              << " mean_bits=" << improved.mean_label_bits()
              << " base_max_bits=" << baseline.max_label_bits() << " depth=" << stats.depth
              << " c=" << stats.top_separator_size << " log_sum=" << stats.top_log_sum << "\n";
    return 0;
}

int run_bench(const std::vector<std::string>& families, const std::vector<std::uint64_t>& sizes,
              std::uint32_t seeds, std::uint32_t base_threshold) {
    using Clock = std::chrono::steady_clock;
    std::cout << "family,n,seed,max_bits,mean_bits,base_max_bits,c,log_sum,build_ms,query_ns\n";
    for (const std::string& family : families)
        for (const std::uint64_t size : sizes)
            for (std::uint64_t seed = 0; seed < seeds; ++seed) {
                const RotationGraph g =
                    generate_family(family, static_cast<std::uint32_t>(size), seed);
                BuildConfig config;
                config.base_threshold = base_threshold;
                BuildStats stats;
                const auto t0 = Clock::now();
                const LabelSet improved = build_labels(g, config, &stats);
                const auto t1 = Clock::now();
                const LabelSet baseline = build_labels_baseline(g);

                const auto n = static_cast<Vertex>(g.vertex_count());
                SeededRng rng(seed ^ 0x9e3779b97f4a7c15ull);
                const std::size_t samples = 1000;
                std::vector<std::pair<Vertex, Vertex>> pairs(samples);
                for (auto& [u, v] : pairs) {
                    u = static_cast<Vertex>(rng.below(n));
                    v = static_cast<Vertex>(rng.below(n));
                }
                const auto q0 = Clock::now();
                Distance sink = 0;
                for (const auto& [u, v] : pairs)
                    sink ^= decode_distance(improved, u, v);
                const auto q1 = Clock::now();
                if (sink == std::numeric_limits<Distance>::min())
                    std::cerr << "";

                const double build_ms =
                    std::chrono::duration<double, std::milli>(t1 - t0).count();
                const double query_ns =
                    std::chrono::duration<double, std::nano>(q1 - q0).count() /
                    static_cast<double>(samples);
                std::cout << family << ',' << n << ',' << seed << ','
                          << improved.max_label_bits() << ',' << improved.mean_label_bits()
                          << ',' << baseline.max_label_bits() << ',' << stats.top_separator_size
                          << ',' << stats.top_log_sum << ',' << build_ms << ',' << query_ns
                          << "\n";
            }
    return 0;
}

int run_dump_separator(const std::string& graph_path) {
    const RotationGraph g = load_graph(read_text_file(graph_path));
    const AugmentedGraph ag = augment_with_gadgets(g);
    const CycleSeparator cs = weighted_cycle_separator(ag);
    const SeparatorResult sep = project_separator(cs, ag, g);
    std::cout << "c,log_sum,max_component_size,n\n"
              << sep.order.size() << ',' << sep.log_sum << ',' << sep.max_component_size << ','
              << g.vertex_count() << "\n";
    std::cout << "index,vertex,gap\n";
    for (std::size_t i = 0; i < sep.order.size(); ++i)
        std::cout << i << ',' << sep.order[i] << ','
                  << (i < sep.gaps.size() ? sep.gaps[i] : 0) << "\n";
    return 0;
}

int run_dump_augmented(const std::string& graph_path, const std::string& out) {
    const RotationGraph g = load_graph(read_text_file(graph_path));
    const AugmentedGraph ag = augment_with_gadgets(g);
    std::ostringstream text;
    text << "# augmented: " << ag.original_count << " original of "
         << ag.graph.vertex_count() << " vertices\n";
    text << "# weights:";
    for (Vertex v = 0; v < ag.graph.vertex_count(); ++v)
        text << ' ' << ag.weight(v);
    text << "\n" << write_graph(ag.graph);
    emit_text(out, text.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance labels for unweighted planar graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    std::string family, out;
    std::uint32_t rows = 0, cols = 0, n = 0, size = 0, chords = 0, base_threshold = 16;
    std::uint64_t seed = 0;
    gen->add_option("family", family,
                    "grid | cylinder | random-triangulation | big-face | tree")
        ->required();
    gen->add_option("--rows", rows, "grid/cylinder rows");
    gen->add_option("--cols", cols, "grid/cylinder cols");
    gen->add_option("--n", n, "target vertex count");
    gen->add_option("--size", size, "big-face cycle size");
    gen->add_option("--chords", chords, "big-face chord count");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--out", out, "output file (default stdout)");

    // build
    auto* build = app.add_subcommand("build", "build a label file from a graph file");
    std::string graph_path, labels_path = "labels.bin", scheme_name = "improved";
    build->add_option("graph", graph_path, "graph file")->required();
    build->add_option("--scheme", scheme_name, "improved | baseline");
    build->add_option("--base-threshold", base_threshold, "leaf component size cutoff");
    build->add_option("--out", labels_path, "label file to write");

    // query
    auto* query = app.add_subcommand("query", "distance between two vertices from labels alone");
    std::uint64_t qu = 0, qv = 0;
    query->add_option("labels", labels_path, "label file")->required();
    query->add_option("u", qu, "first vertex")->required();
    query->add_option("v", qv, "second vertex")->required();

    // check
    auto* check = app.add_subcommand("check", "verify all pairs against BFS, both schemes");
    check->add_option("graph", graph_path, "graph file")->required();
    check->add_option("--base-threshold", base_threshold, "leaf component size cutoff");

    // bench
    auto* bench = app.add_subcommand("bench", "label size and timing matrix as CSV");
    std::vector<std::string> families = {"grid", "random-triangulation"};
    std::vector<std::uint64_t> sizes = {1024, 4096};
    std::uint32_t seeds = 1;
    bench->add_option("--families", families, "generator families")->delimiter(',');
    bench->add_option("--sizes", sizes, "vertex counts")->delimiter(',');
    bench->add_option("--seeds", seeds, "seeds per cell");
    bench->add_option("--base-threshold", base_threshold, "leaf component size cutoff");

    // dump-separator
    auto* dsep = app.add_subcommand("dump-separator", "top-level separator with certificates");
    dsep->add_option("graph", graph_path, "graph file")->required();

    // dump-augmented
    auto* daug = app.add_subcommand("dump-augmented", "gadget-augmented graph as a graph file");
    daug->add_option("graph", graph_path, "graph file")->required();
    daug->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return run_gen(family, rows, cols, n, size, chords, seed, out);
        if (build->parsed())
            return run_build(graph_path, scheme_name, base_threshold, labels_path);
        if (query->parsed())
            return run_query(labels_path, qu, qv);
        if (check->parsed())
            return run_check(graph_path, base_threshold);
        if (bench->parsed())
            return run_bench(families, sizes, seeds, base_threshold);
        if (dsep->parsed())
            return run_dump_separator(graph_path);
        if (daug->parsed())
            return run_dump_augmented(graph_path, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
