#include "doctest.h"

#include <algorithm>

#include "plabel/generators.hpp"
#include "plabel/labeling.hpp"
#include "plabel/query.hpp"
#include "plabel/separator.hpp"
#include "test_util.hpp"

using namespace plabel;
using namespace plabel::testutil;

namespace {

void check_exact(const RotationGraph& g, const LabelSet& labels) {
    const auto oracle = all_pairs_bfs(g);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            CHECK(decode_distance(labels, u, v) == oracle[u][v]);
}

} // namespace

TEST_CASE("a single vertex gets one leaf level with an empty table") {
    const LabelSet labels = build_labels(load_graph("1 0\n\n"));
    const ParsedLabel parsed = parse_label(labels, 0);
    CHECK(parsed.top_component == 0);
    REQUIRE(parsed.levels.size() == 1);
    CHECK(parsed.levels[0].leaf);
    CHECK(parsed.levels[0].table.empty());
    CHECK(decode_distance(labels, 0, 0) == 0);
}

TEST_CASE("one edge decodes through the leaf table") {
    const LabelSet labels = build_labels(load_graph(kSingleEdgeFile));
    CHECK(decode_distance(labels, 0, 1) == 1);
    CHECK(decode_distance(labels, 1, 0) == 1);
    CHECK(decode_distance(labels, 0, 0) == 0);
}

TEST_CASE("3x3 grid decodes every pair exactly under both schemes") {
    const RotationGraph g = gen_grid(3, 3);
    check_exact(g, build_labels(g));
    check_exact(g, build_labels_baseline(g));
}

TEST_CASE("forced recursion still decodes exactly") {
    // a tiny threshold forces separator levels even on small graphs
    BuildConfig config;
    config.base_threshold = 2;
    for (const RotationGraph& g :
         {gen_grid(4, 4), gen_random_triangulation(24, 8), gen_tree(20, 5),
          gen_big_face(14, 2, 3), gen_cylinder(3, 5)}) {
        check_exact(g, build_labels(g, config));
        BuildConfig base = config;
        base.scheme = Scheme::baseline;
        check_exact(g, build_labels(g, base));
    }
}

TEST_CASE("medium graphs decode exactly across families") {
    for (const RotationGraph& g :
         {gen_grid(9, 10), gen_cylinder(7, 9), gen_random_triangulation(80, 21),
          gen_tree(64, 2), gen_big_face(52, 6, 13)}) {
        check_exact(g, build_labels(g));
    }
}

TEST_CASE("disconnected pairs decode as unreachable") {
    const RotationGraph g = load_graph("6 6\n1 2\n0 2\n0 1\n4 5\n3 5\n3 4\n");
    const LabelSet labels = build_labels(g);
    CHECK(decode_distance(labels, 0, 1) == 1);
    CHECK(decode_distance(labels, 0, 3) == kUnreachable);
    CHECK(decode_distance(labels, 5, 2) == kUnreachable);
}

TEST_CASE("tiny graphs keep both schemes under 64 bits") {
    const RotationGraph k3 = load_graph(kTriangleFile);
    CHECK(build_labels(k3).max_label_bits() <= 64);
    CHECK(build_labels_baseline(k3).max_label_bits() <= 64);
}

TEST_CASE("labels of one component share their level prefix until divergence") {
    const RotationGraph g = gen_grid(5, 5);
    BuildConfig config;
    config.base_threshold = 4;
    const LabelSet labels = build_labels(g, config);
    const ParsedLabel a = parse_label(labels, 0);
    const ParsedLabel b = parse_label(labels, 24);
    CHECK(a.top_component == b.top_component);
    REQUIRE(!a.levels.empty());
    REQUIRE(!b.levels.empty());
    // both see the same top separator
    CHECK(a.levels[0].separator_row.size() == b.levels[0].separator_row.size());
}

TEST_CASE("separator distances match per-source BFS") {
    const RotationGraph g = gen_grid(6, 6);
    const AugmentedGraph ag = augment_with_gadgets(g);
    const SeparatorResult sep = project_separator(weighted_cycle_separator(ag), ag, g);
    const auto rows = separator_distances(g, sep.order);
    REQUIRE(!sep.order.empty());
    // u_1's own row starts at zero
    CHECK(rows[sep.order[0]][0] == 0);
    const auto oracle = all_pairs_bfs(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (std::size_t j = 0; j < sep.order.size(); ++j)
            CHECK(rows[v][j] == oracle[v][sep.order[j]]);
    // consecutive columns differ by at most the certified gap
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (std::size_t j = 0; j + 1 < sep.order.size(); ++j) {
            const Distance delta = rows[v][j + 1] - rows[v][j];
            CHECK(static_cast<std::uint64_t>(delta < 0 ? -delta : delta) <= sep.gaps[j]);
        }
}

TEST_CASE("separator distances mark unreachable vertices") {
    const RotationGraph g = load_graph("4 3\n1 2\n0 2\n0 1\n\n");
    const std::vector<Vertex> order = {0};
    const auto rows = separator_distances(g, order);
    CHECK(rows[3][0] == kUnreachable);
}

TEST_CASE("label files round-trip bit-exactly") {
    const RotationGraph g = gen_random_triangulation(60, 17);
    const LabelSet labels = build_labels(g);
    const std::vector<std::uint8_t> bytes = serialize_labels(labels);
    const LabelSet back = deserialize_labels(bytes);
    CHECK(back.scheme() == labels.scheme());
    CHECK(back.fingerprint() == labels.fingerprint());
    CHECK(back.size() == labels.size());
    CHECK(back.bit_offsets() == labels.bit_offsets());
    CHECK(back.payload() == labels.payload());
    CHECK(serialize_labels(back) == bytes);
}

TEST_CASE("every corrupted byte is caught by the framing layer") {
    const LabelSet labels = build_labels(gen_grid(4, 4));
    const std::vector<std::uint8_t> bytes = serialize_labels(labels);
    for (std::size_t step = 0; step < bytes.size(); step += 7) {
        std::vector<std::uint8_t> bad = bytes;
        bad[step] ^= 0x40;
        CHECK_THROWS_AS(deserialize_labels(bad), FormatError);
    }
    std::vector<std::uint8_t> truncated(bytes.begin(), bytes.end() - 9);
    CHECK_THROWS_AS(deserialize_labels(truncated), FormatError);
}

TEST_CASE("an empty graph serializes to a valid file with zero entries") {
    const LabelSet labels = build_labels(load_graph("0 0\n"));
    CHECK(labels.size() == 0);
    const LabelSet back = deserialize_labels(serialize_labels(labels));
    CHECK(back.size() == 0);
}

TEST_CASE("builds are deterministic") {
    const RotationGraph g1 = gen_random_triangulation(120, 5);
    const RotationGraph g2 = gen_random_triangulation(120, 5);
    CHECK(serialize_labels(build_labels(g1)) == serialize_labels(build_labels(g2)));
    CHECK(serialize_labels(build_labels_baseline(g1)) ==
          serialize_labels(build_labels_baseline(g2)));
}

TEST_CASE("build stats expose the top separator") {
    BuildStats stats;
    const RotationGraph g = gen_grid(8, 8);
    build_labels(g, {}, &stats);
    CHECK(stats.top_separator_size >= 1);
    CHECK(stats.top_log_sum > 0);
    CHECK(stats.depth >= 2);
    const double limit =
        std::ceil(std::log(static_cast<double>(g.vertex_count()) / 16.0) / std::log(1.5)) + 1;
    CHECK(stats.depth <= limit);
}
