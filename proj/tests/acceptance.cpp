// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Heavier than the unit tests; expect a few minutes.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "plabel/bitstream.hpp"
#include "plabel/gadget.hpp"
#include "plabel/generators.hpp"
#include "plabel/labeling.hpp"
#include "plabel/query.hpp"
#include "plabel/rotation_graph.hpp"
#include "plabel/separator.hpp"

using namespace plabel;

namespace {

const std::vector<std::string> kFamilies = {"grid", "cylinder", "random-triangulation",
                                            "big-face", "tree"};

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion-%d %s: %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Instance with exactly n vertices, or nullopt when the family cannot hit n.
std::optional<RotationGraph> exact_instance(const std::string& family, std::uint32_t n,
                                            std::uint64_t seed) {
    if (family == "grid") {
        std::uint32_t rows = 1;
        for (std::uint32_t r = 1; r * r <= n; ++r)
            if (n % r == 0)
                rows = r;
        return gen_grid(rows, n / rows);
    }
    if (family == "cylinder") {
        if (n < 3)
            return std::nullopt;
        std::uint32_t rows = 1;
        for (std::uint32_t r = 1; r * r <= n; ++r)
            if (n % r == 0 && n / r >= 3)
                rows = r;
        return gen_cylinder(rows, n / rows);
    }
    if (family == "random-triangulation")
        return n >= 3 ? std::optional<RotationGraph>(gen_random_triangulation(n, seed))
                      : std::nullopt;
    if (family == "big-face")
        return n >= 3 ? std::optional<RotationGraph>(
                            gen_big_face(n, std::min<std::uint32_t>(3, n - 3), seed))
                      : std::nullopt;
    if (family == "tree")
        return n >= 1 ? std::optional<RotationGraph>(gen_tree(n, seed)) : std::nullopt;
    return std::nullopt;
}

// All-pairs decode against BFS for both schemes. Returns pairs checked, or
// sets `why` and returns 0 on the first mismatch.
std::uint64_t verify_exactness(const RotationGraph& g, std::string& why) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    const LabelSet improved = build_labels(g);
    const LabelSet baseline = build_labels_baseline(g);
    std::vector<Distance> dist;
    std::vector<Vertex> scratch;
    std::uint64_t pairs = 0;
    for (Vertex u = 0; u < n; ++u) {
        bfs_into(g, u, dist, scratch);
        for (Vertex v = 0; v < n; ++v) {
            const Distance a = decode_distance(improved, u, v);
            const Distance b = decode_distance(baseline, u, v);
            if (a != dist[v] || b != dist[v]) {
                why = "u=" + std::to_string(u) + " v=" + std::to_string(v) +
                      " bfs=" + std::to_string(dist[v]) + " improved=" + std::to_string(a) +
                      " baseline=" + std::to_string(b);
                return 0;
            }
            ++pairs;
        }
    }
    return pairs;
}

void criterion1_exactness() {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t pairs = 0, graphs = 0;
    for (const std::string& family : kFamilies) {
        for (std::uint32_t n = 1; n <= 50; ++n) {
            const auto g = exact_instance(family, n, 1);
            if (!g)
                continue;
            std::string why;
            const std::uint64_t p = verify_exactness(*g, why);
            if (p == 0 && g->vertex_count() > 0) {
                report(1, false, family + " n=" + std::to_string(n) + ": " + why);
                return;
            }
            pairs += p;
            ++graphs;
        }
        for (const std::uint32_t n : {100u, 500u, 2000u})
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                const auto g = exact_instance(family, n, seed);
                if (!g)
                    continue;
                std::string why;
                const std::uint64_t p = verify_exactness(*g, why);
                if (p == 0) {
                    report(1, false,
                           family + " n=" + std::to_string(n) + " seed=" +
                               std::to_string(seed) + ": " + why);
                    return;
                }
                pairs += p;
                ++graphs;
            }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "all-pairs decode equals BFS on %llu graphs, %llu pairs, both schemes "
                  "(%.1fs)",
                  static_cast<unsigned long long>(graphs),
                  static_cast<unsigned long long>(pairs), seconds_since(start));
    report(1, true, buf);
}

void criterion2_gadget_inequality() {
    const auto start = std::chrono::steady_clock::now();
    for (std::uint32_t s = 3; s <= 64; ++s)
        if (!gadget_distance_check(s)) {
            report(2, false, "distance inequality fails inside D_" + std::to_string(s));
            return;
        }
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "dist_D(u,v) >= log2(1+dist_C(u,v)) for all pairs, s in [3,64] (%.1fs)",
                  seconds_since(start));
    report(2, true, buf);
}

void criterion3_gadget_counts() {
    bool pass = true;
    std::string detail;

    if (subdivided_aux_count(10) != 8) {
        pass = false;
        detail += "aux(10)=" + std::to_string(subdivided_aux_count(10)) + " (want 8); ";
    } else {
        detail += "aux(10)=8; ";
    }

    // The stated bound aux(s) <= s is taken literally and fails: rounding up
    // at every halving level first overshoots at s=33 (17+9+5+3=34).
    std::uint64_t violations = 0, first_s = 0, first_aux = 0, worst_over = 0;
    bool log_envelope = true;
    for (std::uint64_t s = 3; s <= 1000000; ++s) {
        const std::uint64_t aux = subdivided_aux_count(s);
        if (aux > s) {
            if (violations == 0) {
                first_s = s;
                first_aux = aux;
            }
            ++violations;
            worst_over = std::max(worst_over, aux - s);
        }
        if (static_cast<double>(aux) > static_cast<double>(s) + std::log2(static_cast<double>(s)))
            log_envelope = false;
    }
    if (violations > 0) {
        pass = false;
        detail += "aux(s)<=s is false: first counterexample aux(" + std::to_string(first_s) +
                  ")=" + std::to_string(first_aux) + ", " + std::to_string(violations) +
                  " violations up to 1e6, worst excess " + std::to_string(worst_over) +
                  (log_envelope ? " (aux(s)<=s+log2(s) does hold); " : "; ");
    }

    bool seven_n = true;
    for (const std::string& family : kFamilies)
        for (const std::uint32_t n : {47u, 1000u, 16384u}) {
            const auto g = exact_instance(family, n, 3);
            if (!g || g->vertex_count() < 3)
                continue;
            const AugmentedGraph ag = augment_with_gadgets(*g);
            if (ag.graph.vertex_count() >= 7 * g->vertex_count())
                seven_n = false;
        }
    detail += seven_n ? "n' < 7n on every augmented generator graph"
                      : "n' < 7n violated";
    pass = pass && seven_n;
    report(3, pass, detail);
}

void criterion4_separator_certificates() {
    const auto start = std::chrono::steady_clock::now();
    double worst_log_factor = 0, worst_level_factor = 0;
    for (const std::string& family : kFamilies)
        for (const std::uint32_t n : {1000u, 10000u, 100000u}) {
            const auto g = exact_instance(family, n, 1);
            if (!g)
                continue;
            // Every recursion level re-asserts balance and the log-sum bound
            // internally; a violation anywhere throws SeparatorError.
            try {
                BuildStats stats;
                build_labels(*g, {}, &stats);
                worst_level_factor = std::max(worst_level_factor, stats.max_log_sum_factor);
            } catch (const std::exception& e) {
                report(4, false, family + " n=" + std::to_string(n) + ": " + e.what());
                return;
            }
            // Independent top-level re-verification.
            const AugmentedGraph ag = augment_with_gadgets(*g);
            const CycleSeparator cs = weighted_cycle_separator(ag);
            const SeparatorResult sep = project_separator(cs, ag, *g);
            std::vector<char> removed(g->vertex_count(), 0);
            for (const Vertex v : sep.order)
                removed[v] = 1;
            std::vector<char> seen(g->vertex_count(), 0);
            std::vector<Vertex> queue;
            std::uint64_t biggest = 0;
            for (Vertex v = 0; v < g->vertex_count(); ++v) {
                if (removed[v] || seen[v])
                    continue;
                std::uint64_t size = 0;
                queue.assign(1, v);
                seen[v] = 1;
                while (!queue.empty()) {
                    const Vertex x = queue.back();
                    queue.pop_back();
                    ++size;
                    for (const Vertex w : g->neighbors(x))
                        if (!removed[w] && !seen[w]) {
                            seen[w] = 1;
                            queue.push_back(w);
                        }
                }
                biggest = std::max(biggest, size);
            }
            const std::uint64_t bound = (2 * g->vertex_count() + 2) / 3;
            if (biggest > bound) {
                report(4, false,
                       family + " n=" + std::to_string(n) + ": component " +
                           std::to_string(biggest) + " > ceil(2n/3)=" + std::to_string(bound));
                return;
            }
            const double factor = sep.log_sum / std::sqrt(static_cast<double>(n));
            worst_log_factor = std::max(worst_log_factor, factor);
            if (factor > 24.0) {
                report(4, false,
                       family + " n=" + std::to_string(n) + ": log_sum factor " +
                           std::to_string(factor) + " > 24");
                return;
            }
        }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "balance <= ceil(2n/3) and log_sum <= 24*sqrt(n) at every level up to "
                  "n=1e5; worst log factor: top-level %.2f, any level %.2f (%.1fs)",
                  worst_log_factor, worst_level_factor, seconds_since(start));
    report(4, true, buf);
}

void criterion5_size_scaling() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (const char* family : {"grid", "random-triangulation"}) {
        std::vector<double> improved_bits, ratio;
        for (const std::uint32_t n : {1024u, 4096u, 16384u, 65536u}) {
            const auto g = exact_instance(std::string(family), n, 1);
            const LabelSet imp = build_labels(*g);
            const LabelSet base = build_labels_baseline(*g);
            improved_bits.push_back(static_cast<double>(imp.max_label_bits()));
            ratio.push_back(static_cast<double>(base.max_label_bits()) /
                            static_cast<double>(imp.max_label_bits()));
        }
        detail += std::string(family) + " L(4n)/L(n)=";
        for (std::size_t i = 0; i + 1 < improved_bits.size(); ++i) {
            const double growth = improved_bits[i + 1] / improved_bits[i];
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f%s", growth, i + 2 < improved_bits.size() ? "," : "");
            detail += buf;
            if (growth > 2.4)
                pass = false;
        }
        detail += " base/improved=";
        for (std::size_t i = 0; i < ratio.size(); ++i) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f%s", ratio[i], i + 1 < ratio.size() ? "," : "; ");
            detail += buf;
            if (i > 0 && ratio[i] <= ratio[i - 1])
                pass = false;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.1fs)", seconds_since(start));
    report(5, pass, detail + buf);
}

void criterion6_recursion_depth() {
    bool pass = true;
    std::string detail = "depth <= ceil(log1.5(n/16)) + 1 on all builds:";
    for (const std::string& family : kFamilies) {
        const auto g = exact_instance(family, 65536, 1);
        if (!g)
            continue;
        BuildStats stats;
        build_labels(*g, {}, &stats);
        const double limit =
            std::ceil(std::log(static_cast<double>(g->vertex_count()) / 16.0) / std::log(1.5)) +
            1;
        char buf[64];
        std::snprintf(buf, sizeof buf, " %s=%u/%.0f", family.c_str(), stats.depth, limit);
        detail += buf;
        if (static_cast<double>(stats.depth) > limit)
            pass = false;
    }
    report(6, pass, detail + " (also asserted inside every build)");
}

void criterion7_codec() {
    const auto start = std::chrono::steady_clock::now();
    BitStream gammas;
    for (std::uint64_t x = 1; x <= 100000; ++x)
        gammas.append_gamma(x);
    BitReader gr(gammas);
    for (std::uint64_t x = 1; x <= 100000; ++x)
        if (gr.read_gamma() != x) {
            report(7, false, "gamma round-trip failed at " + std::to_string(x));
            return;
        }
    BitStream signeds;
    for (std::int64_t d = -10000; d <= 10000; ++d)
        signeds.append_signed(d);
    BitReader sr(signeds);
    for (std::int64_t d = -10000; d <= 10000; ++d)
        if (sr.read_signed() != d) {
            report(7, false, "signed round-trip failed at " + std::to_string(d));
            return;
        }
    // prefix-freeness: random concatenations parse back in order
    SeededRng rng(99);
    for (int trial = 0; trial < 10000; ++trial) {
        BitStream s;
        std::uint64_t values[6];
        const std::size_t count = 1 + rng.below(6);
        for (std::size_t i = 0; i < count; ++i) {
            values[i] = 1 + rng.below(1u << 24);
            s.append_gamma(values[i]);
        }
        BitReader r(s);
        for (std::size_t i = 0; i < count; ++i)
            if (r.read_gamma() != values[i]) {
                report(7, false, "concatenated stream mis-parsed");
                return;
            }
        if (!r.at_end()) {
            report(7, false, "concatenated stream left residue");
            return;
        }
    }
    char buf[140];
    std::snprintf(buf, sizeof buf,
                  "gamma [1,1e5] and signed [-1e4,1e4] round-trip; 1e4 random "
                  "concatenations prefix-free (%.1fs)",
                  seconds_since(start));
    report(7, true, buf);
}

void criterion8_determinism() {
    for (const std::string& family : kFamilies) {
        const auto g1 = exact_instance(family, 2000, 7);
        const auto g2 = exact_instance(family, 2000, 7);
        if (!g1 || !g2)
            continue;
        if (write_graph(*g1) != write_graph(*g2)) {
            report(8, false, family + ": generator output differs for the same seed");
            return;
        }
        const RotationGraph reparsed = load_graph(write_graph(*g1));
        const auto bytes1 = serialize_labels(build_labels(*g1));
        const auto bytes2 = serialize_labels(build_labels(reparsed));
        if (bytes1 != bytes2) {
            report(8, false, family + ": label files differ across identical builds");
            return;
        }
    }
    report(8, true, "same graph file and seed give bit-identical label files, all families");
}

} // namespace

int main() {
    criterion1_exactness();
    criterion2_gadget_inequality();
    criterion3_gadget_counts();
    criterion4_separator_certificates();
    criterion5_size_scaling();
    criterion6_recursion_depth();
    criterion7_codec();
    criterion8_determinism();
    if (failures == 0) {
        std::puts("acceptance: all criteria PASS");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
