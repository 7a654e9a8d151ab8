// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Heavy searches run with all available cores; pass
// --long-run to extend the cubic girth-5 scan to n <= 18.
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "plancage/bounds.hpp"
#include "plancage/canonical.hpp"
#include "plancage/draw.hpp"
#include "plancage/families.hpp"
#include "plancage/graph6.hpp"
#include "plancage/link.hpp"
#include "plancage/planarity.hpp"
#include "plancage/search.hpp"
#include "plancage/verify.hpp"
#include "support/oracles.hpp"

using namespace plancage;

namespace {

int default_threads() {
    return std::max(2u, std::thread::hardware_concurrency());
}

struct Criterion {
    int number;
    std::string note;
    bool pass = true;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (failures.size() < 8) failures.push_back(what);
        }
    }
};

SearchOptions fast_options() {
    SearchOptions opt;
    opt.threads = default_threads();
    return opt;
}

std::set<std::string> forms_of(const SearchOutcome& out) {
    std::set<std::string> forms;
    for (const auto& g6 : out.graphs) forms.insert(canonical_form(decode_graph6(g6)).bytes);
    return forms;
}

std::set<std::string> forms_of(const std::vector<SimpleGraph>& graphs) {
    std::set<std::string> forms;
    for (const auto& g : graphs) forms.insert(canonical_form(g).bytes);
    return forms;
}

// ---------------------------------------------------------------- criteria

void criterion1(Criterion& c) {
    struct Row {
        const char* name;
        int k, g, n;
    };
    const Row rows[] = {{"tetrahedron", 3, 3, 4},
                        {"cube", 3, 4, 8},
                        {"dodecahedron", 3, 5, 20},
                        {"octahedron", 4, 3, 6},
                        {"icosahedron", 5, 3, 12}};
    for (const auto& row : rows) {
        SimpleGraph g = families::platonic(row.name);
        c.require(g.order() == row.n, std::string(row.name) + ": order");
        c.require(is_regular(g, row.k), std::string(row.name) + ": regularity");
        c.require(girth(g) == row.g, std::string(row.name) + ": girth");
        c.require(is_planar(g), std::string(row.name) + ": planarity");
        c.require(regular_cage_order(row.k, row.g) == row.n,
                  std::string(row.name) + ": cage order formula");
    }
}

void criterion2(Criterion& c, bool long_run) {
    auto opt = fast_options();
    for (int n : {4, 6}) {
        auto out = enumerate_order(CageParams::make_regular(3, 4), n, opt);
        c.require(out.exhaustive && out.graphs.empty(),
                  "cubic girth-4 on " + std::to_string(n) + " vertices");
    }
    auto cube = enumerate_order(CageParams::make_regular(3, 4), 8, opt);
    c.require(cube.exhaustive, "cubic girth-4 n=8 exhaustive");
    c.require(forms_of(cube) == forms_of({families::platonic("cube")}),
              "cube unique at n=8");
    const int cap = long_run ? 18 : 14;
    for (int n = 4; n <= cap; ++n) {
        auto out = enumerate_order(CageParams::make_regular(3, 5), n, opt);
        c.require(out.exhaustive && out.graphs.empty(),
                  "cubic girth-5 on " + std::to_string(n) + " vertices");
    }
    if (long_run) {
        auto out = enumerate_order(CageParams::make_regular(3, 5), 20, opt);
        c.require(forms_of(out) == forms_of({families::platonic("dodecahedron")}),
                  "dodecahedron at n=20");
    }
}

void criterion3(Criterion& c) {
    // the Euler forcing behind the search: n=13 admits only one degree-6
    // vertex and exactly 3n-6 edges, a triangulation
    c.require(feasible_degree_m_counts(5, 6, 3, 13) == std::vector<int>{1},
              "(5,6,3) n=13 forces x=1");
    c.require((12 * 5 + 1 * 6) / 2 == 3 * 13 - 6, "(5,6,3) n=13 forces e=3n-6");
    c.require(feasible_degree_m_counts(5, 7, 3, 14) == std::vector<int>{1},
              "(5,7,3) n=14 forces x=1");
    c.require((13 * 5 + 1 * 7) / 2 == 3 * 14 - 6, "(5,7,3) n=14 forces e=3n-6");
    c.require(!parity_prune(5, 7, 3, 15), "(5,7,3) n=15 parity-pruned");

    auto opt = fast_options();
    auto g56 = enumerate_order(CageParams::make_biregular(5, 6, 3), 13, opt);
    c.require(g56.exhaustive && g56.graphs.empty(), "no planar ({5,6};3) graph on 13 vertices");
    auto g57 = enumerate_order(CageParams::make_biregular(5, 7, 3), 14, opt);
    c.require(g57.exhaustive && g57.graphs.empty(), "no planar ({5,7};3) graph on 14 vertices");

    auto i6 = certify(families::family_I(6), CageParams::make_biregular(5, 6, 3));
    c.require(i6.status == CertStatus::meets_exact_cage_order && i6.order == 14,
              "I(6) certifies at order 14");
    auto i7 = certify(families::family_I(7), CageParams::make_biregular(5, 7, 3));
    c.require(i7.status == CertStatus::meets_exact_cage_order && i7.order == 16,
              "I(7) certifies at order 16");
}

void criterion4(Criterion& c) {
    auto opt = fast_options();
    for (int m = 3; m <= 10; ++m) {
        auto out = min_order(CageParams::make_biregular(2, m, 3), m + 1, opt);
        c.require(!out.graphs.empty() && out.orders_scanned.back() == m + 1,
                  "({2," + std::to_string(m) + "};3) minimum order m+1");
        std::vector<SimpleGraph> expected{families::pinwheel(m - 1)};
        if (m % 2 == 0) expected.push_back(families::windmill(m / 2));
        c.require(verify_uniqueness(CageParams::make_biregular(2, m, 3), expected, opt),
                  "({2," + std::to_string(m) + "};3) cage list");
    }
    bool stated_lists_hold = true;
    for (int m = 4; m <= 10; ++m) {
        auto out = min_order(CageParams::make_biregular(3, m, 3), m + 1, opt);
        c.require(!out.graphs.empty() && out.orders_scanned.back() == m + 1,
                  "({3," + std::to_string(m) + "};3) minimum order m+1");
        // as stated: wheel, plus double windmill for odd m, plus biwheel(3)
        // at m=4. Unattainable for m >= 6: the cone over any partition of m
        // into cycles of length >= 3 is also a cage of order m+1.
        std::vector<SimpleGraph> stated{families::wheel(m)};
        if (m % 2 == 1) stated.push_back(families::double_windmill(m));
        if (m == 4) stated.push_back(families::biwheel(3));
        bool ok = verify_uniqueness(CageParams::make_biregular(3, m, 3), stated, opt);
        stated_lists_hold = stated_lists_hold && ok;
        c.require(ok, "({3," + std::to_string(m) + "};3) cage list as stated");
        // the corrected characterization must hold exactly
        std::vector<SimpleGraph> corrected;
        for (const auto& parts : oracles::cycle_partitions(m))
            corrected.push_back(oracles::cycle_cone(parts));
        if (m % 2 == 1) corrected.push_back(families::double_windmill(m));
        if (m == 4) corrected.push_back(families::biwheel(3));
        c.require(verify_uniqueness(CageParams::make_biregular(3, m, 3), corrected, opt),
                  "({3," + std::to_string(m) + "};3) corrected cage list (cycle-partition cones)");
    }
    if (!stated_lists_hold)
        c.note = "the stated ({3,m};3) uniqueness lists miss the multi-cycle cones for m >= 6; "
                 "the corrected lists verify exactly";
    for (int m = 5; m <= 10; ++m) {
        auto out = min_order(CageParams::make_biregular(4, m, 3), m + 2, opt);
        c.require(!out.graphs.empty() && out.orders_scanned.back() == m + 2,
                  "({4," + std::to_string(m) + "};3) minimum order m+2");
    }
}

void criterion5(Criterion& c) {
    auto opt = fast_options();
    for (int m = 3; m <= 8; ++m) {
        auto out = min_order(CageParams::make_biregular(2, m, 4), m + 2, opt);
        c.require(!out.graphs.empty() && out.orders_scanned.back() == m + 2,
                  "({2," + std::to_string(m) + "};4) minimum order m+2");
        c.require(verify_uniqueness(CageParams::make_biregular(2, m, 4), {families::k2m(m)}, opt),
                  "K_{2," + std::to_string(m) + "} unique");
    }
    for (int m : {4, 5}) {
        auto out = min_order(CageParams::make_biregular(3, m, 4), 12, opt);
        c.require(!out.graphs.empty() && out.orders_scanned.back() == 2 * m + 2,
                  "({3," + std::to_string(m) + "};4) minimum order 2m+2");
    }
    for (int m = 4; m <= 13; ++m) {
        auto cert = certify(families::family_D(m), CageParams::make_biregular(3, m, 4));
        c.require(cert.status == CertStatus::meets_exact_cage_order,
                  "D(" + std::to_string(m) + ") certifies");
    }
    auto z3 = certify(families::family_Z(3), CageParams::make_biregular(3, 14, 4));
    c.require(z3.status == CertStatus::meets_exact_cage_order && z3.order == 29 &&
                  girth4_refined_lower(14) == 29,
              "Z(3) certifies at order 29");
}

void criterion6(Criterion& c) {
    for (int m = 3; m <= 8; ++m)
        for (int g = 3; g <= 10; ++g) {
            long long o_order = static_cast<long long>(families::family_O(m, g).order());
            c.require(o_order == chartrand_2m_exact(m, g),
                      "O(" + std::to_string(m) + "," + std::to_string(g) + ") order");
            if (m % 2 == 0) {
                long long f_order = families::family_F_cycles(m, g).order();
                if (g % 2 == 1)
                    c.require(f_order == chartrand_2m_exact(m, g),
                              "F_cycles(" + std::to_string(m) + "," + std::to_string(g) +
                                  ") order");
            }
        }
    auto opt = fast_options();
    struct Case {
        int m, g;
        bool with_f;
    };
    for (auto [m, g, with_f] : {Case{3, 6, false}, {4, 6, false}, {3, 7, false}, {4, 7, true}}) {
        long long order = chartrand_2m_exact(m, g);
        auto out = min_order(CageParams::make_biregular(2, m, g), static_cast<int>(order), opt);
        c.require(!out.graphs.empty() && out.orders_scanned.back() == order,
                  "({2," + std::to_string(m) + "};" + std::to_string(g) + ") minimum order");
        std::vector<SimpleGraph> expected{families::family_O(m, g)};
        if (with_f) expected.push_back(families::family_F_cycles(m, g));
        c.require(verify_uniqueness(CageParams::make_biregular(2, m, g), expected, opt),
                  "({2," + std::to_string(m) + "};" + std::to_string(g) + ") cage list");
    }
    for (int m : {4, 5}) {
        auto cert = certify(families::family_P(m), CageParams::make_biregular(3, m, 5));
        c.require(cert.status == CertStatus::within_bounds && cert.lower == 3 * m + 11 &&
                      cert.upper == 6 * m + 2,
                  "P(" + std::to_string(m) + ") within bounds");
    }
}

void criterion7(Criterion& c) {
    try {
        auto tables = reproduce_tables();
        c.require(tables.size() == 5, "five table groups");
    } catch (const std::exception& e) {
        c.require(false, std::string("table mismatch: ") + e.what());
    }
}

void criterion8(Criterion& c) {
    // (a) link outerplanarity and intersection-forest at every vertex of
    // every family instance, exactly as stated. The forest half is known to
    // fail on cycle bouquets (windmill, F_cycles, the odd double windmill's
    // hubs): >= 3 cycle pieces through one shared vertex always pairwise
    // intersect there, so the intersection graph contains a triangle under
    // every embedding. Reported honestly below.
    std::vector<std::pair<std::string, SimpleGraph>> instances;
    auto add = [&instances](const std::string& name, SimpleGraph g) {
        instances.emplace_back(name, std::move(g));
    };
    for (int l = 2; l <= 10; ++l) add("windmill(" + std::to_string(l) + ")", families::windmill(l));
    for (int a = 2; a <= 10; ++a) add("pinwheel(" + std::to_string(a) + ")", families::pinwheel(a));
    for (int m = 3; m <= 12; ++m) add("wheel(" + std::to_string(m) + ")", families::wheel(m));
    for (int r = 3; r <= 12; ++r) add("biwheel(" + std::to_string(r) + ")", families::biwheel(r));
    for (int m = 5; m <= 11; m += 2)
        add("double_windmill(" + std::to_string(m) + ")", families::double_windmill(m));
    for (int m = 6; m <= 10; ++m) add("I(" + std::to_string(m) + ")", families::family_I(m));
    for (int m = 4; m <= 12; ++m) add("D(" + std::to_string(m) + ")", families::family_D(m));
    for (int k = 3; k <= 5; ++k) add("Z(" + std::to_string(k) + ")", families::family_Z(k));
    for (int m = 15; m <= 25; ++m)
        add("Z_general(" + std::to_string(m) + ")", families::family_Z_general(m));
    for (int m = 4; m <= 8; ++m) add("P(" + std::to_string(m) + ")", families::family_P(m));
    for (int m = 3; m <= 8; ++m)
        for (int g = 3; g <= 10; ++g) {
            add("O(" + std::to_string(m) + "," + std::to_string(g) + ")", families::family_O(m, g));
            if (m % 2 == 0)
                add("F_cycles(" + std::to_string(m) + "," + std::to_string(g) + ")",
                    families::family_F_cycles(m, g));
        }
    for (int m = 3; m <= 12; ++m) add("K2m(" + std::to_string(m) + ")", families::k2m(m));
    for (auto name : {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"})
        add(name, families::platonic(name));

    int forest_failures = 0;
    std::string first_failure;
    for (const auto& [name, g] : instances) {
        auto emb = test_planarity(g);
        c.require(emb.has_value(), name + ": planar");
        if (!emb) continue;
        for (int x = 0; x < g.order(); ++x) {
            SimpleGraph lk = link(g, *emb, x);
            c.require(is_outerplanar(lk), name + ": link outerplanar at vertex " +
                                              std::to_string(x));
            c.require(lk.order() >= g.degree(x),
                      name + ": link size at vertex " + std::to_string(x));
            auto d = decompose_link(lk);
            if (!is_forest(d.intersection)) {
                ++forest_failures;
                if (first_failure.empty())
                    first_failure = name + " vertex " + std::to_string(x);
            }
        }
    }
    if (forest_failures > 0) {
        c.require(false, "intersection-forest fails at " + std::to_string(forest_failures) +
                             " vertices (first: " + first_failure +
                             "); cycle bouquets make this unattainable for any embedding");
        c.note = "forest sub-check is unattainable as stated; see the pinned bouquet "
                 "counterexamples in the unit tests";
    }

    // (b) exhaustive outerplanar degree-2 pair audit, n <= 9
    auto outerplanar_classes =
        oracles::enumerate_hereditary(9, [](const SimpleGraph& g) { return is_outerplanar(g); });
    int audited = 0;
    for (int n = 4; n <= 9; ++n) {
        for (const auto& g : outerplanar_classes[n]) {
            bool min2 = true;
            for (int v = 0; v < n && min2; ++v) min2 = g.degree(v) >= 2;
            if (!min2) continue;
            auto [u, v] = outerplanar_degree2_pair(g);
            c.require(g.degree(u) == 2 && g.degree(v) == 2 && !g.has_edge(u, v),
                      "degree-2 pair on an outerplanar graph of order " + std::to_string(n));
            ++audited;
        }
    }
    c.require(audited > 500, "outerplanar audit coverage");

    // (c) exhaustive trichotomy audit, n <= 8
    auto planar_classes =
        oracles::enumerate_hereditary(8, [](const SimpleGraph& g) { return is_planar(g); });
    for (int n = 4; n <= 8; ++n) {
        const int m = n - 1;
        if (m < 3) continue;
        for (const auto& g : planar_classes[n]) {
            int maxdeg = 0, count = 0;
            for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
            if (maxdeg != m) continue;
            for (int v = 0; v < n; ++v) count += (g.degree(v) == m);
            if (count >= 3)
                c.require(m == 3 || m == 4,
                          "trichotomy: unexpected degree-m count on order " + std::to_string(n));
        }
    }
}

void criterion9(Criterion& c) {
    // enumerate vs brute force over all labeled graphs, n <= 7
    oracles::MinorPlanarityOracle planarity_oracle;
    std::vector<CageParams> queries;
    for (int g = 3; g <= 5; ++g)
        for (int r = 2; r <= 5; ++r)
            for (int m = r + 1; m <= 6; ++m)
                if (biregular_feasible(r, m, g))
                    queries.push_back(CageParams::make_biregular(r, m, g));
    for (int m = 3; m <= 6; ++m) {
        queries.push_back(CageParams::make_biregular(2, m, 6));
        queries.push_back(CageParams::make_biregular(2, m, 7));
    }
    queries.push_back(CageParams::make_regular(2, 4));
    queries.push_back(CageParams::make_regular(3, 3));
    queries.push_back(CageParams::make_regular(3, 4));

    auto opt = fast_options();
    for (const auto& q : queries) {
        for (int n = 3; n <= 7; ++n) {
            std::set<std::string> brute;
            const uint64_t limit = uint64_t{1} << oracles::pair_count(n);
            for (uint64_t mask = 0; mask < limit; ++mask) {
                SimpleGraph g = oracles::graph_from_pair_mask(n, mask);
                bool ok = true;
                bool saw_r = false, saw_m = false;
                for (int v = 0; v < n && ok; ++v) {
                    int d = g.degree(v);
                    saw_r |= (d == q.r);
                    saw_m |= (d == q.m);
                    ok = (d == q.r || d == q.m);
                }
                if (!ok || (!q.regular && !(saw_r && saw_m))) continue;
                if (!is_connected(g)) continue;
                if (oracles::girth_by_cycle_enumeration(g) != q.g) continue;
                if (!planarity_oracle.is_planar(g)) continue;
                brute.insert(canonical_form(g).bytes);
            }
            std::set<std::string> engine;
            if (q.regular || !feasible_degree_m_counts(q.r, q.m, q.g, n).empty())
                engine = forms_of(enumerate_order(q, n, opt));
            c.require(engine == brute,
                      "enumerate vs brute force " + q.to_string() + " n=" + std::to_string(n));
        }
    }

    // canonical forms vs the permutation oracle, n <= 7
    const int counts[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) {
        std::map<std::string, SimpleGraph> reps;
        const uint64_t limit = uint64_t{1} << oracles::pair_count(n);
        for (uint64_t mask = 0; mask < limit; ++mask) {
            SimpleGraph g = oracles::graph_from_pair_mask(n, mask);
            auto [it, fresh] = reps.emplace(canonical_form(g).bytes, g);
            if (!fresh && n <= 6)
                c.require(oracles::isomorphic_by_permutation(g, it->second),
                          "same form implies isomorphic, n=" + std::to_string(n));
        }
        c.require(static_cast<int>(reps.size()) == counts[n],
                  "class count on " + std::to_string(n) + " vertices");
        // distinct forms must be non-isomorphic; the permutation oracle needs
        // checking only where the cheap invariants agree
        std::vector<const SimpleGraph*> by_degseq;
        std::map<std::vector<int>, std::vector<const SimpleGraph*>> grouped;
        for (const auto& [form, g] : reps) {
            std::vector<int> seq;
            for (int v = 0; v < n; ++v) seq.push_back(g.degree(v));
            std::sort(seq.begin(), seq.end());
            grouped[seq].push_back(&g);
        }
        for (const auto& [seq, group] : grouped)
            for (size_t i = 0; i < group.size(); ++i)
                for (size_t j = i + 1; j < group.size(); ++j)
                    c.require(!oracles::isomorphic_by_permutation(*group[i], *group[j]),
                              "distinct forms non-isomorphic, n=" + std::to_string(n));
    }
}

void criterion10(Criterion& c, const std::string& cli) {
    // stdout must be byte-identical across 1, 2 and 8 worker threads for the
    // criteria 3-5 query set
    std::vector<std::string> queries = {
        "search 5 6 3 --n 13",  "search 5 7 3 --n 14",  "search 2 6 3 --max-n 7",
        "search 2 9 3 --max-n 10", "search 3 8 3 --max-n 9", "search 3 9 3 --max-n 10",
        "search 4 8 3 --max-n 10", "search 2 7 4 --max-n 9", "search 3 4 4 --max-n 12",
        "search 3 5 4 --max-n 12",
    };
    for (const auto& q : queries) {
        std::array<std::string, 3> outputs;
        int t = 0;
        for (int threads : {1, 2, 8}) {
            std::string cmd = cli + " " + q + " --threads " + std::to_string(threads) +
                              " 2>/dev/null";
            std::string out;
            std::array<char, 4096> buf{};
            FILE* pipe = popen(cmd.c_str(), "r");
            if (!pipe) {
                c.require(false, "popen failed");
                return;
            }
            while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
            int status = pclose(pipe);
            c.require(WEXITSTATUS(status) == 0, q + ": exit code");
            outputs[t++] = std::move(out);
        }
        c.require(outputs[0] == outputs[1] && outputs[1] == outputs[2],
                  q + ": byte-identical across thread counts");
        c.require(!outputs[0].empty(), q + ": produced output");
    }
}

}  // namespace

int main(int argc, char** argv) {
    bool long_run = false;
    int only = 0;  // --criterion N runs a single criterion
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long-run") == 0) long_run = true;
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    }

    std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"platonic verification", [](Criterion& c) { criterion1(c); }},
        {"regular minimality by search", [&](Criterion& c) { criterion2(c, long_run); }},
        {"({5,6};3) and ({5,7};3) non-existence", [](Criterion& c) { criterion3(c); }},
        {"girth-3 tables", [](Criterion& c) { criterion4(c); }},
        {"girth-4", [](Criterion& c) { criterion5(c); }},
        {"girth-5 and >=6", [](Criterion& c) { criterion6(c); }},
        {"bounds engine", [](Criterion& c) { criterion7(c); }},
        {"link and degree property suites", [](Criterion& c) { criterion8(c); }},
        {"oracle equivalence", [](Criterion& c) { criterion9(c); }},
        {"determinism", [](Criterion& c) { criterion10(c, PLANCAGE_CLI_PATH); }},
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        if (only > 0 && static_cast<int>(i) + 1 != only) continue;
        Criterion c;
        c.number = static_cast<int>(i) + 1;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d (%s): %s  [%.1fs]\n", c.number, criteria[i].first.c_str(),
                    c.pass ? "PASS" : "FAIL", secs);
        for (const auto& f : c.failures) std::printf("    - %s\n", f.c_str());
        if (!c.note.empty()) std::printf("    note: %s\n", c.note.c_str());
        if (!c.pass) ++failed;
        std::fflush(stdout);
    }
    if (failed > 0) std::printf("%d criterion(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
