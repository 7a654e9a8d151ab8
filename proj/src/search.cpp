#include "plancage/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "plancage/canonical.hpp"
#include "plancage/graph6.hpp"
#include "plancage/planarity.hpp"

namespace plancage {

namespace {

struct QuerySpec {
    int r = 0, m = 0, g = 0, n = 0;
    bool regular = false;
    bool connected = true;
    int x_max = 0;  // largest feasible count of degree-m vertices (biregular)
    long long e_min_t = 0, e_max_t = 0;
    int cap = 0;  // global degree cap
};

// minimum edges still missing at vertex of degree d
int needed_of(const QuerySpec& q, int d) {
    if (q.regular) return q.r - d;
    if (d > q.r) return q.m - d;
    return q.r - d;
}

struct Scratch {
    uint64_t adj[kMaxVertices];
    int deg[kMaxVertices];
    uint8_t dist[kMaxVertices][kMaxVertices];
    std::string canon;
};

void decode_into(const std::string& form, Scratch& s, int& j) {
    j = static_cast<unsigned char>(form[0]);
    for (int v = 0; v < j; ++v) {
        s.adj[v] = 0;
        s.deg[v] = 0;
    }
    int bit = 0;
    for (int col = 1; col < j; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = static_cast<unsigned char>(form[1 + bit / 8]);
            if ((byte >> (7 - bit % 8)) & 1) {
                s.adj[row] |= uint64_t{1} << col;
                s.adj[col] |= uint64_t{1} << row;
            }
        }
    }
    for (int v = 0; v < j; ++v) s.deg[v] = std::popcount(s.adj[v]);
}

void parent_distances(Scratch& s, int j) {
    for (int src = 0; src < j; ++src) {
        for (int v = 0; v < j; ++v) s.dist[src][v] = 255;
        s.dist[src][src] = 0;
        uint64_t seen = uint64_t{1} << src, frontier = seen;
        uint8_t d = 0;
        while (frontier) {
            uint64_t next = 0;
            for (uint64_t mm = frontier; mm; mm &= mm - 1) next |= s.adj[std::countr_zero(mm)];
            next &= ~seen;
            ++d;
            for (uint64_t mm = next; mm; mm &= mm - 1) s.dist[src][std::countr_zero(mm)] = d;
            seen |= next;
            frontier = next;
        }
    }
}

struct WorkerOut {
    std::unordered_set<std::string> forms;
    uint64_t children_accepted = 0;
    uint64_t children_tested = 0;
    uint64_t planarity_calls = 0;
};

// Child viability for partial graphs (j1 = j + 1 vertices already placed,
// fprime vertices still to come).
bool partial_viable(const QuerySpec& q, Scratch& s, int j1, int committed) {
    const int fprime = q.n - j1;
    long long sum_needed = 0;
    long long t_cap = 0;  // capacity of old vertices for future edges
    const int rem_x = q.regular ? 0 : std::max(0, q.x_max - committed);
    for (int v = 0; v < j1; ++v) {
        const int need = std::max(0, needed_of(q, s.deg[v]));
        if (need > fprime) return false;
        sum_needed += need;
        int capmax = q.regular ? q.r : ((s.deg[v] > q.r || rem_x > 0) ? q.m : q.r);
        t_cap += std::min(capmax - s.deg[v], fprime);
    }
    const long long fut_deg_cap =
        q.regular ? static_cast<long long>(fprime) * q.r
                  : static_cast<long long>(std::min(fprime, rem_x)) * q.m +
                        static_cast<long long>(fprime - std::min(fprime, rem_x)) * q.r;
    if (sum_needed > fut_deg_cap) return false;

    long long e = 0;
    for (int v = 0; v < j1; ++v) e += s.deg[v];
    e /= 2;
    const long long pairs = static_cast<long long>(fprime) * (fprime - 1) / 2;
    const long long min_add =
        std::max(sum_needed, static_cast<long long>(fprime) * q.r - pairs);
    if (e + min_add > q.e_max_t) return false;
    const long long max_add = std::min(t_cap, fut_deg_cap) + std::min(pairs, fut_deg_cap / 2);
    if (e + max_add < q.e_min_t) return false;
    return true;
}

struct Expander {
    const QuerySpec& q;
    Scratch& s;
    WorkerOut& out;
    int j = 0;            // parent size
    int f = 0;            // q.n - j: vertices still to add, incl. the new one
    int committed0 = 0;   // committed vertices in the parent

    int scnt = 0;
    uint64_t smask = 0;
    int committed = 0;

    void finalize() {
        ++out.children_tested;
        if (scnt == 0) {
            if (q.connected) return;
        }
        const int j1 = j + 1;
        const int fprime = q.n - j1;
        // the new vertex
        if (fprime == 0) {
            if (q.regular) {
                if (scnt != q.r) return;
            } else {
                if (scnt != q.r && scnt != q.m) return;
                if (scnt == q.m && committed + 1 > q.x_max) return;
            }
        } else {
            if (scnt > q.cap) return;
            int need_new = std::max(0, needed_of(q, scnt));
            if (scnt > q.r && !q.regular) {
                if (committed + 1 > q.x_max) return;
            }
            if (need_new > fprime) return;
        }

        s.adj[j] = smask;
        s.deg[j] = scnt;
        for (uint64_t mm = smask; mm; mm &= mm - 1) s.adj[std::countr_zero(mm)] |= uint64_t{1} << j;
        bool ok = true;
        if (fprime > 0) {
            const int committed_child = committed + ((!q.regular && scnt > q.r) ? 1 : 0);
            ok = partial_viable(q, s, j1, committed_child);
        } else {
            // leaf: exact degrees, both present, exact girth
            int x = 0, y = 0;
            for (int v = 0; v < j1 && ok; ++v) {
                if (s.deg[v] == q.m)
                    ++x;
                else if (s.deg[v] == q.r)
                    ++y;
                else
                    ok = false;
            }
            if (ok && !q.regular) ok = (x >= 1 && y >= 1);
        }
        if (ok) {
            ++out.planarity_calls;
            ok = is_planar_fast(j1, s.adj);
        }
        if (ok && fprime == 0) {
            SimpleGraph leaf(j1);
            for (int u = 0; u < j1; ++u)
                for (uint64_t mm = (u + 1 < 64) ? s.adj[u] >> (u + 1) << (u + 1) : 0; mm;
                     mm &= mm - 1)
                    leaf.add_edge(u, std::countr_zero(mm));
            auto gg = girth(leaf);
            ok = gg.has_value() && *gg == q.g;
            if (ok && !q.connected) {
                // nothing extra: disconnected leaves are acceptable in audit mode
            }
        }
        if (ok) {
            canonical_bytes(j1, s.adj, s.canon);
            out.forms.insert(s.canon);
            ++out.children_accepted;
        }
        for (uint64_t mm = smask; mm; mm &= mm - 1) s.adj[std::countr_zero(mm)] &= ~(uint64_t{1} << j);
    }

    void rec(int v) {
        if (v == j) {
            finalize();
            return;
        }
        const int d = s.deg[v];
        // include v
        bool can_include = true;
        bool commits = false;
        if (q.regular) {
            can_include = d < q.r;
        } else if (d >= q.r) {
            if (d == q.r) {
                commits = true;
                can_include = (committed + 1 + (scnt > q.r ? 1 : 0) <= q.x_max) && (d + 1 <= q.m);
            } else {
                can_include = d + 1 <= q.m;
            }
        }
        if (can_include && scnt + 1 > q.cap) can_include = false;
        if (can_include && q.n - j == 1) {
            // last vertex: old degrees must land exactly on r or m
            can_include = (d + 1 == q.r) || (!q.regular && d + 1 == q.m) ||
                          (q.regular && d + 1 == q.r);
        }
        if (can_include && q.g >= 4) {
            for (uint64_t mm = smask; mm && can_include; mm &= mm - 1)
                can_include = s.dist[v][std::countr_zero(mm)] >= q.g - 2;
        }
        if (can_include) {
            ++s.deg[v];
            smask |= uint64_t{1} << v;
            ++scnt;
            if (commits) ++committed;
            rec(v + 1);
            if (commits) --committed;
            --scnt;
            smask &= ~(uint64_t{1} << v);
            --s.deg[v];
        }
        // exclude v: impossible when every remaining vertex must attach to v
        const int need = std::max(0, needed_of(q, d));
        if (need >= f) return;
        if (q.n - j == 1 && !(d == q.r || (!q.regular && d == q.m))) return;
        rec(v + 1);
    }
};

std::string k1_form() {
    SimpleGraph g(1);
    return canonical_form(g).bytes;
}

struct CheckpointData {
    int level = 0;
    std::vector<std::string> forms;  // canonical bytes
};

std::string checkpoint_signature(const QuerySpec& q) {
    return (q.regular ? "regular " : "biregular ") + std::to_string(q.r) + " " +
           std::to_string(q.m) + " " + std::to_string(q.g) + " n=" + std::to_string(q.n) +
           " connected=" + (q.connected ? "1" : "0");
}

void write_checkpoint(const std::string& path, const QuerySpec& q, int level,
                      const std::vector<std::string>& forms) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
        out << "plancage-checkpoint v1\n" << checkpoint_signature(q) << "\n";
        out << "level " << level << " count " << forms.size() << "\n";
        for (const auto& f : forms) out << encode_graph6(graph_from_canonical_bytes(f)) << "\n";
        out << "end\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot replace checkpoint: " + path);
}

std::optional<CheckpointData> read_checkpoint(const std::string& path, const QuerySpec& q) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != "plancage-checkpoint v1")
        throw std::runtime_error("checkpoint corrupt: bad magic");
    if (!std::getline(in, line)) throw std::runtime_error("checkpoint corrupt: missing query");
    if (line != checkpoint_signature(q)) return std::nullopt;  // other query; ignore
    CheckpointData data;
    size_t count = 0;
    if (!std::getline(in, line) || std::sscanf(line.c_str(), "level %d count %zu", &data.level,
                                               &count) != 2)
        throw std::runtime_error("checkpoint corrupt: bad level header");
    for (size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) throw std::runtime_error("checkpoint corrupt: truncated");
        data.forms.push_back(canonical_form(decode_graph6(line)).bytes);
    }
    if (!std::getline(in, line) || line != "end")
        throw std::runtime_error("checkpoint corrupt: missing trailer");
    return data;
}

SearchOutcome run_enumeration(const QuerySpec& q, const SearchOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchOutcome outcome;
    outcome.params = q.regular ? CageParams::make_regular(q.r, q.g)
                               : CageParams::make_biregular(q.r, q.m, q.g);
    outcome.orders_scanned = {q.n};
    outcome.exhaustive = true;

    std::vector<std::string> level{k1_form()};
    int start = 1;
    if (!opt.checkpoint_path.empty()) {
        if (auto cp = read_checkpoint(opt.checkpoint_path, q); cp && cp->level <= q.n) {
            start = cp->level;
            level = cp->forms;
            std::sort(level.begin(), level.end());
        }
    }

    for (int j = start; j < q.n && !level.empty(); ++j) {
        const int nworkers = std::max(1, std::min<int>(opt.threads, static_cast<int>(level.size())));
        std::vector<WorkerOut> outs(static_cast<size_t>(nworkers));
        std::atomic<size_t> cursor{0};
        auto work = [&](int wid) {
            Scratch s;
            Expander ex{q, s, outs[wid]};
            for (;;) {
                const size_t i = cursor.fetch_add(1);
                if (i >= level.size()) break;
                int pj = 0;
                decode_into(level[i], s, pj);
                if (q.g >= 4) parent_distances(s, pj);
                ex.j = pj;
                ex.f = q.n - pj;
                ex.scnt = 0;
                ex.smask = 0;
                ex.committed = 0;
                if (!q.regular)
                    for (int v = 0; v < pj; ++v) ex.committed += (s.deg[v] > q.r);
                ex.rec(0);
            }
        };
        if (nworkers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < nworkers; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
        outcome.stats.classes_expanded += level.size();
        std::unordered_set<std::string> merged;
        for (auto& w : outs) {
            outcome.stats.children_accepted += w.children_accepted;
            outcome.stats.children_tested += w.children_tested;
            outcome.stats.planarity_calls += w.planarity_calls;
            if (merged.empty())
                merged = std::move(w.forms);
            else
                merged.insert(w.forms.begin(), w.forms.end());
        }
        level.assign(merged.begin(), merged.end());
        std::sort(level.begin(), level.end());
        if (static_cast<uint64_t>(level.size()) > outcome.stats.widest_level_size) {
            outcome.stats.widest_level_size = level.size();
            outcome.stats.widest_level = j + 1;
        }
        if (!opt.checkpoint_path.empty() && j + 1 < q.n)
            write_checkpoint(opt.checkpoint_path, q, j + 1, level);
    }

    outcome.graphs.reserve(level.size());
    for (const auto& f : level) outcome.graphs.push_back(encode_graph6(graph_from_canonical_bytes(f)));
    outcome.stats.elapsed_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return outcome;
}

QuerySpec make_spec(const CageParams& params, int n, const SearchOptions& opt, bool& infeasible) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("search: size cap exceeded (1 <= n <= 64)");
    QuerySpec q;
    q.r = params.r;
    q.m = params.m;
    q.g = params.g;
    q.n = n;
    q.regular = params.regular;
    q.connected = !opt.allow_disconnected;
    q.cap = params.m;
    infeasible = false;
    if (params.regular) {
        const long long degsum = static_cast<long long>(params.r) * n;
        if (n < params.r + 1 || n < params.g || degsum % 2 != 0 ||
            degsum / 2 > max_edges_planar_girth(n, params.g)) {
            infeasible = true;
            return q;
        }
        q.e_min_t = q.e_max_t = degsum / 2;
        q.x_max = 0;
    } else {
        if (!biregular_feasible(params.r, params.m, params.g))
            throw std::invalid_argument("search: triplet outside the planar feasibility sets");
        auto xs = feasible_degree_m_counts(params.r, params.m, params.g, n);
        if (xs.empty()) {
            infeasible = true;
            return q;
        }
        q.x_max = xs.back();
        q.e_min_t = (static_cast<long long>(n - xs.front()) * params.r +
                     static_cast<long long>(xs.front()) * params.m) /
                    2;
        q.e_max_t = (static_cast<long long>(n - xs.back()) * params.r +
                     static_cast<long long>(xs.back()) * params.m) /
                    2;
    }
    return q;
}

}  // namespace

bool parity_prune(int r, int m, int g, int n) {
    return !feasible_degree_m_counts(r, m, g, n).empty();
}

SearchOutcome enumerate_order(const CageParams& params, int n, const SearchOptions& options) {
    bool infeasible = false;
    QuerySpec q = make_spec(params, n, options, infeasible);
    if (infeasible) {
        SearchOutcome out;
        out.params = params;
        out.orders_scanned = {n};
        out.exhaustive = true;  // ruled out arithmetically
        return out;
    }
    return run_enumeration(q, options);
}

SearchOutcome min_order(const CageParams& params, int n_max, const SearchOptions& options) {
    long long start;
    if (params.regular) {
        start = std::max(params.r + 1, params.g);
    } else {
        start = planar_lower_bound(params.r, params.m, params.g).lower;
    }
    SearchOutcome accum;
    accum.params = params;
    accum.exhaustive = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (long long n = start; n <= n_max; ++n) {
        SearchOutcome step = enumerate_order(params, static_cast<int>(n), options);
        accum.orders_scanned.push_back(static_cast<int>(n));
        accum.stats.classes_expanded += step.stats.classes_expanded;
        accum.stats.children_accepted += step.stats.children_accepted;
        accum.stats.children_tested += step.stats.children_tested;
        accum.stats.planarity_calls += step.stats.planarity_calls;
        if (step.stats.widest_level_size > accum.stats.widest_level_size) {
            accum.stats.widest_level_size = step.stats.widest_level_size;
            accum.stats.widest_level = step.stats.widest_level;
        }
        if (!step.graphs.empty()) {
            accum.graphs = std::move(step.graphs);
            break;
        }
    }
    accum.stats.elapsed_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return accum;
}

bool verify_uniqueness(const CageParams& params, const std::vector<SimpleGraph>& expected,
                       const SearchOptions& options) {
    if (expected.empty()) throw std::invalid_argument("verify_uniqueness: expected set is empty");
    const int n = expected.front().order();
    std::vector<std::string> want;
    for (const auto& g : expected) {
        if (g.order() != n)
            throw std::invalid_argument("verify_uniqueness: expected graphs of mixed order");
        want.push_back(canonical_form(g).bytes);
    }
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());

    SearchOutcome got = enumerate_order(params, n, options);
    if (!got.exhaustive) throw std::runtime_error("verify_uniqueness: search not exhaustive");
    std::vector<std::string> have;
    for (const auto& g6 : got.graphs) have.push_back(canonical_form(decode_graph6(g6)).bytes);
    std::sort(have.begin(), have.end());
    return have == want;
}

}  // namespace plancage
