#include "plancage/draw.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "plancage/planarity.hpp"

namespace plancage {

namespace {

std::vector<int> pick_outer_face(const std::vector<std::vector<int>>& walks) {
    // longest facial walk; ties broken by the lexicographically smallest walk
    int best = 0;
    for (size_t i = 1; i < walks.size(); ++i) {
        if (walks[i].size() > walks[best].size() ||
            (walks[i].size() == walks[best].size() && walks[i] < walks[best]))
            best = static_cast<int>(i);
    }
    return walks[best];
}

}  // namespace

Layout planar_layout(const SimpleGraph& g) {
    const int n = g.order();
    if (!is_connected(g)) throw std::invalid_argument("planar_layout: input must be connected");
    auto emb = test_planarity(g);
    if (!emb) throw std::invalid_argument("planar_layout: input is not planar");
    if (n == 1) return Layout{{{0.5, 0.5}}};
    if (n == 2) return Layout{{{0.25, 0.5}, {0.75, 0.5}}};

    auto walks = faces(*emb);
    std::vector<int> outer = pick_outer_face(walks);

    // nodes: original vertices plus one auxiliary node per inner face,
    // connected to every occurrence of the face walk (multiplicity = weight)
    int total = n;
    std::vector<std::map<int, double>> wadj(static_cast<size_t>(n));
    auto add_weight = [&wadj](int a, int b, double w) {
        wadj[a][b] += w;
        wadj[b][a] += w;
    };
    for (auto [u, v] : g.edges()) add_weight(u, v, 1.0);
    for (const auto& walk : walks) {
        if (walk == outer || walk.empty()) continue;
        int aux = total++;
        wadj.emplace_back();
        for (int v : walk) add_weight(aux, v, 1.0);
    }

    // pin the outer walk to a regular polygon; a vertex occurring several
    // times sits at the centroid of its slots
    std::vector<std::array<double, 2>> pos(static_cast<size_t>(total), {0.5, 0.5});
    std::vector<int8_t> pinned(static_cast<size_t>(total), 0);
    {
        std::vector<std::array<double, 2>> slot_sum(static_cast<size_t>(n), {0.0, 0.0});
        std::vector<int> slot_cnt(static_cast<size_t>(n), 0);
        const int L = static_cast<int>(outer.size());
        for (int i = 0; i < L; ++i) {
            double angle = 2.0 * M_PI * i / L;
            slot_sum[outer[i]][0] += 0.5 + 0.5 * std::cos(angle);
            slot_sum[outer[i]][1] += 0.5 + 0.5 * std::sin(angle);
            slot_cnt[outer[i]] += 1;
        }
        for (int v = 0; v < n; ++v) {
            if (slot_cnt[v] == 0) continue;
            pos[v] = {slot_sum[v][0] / slot_cnt[v], slot_sum[v][1] / slot_cnt[v]};
            pinned[v] = 1;
        }
    }

    // every free node sits at the weighted average of its neighbors: solve
    // the barycentric system exactly (the node count is tiny)
    std::vector<int> free_id(static_cast<size_t>(total), -1);
    std::vector<int> free_nodes;
    for (int v = 0; v < total; ++v) {
        if (!pinned[v] && !wadj[v].empty()) {
            free_id[v] = static_cast<int>(free_nodes.size());
            free_nodes.push_back(v);
        }
    }
    const int k = static_cast<int>(free_nodes.size());
    if (k > 0) {
        std::vector<std::vector<double>> a(static_cast<size_t>(k),
                                           std::vector<double>(static_cast<size_t>(k) + 2, 0.0));
        for (int i = 0; i < k; ++i) {
            int v = free_nodes[i];
            double total_w = 0.0;
            for (auto [u, w] : wadj[v]) {
                total_w += w;
                if (free_id[u] >= 0)
                    a[i][free_id[u]] -= w;
                else {
                    a[i][k] += w * pos[u][0];
                    a[i][k + 1] += w * pos[u][1];
                }
            }
            a[i][i] += total_w;
        }
        // Gaussian elimination with partial pivoting, two right-hand sides
        for (int col = 0; col < k; ++col) {
            int pivot = col;
            for (int row = col + 1; row < k; ++row)
                if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
            std::swap(a[col], a[pivot]);
            for (int row = col + 1; row < k; ++row) {
                double f = a[row][col] / a[col][col];
                if (f == 0.0) continue;
                for (int c = col; c < k + 2; ++c) a[row][c] -= f * a[col][c];
            }
        }
        for (int row = k - 1; row >= 0; --row) {
            for (int c = row + 1; c < k; ++c) {
                a[row][k] -= a[row][c] * a[c][k];
                a[row][k + 1] -= a[row][c] * a[c][k + 1];
            }
            a[row][k] /= a[row][row];
            a[row][k + 1] /= a[row][row];
        }
        for (int i = 0; i < k; ++i) pos[free_nodes[i]] = {a[i][k], a[i][k + 1]};
    }

    Layout out;
    out.pos.assign(pos.begin(), pos.begin() + n);
    return out;
}

std::string to_svg(const SimpleGraph& g, const Layout& layout) {
    if (static_cast<int>(layout.pos.size()) != g.order())
        throw std::invalid_argument("to_svg: layout size mismatch");
    const double size = 800.0, margin = 40.0;
    auto sx = [&](double x) { return margin + x * (size - 2 * margin); };
    auto sy = [&](double y) { return margin + (1.0 - y) * (size - 2 * margin); };
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
        << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    for (auto [u, v] : g.edges()) {
        out << "  <line x1=\"" << sx(layout.pos[u][0]) << "\" y1=\"" << sy(layout.pos[u][1])
            << "\" x2=\"" << sx(layout.pos[v][0]) << "\" y2=\"" << sy(layout.pos[v][1])
            << "\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
    }
    for (int v = 0; v < g.order(); ++v) {
        out << "  <circle cx=\"" << sx(layout.pos[v][0]) << "\" cy=\"" << sy(layout.pos[v][1])
            << "\" r=\"4\" fill=\"black\"/>\n";
        out << "  <text x=\"" << sx(layout.pos[v][0]) + 6 << "\" y=\"" << sy(layout.pos[v][1]) - 6
            << "\" font-size=\"11\">" << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

namespace {

double norm(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

double cross(const std::array<double, 2>& o, const std::array<double, 2>& a,
             const std::array<double, 2>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// orientation sign with tolerance on the sine of the angle, so tightly
// squeezed but valid regions are not misread as degenerate
int sign_rel(double x, double scale, double eps) {
    double tol = eps * std::max(scale, 1e-300);
    return x > tol ? 1 : (x < -tol ? -1 : 0);
}

bool on_segment(const std::array<double, 2>& p, const std::array<double, 2>& q,
                const std::array<double, 2>& x, double eps) {
    return x[0] >= std::min(p[0], q[0]) - eps && x[0] <= std::max(p[0], q[0]) + eps &&
           x[1] >= std::min(p[1], q[1]) - eps && x[1] <= std::max(p[1], q[1]) + eps;
}

}  // namespace

int count_proper_crossings(const SimpleGraph& g, const Layout& layout, double eps) {
    auto edges = g.edges();
    int crossings = 0;
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            const auto &pa = layout.pos[a], &pb = layout.pos[b], &pc = layout.pos[c],
                       &pd = layout.pos[d];
            const double lab = norm(pa, pb), lcd = norm(pc, pd);
            int d1 = sign_rel(cross(pa, pb, pc), lab * norm(pa, pc), eps);
            int d2 = sign_rel(cross(pa, pb, pd), lab * norm(pa, pd), eps);
            int d3 = sign_rel(cross(pc, pd, pa), lcd * norm(pc, pa), eps);
            int d4 = sign_rel(cross(pc, pd, pb), lcd * norm(pc, pb), eps);
            bool hit = false;
            if (d1 * d2 < 0 && d3 * d4 < 0) hit = true;
            // collinear overlap or an endpoint inside another edge
            if (!hit && d1 == 0 && on_segment(pa, pb, pc, eps)) hit = true;
            if (!hit && d2 == 0 && on_segment(pa, pb, pd, eps)) hit = true;
            if (!hit && d3 == 0 && on_segment(pc, pd, pa, eps)) hit = true;
            if (!hit && d4 == 0 && on_segment(pc, pd, pb, eps)) hit = true;
            if (hit) ++crossings;
        }
    }
    return crossings;
}

}  // namespace plancage
