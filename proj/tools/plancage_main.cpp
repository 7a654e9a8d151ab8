// Command-line surface of the planar cage toolkit: construct the graph
// families, evaluate bounds and tables, certify graphs against a
// prescription, run exhaustive searches, and emit drawings.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "plancage/bounds.hpp"
#include "plancage/draw.hpp"
#include "plancage/families.hpp"
#include "plancage/graph6.hpp"
#include "plancage/planarity.hpp"
#include "plancage/search.hpp"
#include "plancage/verify.hpp"

namespace {

using namespace plancage;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

SimpleGraph build_family(const std::string& family, const std::vector<int>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family " + family + " takes " + std::to_string(k) +
                                        " integer parameter(s)");
    };
    if (family == "windmill") { need(1); return families::windmill(params[0]); }
    if (family == "pinwheel") { need(1); return families::pinwheel(params[0]); }
    if (family == "wheel") { need(1); return families::wheel(params[0]); }
    if (family == "biwheel") { need(1); return families::biwheel(params[0]); }
    if (family == "double_windmill") { need(1); return families::double_windmill(params[0]); }
    if (family == "I") { need(1); return families::family_I(params[0]); }
    if (family == "D") { need(1); return families::family_D(params[0]); }
    if (family == "F") { need(0); return families::gadget_F(); }
    if (family == "E4") { need(0); return families::gadget_E4(); }
    if (family == "Z") { need(1); return families::family_Z(params[0]); }
    if (family == "Z_general") { need(1); return families::family_Z_general(params[0]); }
    if (family == "P") { need(1); return families::family_P(params[0]); }
    if (family == "O") { need(2); return families::family_O(params[0], params[1]); }
    if (family == "F_cycles") { need(2); return families::family_F_cycles(params[0], params[1]); }
    if (family == "K2m") { need(1); return families::k2m(params[0]); }
    throw std::invalid_argument("unknown family: " + family);
}

SimpleGraph build_named(const std::vector<std::string>& args) {
    if (args.empty()) throw std::invalid_argument("missing family name");
    if (args[0] == "platonic") {
        if (args.size() != 2) throw std::invalid_argument("platonic takes a solid name");
        return families::platonic(args[1]);
    }
    std::vector<int> params;
    for (size_t i = 1; i < args.size(); ++i) params.push_back(std::stoi(args[i]));
    return build_family(args[0], params);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SimpleGraph parse_graph(const std::string& raw) {
    // edge lists start with the vertex count; graph6 bytes are >= '?' (63)
    size_t at = raw.find_first_not_of(" \t\r\n");
    if (at == std::string::npos) throw ParseError("empty input");
    if (std::isdigit(static_cast<unsigned char>(raw[at]))) return decode_edge_list(raw);
    std::string line = raw.substr(at);
    if (auto end = line.find_first_of("\r\n"); end != std::string::npos) line.resize(end);
    return decode_graph6(line);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

std::string render_bounds(int r, int m, int g) {
    std::ostringstream out;
    if (!biregular_feasible(r, m, g)) {
        out << "triplet ({" << r << "," << m << "};" << g << "): infeasible\n";
        if (g == 3)
            out << "girth 3 admits 2 <= r <= 5 with r < m\n";
        else if (g == 4 || g == 5)
            out << "girth " << g << " admits 2 <= r <= 3 with r < m\n";
        else
            out << "girth >= 6 admits r = 2 with 2 < m\n";
        return out.str();
    }
    BoundReport rep = known_bounds_table(r, m, g);
    out << "triplet ({" << r << "," << m << "};" << g << ")\n";
    out << "lower: " << rep.lower << "\n";
    out << "upper: " << (rep.upper ? std::to_string(*rep.upper) : "unknown") << "\n";
    out << "exact: " << (rep.exact ? "yes" : "no") << "\n";
    for (const auto& src : rep.provenance)
        out << "  bound " << src.value << " from " << src.source << "\n";
    return out.str();
}

int run_search(int r, int m, int g, int fixed_n, int max_n, int threads,
               const std::string& checkpoint) {
    CageParams params = CageParams::make_biregular(r, m, g);
    SearchOptions opt;
    opt.threads = threads;
    opt.checkpoint_path = checkpoint;
    SearchOutcome outcome = fixed_n > 0 ? enumerate_order(params, fixed_n, opt)
                                        : min_order(params, max_n, opt);
    std::cout << "query: " << params.to_string() << "\n";
    std::cout << "orders scanned:";
    for (int n : outcome.orders_scanned) std::cout << " " << n;
    std::cout << "\n";
    if (fixed_n <= 0) {
        if (outcome.graphs.empty())
            std::cout << "minimum order: not found up to " << max_n << "\n";
        else
            std::cout << "minimum order: " << outcome.orders_scanned.back() << "\n";
    }
    std::cout << "exhaustive: " << (outcome.exhaustive ? "yes" : "no") << "\n";
    std::cout << "graphs found: " << outcome.graphs.size() << "\n";
    for (const auto& g6 : outcome.graphs) std::cout << g6 << "\n";
    std::cerr << "elapsed: " << outcome.stats.elapsed_sec << "s, classes expanded: "
              << outcome.stats.classes_expanded << ", widest level: "
              << outcome.stats.widest_level_size << " classes at n=" << outcome.stats.widest_level
              << "\n";
    return outcome.exhaustive ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar cage toolkit"};
    app.require_subcommand(1);

    // construct
    std::vector<std::string> construct_args;
    std::string format = "graph6", out_path;
    auto* construct = app.add_subcommand("construct", "build a graph family");
    construct->add_option("family", construct_args, "family name and integer parameters")
        ->required()
        ->expected(-1);
    construct->add_option("--format", format, "graph6|edgelist|dot|svg");
    construct->add_option("--out", out_path, "output file (default stdout)");

    // bounds
    int br = 0, bm = 0, bg = 0;
    auto* boundscmd = app.add_subcommand("bounds", "bounds for one triplet");
    boundscmd->add_option("r", br)->required();
    boundscmd->add_option("m", bm)->required();
    boundscmd->add_option("g", bg)->required();

    // table
    int table_girth = 0;
    auto* tablecmd = app.add_subcommand("table", "render a bounds table (girth 3, 4, 5, or 6)");
    tablecmd->add_option("girth", table_girth)->required();

    // check
    std::string check_path;
    int cr = 0, cm = 0, cg = 0;
    auto* checkcmd = app.add_subcommand("check", "certify a graph file against a prescription");
    checkcmd->add_option("path", check_path, "graph6 or edge-list file, - for stdin")->required();
    checkcmd->add_option("r", cr)->required();
    checkcmd->add_option("m", cm)->required();
    checkcmd->add_option("g", cg)->required();

    // search
    int sr = 0, sm = 0, sg = 0, s_n = 0, s_maxn = 0, s_threads = 1;
    std::string s_checkpoint;
    auto* searchcmd = app.add_subcommand("search", "exhaustive isomorph-free search");
    searchcmd->add_option("r", sr)->required();
    searchcmd->add_option("m", sm)->required();
    searchcmd->add_option("g", sg)->required();
    auto* optn = searchcmd->add_option("--n", s_n, "enumerate at exactly this order");
    auto* optmax = searchcmd->add_option("--max-n", s_maxn, "scan orders up to this cap");
    searchcmd->add_option("--threads", s_threads, "worker threads");
    searchcmd->add_option("--checkpoint", s_checkpoint, "checkpoint file for resume");
    optn->excludes(optmax);

    // draw
    std::vector<std::string> draw_args;
    auto* drawcmd = app.add_subcommand("draw", "straight-line SVG drawing");
    drawcmd->add_option("input", draw_args,
                        "graph file and output.svg, or: family <name> <params...> output.svg")
        ->required()
        ->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (construct->parsed()) {
            SimpleGraph g = build_named(construct_args);
            if (format == "graph6") {
                emit(encode_graph6(g) + "\n", out_path);
            } else if (format == "edgelist") {
                emit(encode_edge_list(g), out_path);
            } else if (format == "dot") {
                emit(encode_dot(g), out_path);
            } else if (format == "svg") {
                Layout layout = planar_layout(g);
                if (count_proper_crossings(g, layout) > 0)
                    throw std::runtime_error("layout produced crossings");
                emit(to_svg(g, layout), out_path);
            } else {
                throw std::invalid_argument("unknown format: " + format);
            }
            return 0;
        }
        if (boundscmd->parsed()) {
            std::cout << render_bounds(br, bm, bg);
            return 0;
        }
        if (tablecmd->parsed()) {
            std::cout << render_table(table_girth);
            return 0;
        }
        if (checkcmd->parsed()) {
            SimpleGraph g = parse_graph(read_input(check_path));
            Certificate cert = certify(g, CageParams::make_biregular(cr, cm, cg));
            std::cout << cert.to_text();
            return cert.status == CertStatus::violates ? kExitViolation : 0;
        }
        if (searchcmd->parsed()) {
            if (s_n <= 0 && s_maxn <= 0)
                throw std::invalid_argument("search needs --n or --max-n");
            return run_search(sr, sm, sg, s_n, s_maxn, s_threads, s_checkpoint);
        }
        if (drawcmd->parsed()) {
            if (draw_args.size() < 2) throw std::invalid_argument("draw needs input and output.svg");
            std::string svg_path = draw_args.back();
            draw_args.pop_back();
            SimpleGraph g = (draw_args[0] == "family")
                                ? build_named({draw_args.begin() + 1, draw_args.end()})
                                : parse_graph(read_input(draw_args[0]));
            Layout layout = planar_layout(g);
            emit(to_svg(g, layout), svg_path);
            if (count_proper_crossings(g, layout) > 0) {
                std::cerr << "warning: drawing has crossing segments\n";
                return kExitViolation;
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
