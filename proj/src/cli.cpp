#include "ribbon/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ribbon/constructions.hpp"
#include "ribbon/flipgraph.hpp"
#include "ribbon/pattern.hpp"
#include "ribbon/render.hpp"
#include "ribbon/solver.hpp"
#include "ribbon/tiles.hpp"

namespace ribbon {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::pair<int, int> parse_axb(const std::string& s, const std::string& what) {
    size_t x = s.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= s.size())
        throw std::invalid_argument(what + ": expected AxB, got '" + s + "'");
    int a = std::stoi(s.substr(0, x));
    int b = std::stoi(s.substr(x + 1));
    if (a < 1 || b < 1) throw std::invalid_argument(what + ": sides must be >= 1");
    return {a, b};
}

void write_output(const std::string& text, const std::string& out_file, std::ostream& out) {
    if (out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_file);
    if (!f) throw std::runtime_error("cannot open output file: " + out_file);
    f << text;
}

void emit_render(const Tiling& t, const std::string& format, const std::string& out_file,
                 std::ostream& out) {
    if (format == "text") write_output(render_text(t), out_file, out);
    else if (format == "svg") write_output(render_svg(t), out_file, out);
    else throw std::invalid_argument("unknown render format '" + format + "' (text|svg)");
}

void print_verdicts(std::ostream& out, const std::vector<TheoremVerdict>& rows, int& disagree) {
    for (const TheoremVerdict& v : rows) {
        out << "CLAIM " << v.claim << " INSTANCE " << v.instance << " PREDICTED "
            << (v.predicted ? "yes" : "no") << " OBSERVED " << (v.observed ? "yes" : "no")
            << " AGREE " << (v.agree() ? "yes" : "no") << '\n';
        if (!v.agree()) ++disagree;
    }
}

void print_pattern_verdict(std::ostream& out, const Tiling& t, const PatternCheck& pc) {
    out << "PATTERN " << (pc.follows ? "yes" : "no") << '\n';
    if (!pc.anchored_at_origin)
        out << "ANCHOR " << pc.anchor.x << ',' << pc.anchor.y << " (parity relative to anchor)\n";
    if (!pc.follows && pc.witness_index >= 0)
        out << "WITNESS " << to_string(t.placements[static_cast<size_t>(pc.witness_index)])
            << " : " << pc.reason << '\n';
}

int run_verify(const std::vector<std::string>& sweeps, int n, int max_side, int k,
               std::ostream& out) {
    int disagree = 0;
    for (const std::string& sweep : sweeps) {
        if (sweep == "thm6") {
            for (int nn : (n > 0 ? std::vector<int>{n} : std::vector<int>{4, 6})) {
                out << "SWEEP thm6 n=" << nn << " max-side=" << max_side << '\n';
                print_verdicts(out, verify_thm6(nn, max_side), disagree);
            }
        } else if (sweep == "cor3") {
            int side = std::min(max_side, 8);
            out << "SWEEP cor3 max-side=" << side << '\n';
            print_verdicts(out, verify_cor3(side), disagree);
        } else if (sweep == "cor4") {
            out << "SWEEP cor4 k=" << k << '\n';
            print_verdicts(out, verify_cor4(k), disagree);
        } else if (sweep == "flip") {
            int nn = n > 0 ? n : 4;
            out << "SWEEP flip n=" << nn << " max-side=" << max_side << '\n';
            print_verdicts(out, verify_flip(nn, max_side), disagree);
        } else if (sweep == "fixtures") {
            out << "SWEEP fixtures\n";
            print_verdicts(out, verify_fixtures(), disagree);
            out << "NOTE extrarect: finite rectangle surrogate stands in for the "
                   "quadrant-scale construction\n";
        } else {
            throw std::invalid_argument("unknown verify sweep '" + sweep + "'");
        }
    }
    out << "DISAGREE " << disagree << '\n';
    out << "RESULT " << (disagree == 0 ? "pass" : "fail") << '\n';
    return disagree == 0 ? kOk : kNegative;
}

}  // namespace

Region parse_region_spec(const std::string& spec) {
    if (spec.rfind("rect:", 0) == 0) {
        auto [a, b] = parse_axb(spec.substr(5), "region");
        return rect_region(a, b);
    }
    if (!spec.empty() && spec[0] == '@') return read_region_file(spec.substr(1));
    throw std::invalid_argument("region spec must be rect:AxB or @file, got '" + spec + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tiling engine for ribbon L-shaped n-ominoes (translations only)"};
    app.require_subcommand(1);

    std::string region_spec, tiles_spec, render_format, out_file, rect_spec;
    uint64_t cap = 1000000, limit = 100;
    bool all_tilings = false, dump_edges = false;

    auto* solve = app.add_subcommand("solve", "find one tiling of a region");
    solve->add_option("--region", region_spec, "rect:AxB or @file")->required();
    solve->add_option("--tiles", tiles_spec, "tile set spec, e.g. Tn:4, Tn+:6, bars:3")->required();
    solve->add_option("--render", render_format, "also render the tiling (text|svg)");
    solve->add_option("--out", out_file, "write the render to a file");

    auto* count = app.add_subcommand("count", "count tilings exactly (up to --cap)");
    count->add_option("--region", region_spec)->required();
    count->add_option("--tiles", tiles_spec)->required();
    count->add_option("--cap", cap, "counting cap (default 1000000)");

    auto* enumerate = app.add_subcommand("enumerate", "list tilings in deterministic order");
    enumerate->add_option("--region", region_spec)->required();
    enumerate->add_option("--tiles", tiles_spec)->required();
    enumerate->add_option("--limit", limit, "maximum tilings to list (default 100)");
    enumerate->add_option("--render", render_format, "render each tiling (text)");

    auto* checkp = app.add_subcommand("check-pattern",
                                      "check tilings against the rectangular pattern");
    checkp->add_option("--region", region_spec)->required();
    checkp->add_option("--tiles", tiles_spec)->required();
    checkp->add_flag("--all", all_tilings, "check every tiling up to --limit (default: first)");
    checkp->add_option("--limit", limit, "enumeration limit with --all (default 100)");

    auto* flip = app.add_subcommand("flip", "build the flip graph and decide connectivity");
    flip->add_option("--region", region_spec)->required();
    flip->add_option("--tiles", tiles_spec)->required();
    flip->add_option("--limit", limit, "refuse if the tiling count exceeds this (default 100)");
    flip->add_flag("--dump-edges", dump_edges, "print the edge list");

    auto* classify = app.add_subcommand("classify", "rectangle tileability by the classification");
    classify->add_option("--tiles", tiles_spec, "Tn:<even>, Tn+:<even> or bars:k")->required();
    classify->add_option("--rect", rect_spec, "AxB (A = height)")->required();

    int fx_n = 0, fx_extra = 0, fx_k = 3;
    auto* fixture = app.add_subcommand("fixture", "materialize and check a named construction");
    fixture->require_subcommand(1);
    auto* fig2c = fixture->add_subcommand("fig2c", "(3n)x(3n+1) rectangle tiling, n odd");
    fig2c->add_option("--n", fx_n, "odd arm parameter (default 5)");
    auto* fig6b = fixture->add_subcommand("fig6b", "mixed 6x10 tiling breaking the pattern");
    auto* twotiling = fixture->add_subcommand("twotiling", "region with exactly two tilings");
    twotiling->add_option("--n", fx_n, "even arm parameter (default 6)");
    twotiling->add_option("--extra", fx_extra, "extra staircase copies (default 0)");
    auto* kcopy = fixture->add_subcommand("kcopy", "k-copy of the n=4 ribbon L vs Tn+:4");
    kcopy->add_option("--k", fx_k, "scale factor (default 3)");
    for (auto* sub : {fig2c, fig6b, twotiling, kcopy}) {
        sub->add_option("--render", render_format, "render the fixture tiling (text|svg)");
        sub->add_option("--out", out_file, "write the render to a file");
    }

    int vf_n = 0, vf_max_side = 12, vf_k = 3;
    auto* verify = app.add_subcommand("verify", "run verification sweeps");
    verify->require_subcommand(1);
    std::vector<CLI::App*> verify_subs;
    for (const char* name : {"thm6", "cor3", "cor4", "flip", "fixtures", "all"}) {
        auto* sub = verify->add_subcommand(name);
        sub->add_option("--n", vf_n, "arm parameter (thm6/flip)");
        sub->add_option("--max-side", vf_max_side, "sweep bound (default 12; cor3 uses <= 8)");
        sub->add_option("--k", vf_k, "scale for cor4 (odd, default 3)");
        verify_subs.push_back(sub);
    }

    auto* render = app.add_subcommand("render", "render the first tiling of a region");
    render->add_option("--region", region_spec)->required();
    render->add_option("--tiles", tiles_spec)->required();
    render->add_option("--format", render_format, "text|svg")->required();
    render->add_option("--out", out_file, "write to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (solve->parsed()) {
            Region r = parse_region_spec(region_spec);
            TileSet ts = parse_tileset(tiles_spec);
            std::optional<Tiling> t = find_tiling(r, ts);
            out << "TILEABLE " << (t ? "yes" : "no") << '\n';
            if (!t) return kNegative;
            out << "TILING " << to_string(*t) << '\n';
            if (!render_format.empty()) emit_render(*t, render_format, out_file, out);
            return kOk;
        }
        if (count->parsed()) {
            Region r = parse_region_spec(region_spec);
            TileSet ts = parse_tileset(tiles_spec);
            auto [num, stats] = count_tilings(r, ts, cap);
            out << num << '\n';
            if (stats.truncated) {
                err << "error: counting cap " << cap << " exceeded; raise --cap\n";
                return kUsage;
            }
            return num > 0 ? kOk : kNegative;
        }
        if (enumerate->parsed()) {
            Region r = parse_region_spec(region_spec);
            TileSet ts = parse_tileset(tiles_spec);
            EnumerateResult res = enumerate_tilings(r, ts, limit);
            for (const Tiling& t : res.tilings) {
                out << "TILING " << to_string(t) << '\n';
                if (render_format == "text") out << render_text(t);
            }
            out << "COUNT " << res.tilings.size() << '\n';
            out << "TRUNCATED " << (res.truncated ? "yes" : "no") << '\n';
            if (res.truncated) {
                err << "error: enumeration limit " << limit << " exceeded; raise --limit\n";
                return kUsage;
            }
            return res.tilings.empty() ? kNegative : kOk;
        }
        if (checkp->parsed()) {
            Region r = parse_region_spec(region_spec);
            TileSet ts = parse_tileset(tiles_spec);
            std::vector<Tiling> tilings;
            if (all_tilings) {
                EnumerateResult res = enumerate_tilings(r, ts, limit);
                tilings = std::move(res.tilings);
                if (res.truncated)
                    out << "TRUNCATED yes (checking the first " << limit << " tilings)\n";
            } else if (std::optional<Tiling> t = find_tiling(r, ts)) {
                tilings.push_back(std::move(*t));
            }
            if (tilings.empty()) {
                out << "TILEABLE no\n";
                return kNegative;
            }
            bool all_follow = true;
            for (const Tiling& t : tilings) {
                PatternCheck pc = follows_rectangular_pattern(t);
                print_pattern_verdict(out, t, pc);
                all_follow = all_follow && pc.follows;
            }
            return all_follow ? kOk : kNegative;
        }
        if (flip->parsed()) {
            Region r = parse_region_spec(region_spec);
            TileSet ts = parse_tileset(tiles_spec);
            FlipResult fr;
            try {
                fr = flip_connected(r, ts, limit);
            } catch (const std::runtime_error& e) {
                err << "error: " << e.what() << '\n';
                return kUsage;
            }
            out << "CONNECTED " << (fr.connected ? "yes" : "no") << '\n';
            out << "VERTICES " << fr.graph.vertices.size() << '\n';
            out << "EDGES " << fr.graph.edges.size() << '\n';
            out << "COMPONENTS";
            if (fr.component_sizes.empty()) out << " 0";
            for (int s : fr.component_sizes) out << ' ' << s;
            out << '\n';
            if (dump_edges)
                for (const FlipGraph::Edge& e : fr.graph.edges)
                    out << "EDGE " << e.a << ' ' << e.b << ' ' << to_string(e.site) << '\n';
            return fr.connected ? kOk : kNegative;
        }
        if (classify->parsed()) {
            auto [a, b] = parse_axb(rect_spec, "classify");
            out << "RECT " << a << 'x' << b << '\n';
            bool tileable = false;
            std::string reason;
            if (tiles_spec.rfind("Tn+:", 0) == 0) {
                int n = std::stoi(tiles_spec.substr(4));
                if (n < 4 || n % 2 != 0)
                    throw std::invalid_argument("classification is known only for even n >= 4");
                tileable = rect_tileable_Tn_plus(a, b);
                reason = tileable ? "both sides even"
                                  : (a % 2 ? "height is odd" : "base is odd");
            } else if (tiles_spec.rfind("Tn:", 0) == 0) {
                int n = std::stoi(tiles_spec.substr(3));
                if (n < 4 || n % 2 != 0)
                    throw std::invalid_argument("classification is known only for even n >= 4");
                tileable = rect_tileable_Tn(n, a, b);
                if (tileable)
                    reason = "both sides even and " + std::to_string(n) + " divides a side";
                else if (a % 2 || b % 2)
                    reason = "a side is odd";
                else
                    reason = std::to_string(n) + " divides neither side";
            } else if (tiles_spec.rfind("bars:", 0) == 0) {
                int kk = std::stoi(tiles_spec.substr(5));
                if (kk < 1) throw std::invalid_argument("bars:k needs k >= 1");
                tileable = bar_tileable(kk, a, b);
                reason = std::to_string(kk) + (tileable ? " divides a side" : " divides neither side");
            } else {
                throw std::invalid_argument(
                    "classify supports Tn:<even n>, Tn+:<even n>, bars:<k>");
            }
            out << "TILEABLE " << (tileable ? "yes" : "no") << '\n';
            out << "REASON " << reason << '\n';
            return tileable ? kOk : kNegative;
        }
        if (fixture->parsed()) {
            bool expected = true;
            std::optional<Tiling> shown;
            if (fig2c->parsed()) {
                int n = fx_n > 0 ? fx_n : 5;
                Tiling t = odd_rect_tiling(n);
                bool valid = validate_tiling(t).ok;
                bool pattern = follows_rectangular_pattern(t).follows;
                out << "FIXTURE fig2c n=" << n << '\n';
                out << "RECT " << 3 * n << 'x' << 3 * n + 1 << '\n';
                out << "PLACEMENTS " << t.placements.size() << '\n';
                out << "VALID " << (valid ? "yes" : "no") << '\n';
                out << "PATTERN " << (pattern ? "yes" : "no") << '\n';
                expected = valid && !pattern;
                shown = std::move(t);
            } else if (fig6b->parsed()) {
                Tiling t = mixed_6x10_tiling();
                bool valid = validate_tiling(t).ok;
                bool pattern = follows_rectangular_pattern(t).follows;
                out << "FIXTURE fig6b\n";
                out << "RECT 6x10\n";
                out << "PLACEMENTS " << t.placements.size() << '\n';
                out << "VALID " << (valid ? "yes" : "no") << '\n';
                out << "PATTERN " << (pattern ? "yes" : "no") << '\n';
                expected = valid && !pattern;
                shown = std::move(t);
            } else if (twotiling->parsed()) {
                int n = fx_n > 0 ? fx_n : 6;
                auto [region, first] = two_tiling_region(n, fx_extra);
                bool valid = validate_tiling(first).ok;
                auto [num, stats] = count_tilings(region, make_tileset(TileSetKind::Tn, n), 5);
                size_t sites = local_move_sites(first).size();
                out << "FIXTURE twotiling n=" << n << " extra=" << fx_extra << '\n';
                out << "AREA " << region.area() << '\n';
                out << "VALID " << (valid ? "yes" : "no") << '\n';
                out << "COUNT " << num << '\n';
                out << "SITES " << sites << '\n';
                expected = valid && num == 2 && !stats.truncated && sites == 0;
                shown = std::move(first);
            } else if (kcopy->parsed()) {
                Region r = k_copy_region(ribbon_L_tiles(4)[0], fx_k);
                TileSet ts = make_tileset(TileSetKind::TnPlus, 4);
                std::optional<Tiling> t = find_tiling(r, ts);
                out << "FIXTURE kcopy k=" << fx_k << " n=4\n";
                out << "AREA " << r.area() << '\n';
                out << "TILEABLE " << (t ? "yes" : "no") << '\n';
                expected = (fx_k % 2 == 0) == t.has_value();
                out << "EXPECTED " << (expected ? "yes" : "no") << '\n';
                if (t) shown = std::move(*t);
            }
            if (!render_format.empty() && shown) emit_render(*shown, render_format, out_file, out);
            return expected ? kOk : kNegative;
        }
        if (verify->parsed()) {
            std::vector<std::string> sweeps;
            for (size_t i = 0; i < verify_subs.size(); ++i) {
                if (!verify_subs[i]->parsed()) continue;
                const char* names[] = {"thm6", "cor3", "cor4", "flip", "fixtures", "all"};
                if (std::string(names[i]) == "all")
                    sweeps = {"thm6", "cor3", "cor4", "flip", "fixtures"};
                else
                    sweeps = {names[i]};
            }
            return run_verify(sweeps, vf_n, vf_max_side, vf_k, out);
        }
        if (render->parsed()) {
            Region r = parse_region_spec(region_spec);
            TileSet ts = parse_tileset(tiles_spec);
            std::optional<Tiling> t = find_tiling(r, ts);
            if (!t) {
                out << "TILEABLE no\n";
                return kNegative;
            }
            emit_render(*t, render_format, out_file, out);
            return kOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    err << "error: no subcommand\n";
    return kUsage;
}

}  // namespace ribbon
