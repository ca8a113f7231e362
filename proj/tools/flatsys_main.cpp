#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "flatsys/io.hpp"

namespace {

using namespace flatsys;

std::string read_input(const std::string& path, const std::string& inline_text) {
    if (!inline_text.empty()) return inline_text;
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Stratum parse_stratum(const std::string& text) {
    Stratum k;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) k.orders.push_back(std::stoi(item));
    std::sort(k.orders.begin(), k.orders.end());
    if (k.orders.empty() || k.orders.front() < 1)
        throw ParseError("stratum orders must be positive integers, e.g. 1,1");
    return k;
}

std::vector<Direction> parse_directions(const std::string& text) {
    std::vector<Direction> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        auto comma = item.find(',');
        if (comma == std::string::npos) throw ParseError("direction must look like x,y");
        out.emplace_back(std::stol(item.substr(0, comma)), std::stol(item.substr(comma + 1)));
    }
    if (out.empty()) throw ParseError("empty direction list");
    return out;
}

int thread_count(int cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("FLAT_SYSTOLES_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"systoles and systolic ratios of square-tiled translation surfaces"};
    app.require_subcommand(1);

    std::string input_path, inline_origami, format;
    int threads_flag = 0;
    long l0_override = 0;
    std::string directions_override;

    auto add_input_opts = [&](CLI::App* cmd) {
        cmd->add_option("input", input_path, "origami file ('-' for stdin)");
        cmd->add_option("--origami", inline_origami, "inline origami description");
    };

    auto* cmd_systole = app.add_subcommand("systole", "systole and systolic ratio of an origami");
    add_input_opts(cmd_systole);
    bool emit_candidates = false;
    cmd_systole->add_flag("--emit-candidates", emit_candidates,
                          "include all minimal candidate paths with angle data");
    cmd_systole->add_option("--l0", l0_override, "override the direction-set bound l0");
    cmd_systole->add_option("--directions", directions_override,
                            "explicit direction set, e.g. \"1,0;0,1;1,1\"");
    cmd_systole->add_option("--format", format, "json|text (default json)");

    auto* cmd_graph = app.add_subcommand("graph", "saddle-connection graph of an origami");
    add_input_opts(cmd_graph);
    std::string graph_direction;
    bool graph_full = false;
    cmd_graph->add_option("--direction", graph_direction, "single direction x,y");
    cmd_graph->add_flag("--full", graph_full, "the union graph Gamma_S for l0 from the bound");
    cmd_graph->add_option("--l0", l0_override, "override l0 for --full");
    cmd_graph->add_option("--format", format, "dot|json (default dot)");

    auto* cmd_enumerate = app.add_subcommand(
        "enumerate", "maximal systolic ratio over all origamis of a degree and stratum");
    std::string stratum_text = "1,1";
    int degree = 0;
    bool dedup = false, big = false, no_audit = false;
    long degree_max = 0;
    cmd_enumerate->add_option("--degree", degree, "number of squares")->required();
    cmd_enumerate->add_option("--max-degree", degree_max,
                              "run every degree from --degree up to this");
    cmd_enumerate->add_option("--stratum", stratum_text, "singularity orders, e.g. 1,1");
    cmd_enumerate->add_flag("--dedup", dedup, "deduplicate relabeling classes exactly");
    cmd_enumerate->add_flag("--big", big, "allow degrees above 10");
    cmd_enumerate->add_flag("--no-audit", no_audit, "skip the per-origami bounds audit");
    cmd_enumerate->add_option("--threads", threads_flag, "worker threads");
    cmd_enumerate->add_option("--format", format, "csv|json (default csv)");

    auto* cmd_cover = app.add_subcommand("cover", "cyclic cover along a regular closed geodesic");
    add_input_opts(cmd_cover);
    int cover_k = 1;
    bool cover_no_systole = false;
    cmd_cover->add_option("--k", cover_k, "number of sheets")->required();
    cmd_cover->add_flag("--no-systole", cover_no_systole, "skip the systole comparison");
    cmd_cover->add_option("--format", format, "text|json (default text)");

    auto* cmd_bounds = app.add_subcommand("bounds", "closed-form bounds; audits when given input");
    add_input_opts(cmd_bounds);
    std::string bounds_stratum;
    cmd_bounds->add_option("--stratum", bounds_stratum, "evaluate formulas for this stratum");
    cmd_bounds->add_option("--format", format, "text|json (default text)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_systole->parsed()) {
            Origami O = parse_origami(read_input(input_path, inline_origami));
            SystoleOptions opts;
            if (l0_override > 0) opts.l0_override = l0_override;
            if (!directions_override.empty())
                opts.directions_override = parse_directions(directions_override);
            SystoleReport rep = systole(O, opts);
            if (format == "text")
                std::cout << systole_report_to_text(rep);
            else
                std::cout << systole_report_to_json(O, rep, emit_candidates);
            return rep.unresolved ? 2 : 0;
        }
        if (cmd_graph->parsed()) {
            Origami O = parse_origami(read_input(input_path, inline_origami));
            SaddleGraph g;
            if (!graph_direction.empty()) {
                auto dirs = parse_directions(graph_direction);
                g = trace_graph_in_direction(O, dirs.at(0));
            } else if (graph_full) {
                int64_t l0 = l0_override > 0 ? l0_override : improved_l0(O);
                g = union_graph(O, direction_set_squared(l0 * l0));
            } else {
                throw ParseError("graph requires --direction x,y or --full");
            }
            if (format == "json")
                std::cout << graph_to_json(O, g);
            else
                std::cout << graph_to_dot(g);
            return 0;
        }
        if (cmd_enumerate->parsed()) {
            long hi = degree_max > 0 ? degree_max : degree;
            if (hi > 10 && !big)
                throw ParseError("degrees above 10 take long; pass --big to confirm");
            Stratum K = parse_stratum(stratum_text);
            EnumerateOptions opts;
            opts.threads = thread_count(threads_flag);
            opts.dedup = dedup;
            opts.audit = !no_audit;
            if (format != "json") std::cout << enumeration_csv_header();
            for (long n = degree; n <= hi; ++n) {
                EnumerationRecord rec = max_sr(static_cast<int>(n), K, opts);
                if (format == "json")
                    std::cout << enumeration_record_to_json(rec);
                else
                    std::cout << enumeration_record_to_csv(rec);
                std::cout.flush();
                std::cerr << "# n=" << n << " done in " << format_decimal(rec.wall_seconds)
                          << "s (" << rec.stream_count << " origamis)\n";
            }
            return 0;
        }
        if (cmd_cover->parsed()) {
            Origami O = parse_origami(read_input(input_path, inline_origami));
            CutSpec cut = find_regular_cut(O);
            Origami cover = cyclic_cover(cut.base, cut, cover_k);
            CoverReport rep = verify_cover(cut.base, cover, cover_k, !cover_no_systole);
            if (format == "json") {
                std::cout << "{\"cover\": " << origami_to_json(cover)
                          << ", \"verification\": " << cover_report_to_json(rep, cut) << "}\n";
            } else {
                std::cout << origami_to_text(cover);
                std::cout << "# cut: " << (cut.horizontal ? "horizontal" : "vertical")
                          << " cycle of size " << cut.cycle.size() << ", frame [" << cut.frame.a
                          << "," << cut.frame.b << ";" << cut.frame.c << "," << cut.frame.d
                          << "]\n";
                std::cout << "# genus " << rep.genus_base << " -> " << rep.genus_cover
                          << (rep.genus_ok ? " ok" : " MISMATCH") << "\n";
                std::cout << "# stratum " << rep.stratum_base.to_string() << " -> "
                          << rep.stratum_cover.to_string()
                          << (rep.stratum_ok ? " ok" : " MISMATCH") << "\n";
                if (rep.systole_checked)
                    std::cout << "# systole " << rep.sy_base.to_string() << " -> "
                              << rep.sy_cover.to_string() << (rep.systole_ok ? " ok" : " SHRANK")
                              << "\n";
            }
            bool ok = rep.genus_ok && rep.stratum_ok && rep.systole_ok;
            return ok ? 0 : 1;
        }
        if (cmd_bounds->parsed()) {
            if (!bounds_stratum.empty()) {
                Stratum K = parse_stratum(bounds_stratum);
                std::cout << (format == "json" ? bounds_formulas_to_json(K)
                                               : bounds_formulas_to_text(K));
                return 0;
            }
            Origami O = parse_origami(read_input(input_path, inline_origami));
            BoundsReport rep = audit_origami(O);
            std::cout << (format == "json" ? bounds_report_to_json(rep)
                                           : bounds_report_to_text(rep));
            return rep.all_passed ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
