#include "flatsys/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace flatsys {

using ordered_json = nlohmann::ordered_json;

std::string format_decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string strip_comments(const std::string& text) {
    std::string out;
    bool skipping = false;
    for (char ch : text) {
        if (ch == '#') skipping = true;
        if (ch == '\n') skipping = false;
        if (!skipping) out += ch;
    }
    return out;
}

// Normalizes the sigma glyph (UTF-8 CF 83) to "sigma_" so the scanner only
// deals with ASCII.
std::string normalize_names(const std::string& text) {
    std::string out;
    for (size_t i = 0; i < text.size(); ++i) {
        if (i + 1 < text.size() && static_cast<unsigned char>(text[i]) == 0xCF &&
            static_cast<unsigned char>(text[i + 1]) == 0x83) {
            out += "sigma_";
            ++i;
        } else {
            out += text[i];
        }
    }
    return out;
}

struct Scanner {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an integer at position " +
                                           std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }
};

struct ParsedPerm {
    bool is_identity = false;
    bool is_image_list = false;
    std::vector<long> images;                 // 1-based, for [..] form
    std::vector<std::vector<long>> cycles;    // 1-based
    long max_point = 0;
};

ParsedPerm parse_perm_rhs(Scanner& sc) {
    ParsedPerm out;
    if (sc.peek() == 'i') {
        std::string w = sc.word();
        if (w == "id" || w == "identity") {
            out.is_identity = true;
            return out;
        }
        throw ParseError("unexpected word '" + w + "' in permutation");
    }
    if (sc.peek() == '[') {
        sc.consume('[');
        out.is_image_list = true;
        while (!sc.consume(']')) {
            out.images.push_back(sc.integer());
            out.max_point = std::max(out.max_point, out.images.back());
            sc.consume(',');
        }
        return out;
    }
    while (sc.peek() == '(') {
        sc.consume('(');
        std::vector<long> cyc;
        while (!sc.consume(')')) {
            long v = sc.integer();
            sc.skip_ws();
            if (sc.pos + 1 < sc.s.size() && sc.s[sc.pos] == '.' && sc.s[sc.pos + 1] == '.') {
                sc.pos += 2;
                long hi = sc.integer();
                if (hi < v) throw ParseError("descending range in cycle");
                for (long x = v; x <= hi; ++x) cyc.push_back(x);
            } else {
                cyc.push_back(v);
            }
            sc.consume(',');
        }
        if (cyc.empty()) throw ParseError("empty cycle");
        for (long x : cyc) out.max_point = std::max(out.max_point, x);
        out.cycles.push_back(std::move(cyc));
    }
    if (out.cycles.empty()) throw ParseError("expected cycles, an image list, or 'id'");
    return out;
}

Permutation realize(const ParsedPerm& p, int degree) {
    if (p.is_image_list) {
        if (static_cast<int>(p.images.size()) != degree)
            throw ParseError("image list length disagrees with the degree");
        std::vector<int> img(degree);
        for (int i = 0; i < degree; ++i) {
            long v = p.images[i];
            if (v < 1 || v > degree) throw NotABijection("image out of range");
            img[i] = static_cast<int>(v - 1);
        }
        return Permutation(std::move(img));
    }
    std::vector<std::vector<int>> cycles0;
    for (const auto& cyc : p.cycles) {
        std::vector<int> c0;
        for (long v : cyc) {
            if (v < 1 || v > degree) throw ParseError("cycle entry out of range for the degree");
            c0.push_back(static_cast<int>(v - 1));
        }
        cycles0.push_back(std::move(c0));
    }
    // Disjointness is what makes cycle notation well defined.
    std::vector<char> used(degree, 0);
    for (const auto& c0 : cycles0)
        for (int x : c0) {
            if (used[x]) throw NotABijection("cycles are not disjoint");
            used[x] = 1;
        }
    return Permutation::from_cycles(degree, cycles0);
}

Origami parse_origami_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    auto read = [&](const char* key) -> ParsedPerm {
        if (!j.contains(key)) throw ParseError(std::string("missing field ") + key);
        ParsedPerm p;
        if (j[key].is_string()) {
            std::string norm = normalize_names(j[key].get<std::string>());
            Scanner sc{norm};
            return parse_perm_rhs(sc);
        }
        p.is_image_list = true;
        for (const auto& v : j[key]) {
            p.images.push_back(v.get<long>());
            p.max_point = std::max(p.max_point, p.images.back());
        }
        return p;
    };
    ParsedPerm pa = read("sigma_a");
    ParsedPerm pb = read("sigma_b");
    long degree = j.value("degree", 0L);
    if (degree == 0) degree = std::max({pa.max_point, pb.max_point, 1L});
    if (pa.is_image_list) degree = std::max<long>(degree, pa.images.size());
    if (pb.is_image_list) degree = std::max<long>(degree, pb.images.size());
    return Origami(realize(pa, static_cast<int>(degree)),
                   realize(pb, static_cast<int>(degree)));
}

}  // namespace

Origami parse_origami(const std::string& raw) {
    std::string text = strip_comments(raw);
    {
        size_t p = text.find_first_not_of(" \t\r\n");
        if (p == std::string::npos) throw ParseError("empty origami description");
        if (text[p] == '{') return parse_origami_json(text);
    }
    text = normalize_names(text);

    ParsedPerm pa, pb;
    bool have_a = false, have_b = false;
    long degree = 0;
    Scanner sc{text};
    while (!sc.eof()) {
        std::string name = sc.word();
        if (name.empty()) {
            // Skip separators between assignments.
            if (sc.consume(',') || sc.consume(';')) continue;
            throw ParseError("unexpected character at position " + std::to_string(sc.pos));
        }
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (name == "on") {
            degree = sc.integer();
            sc.word();  // "squares"
            continue;
        }
        if (name == "degree" || name == "n") {
            sc.consume('=');
            degree = sc.integer();
            continue;
        }
        if (!sc.consume('=')) throw ParseError("expected '=' after '" + name + "'");
        if (name == "sigma_a" || name == "sa" || name == "a") {
            pa = parse_perm_rhs(sc);
            have_a = true;
        } else if (name == "sigma_b" || name == "sb" || name == "b") {
            pb = parse_perm_rhs(sc);
            have_b = true;
        } else {
            throw ParseError("unknown permutation name '" + name + "'");
        }
    }
    if (!have_a || !have_b) throw ParseError("both sigma_a and sigma_b are required");
    if (degree == 0) degree = std::max({pa.max_point, pb.max_point, 1L});
    if (pa.is_image_list) degree = std::max<long>(degree, pa.images.size());
    if (pb.is_image_list) degree = std::max<long>(degree, pb.images.size());
    return Origami(realize(pa, static_cast<int>(degree)),
                   realize(pb, static_cast<int>(degree)));
}

std::string cycles_to_string(const Permutation& p) {
    std::string out;
    for (const auto& cyc : p.cycles()) {
        if (cyc.size() == 1) continue;
        out += "(";
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(cyc[i] + 1);
        }
        out += ")";
    }
    if (out.empty()) out = "id";
    return out;
}

std::string origami_to_text(const Origami& O) {
    std::ostringstream os;
    os << "sigma_a = " << cycles_to_string(O.sigma_a()) << "\n";
    os << "sigma_b = " << cycles_to_string(O.sigma_b()) << "\n";
    os << "degree = " << O.degree() << "\n";
    return os.str();
}

namespace {

ordered_json length_json(const Length& v) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : v.terms())
        terms.push_back(ordered_json{{"radicand", t.radicand}, {"coeff", t.coeff}});
    return ordered_json{{"string", v.to_string()},
                        {"decimal", format_decimal(v.to_double())},
                        {"terms", terms}};
}

ordered_json ratio_json(const Ratio& r) {
    ordered_json j;
    j["exact"] = r.exact;
    if (r.exact) {
        j["numerator"] = r.num;
        j["denominator"] = r.den;
    }
    j["string"] = r.text;
    j["decimal"] = format_decimal(r.value);
    return j;
}

ordered_json direction_json(const Direction& d) { return ordered_json::array({d.x, d.y}); }

ordered_json anchor_json(const Anchor& a) {
    if (!a.valid()) return nullptr;
    return ordered_json{{"square", a.square + 1}, {"corner", corner_name(a.corner)}};
}

ordered_json edge_json(const SaddleEdge& e, int id) {
    ordered_json j;
    j["id"] = id;
    j["from"] = e.from;
    j["to"] = e.to;
    j["direction"] = direction_json(e.dir);
    j["steps"] = e.steps;
    j["length"] = length_json(e.length());
    j["start_anchor"] = anchor_json(e.start);
    j["end_anchor"] = anchor_json(e.end);
    return j;
}

ordered_json path_json(const SaddleGraph& g, const EdgePath& p) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : p.steps)
        steps.push_back(ordered_json{{"edge", s.edge}, {"forward", s.forward}});
    ordered_json j;
    j["steps"] = steps;
    ordered_json verts = ordered_json::array();
    for (int t = 0; t < p.combinatorial_length(); ++t) verts.push_back(path_vertex_at(g, p, t));
    j["vertices"] = verts;
    return j;
}

ordered_json candidate_json(const SaddleGraph& g, const Candidate& c, bool with_angles) {
    ordered_json j;
    j["path"] = path_json(g, c.path);
    j["combinatorial_length"] = c.path.combinatorial_length();
    j["weight"] = length_json(c.weight);
    j["developing"] = ordered_json::array({c.developing[0], c.developing[1]});
    j["null_homotopic"] = c.null_homotopic;
    if (with_angles) {
        ordered_json angles = ordered_json::array();
        for (const auto& va : c.angles.at) {
            angles.push_back(ordered_json{{"singularity", va.singularity},
                                          {"left", format_decimal(va.left.value())},
                                          {"right", format_decimal(va.right.value())},
                                          {"left_quarter_turns", va.left.quarter_turns},
                                          {"right_quarter_turns", va.right.quarter_turns}});
        }
        j["angles"] = angles;
    }
    return j;
}

ordered_json origami_json_obj(const Origami& O) {
    ordered_json j;
    j["degree"] = O.degree();
    j["sigma_a"] = cycles_to_string(O.sigma_a());
    j["sigma_b"] = cycles_to_string(O.sigma_b());
    std::vector<int> a1(O.degree()), b1(O.degree());
    for (int i = 0; i < O.degree(); ++i) {
        a1[i] = O.sigma_a()(i) + 1;
        b1[i] = O.sigma_b()(i) + 1;
    }
    j["sigma_a_images"] = a1;
    j["sigma_b_images"] = b1;
    j["stratum"] = O.stratum().orders;
    j["genus"] = O.genus();
    return j;
}

}  // namespace

std::string origami_to_json(const Origami& O) { return origami_json_obj(O).dump(2) + "\n"; }

std::string graph_to_dot(const SaddleGraph& g) {
    std::ostringstream os;
    os << "graph saddle_connections {\n";
    for (int v = 0; v < g.num_vertices; ++v) os << "  s" << v << ";\n";
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        os << "  s" << e.from << " -- s" << e.to << " [label=\"" << e.length().to_string()
           << "\", dir=\"" << e.dir.x << "," << e.dir.y << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string graph_to_json(const Origami& O, const SaddleGraph& g) {
    ordered_json j;
    j["degree"] = O.degree();
    ordered_json verts = ordered_json::array();
    for (const auto& s : O.singularities()) {
        std::vector<int> cyc1;
        for (int x : s.cycle) cyc1.push_back(x + 1);
        verts.push_back(ordered_json{{"id", s.id}, {"order", s.order}, {"cycle", cyc1}});
    }
    j["vertices"] = verts;
    ordered_json dirs = ordered_json::array();
    for (const auto& d : g.directions) dirs.push_back(direction_json(d));
    j["directions"] = dirs;
    ordered_json edges = ordered_json::array();
    for (size_t i = 0; i < g.edges.size(); ++i)
        edges.push_back(edge_json(g.edges[i], static_cast<int>(i)));
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

std::string systole_report_to_json(const Origami& O, const SystoleReport& r,
                                   bool emit_candidates) {
    ordered_json j;
    j["origami"] = origami_json_obj(O);
    j["stratum"] = r.stratum.orders;
    j["l0_bound"] = r.l0_bound;
    j["improved_l0"] = r.improved_l0;
    j["l0_used"] = r.l0_used;
    ordered_json dirs = ordered_json::array();
    for (const auto& d : r.directions) dirs.push_back(direction_json(d));
    j["directions"] = dirs;
    j["direction_count"] = r.directions.size();
    j["edge_count"] = r.graph.edges.size();
    j["sy_graph"] = length_json(r.sy_graph);
    j["sy_graph_squared"] = length_json(r.sy_graph.squared());
    j["minimal_candidate_count"] = r.minimal_candidates.size();
    if (emit_candidates) {
        ordered_json cands = ordered_json::array();
        for (const auto& c : r.minimal_candidates)
            cands.push_back(candidate_json(r.graph, c, true));
        j["minimal_candidates"] = cands;
    }
    j["sy_surface"] = length_json(r.sy_surface);
    j["sy_squared"] = length_json(r.sy_surface.squared());
    if (r.sy_surface.squared().is_integer())
        j["sy_squared_int"] = r.sy_surface.squared().integer_value();
    j["systolic_ratio"] = ratio_json(r.systolic_ratio);
    j["accepted"] = candidate_json(r.graph, r.accepted, emit_candidates);
    j["escalated"] = r.escalated;
    j["escalation_examined"] = r.escalation_examined;
    j["unresolved"] = r.unresolved;
    j["geodesic_criterion_ok"] = r.geodesic_criterion_ok;
    j["comparisons_exact"] = r.comparisons_exact;
    return j.dump(2) + "\n";
}

std::string systole_report_to_text(const SystoleReport& r) {
    std::ostringstream os;
    os << "degree: " << r.degree << "\n";
    os << "stratum: " << r.stratum.to_string() << "\n";
    os << "l0 bound: " << r.l0_bound << " (improved: " << r.improved_l0
       << ", used: " << r.l0_used << ")\n";
    os << "directions: " << r.directions.size() << ", edges: " << r.graph.edges.size() << "\n";
    os << "graph systole: " << r.sy_graph.to_string() << " = "
       << format_decimal(r.sy_graph.to_double()) << "\n";
    os << "minimal candidates: " << r.minimal_candidates.size() << "\n";
    os << "systole: " << r.sy_surface.to_string() << " = "
       << format_decimal(r.sy_surface.to_double()) << "\n";
    os << "systolic ratio: " << r.systolic_ratio.text << " = "
       << format_decimal(r.systolic_ratio.value) << "\n";
    if (r.escalated) os << "escalated: yes (" << r.escalation_examined << " screened)\n";
    if (r.unresolved) os << "UNRESOLVED: the report is not definitive\n";
    return os.str();
}

namespace {
ordered_json bound_check_json(const BoundCheck& c) {
    ordered_json j;
    j["name"] = c.name;
    if (c.skipped) {
        j["skipped"] = true;
        return j;
    }
    j["bound"] = format_decimal(c.bound);
    j["measured"] = format_decimal(c.measured);
    j["passed"] = c.passed;
    return j;
}
}  // namespace

std::string bounds_report_to_json(const BoundsReport& r) {
    ordered_json j;
    j["stratum"] = r.stratum.orders;
    j["degree"] = r.degree;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) checks.push_back(bound_check_json(c));
    j["checks"] = checks;
    j["all_passed"] = r.all_passed;
    return j.dump(2) + "\n";
}

std::string bounds_report_to_text(const BoundsReport& r) {
    std::ostringstream os;
    os << "stratum " << r.stratum.to_string() << ", degree " << r.degree << "\n";
    for (const auto& c : r.checks) {
        if (c.skipped) {
            os << "  " << c.name << ": skipped (degenerate denominator)\n";
            continue;
        }
        os << "  " << c.name << ": measured " << format_decimal(c.measured) << " <= bound "
           << format_decimal(c.bound) << " : " << (c.passed ? "ok" : "VIOLATED") << "\n";
    }
    os << (r.all_passed ? "all bounds hold\n" : "BOUND VIOLATION\n");
    return os.str();
}

std::string bounds_formulas_to_json(const Stratum& K) {
    ordered_json j;
    j["stratum"] = K.orders;
    j["genus"] = K.genus();
    j["area_bound"] = format_decimal(area_bound(K));
    j["bg_bound"] = format_decimal(bg_bound(K));
    ordered_json sb = ordered_json::array();
    for (const auto& s : short_saddle_bounds(K)) {
        ordered_json e;
        e["l"] = s.l;
        if (s.skipped)
            e["skipped"] = true;
        else
            e["bound"] = format_decimal(s.value);
        sb.push_back(e);
    }
    j["short_saddle_bounds"] = sb;
    return j.dump(2) + "\n";
}

std::string bounds_formulas_to_text(const Stratum& K) {
    std::ostringstream os;
    os << "stratum " << K.to_string() << " (genus " << K.genus() << ")\n";
    os << "area bound:          sr <= " << format_decimal(area_bound(K)) << "\n";
    os << "Boissy-Geninska:  l1^2/A <= " << format_decimal(bg_bound(K)) << "\n";
    for (const auto& s : short_saddle_bounds(K)) {
        if (s.skipped)
            os << "short saddle l=" << s.l << ": skipped\n";
        else
            os << "short saddle l=" << s.l << ": l" << s.l
               << "^2/A <= " << format_decimal(s.value) << "\n";
    }
    return os.str();
}

std::string cover_report_to_json(const CoverReport& r, const CutSpec& cut) {
    ordered_json j;
    j["k"] = r.k;
    j["cut"] = ordered_json{{"axis", cut.horizontal ? "horizontal" : "vertical"},
                            {"frame", ordered_json::array({cut.frame.a, cut.frame.b,
                                                           cut.frame.c, cut.frame.d})},
                            {"cycle", [&] {
                                 std::vector<int> c1;
                                 for (int x : cut.cycle) c1.push_back(x + 1);
                                 return c1;
                             }()}};
    j["degree_base"] = r.degree_base;
    j["degree_cover"] = r.degree_cover;
    j["genus_base"] = r.genus_base;
    j["genus_cover"] = r.genus_cover;
    j["stratum_base"] = r.stratum_base.orders;
    j["stratum_cover"] = r.stratum_cover.orders;
    j["genus_ok"] = r.genus_ok;
    j["stratum_ok"] = r.stratum_ok;
    j["systole_checked"] = r.systole_checked;
    if (r.systole_checked) {
        j["sy_base"] = length_json(r.sy_base);
        j["sy_cover"] = length_json(r.sy_cover);
        j["systole_ok"] = r.systole_ok;
    }
    return j.dump(2) + "\n";
}

std::string enumeration_csv_header() {
    return "n,stratum,sy,sr,sy_decimal,sr_decimal,witness_sigma_a,witness_sigma_b,"
           "audit,filtered_sy,filtered_sr,filtered_differs,pairs_scanned,stream_count\n";
}

std::string enumeration_record_to_csv(const EnumerationRecord& r) {
    std::ostringstream os;
    os << r.degree << "," << r.stratum.to_string() << "," << r.max_sy_graph.to_string() << ","
       << r.max_sr_graph.text << "," << format_decimal(r.max_sy_graph.to_double()) << ","
       << format_decimal(r.max_sr_graph.value) << ","
       << (r.witness_a ? cycles_to_string(*r.witness_a) : "") << ","
       << (r.witness_b ? cycles_to_string(*r.witness_b) : "") << ","
       << (r.audit_violations == 0 ? "pass" : "FAIL") << ","
       << r.max_sy_filtered.to_string() << "," << r.max_sr_filtered.text << ","
       << (r.filtered_differs ? "yes" : "no") << "," << r.pairs_scanned << ","
       << r.stream_count << "\n";
    return os.str();
}

std::string enumeration_record_to_json(const EnumerationRecord& r) {
    ordered_json j;
    j["degree"] = r.degree;
    j["stratum"] = r.stratum.orders;
    j["sy"] = length_json(r.max_sy_graph);
    j["sr"] = ratio_json(r.max_sr_graph);
    if (r.witness_a) j["witness_sigma_a"] = cycles_to_string(*r.witness_a);
    if (r.witness_b) j["witness_sigma_b"] = cycles_to_string(*r.witness_b);
    j["audit_violations"] = r.audit_violations;
    j["filtered_sy"] = length_json(r.max_sy_filtered);
    j["filtered_sr"] = ratio_json(r.max_sr_filtered);
    j["filtered_differs"] = r.filtered_differs;
    j["unresolved_reports"] = r.unresolved_reports;
    j["pairs_scanned"] = r.pairs_scanned;
    j["stream_count"] = r.stream_count;
    j["systoles_computed"] = r.systoles_computed;
    return j.dump(2) + "\n";
}

}  // namespace flatsys
