#include "radiogrid/io.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "radiogrid/constructions.hpp"
#include "radiogrid/formulas.hpp"
#include "radiogrid/oracle.hpp"

namespace radiogrid {

using ordered_json = nlohmann::ordered_json;

LabelingDocument LabelingDocument::from_labeling(const GridGraph& g, const Labeling& f) {
    LabelingDocument doc;
    doc.a = g.a();
    doc.b = g.b();
    doc.labels_by_index = f.raw();
    doc.span = radiogrid::span(f);
    doc.parity_case = to_string(radiogrid::parity_case(g.a(), g.b()));
    doc.formula_rn = rn_formula(g.a(), g.b());
    doc.formula_t_plus = t_plus_formula(g.a(), g.b());
    return doc;
}

Labeling LabelingDocument::to_labeling() const {
    GridGraph g(a, b);
    if (labels_by_index.size() != static_cast<size_t>(g.vertex_count()))
        throw std::invalid_argument("document does not cover all a*b vertices");
    Labeling f(g, labels_by_index);
    if (radiogrid::span(f) != span)
        throw std::invalid_argument("document span does not match its labels");
    return f;
}

std::string to_json(const LabelingDocument& doc) {
    ordered_json j;
    j["a"] = doc.a;
    j["b"] = doc.b;
    ordered_json labels = ordered_json::array();
    GridGraph g(doc.a, doc.b);
    for (int y = 1; y <= doc.b; ++y) {
        for (int x = 1; x <= doc.a; ++x) {
            ordered_json e;
            e["x"] = x;
            e["y"] = y;
            e["label"] = doc.labels_by_index[g.index_of(Vertex{x, y})];
            labels.push_back(std::move(e));
        }
    }
    j["labels"] = std::move(labels);
    j["span"] = doc.span;
    j["meta"] = ordered_json{{"parity_case", doc.parity_case},
                             {"formula_rn", doc.formula_rn},
                             {"formula_t_plus", doc.formula_t_plus},
                             {"tool_version", doc.tool_version}};
    return j.dump(2) + "\n";
}

LabelingDocument document_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
    try {
        LabelingDocument doc;
        doc.a = j.at("a").get<int>();
        doc.b = j.at("b").get<int>();
        if (doc.a < 1 || doc.b < 1)
            throw std::invalid_argument("document has non-positive dimensions");
        GridGraph g(doc.a, doc.b);
        doc.labels_by_index.assign(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<char> seen(doc.labels_by_index.size(), 0);
        for (const auto& e : j.at("labels")) {
            const Vertex v{e.at("x").get<int>(), e.at("y").get<int>()};
            if (!g.in_bounds(v))
                throw std::invalid_argument("document label out of bounds");
            const int idx = g.index_of(v);
            if (seen[idx])
                throw std::invalid_argument("document repeats a vertex");
            seen[idx] = 1;
            doc.labels_by_index[idx] = e.at("label").get<long long>();
        }
        for (char c : seen)
            if (!c) throw std::invalid_argument("document does not cover all a*b vertices");
        doc.span = j.at("span").get<long long>();
        const auto& meta = j.at("meta");
        doc.parity_case = meta.at("parity_case").get<std::string>();
        doc.formula_rn = meta.at("formula_rn").get<long long>();
        doc.formula_t_plus = meta.at("formula_t_plus").get<long long>();
        doc.tool_version = meta.at("tool_version").get<std::string>();
        doc.to_labeling();  // consistency (span vs labels)
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("JSON structure error: ") + e.what());
    }
}

std::string to_ascii(const LabelingDocument& doc) {
    GridGraph g(doc.a, doc.b);
    size_t width = 1;
    for (long long v : doc.labels_by_index)
        width = std::max(width, std::to_string(v).size());
    std::ostringstream os;
    for (int y = doc.b; y >= 1; --y) {
        for (int x = 1; x <= doc.a; ++x) {
            if (x > 1) os << ' ';
            os << std::setw(static_cast<int>(width))
               << doc.labels_by_index[g.index_of(Vertex{x, y})];
        }
        os << '\n';
    }
    return os.str();
}

std::string to_dot(const LabelingDocument& doc) {
    GridGraph g(doc.a, doc.b);
    std::ostringstream os;
    os << "graph radio_labeling {\n";
    os << "  node [shape=circle];\n";
    for (int y = 1; y <= doc.b; ++y)
        for (int x = 1; x <= doc.a; ++x)
            os << "  v" << x << "_" << y << " [label=\""
               << doc.labels_by_index[g.index_of(Vertex{x, y})] << "\", pos=\"" << x - 1
               << "," << y - 1 << "!\"];\n";
    for (int y = 1; y <= doc.b; ++y)
        for (int x = 1; x <= doc.a; ++x) {
            if (x < doc.a)
                os << "  v" << x << "_" << y << " -- v" << x + 1 << "_" << y << ";\n";
            if (y < doc.b)
                os << "  v" << x << "_" << y << " -- v" << x << "_" << y + 1 << ";\n";
        }
    os << "}\n";
    return os.str();
}

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

int cmd_rn(int a, int b, std::ostream& out) {
    GridGraph g(a, b);
    const std::string pc = to_string(parity_case(a, b));
    out << "grid: G_{" << a << "," << b << "} (" << pc << ")\n";
    out << "rn = " << rn_formula(a, b) << "\n";
    out << "lower_bound = " << rn_lower_bound(g) << "\n";
    out << "trivial_upper_bound = " << rn_upper_bound_trivial(g) << "\n";
    return kExitOk;
}

int cmd_tplus(int a, int b, std::ostream& out) {
    const std::string pc = to_string(parity_case(a, b));
    out << "grid: G_{" << a << "," << b << "} (" << pc << ")\n";
    out << "t_plus = " << t_plus_formula(a, b) << "\n";
    out << "max_dx = " << max_dx_formula(a, b) << "\n";
    out << "max_dy = " << max_dx_formula(b, a) << "\n";
    return kExitOk;
}

int cmd_label(int a, int b, const std::string& format, const std::string& out_path,
              std::ostream& out) {
    GridGraph g(a, b);
    const Labeling f = optimal_labeling(g);
    const LabelingDocument doc = LabelingDocument::from_labeling(g, f);
    std::string text;
    if (format == "json")
        text = to_json(doc);
    else if (format == "ascii")
        text = to_ascii(doc);
    else if (format == "dot")
        text = to_dot(doc);
    else
        throw std::invalid_argument("unsupported format: " + format);
    emit(text, out_path, out);
    return kExitOk;
}

int cmd_verify(const std::string& path, std::ostream& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot read file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    const LabelingDocument doc = document_from_json(buf.str());
    GridGraph g(doc.a, doc.b);
    const Labeling lab = doc.to_labeling();
    const auto violations = validate(g, lab);
    if (violations.empty()) {
        out << "VALID span=" << span(lab) << "\n";
        return kExitOk;
    }
    out << violations.size() << " violation(s):\n";
    for (const auto& v : violations)
        out << "  (" << v.u.x << "," << v.u.y << ") vs (" << v.v.x << "," << v.v.y
            << "): gap " << v.actual_gap << " < required " << v.required_gap << "\n";
    return kExitInvalid;
}

int cmd_analyze(int a, int b, std::ostream& out) {
    GridGraph g(a, b);
    const std::string pc = to_string(parity_case(a, b));
    const Ordering s = rn_ordering(g);
    const StepReport r = step_report(g, s);
    out << "grid: G_{" << a << "," << b << "} (" << pc << ")\n";
    out << "   i        u_i  ->    u_i+1  d_i  f_i  b_i  d_rect\n";
    const size_t steps = r.d.size();
    for (size_t i = 0; i < steps; ++i) {
        std::ostringstream from, to;
        from << "(" << s[i].x << "," << s[i].y << ")";
        to << "(" << s[i + 1].x << "," << s[i + 1].y << ")";
        out << std::setw(4) << i + 1 << std::setw(11) << from.str() << "  ->"
            << std::setw(9) << to.str() << std::setw(5) << r.d[i] << std::setw(5)
            << r.f_gaps[i] << std::setw(5) << r.bumps[i];
        if (i >= 1)
            out << std::setw(8) << d_rect(g, s[i - 1], s[i + 1], s[i]);
        else
            out << std::setw(8) << "-";
        out << "\n";
    }
    if (r.bump_events.empty()) {
        out << "bump events: none\n";
    } else {
        out << "bump events:";
        for (const auto& e : r.bump_events)
            out << "  i=" << e.index << " b=" << e.magnitude << " offset=" << e.binding_offset;
        out << "\n";
    }
    out << "sum d_i = " << r.distance_sum << " (t_plus = " << t_plus_formula(a, b) << ")\n";
    out << "span = " << r.span << " (rn = " << rn_formula(a, b) << ")\n";
    return kExitOk;
}

int cmd_oracle(const std::string& kind, int a, int b, bool force,
               const std::string& out_path, std::ostream& out) {
    GridGraph g(a, b);
    const bool have_formula = a >= 3 && b >= 3;
    OracleResult res;
    long long formula = 0;
    if (kind == "tplus") {
        res = oracle_t_plus(g);
        if (have_formula) formula = t_plus_formula(a, b);
        const StepReport check = step_report(g, res.witness);
        if (check.distance_sum != res.value)
            throw std::logic_error("oracle witness failed re-certification");
    } else if (kind == "rn") {
        res = oracle_rn(g, force ? kOracleTPlusMaxN : kOracleRnDefaultMaxN);
        if (have_formula) formula = rn_formula(a, b);
        const Labeling wf = min_span_labeling(g, res.witness);
        if (span(wf) != res.value || !validate(g, wf).empty())
            throw std::logic_error("oracle witness failed re-certification");
    } else {
        throw std::invalid_argument("oracle kind must be rn or tplus");
    }
    out << "oracle " << kind << " on G_{" << a << "," << b << "}\n";
    out << "value = " << res.value << "\n";
    if (have_formula) {
        out << "formula = " << formula << "\n";
        out << "verdict: " << (res.value == formula ? "MATCH" : "MISMATCH") << "\n";
    } else {
        out << "formula = n/a (requires a,b >= 3)\n";
    }
    out << "nodes_explored = " << res.nodes_explored << "\n";
    out << "elapsed_seconds = " << std::fixed << std::setprecision(3) << res.elapsed_seconds
        << "\n";
    if (!out_path.empty()) {
        const Labeling wf = min_span_labeling(g, res.witness);
        emit(to_json(LabelingDocument::from_labeling(g, wf)), out_path, out);
        out << "witness written to " << out_path << "\n";
    }
    return (have_formula && res.value != formula) ? kExitInvalid : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"radio labelings of grid graphs: closed forms, constructions, oracles"};
    app.require_subcommand(1);
    unsigned seed = 0;  // reserved; constructions are deterministic
    app.add_option("--seed", seed, "reserved (unused; output is deterministic)");

    int a = 0, b = 0;
    std::string format = "json", out_path, verify_path, oracle_kind;
    bool force = false;

    auto add_dims = [&](CLI::App* cmd) {
        cmd->add_option("--a", a, "vertices in the x-direction")->required();
        cmd->add_option("--b", b, "vertices in the y-direction")->required();
    };

    auto* c_rn = app.add_subcommand("rn", "closed-form radio number and bounds");
    add_dims(c_rn);
    auto* c_tplus = app.add_subcommand("tplus", "closed-form upper traceable number");
    add_dims(c_tplus);
    auto* c_label = app.add_subcommand("label", "emit an optimal radio labeling");
    add_dims(c_label);
    c_label->add_option("--format", format, "json | ascii | dot")
        ->check(CLI::IsMember({"json", "ascii", "dot"}));
    c_label->add_option("--out", out_path, "output file (default stdout)");
    auto* c_verify = app.add_subcommand("verify", "validate a labeling document");
    c_verify->add_option("path", verify_path, "JSON labeling document")->required();
    auto* c_analyze = app.add_subcommand("analyze", "per-step metrics of the optimal ordering");
    add_dims(c_analyze);
    auto* c_oracle = app.add_subcommand("oracle", "exact brute-force ground truth");
    c_oracle->add_option("kind", oracle_kind, "rn | tplus")->required();
    add_dims(c_oracle);
    c_oracle->add_flag("--force", force, "lift the rn oracle size guard (up to n = 22)");
    c_oracle->add_option("--out", out_path, "write the witness labeling here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (c_rn->parsed()) return cmd_rn(a, b, out);
        if (c_tplus->parsed()) return cmd_tplus(a, b, out);
        if (c_label->parsed()) return cmd_label(a, b, format, out_path, out);
        if (c_verify->parsed()) return cmd_verify(verify_path, out);
        if (c_analyze->parsed()) return cmd_analyze(a, b, out);
        if (c_oracle->parsed()) return cmd_oracle(oracle_kind, a, b, force, out_path, out);
        err << "no subcommand\n";
        return kExitInput;
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const unsupported_size_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace radiogrid
