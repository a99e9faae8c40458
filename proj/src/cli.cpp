#include "minorlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "minorlab/adversary.hpp"
#include "minorlab/containment.hpp"
#include "minorlab/detector.hpp"
#include "minorlab/graph_io.hpp"
#include "minorlab/isomorphism.hpp"
#include "minorlab/minor_theory.hpp"
#include "minorlab/spectral.hpp"
#include "minorlab/vertex_cover.hpp"
#include "minorlab/walk_cost.hpp"

namespace minorlab::cli {

namespace {

using nlohmann::json;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

json edges_json(const std::vector<std::pair<int, int>>& edges) {
    json arr = json::array();
    for (auto [u, v] : edges) arr.push_back(json::array({u, v}));
    return arr;
}

json witness_json(const ContainmentWitness& w) {
    json out;
    switch (w.kind) {
        case ContainmentKind::subgraph: out["kind"] = "subgraph"; break;
        case ContainmentKind::induced_subgraph: out["kind"] = "induced"; break;
        case ContainmentKind::minor: out["kind"] = "minor"; break;
        case ContainmentKind::topological_minor: out["kind"] = "topological-minor"; break;
    }
    if (!w.vertex_map.empty()) out["vertex_map"] = w.vertex_map;
    if (!w.branch_sets.empty()) out["branch_sets"] = w.branch_sets;
    if (!w.paths.empty()) out["paths"] = w.paths;
    return out;
}

json quantities_json(const AdversaryQuantities& q) {
    json out;
    out["m"] = q.m;
    out["m_prime"] = q.m_prime;
    out["l_max"] = q.l_max;
    out["quantum_bound"] = q.quantum_bound;
    out["classical_bound"] = q.classical_bound;
    out["v"] = {{"num", q.v_num}, {"den", q.v_den}};
    return out;
}

struct AdversaryArgs {
    std::string family = "forest";
    int n = 12;
    int d = 3;
    std::string edge = "0,1";
    std::string pattern;
    std::string sweep;
    bool check_explicit = false;
};

std::unique_ptr<RelationFamily> make_family(const AdversaryArgs& a) {
    if (a.family == "forest") return family_forest();
    if (a.family == "clique") return family_clique(a.d);
    if (a.family == "edge-split") {
        Graph base = a.pattern.empty() ? complete_graph(4) : resolve_pattern(a.pattern);
        int u = 0, v = 1;
        if (std::sscanf(a.edge.c_str(), "%d,%d", &u, &v) != 2)
            throw std::invalid_argument("--edge expects 'u,v'");
        return family_edge_split(base, u, v);
    }
    throw std::invalid_argument("unknown family: " + a.family + " (forest, clique, edge-split)");
}

std::vector<int> parse_sizes(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

CostBreakdown run_plan(const std::string& plan, const std::string& pattern_spec, int k, double n,
                       double mbar, double c_param, const std::vector<double>& t) {
    if (plan == "basic") return plan_basic(resolve_pattern(pattern_spec), n, t, c_param);
    if (plan == "dangling") return plan_dangling(resolve_pattern(pattern_spec), n, t, c_param);
    if (plan == "paths") return plan_paths(k, n, t, c_param);
    if (plan == "pseudosparse") return plan_pseudosparse(resolve_pattern(pattern_spec), n, mbar);
    if (plan == "fourcycle") return plan_fourcycle(n);
    throw std::invalid_argument("unknown plan: " + plan +
                                " (basic, dangling, paths, pseudosparse, fourcycle)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"workbench for graph containment, adversary bounds, and walk cost models"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --format appear after the subcommand
    std::string format = "json";
    app.add_option("--format", format, "output format: json, csv, or text")->capture_default_str();

    // contain
    auto* contain = app.add_subcommand("contain", "test pattern containment in a host graph");
    std::string c_pattern, c_graph, c_kind = "subgraph";
    contain->add_option("--pattern", c_pattern, "pattern graph (file or builtin)")->required();
    contain->add_option("--graph", c_graph, "host graph (file or builtin)")->required();
    contain->add_option("--kind", c_kind, "subgraph, induced, minor, or topological");

    // beta / classify
    auto* beta_cmd = app.add_subcommand("beta", "count internal edges");
    auto* classify_cmd = app.add_subcommand("classify", "classify edges as internal or external");
    std::string b_graph;
    beta_cmd->add_option("--graph", b_graph, "graph (file or builtin)")->required();
    std::string cl_graph;
    classify_cmd->add_option("--graph", cl_graph, "graph (file or builtin)")->required();

    // vc
    auto* vc_cmd = app.add_subcommand("vc", "minimum vertex cover");
    std::string vc_graph;
    vc_cmd->add_option("--graph", vc_graph, "graph (file or builtin)")->required();

    // adversary
    auto* adv = app.add_subcommand("adversary", "adversary bound quantities");
    AdversaryArgs aa;
    adv->add_option("--family", aa.family, "forest, clique, or edge-split")->capture_default_str();
    adv->add_option("--n", aa.n, "input size")->capture_default_str();
    adv->add_option("--d", aa.d, "clique size for the clique family")->capture_default_str();
    adv->add_option("--pattern", aa.pattern, "base graph for edge-split (file or builtin)");
    adv->add_option("--edge", aa.edge, "edge 'u,v' for edge-split")->capture_default_str();
    adv->add_option("--sweep", aa.sweep, "comma-separated sizes; emits a CSV table");
    adv->add_flag("--check-explicit", aa.check_explicit, "cross-check against full enumeration");

    // walk-cost
    auto* wc = app.add_subcommand("walk-cost", "evaluate a quantum walk cost plan");
    std::string wc_plan = "basic", wc_pattern = "cycle:3", wc_t;
    int wc_k = 7;
    double wc_n = 1 << 20, wc_mbar = 0, wc_c = 1.0;
    wc->add_option("--plan", wc_plan, "basic, dangling, paths, pseudosparse, fourcycle")
        ->capture_default_str();
    wc->add_option("--pattern", wc_pattern, "pattern graph (file or builtin)")->capture_default_str();
    wc->add_option("--k", wc_k, "path length for the paths plan")->capture_default_str();
    wc->add_option("--n", wc_n, "input size")->capture_default_str();
    wc->add_option("--mbar", wc_mbar, "edge budget for pseudosparse (default n^1.5)");
    wc->add_option("--c-param", wc_c, "sparsity constant")->capture_default_str();
    wc->add_option("--t", wc_t, "comma-separated bucket candidate counts");

    // exponents
    auto* expo = app.add_subcommand("exponents", "fitted cost-model exponents as CSV");

    // detect
    auto* det = app.add_subcommand("detect", "classical reference detection pipeline");
    std::string d_graph, d_pattern, d_mode = "basic";
    std::uint64_t d_seed = 0;
    double d_conf = 0.9, d_c = 1.0;
    det->add_option("--graph", d_graph, "host graph (file or builtin)")->required();
    det->add_option("--pattern", d_pattern, "pattern (file or builtin, e.g. builtin:kpath:5)")->required();
    det->add_option("--mode", d_mode, "basic, dangling, paths, or fourcycle")->capture_default_str();
    det->add_option("--seed", d_seed, "random seed for color rounds")->capture_default_str();
    det->add_option("--confidence", d_conf, "target confidence of color coding")->capture_default_str();
    det->add_option("--c-param", d_c, "sparsity constant of the edge-count gate")->capture_default_str();

    // suitability
    auto* suit = app.add_subcommand("suitability",
                                    "bounded edge-suitability check against forbidden families");
    std::string s_graph, s_edge = "0,1";
    std::vector<std::string> s_tm, s_sub;
    int s_lmax = 3;
    suit->add_option("--graph", s_graph, "graph (file or builtin)")->required();
    suit->add_option("--edge", s_edge, "edge 'u,v' to replace")->capture_default_str();
    suit->add_option("--lmax", s_lmax, "largest replacement path length tested")
        ->capture_default_str();
    suit->add_option("--forbid-tm", s_tm, "forbidden topological minors (repeatable)");
    suit->add_option("--forbid-sub", s_sub, "forbidden subgraphs (repeatable)");

    // thresholds
    auto* thr = app.add_subcommand("thresholds", "extremal edge-count thresholds");
    std::string t_kind = "kst";
    int t_s = 2, t_t = 2, t_l = 2;
    double t_n = 1024, t_c = 1.0;
    thr->add_option("--kind", t_kind, "kst or bondy-simonovits")->capture_default_str();
    thr->add_option("--s", t_s, "s of K_{s,t}")->capture_default_str();
    thr->add_option("--t-param", t_t, "t of K_{s,t}")->capture_default_str();
    thr->add_option("--l", t_l, "half-length of the even cycle")->capture_default_str();
    thr->add_option("--n", t_n, "vertex count")->capture_default_str();
    thr->add_option("--c-param", t_c, "constant for the KST bound")->capture_default_str();

    std::vector<std::string> argv_copy(args.begin(), args.end());
    std::reverse(argv_copy.begin(), argv_copy.end());
    try {
        app.parse(argv_copy);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*contain) {
            Graph h = resolve_pattern(c_pattern);
            Graph g = resolve_pattern(c_graph);
            std::optional<ContainmentWitness> w;
            if (c_kind == "subgraph")
                w = is_subgraph(h, g);
            else if (c_kind == "induced")
                w = is_subgraph(h, g, true);
            else if (c_kind == "minor")
                w = is_minor(h, g);
            else if (c_kind == "topological")
                w = is_topological_minor(h, g);
            else
                throw std::invalid_argument("unknown kind: " + c_kind);
            json j;
            j["kind"] = c_kind;
            j["contains"] = w.has_value();
            if (w) j["witness"] = witness_json(*w);
            if (format == "text")
                out << (w ? "contained" : "not contained") << '\n';
            else
                out << j.dump() << '\n';
        } else if (*beta_cmd || *classify_cmd) {
            Graph g = resolve_pattern(*beta_cmd ? b_graph : cl_graph);
            auto cls = classify_edges(g);
            json j;
            j["beta"] = static_cast<int>(cls.internal_edges.size());
            j["internal_edges"] = edges_json(cls.internal_edges);
            j["external_edges"] = edges_json(cls.external_edges);
            if (*classify_cmd) j["dangling_paths"] = cls.dangling_paths;
            if (format == "text")
                out << "beta " << cls.internal_edges.size() << '\n';
            else
                out << j.dump() << '\n';
        } else if (*vc_cmd) {
            Graph g = resolve_pattern(vc_graph);
            auto cover = min_vertex_cover(g);
            json j;
            j["size"] = cover.size;
            j["cover"] = cover.vertices;
            if (format == "text")
                out << "vc " << cover.size << '\n';
            else
                out << j.dump() << '\n';
        } else if (*adv) {
            auto family = make_family(aa);
            if (!aa.sweep.empty()) {
                out << "family,n,m,m_prime,l_max,quantum_bound,classical_bound\n";
                for (int n : parse_sizes(aa.sweep)) {
                    auto q = quantities_symmetric(*family, n);
                    out << family->name() << ',' << n << ',' << q.m << ',' << q.m_prime << ','
                        << q.l_max << ',' << fmt(q.quantum_bound) << ',' << fmt(q.classical_bound)
                        << '\n';
                }
            } else {
                auto q = quantities_symmetric(*family, aa.n);
                json j = quantities_json(q);
                j["family"] = family->name();
                j["n"] = aa.n;
                if (aa.check_explicit) {
                    auto qe = quantities_explicit(*family, aa.n);
                    j["explicit"] = quantities_json(qe);
                    j["agree"] =
                        q.m == qe.m && q.m_prime == qe.m_prime && q.l_max == qe.l_max &&
                        q.v_num * qe.v_den == qe.v_num * q.v_den;
                }
                out << j.dump() << '\n';
            }
        } else if (*wc) {
            std::vector<double> t;
            if (!wc_t.empty())
                for (int v : parse_sizes(wc_t)) t.push_back(v);
            double mbar = wc_mbar > 0 ? wc_mbar : std::pow(wc_n, 1.5);
            auto plan = run_plan(wc_plan, wc_pattern, wc_k, wc_n, mbar, wc_c, t);
            json j;
            j["plan"] = wc_plan;
            j["n"] = wc_n;
            j["setup"] = plan.setup;
            j["update"] = plan.update;
            j["checking"] = plan.checking;
            j["gap"] = plan.gap;
            j["marked_fraction"] = plan.marked_fraction;
            j["total"] = plan.total;
            json buckets = json::array();
            for (const auto& b : plan.buckets)
                buckets.push_back({{"q", b.q}, {"t", b.t}, {"k", b.k}, {"alpha", b.alpha}});
            j["buckets"] = buckets;
            if (format == "text")
                out << "total " << fmt(plan.total) << '\n';
            else
                out << j.dump() << '\n';
        } else if (*expo) {
            out << "problem,predicted_exponent,fitted_exponent,residual\n";
            for (const auto& row : exponent_table()) {
                out << row.problem << ',' << fmt(row.predicted) << ',' << fmt(row.fitted) << ','
                    << fmt(row.residual) << '\n';
                if (!row.note.empty()) err << "note: " << row.problem << ": " << row.note << '\n';
            }
        } else if (*det) {
            Graph g = resolve_pattern(d_graph);
            Graph pattern = resolve_pattern(d_pattern);
            DetectMode mode;
            if (d_mode == "basic")
                mode = DetectMode::basic;
            else if (d_mode == "dangling")
                mode = DetectMode::dangling;
            else if (d_mode == "paths")
                mode = DetectMode::paths;
            else if (d_mode == "fourcycle")
                mode = DetectMode::fourcycle;
            else
                throw std::invalid_argument("unknown mode: " + d_mode);
            OracleGraph oracle(g);
            auto report = detect_subgraph(oracle, pattern, mode, d_seed, d_conf, d_c);
            json j;
            j["found"] = report.found;
            j["gate_accepted"] = report.gate_accepted;
            if (report.witness)
                j["witness"] = *report.witness;
            else
                j["witness"] = nullptr;
            j["probes"] = report.probes;
            j["rounds"] = report.rounds;
            out << j.dump() << '\n';
        } else if (*suit) {
            Graph g = resolve_pattern(s_graph);
            int u = 0, v = 1;
            if (std::sscanf(s_edge.c_str(), "%d,%d", &u, &v) != 2)
                throw std::invalid_argument("--edge expects 'u,v'");
            std::vector<Graph> tm, sub;
            for (const auto& spec : s_tm) tm.push_back(resolve_pattern(spec));
            for (const auto& spec : s_sub) sub.push_back(resolve_pattern(spec));
            auto verdict =
                check_edge_suitability(ForbiddenFamily::make(std::move(tm), std::move(sub)), g, u, v,
                                       s_lmax);
            json j;
            j["suitable"] = verdict.suitable;
            j["lmax"] = verdict.lmax;
            if (!verdict.suitable) j["fail"] = json::array({verdict.fail_p, verdict.fail_q});
            if (format == "text")
                out << (verdict.suitable ? "suitable up to lmax " + std::to_string(verdict.lmax)
                                         : "unsuitable")
                    << '\n';
            else
                out << j.dump() << '\n';
        } else if (*thr) {
            ThresholdParams params;
            params.s = t_s;
            params.t = t_t;
            params.l = t_l;
            ThresholdKind kind;
            if (t_kind == "kst")
                kind = ThresholdKind::kst;
            else if (t_kind == "bondy-simonovits" || t_kind == "bs")
                kind = ThresholdKind::bondy_simonovits;
            else
                throw std::invalid_argument("unknown threshold kind: " + t_kind);
            double value = edge_threshold(kind, params, t_n, t_c);
            json j;
            j["kind"] = t_kind;
            j["n"] = t_n;
            j["threshold"] = value;
            if (format == "text")
                out << fmt(value) << '\n';
            else
                out << j.dump() << '\n';
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace minorlab::cli
