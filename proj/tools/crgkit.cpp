// crgkit command-line front end.
//
// Exit codes: 0 ok, 2 usage / invalid input, 3 parse, 4 cap, 5 contract.
// Errors print one line: "error: <kind>: <message>".

#include <crgkit/crg.hpp>
#include <crgkit/dalmatian.hpp>
#include <crgkit/edfun.hpp>
#include <crgkit/embed.hpp>
#include <crgkit/errors.hpp>
#include <crgkit/experiments.hpp>
#include <crgkit/gfun.hpp>
#include <crgkit/graph.hpp>
#include <crgkit/grid.hpp>
#include <crgkit/prohibit.hpp>
#include <crgkit/trim.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace crgkit;

namespace {

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

auto load_graph(const std::string & path) -> Graph { return parse_graph(read_file(path)); }
auto load_crg(const std::string & path) -> Crg { return parse_crg(read_file(path)); }

auto open_out(const std::string & path) -> std::ofstream
{
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write '" + path + "'");
    return out;
}

auto fixed(double v, int digits) -> std::string
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

auto join(const std::vector<int> & v) -> std::string
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

auto join(const std::vector<double> & v) -> std::string
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + format_real(v[i]);
    return s;
}

auto p_values(const std::string & p, const std::string & grid) -> std::vector<double>
{
    std::vector<double> ps;
    if (!grid.empty())
        ps = parse_grid(grid);
    else if (!p.empty())
        ps = {detail::parse_real(p)};
    else
        throw InvalidInput("one of --p or --grid is required");
    for (double v : ps)
        check_probability(v);
    return ps;
}

struct Options
{
    Limits limits;
    std::string graph, crg, p, grid, out, report, stage = "components", n0 = "10,12,14", seeds = "20";
    double eps = 0.5, p0 = 0.5;
    int dmax = 15;
    unsigned workers = 1;
};

void cmd_g_value(const Options & o)
{
    const auto k = load_crg(o.crg);
    const auto ps = p_values(o.p, o.grid);
    std::cout << "p,g,is_core,kkt_residual,support,x\n";
    for (double p : ps) {
        const auto r = g_value(k, p, o.limits.g_support);
        std::cout << format_real(p) << ',' << format_real(r.g) << ',' << (r.is_core ? "true" : "false") << ','
                  << format_real(r.kkt_residual) << ',' << join(r.support) << ',' << join(r.x) << '\n';
    }
}

void cmd_core_check(const Options & o)
{
    const auto k = load_crg(o.crg);
    const auto ps = p_values(o.p, o.grid);
    std::cout << "p,is_core,core_vertices,colors_ok\n";
    for (double p : ps) {
        const auto r = g_value(k, p, o.limits.g_support);
        std::cout << format_real(p) << ',' << (r.is_core ? "true" : "false") << ',' << join(core_vertices(k, p)) << ','
                  << (check_p_core_colors(k, p) ? "true" : "false") << '\n';
    }
}

void cmd_prohibited(const Options & o)
{
    if (!o.crg.empty()) {
        const auto j = load_crg(o.crg);
        const auto ps = p_values(o.p, o.grid);
        std::cout << "p,certificate,value,delta\n";
        for (double p : ps) {
            const auto c = delta_test(j, p);
            std::cout << format_real(p) << ',' << (c ? "delta" : "none") << ',' << (c ? format_real(c->value) : "") << ','
                      << (c ? join(c->delta) : "") << '\n';
        }
        return;
    }
    if (o.graph.empty())
        throw InvalidInput("prohibited needs --graph or --crg");
    const auto g = load_graph(o.graph);
    const auto cert = eigen_prohibition_interval(g);
    std::cout << "lambda_min " << format_real(cert.lambda) << "\ninterval " << format_real(cert.lo) << ' '
              << format_real(cert.hi) << '\n';
    if (!o.p.empty() || !o.grid.empty()) {
        const auto ps = p_values(o.p, o.grid);
        std::cout << "p,doubled_value,predicted,delta_certificate\n";
        for (double p : ps) {
            const auto d = doubled_delta_construction(g, p);
            const auto c = delta_test(d.doubled, p);
            std::cout << format_real(p) << ',' << format_real(d.value) << ',' << format_real(d.predicted) << ','
                      << (c ? format_real(c->value) : "none") << '\n';
        }
    }
}

void cmd_embed(const Options & o)
{
    const auto f = load_graph(o.graph);
    const auto k = load_crg(o.crg);
    const auto phi = embeds(f, k, o.limits.embed_pattern);
    if (!phi)
        std::cout << "NONE\n";
    else
        std::cout << join(*phi) << '\n';
}

void cmd_edfun(const Options & o)
{
    const EditDistance ed(load_graph(o.graph), o.limits);
    const auto ps = p_values(o.p, o.grid);
    std::cout << "p,ed,validity,witness\n";
    for (double p : ps) {
        const auto e = ed.at(p);
        std::cout << format_real(p) << ',' << format_real(e.value) << ',' << validity_name(e.validity) << ','
                  << render_config(e.witness) << '\n';
    }
}

void cmd_speed(const Options & o)
{
    const EditDistance ed(load_graph(o.graph), o.limits);
    const auto ps = p_values(o.p, o.grid);
    std::cout << "p0,p_star,speed,validity,witness\n";
    for (double p0 : ps) {
        const auto s = speed_from_ed(ed, p0);
        std::cout << format_real(p0) << ',' << format_real(s.p_star) << ',' << format_real(s.value) << ','
                  << validity_name(s.validity) << ',' << render_config(s.witness) << '\n';
    }
}

void cmd_trim(const Options & o)
{
    const auto k = load_crg(o.crg);
    const double p = detail::parse_real(o.p);
    TrimResult r;
    if (o.stage == "support")
        r = trim_to_small_support(k, p, o.eps);
    else if (o.stage == "degree")
        r = trim_to_bounded_degree(k, p, o.eps);
    else
        r = trim_bounded_components(k, p, o.eps);
    if (o.out.empty()) {
        write_crg(std::cout, r.crg);
    }
    else {
        auto out = open_out(o.out);
        write_crg(out, r.crg);
    }
    if (o.report.empty()) {
        write_trim_report(o.out.empty() ? std::cerr : std::cout, r.report);
    }
    else {
        auto rep = open_out(o.report);
        write_trim_report(rep, r.report);
    }
}

void cmd_paths_table(const Options & o)
{
    std::cout << "d,lo,hi\n";
    for (const auto & row : path_prohibition_table(o.dmax))
        std::cout << row.d << ',' << fixed(row.lo, 6) << ',' << fixed(row.hi, 6) << '\n';
}

void cmd_rand_exp(const Options & o)
{
    ExperimentPlan plan;
    for (auto n : parse_int_list(o.n0)) {
        if (n < 2 || n > max_graph_vertices)
            throw InvalidInput("n0 values must lie in [2, 64]");
        plan.n0_list.push_back(static_cast<int>(n));
    }
    plan.p0 = o.p0;
    plan.p_grid = o.grid.empty() ? std::vector<double>{0.5} : parse_grid(o.grid);
    plan.seeds = parse_seeds(o.seeds);
    plan.limits = o.limits;
    plan.workers = o.workers;
    const auto rows = run_experiment(plan);
    if (o.out.empty()) {
        write_experiment_csv(std::cout, rows);
    }
    else {
        auto out = open_out(o.out);
        write_experiment_csv(out, rows);
    }
}

auto exit_code(const Error & e) -> int
{
    const std::string k = e.kind();
    if (k == "parse")
        return 3;
    if (k == "cap")
        return 4;
    if (k == "contract")
        return 5;
    return 2;
}

} // namespace

int main(int argc, char ** argv)
{
    Options o;
    CLI::App app{"Colored regularity graphs and edit distance functions of hereditary properties"};
    app.require_subcommand(1);
    app.add_option("--cap-g", o.limits.g_support, "max CRG order for the exact g solver")->check(CLI::PositiveNumber);
    app.add_option("--cap-ed", o.limits.ed_exact, "max |V(F)| for exact edit distance")->check(CLI::PositiveNumber);
    app.add_option("--cap-embed", o.limits.embed_pattern, "max pattern order for embedding search")->check(CLI::PositiveNumber);
    app.add_option("--cap-chromatic", o.limits.chromatic, "max order for exact chromatic numbers")->check(CLI::PositiveNumber);

    auto p_or_grid = [&](CLI::App * c, const char * what) {
        c->add_option("--p", o.p, what);
        c->add_option("--grid", o.grid, "grid start:step:end");
    };

    auto * g_cmd = app.add_subcommand("g-value", "g_K(p), optimal weights and core flag as CSV");
    g_cmd->add_option("--crg", o.crg, "CRG file")->required();
    p_or_grid(g_cmd, "density p");

    auto * core_cmd = app.add_subcommand("core-check", "p-core test and core vertex set as CSV");
    core_cmd->add_option("--crg", o.crg, "CRG file")->required();
    p_or_grid(core_cmd, "density p");

    auto * pro_cmd = app.add_subcommand("prohibited", "eigenvalue interval and delta-vector certificates");
    auto * pro_graph = pro_cmd->add_option("--graph", o.graph, "graph file (associated CRG)");
    auto * pro_crg = pro_cmd->add_option("--crg", o.crg, "CRG file (direct delta test)");
    pro_graph->excludes(pro_crg);
    p_or_grid(pro_cmd, "density p");

    auto * emb_cmd = app.add_subcommand("embed", "witness map F -> K, or NONE");
    emb_cmd->add_option("--graph", o.graph, "graph file F")->required();
    emb_cmd->add_option("--crg", o.crg, "CRG file K")->required();

    auto * ed_cmd = app.add_subcommand("edfun", "ed_Forb(F)(p) as CSV p,ed,validity,witness");
    ed_cmd->add_option("--graph", o.graph, "graph file F")->required();
    p_or_grid(ed_cmd, "density p");

    auto * sp_cmd = app.add_subcommand("speed", "speed constant c(p0) as CSV");
    sp_cmd->add_option("--graph", o.graph, "graph file F")->required();
    p_or_grid(sp_cmd, "edge probability p0");

    auto * trim_cmd = app.add_subcommand("trim", "trim a CRG; writes the trimmed CRG and a text report");
    trim_cmd->add_option("--crg", o.crg, "CRG file")->required();
    trim_cmd->add_option("--p", o.p, "density p")->required();
    trim_cmd->add_option("--eps", o.eps, "epsilon in (0,1)");
    trim_cmd->add_option("--out", o.out, "trimmed CRG file (stdout if absent)");
    trim_cmd->add_option("--report", o.report, "report file (stdout after --out, else stderr)");
    trim_cmd->add_option("--stage", o.stage, "support | degree | components")
        ->check(CLI::IsMember({"support", "degree", "components"}));

    auto * pt_cmd = app.add_subcommand("paths-table", "prohibition intervals of P_d as CSV d,lo,hi");
    pt_cmd->add_option("--dmax", o.dmax, "largest d (>= 3)");

    auto * rx_cmd = app.add_subcommand("rand-exp", "random forbidden graph experiment as CSV");
    rx_cmd->add_option("--n0", o.n0, "comma-separated orders of F");
    rx_cmd->add_option("--p0", o.p0, "edge probability of F");
    rx_cmd->add_option("--p-grid", o.grid, "p grid start:step:end (default 0.5)");
    rx_cmd->add_option("--seeds", o.seeds, "seed count k (1..k) or comma list");
    rx_cmd->add_option("--out", o.out, "CSV file (stdout if absent)");
    rx_cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::Error & e) {
        std::string msg = e.what();
        for (auto & ch : msg)
            if (ch == '\n')
                ch = ' ';
        std::cerr << "error: usage: " << msg << '\n';
        return 2;
    }

    try {
        if (*g_cmd)
            cmd_g_value(o);
        else if (*core_cmd)
            cmd_core_check(o);
        else if (*pro_cmd)
            cmd_prohibited(o);
        else if (*emb_cmd)
            cmd_embed(o);
        else if (*ed_cmd)
            cmd_edfun(o);
        else if (*sp_cmd)
            cmd_speed(o);
        else if (*trim_cmd)
            cmd_trim(o);
        else if (*pt_cmd)
            cmd_paths_table(o);
        else if (*rx_cmd)
            cmd_rand_exp(o);
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
        return exit_code(e);
    }
    catch (const std::exception & e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
