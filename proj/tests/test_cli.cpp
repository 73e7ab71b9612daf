#include "reference_values.hpp"

#include <crgkit/crg.hpp>
#include <crgkit/dalmatian.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Outcome
{
    int code = -1;
    std::string out;
    std::string err;
};

auto scratch() -> fs::path
{
    const auto dir = fs::temp_directory_path() / "crgkit_cli_test";
    fs::create_directories(dir);
    return dir;
}

auto slurp(const fs::path & path) -> std::string
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

auto write(const std::string & name, const std::string & text) -> std::string
{
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
}

auto data(const std::string & name) -> std::string { return std::string(CRGKIT_DATA) + "/" + name; }

auto run(const std::string & args) -> Outcome
{
    const auto err_path = scratch() / "stderr.txt";
    const std::string cmd = std::string(CRGKIT_CLI) + " " + args + " 2>" + err_path.string();
    Outcome r;
    FILE * pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    return r;
}

auto lines(const std::string & text) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

auto fields(const std::string & line) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');)
        out.push_back(f);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

} // namespace

TEST(Cli, PathsTable)
{
    const auto r = run("paths-table --dmax 15");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 14U);
    EXPECT_EQ(rows[0], "d,lo,hi");
    for (std::size_t i = 0; i < reference::path_rows.size(); ++i) {
        const auto & ref = reference::path_rows[i];
        EXPECT_EQ(rows[i + 1], std::to_string(ref.d) + "," + ref.lo + "," + ref.hi);
    }
}

TEST(Cli, EdfunOfAnEdgeIsTheDensity)
{
    const auto r = run("edfun --graph " + data("k2.txt") + " --grid 0:0.05:1");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 22U);
    EXPECT_EQ(rows[0], "p,ed,validity,witness");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = fields(rows[i]);
        ASSERT_EQ(f.size(), 4U);
        EXPECT_EQ(f[0], f[1]);
        const double p = std::stod(f[0]);
        EXPECT_EQ(f[2], p >= 0.38196601125010515 && p <= 0.6180339887498949 ? "EXACT" : "UPPER_BOUND");
    }
}

TEST(Cli, EdfunOfANonEdge)
{
    const auto r = run("edfun --graph " + data("empty2.txt") + " --grid 0:0.1:1");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 12U);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = fields(rows[i]);
        EXPECT_NEAR(std::stod(f[1]), 1.0 - std::stod(f[0]), 1e-12);
    }
}

TEST(Cli, GValueOfADalmatian)
{
    const auto r = run("g-value --crg " + data("d3.crg") + " --grid 0.2:0.2:0.4");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 3U);
    EXPECT_EQ(rows[0], "p,g,is_core,kkt_residual,support,x");
    const auto a = fields(rows[1]);
    const auto b = fields(rows[2]);
    EXPECT_NEAR(std::stod(a[1]), 0.2 + 0.6 / 3.0, 1e-12);
    EXPECT_EQ(b[1], "0.466666666667");
    EXPECT_EQ(b[2], "true");
    EXPECT_EQ(b[4], "0 1 2");
}

TEST(Cli, CoreCheck)
{
    const auto r = run("core-check --crg " + data("d3.crg") + " --p 0.4");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "p,is_core,core_vertices,colors_ok\n0.4,true,0 1 2,true\n");
}

TEST(Cli, Embed)
{
    auto r = run("embed --graph " + data("p4.txt") + " --crg " + data("d3.crg"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "NONE\n");
    r = run("embed --graph " + data("k2.txt") + " --crg " + data("d3.crg"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out).size(), 1U);
    EXPECT_NE(r.out, "NONE\n");
}

TEST(Cli, ProhibitedInterval)
{
    const auto r = run("prohibited --graph " + data("p4.txt") + " --p 0.5");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_GE(rows.size(), 4U);
    EXPECT_EQ(rows[0], "lambda_min -1.61803398875");
    EXPECT_EQ(rows[1], "interval 0.38196601125 0.61803398875");
    EXPECT_EQ(rows[2], "p,doubled_value,predicted,delta_certificate");
    const auto f = fields(rows[3]);
    EXPECT_NEAR(std::stod(f[1]), std::stod(f[2]), 1e-9);
    EXPECT_LE(std::stod(f[1]), 0.0);

    const auto none = run("prohibited --graph " + data("empty2.txt"));
    EXPECT_EQ(none.code, 2);
    const auto both = run("prohibited --graph " + data("p4.txt") + " --crg " + data("d3.crg"));
    EXPECT_EQ(both.code, 2);
}

TEST(Cli, Speed)
{
    const auto r = run("speed --graph " + data("k2.txt") + " --grid 0.4:0.1:0.6");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 4U);
    EXPECT_EQ(rows[0], "p0,p_star,speed,validity,witness");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = fields(rows[i]);
        EXPECT_NEAR(std::stod(f[2]), -std::log2(1.0 - std::stod(f[0])), 1e-9);
    }
}

TEST(Cli, TrimWritesCrgAndReport)
{
    const auto crg = write("d10.crg", crgkit::render_crg(crgkit::make_dalmatian(10)));
    const auto out = (scratch() / "trimmed.crg").string();
    const auto report = (scratch() / "report.txt").string();
    const auto r = run("trim --crg " + crg + " --p 0.4 --eps 0.5 --stage support --out " + out + " --report " + report);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(crgkit::parse_crg(slurp(out)), crgkit::make_dalmatian(4));
    const auto text = slurp(report);
    EXPECT_NE(text.find("removed 0 1 2 3 4 5\n"), std::string::npos) << text;
    EXPECT_NE(text.find("kept 6 7 8 9\n"), std::string::npos);

    const auto full = run("trim --crg " + crg + " --p 0.4 --eps 0.5 --out " + out + " --report " + report);
    ASSERT_EQ(full.code, 0) << full.err;
    EXPECT_NE(slurp(report).find("path_length 4\n"), std::string::npos);
}

TEST(Cli, RandExpIsDeterministicAcrossWorkers)
{
    const auto a = (scratch() / "a.csv").string();
    const auto b = (scratch() / "b.csv").string();
    const std::string common = "rand-exp --n0 6,8 --p0 0.5 --p-grid 0.4:0.1:0.6 --seeds 4 ";
    ASSERT_EQ(run(common + "--workers 1 --out " + a).code, 0);
    ASSERT_EQ(run(common + "--workers 3 --out " + b).code, 0);
    const auto text = slurp(a);
    EXPECT_EQ(text, slurp(b));
    const auto rows = lines(text);
    ASSERT_EQ(rows.size(), 1U + 2 * 4 * 3);
    EXPECT_EQ(rows[0], "seed,n0,p0,p,ed,validity,asymptotic,ratio,chi_F,chi_Fc");

    const auto listed = run("rand-exp --n0 6 --p-grid 0.5:0.1:0.5 --seeds 3,9");
    ASSERT_EQ(listed.code, 0) << listed.err;
    const auto lrows = lines(listed.out);
    ASSERT_EQ(lrows.size(), 3U);
    EXPECT_EQ(fields(lrows[1])[0], "3");
    EXPECT_EQ(fields(lrows[2])[0], "9");
}

TEST(Cli, ErrorsAreOneLineWithDistinctCodes)
{
    auto expect_error = [](const Outcome & r, int code, const std::string & kind) {
        EXPECT_EQ(r.code, code) << r.err;
        EXPECT_EQ(r.err.rfind("error: " + kind + ":", 0), 0U) << r.err;
        EXPECT_EQ(lines(r.err).size(), 1U) << r.err;
    };
    expect_error(run("bogus"), 2, "usage");
    expect_error(run("g-value --crg " + data("d3.crg")), 2, "invalid-input");
    expect_error(run("g-value --crg " + data("d3.crg") + " --p 1.5"), 2, "invalid-input");
    expect_error(run("g-value --crg /nonexistent/x.crg --p 0.5"), 2, "invalid-input");
    expect_error(run("edfun --graph " + data("k2.txt") + " --grid 1:0.1:0"), 2, "invalid-input");
    expect_error(run("g-value --crg " + write("bad.crg", "2\nbq\nw\n") + " --p 0.5"), 3, "parse");
    expect_error(run("edfun --graph " + write("bad.txt", "2\n0 5\n") + " --p 0.5"), 3, "parse");
    expect_error(run("--cap-ed 3 edfun --graph " + data("p4.txt") + " --p 0.5"), 4, "cap");
    expect_error(run("--cap-g 2 g-value --crg " + data("d3.crg") + " --p 0.5"), 4, "cap");

    // P_4 on black vertices with white edges is not 0.45-core
    const auto not_core = write("p4.crg", "4\nbbbb\nwgg\nwg\nw\n");
    expect_error(run("trim --crg " + not_core + " --p 0.45 --stage support"), 5, "contract");
}

TEST(Cli, HelpSucceeds)
{
    const auto r = run("--help");
    EXPECT_EQ(r.code, 0);
    for (const char * sub : {"g-value", "core-check", "prohibited", "embed", "edfun", "speed", "trim", "paths-table",
                             "rand-exp"})
        EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
}
