#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(SATFEAT_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

std::size_t columns(const std::string& line) { return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1; }

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("satfeat_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        std::ofstream(dir_ / "e1.cnf") << "p cnf 3 4\n1 2 0\n-1 3 0\n-2 -3 0\n1 2 3 0\n";
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    fs::path dir_;
};

}  // namespace

TEST_F(Cli, ExtractAntOnE1) {
    const auto r = run("extract --set ant " + path("e1.cnf"));
    EXPECT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2u);
    EXPECT_EQ(ls[0].rfind("instance,status,", 0), 0u);
    EXPECT_EQ(columns(ls[1]), 2u + 4u);
    EXPECT_NE(ls[1].find(",OK,"), std::string::npos);
}

TEST_F(Cli, HeaderMatchesManifest) {
    const auto m = nlohmann::json::parse(run("manifest").out);
    const auto r = run("extract --set all " + path("e1.cnf"));
    std::string want = "instance,status";
    for (const auto& f : m["features"]) want += "," + f["name"].get<std::string>();
    EXPECT_EQ(lines(r.out)[0], want);
}

TEST_F(Cli, GenerateThenExtractDirectoryDeterministic) {
    ASSERT_EQ(run("generate --family random-ksat --n 30 --count 3 --seed 5 --out-dir " + path("gen")).code, 0);
    ASSERT_EQ(run("generate --family pigeonhole --holes 2 --count 1 --out-dir " + path("gen")).code, 0);
    const std::string cmd = "extract --set all --seed 9 -j 3 " + path("gen");
    const auto a = run(cmd), b = run(cmd);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(lines(a.out).size(), 5u);
    EXPECT_EQ(a.out, b.out);
    const auto one = run("extract --set all --seed 9 -j 1 " + path("gen"));
    EXPECT_EQ(one.out, a.out);
}

TEST_F(Cli, GeneratedFilesCarryLabelAndParse) {
    ASSERT_EQ(run("generate --family random-ksat --n 100 --ratio 4.2 -o " + path("r.cnf")).code, 0);
    std::ifstream in(path("r.cnf"));
    std::string first, header;
    std::getline(in, first);
    std::getline(in, header);
    EXPECT_EQ(first, "c satfeat family=random-ksat");
    EXPECT_EQ(header, "p cnf 100 420");
}

TEST_F(Cli, UnreadableFileGivesErrorRow) {
    std::ofstream(path("bad.cnf")) << "p cnf 1 1\n2 0\n";
    const auto r = run("extract --set base " + path("bad.cnf") + " " + path("e1.cnf"));
    EXPECT_NE(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 3u);
    EXPECT_NE(ls[1].find("bad.cnf,ERROR"), std::string::npos);
    EXPECT_NE(ls[2].find("e1.cnf,OK"), std::string::npos);
}

TEST_F(Cli, UnknownSetIsUsageError) { EXPECT_EQ(run("extract --set nope " + path("e1.cnf")).code, 2); }

TEST_F(Cli, SolvedRowHasEmptySatzillaCells) {
    std::ofstream(path("unsat.cnf")) << "p cnf 1 2\n1 0\n-1 0\n";
    const auto r = run("extract --set full " + path("unsat.cnf"));
    EXPECT_EQ(r.code, 0);
    const auto row = lines(r.out)[1];
    EXPECT_NE(row.find("SOLVED_BY_PREPROCESSING"), std::string::npos);
    EXPECT_EQ(row.find_first_not_of(',', row.find("SOLVED_BY_PREPROCESSING") + 23), std::string::npos);
}

TEST_F(Cli, JsonAndLabels) {
    std::ofstream(path("labels.csv")) << "e1.cnf,easy\n";
    const auto r = run("extract --set ant --format json --labels " + path("labels.csv") + " " + path("e1.cnf"));
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["status"], "OK");
    EXPECT_EQ(j[0]["label"], "easy");
    EXPECT_EQ(j[0]["features"].size(), 4u);
    EXPECT_TRUE(j[0]["features"].contains("ant_vig_modularity"));
}

TEST_F(Cli, DumpGraph) {
    ASSERT_EQ(run("extract --set base --dump-graph clauses --dump-dir " + path("dump") + " " + path("e1.cnf")).code, 0);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(path("dump"))) {
        ++files;
        std::ifstream in(e.path());
        std::stringstream ss;
        ss << in.rdbuf();
        EXPECT_EQ(ss.str(), "0 3 2\n1 3 1\n");
    }
    EXPECT_EQ(files, 1u);
}

TEST_F(Cli, BenchShape) {
    const auto r = run("bench --sizes 20,40 --sets base,ant --repeats 2 --ls-runs 2 --ls-cutoff 100");
    ASSERT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 1u + 2u * 2u);
    EXPECT_EQ(ls[0], "size,set,repeats,mean_seconds,variance_seconds");
}
