#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eulerloc/cli.hpp"
#include "eulerloc/document.hpp"

using namespace eulerloc;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "eulerloc");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("eulerloc-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string read(const std::string& name) const
    {
        std::ifstream in(path(name));
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenerateValidateEulerPair)
{
    ASSERT_EQ(cli({"generate", "--kind", "hopf", "-o", path("h.json")}).code, 0);
    const auto v = cli({"validate", path("h.json")});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("simplicial-map: PASS"), std::string::npos);
    ASSERT_EQ(cli({"fundamental-cycle", path("h.json"), "-o", path("z.json")}).code, 0);
    for (const char* f : {"harmonic", "winding", "necklace"}) {
        ASSERT_EQ(cli({"euler", path("h.json"), "--formula", f, "-o", path("c.json")}).code, 0) << f;
        const auto p = cli({"pair", path("c.json"), path("z.json")});
        EXPECT_EQ(p.code, 0);
        EXPECT_EQ(p.out, "-1/1\n") << f;
    }
}

TEST_F(CliTest, TrivialValuesSumToZero)
{
    ASSERT_EQ(cli({"generate", "--kind", "trivial", "--base", "boundary3", "--fiber", "cycle4", "--seed", "3", "-o",
                   path("t.json")})
                  .code,
              0);
    const auto e = cli({"euler", path("t.json"), "--formula", "winding", "--jobs", "2"});
    ASSERT_EQ(e.code, 0);
    const auto doc = parse_cochain(e.out);
    EXPECT_EQ(doc.values.size(), 4u);
    ASSERT_EQ(cli({"fundamental-cycle", path("t.json"), "-o", path("z.json")}).code, 0);
    write("c.json", e.out);
    EXPECT_EQ(cli({"pair", path("c.json"), path("z.json")}).out, "0/1\n");
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical)
{
    for (const char* name : {"a.json", "b.json"})
        ASSERT_EQ(cli({"generate", "--kind", "trivial", "--base", "simplex2", "--fiber", "cycle3", "--subdivide", "3",
                       "--seed", "5", "-o", path(name)})
                      .code,
                  0);
    EXPECT_EQ(read("a.json"), read("b.json"));
    cli({"euler", path("a.json"), "--formula", "harmonic", "-o", path("ca.json")});
    cli({"euler", path("a.json"), "--formula", "harmonic", "--jobs", "3", "-o", path("cb.json")});
    EXPECT_EQ(read("ca.json"), read("cb.json"));
}

TEST_F(CliTest, UsageErrorsExitTwo)
{
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"generate", "--kind", "klein"}).code, 2);
    EXPECT_EQ(cli({"euler", path("missing.json")}).code, 2);
    EXPECT_EQ(cli({"generate", "--kind", "trivial", "--fiber", "cycle1"}).code, 2);
    ASSERT_EQ(cli({"generate", "--kind", "hopf", "-o", path("h.json")}).code, 0);
    const auto text = read("h.json");
    write("cut.json", text.substr(0, text.size() / 3));
    EXPECT_EQ(cli({"validate", path("cut.json")}).code, 2);
    EXPECT_EQ(cli({"euler", path("h.json"), "--formula", "spline"}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST_F(CliTest, BrokenVertexMapExitsOne)
{
    ASSERT_EQ(cli({"generate", "--kind", "trivial", "--base", "boundary3", "-o", path("t.json")}).code, 0);
    auto data = parse_bundle(read("t.json"));
    const auto& first = data.total_simplices.front();
    // Two vertices of the first tetrahedron share a base vertex; move one of
    // them over the base vertex the tetrahedron misses.
    for (std::size_t i = 0; i + 1 < first.size(); ++i)
        if (data.vertex_map[first[i]] == data.vertex_map[first[i + 1]]) {
            data.vertex_map[first[i]] = 3;
            break;
        }
    write("broken.json", dump_bundle(data));
    const auto v = cli({"validate", path("broken.json")});
    EXPECT_EQ(v.code, 1);
    EXPECT_NE(v.out.find("simplicial-map: FAIL"), std::string::npos);
}

TEST_F(CliTest, NecklaceOnSphereFibersIsUnsupported)
{
    ASSERT_EQ(cli({"generate", "--kind", "trivial", "--base", "simplex3", "--fiber", "boundary3", "-o", path("t.json")})
                  .code,
              0);
    const auto e = cli({"euler", path("t.json"), "--formula", "necklace", "-o", path("c.json")});
    EXPECT_EQ(e.code, 1);
    EXPECT_NE(e.err.find("FormulaUnsupported"), std::string::npos);
}

TEST_F(CliTest, MismatchedBasesExitOne)
{
    cli({"generate", "--kind", "hopf", "-o", path("h.json")});
    cli({"generate", "--kind", "trivial", "--base", "torus7", "-o", path("t.json")});
    cli({"euler", path("h.json"), "-o", path("c.json")});
    cli({"fundamental-cycle", path("t.json"), "-o", path("z.json")});
    const auto p = cli({"pair", path("c.json"), path("z.json")});
    EXPECT_EQ(p.code, 1);
    EXPECT_NE(p.err.find("DigestMismatch"), std::string::npos);
}
