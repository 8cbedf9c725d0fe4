// Runs the built executable and checks output and exit codes.

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(NASHTORIC_BIN) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class TempDir {
public:
    explicit TempDir(const std::string& tag) : path_(fs::temp_directory_path() / ("nashtoric_cli_" + tag)) {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path_ / name) << text;
        return (path_ / name).string();
    }
    std::string path(const std::string& name = "") const { return (name.empty() ? path_ : path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

const char* const kA = R"({"generators": [[1,0],[1,1],[1,2],[1,3]]})";
const char* const kB = R"({"generators": [[2,0],[3,0],[2,6],[0,4],[0,5]], "names": ["x","y","z","w","t"]})";
const char* const kC = R"({"generators": [[2,0],[1,2],[0,3],[0,5]], "names": ["x","y","z","w"]})";

}  // namespace

TEST_CASE("validate") {
    TempDir d("validate");
    auto ok = run("validate --input " + d.write("a.json", kA));
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "l=1 m=2 n=1 N=4 r=2"));

    auto nm = run("validate --input " + d.write("nm.json", R"({"generators": [[1,0],[2,0],[0,1]]})"));
    CHECK(nm.code == 2);
    CHECK(contains(nm.out, "NotMinimal: generator (2,0)"));

    auto one = run("validate --input " + d.write("one.json", R"({"generators": [[1,0]]})"));
    CHECK(one.code == 2);
    CHECK(contains(one.out, "ConeNotTwoDimensional"));

    auto stdin_run = run("validate < " + d.path("a.json"));
    CHECK(stdin_run.code == 0);
    CHECK(stdin_run.out == ok.out);
}

TEST_CASE("parse errors exit with 1") {
    TempDir d("parse");
    CHECK(run("validate --input " + d.write("f.json", R"({"generators": [[1.5,0],[0,1],[1,1]]})")).code == 1);
    CHECK(run("validate --input " + d.write("g.json", "[[1,0]]")).code == 1);
    CHECK(run("analyze --input " + d.path("missing.json")).code == 1);
    CHECK(run("analyze --order grlex --input " + d.write("a.json", kA)).code == 1);
    CHECK(run("--no-such-flag").code == 1);
}

TEST_CASE("analyze") {
    TempDir d("analyze");
    auto a = run("analyze --input " + d.write("a.json", kA));
    CHECK(a.code == 0);
    CHECK(contains(a.out, "never_equal"));

    auto b = run("analyze --input " + d.write("b.json", kB));
    CHECK(b.code == 0);
    CHECK(contains(b.out, "always_equal"));

    auto c = run("analyze --input " + d.write("c.json", kC) + " --out " + d.path("c1.json"));
    CHECK(c.code == 0);
    CHECK(contains(c.out, "exists_equal"));
    auto json = nlohmann::json::parse(slurp(d.path("c1.json")));
    CHECK(json["verdict"]["witness"] == nlohmann::json::array({1, 2}));

    CHECK(run("analyze --jobs 3 --input " + d.path("c.json") + " --out " + d.path("c3.json")).code == 0);
    CHECK(slurp(d.path("c1.json")) == slurp(d.path("c3.json")));

    auto g = run("analyze --family groebner --order degrevlex --input " + d.path("b.json"));
    CHECK(g.code == 0);
    CHECK(contains(g.out, "always_equal"));
}

TEST_CASE("examples") {
    auto bundled = run("examples");
    CHECK(bundled.code == 0);
    CHECK(contains(bundled.out, "3/3 fixtures pass"));
    CHECK(run("--examples").code == 0);

    TempDir empty("empty_corpus");
    CHECK(run("examples --corpus " + empty.path()).code == 1);

    TempDir d("corpus");
    d.write("good.json", R"({"name": "good", "input": {"generators": [[1,0],[1,1],[1,2],[1,3]]},
        "expect": {"ideal": ["x1*y2 - y1^2", "x1*z1 - y1*y2", "y1*z1 - y2^2"], "s_min": 3}})");
    auto pass = run("examples --corpus " + d.path());
    CHECK(pass.code == 0);
    CHECK(contains(pass.out, "1/1 fixtures pass"));

    d.write("corrupt.json", R"({"name": "corrupt", "input": {"generators": [[1,0],[1,1],[1,2],[1,3]]},
        "expect": {"ideal": ["x1*y2 - y1^2", "x1*z1 - y1*y2"], "observed": "always_equal"}})");
    auto fail = run("examples --corpus " + d.path());
    CHECK(fail.code == 3);
    CHECK(contains(fail.out, "fixture corrupt: FAIL"));
    CHECK(contains(fail.out, "ideal: expected"));
}
