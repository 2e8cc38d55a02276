#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved

    std::string first_line() const {
        auto pos = output.find('\n');
        return pos == std::string::npos ? output : output.substr(0, pos);
    }
    std::vector<std::string> lines() const {
        std::vector<std::string> out;
        std::string cur;
        for (char c : output) {
            if (c == '\n') {
                out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) out.push_back(cur);
        return out;
    }
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(IASL_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

/// Fresh scratch directory per test case, removed on destruction.
struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("iasl-cli-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name, const std::string& content) const {
        fs::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
    std::string at(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("construct then verify round-trips as a filtered labeling") {
    TempDir tmp;
    auto constructed = run("construct --ground 0,1,2 --out-graph " + tmp.at("g.txt") +
                           " --out-labeling " + tmp.at("f.txt"));
    CHECK(constructed.exit_code == 0);
    CHECK(constructed.output.find("4 vertices, 3 edges") != std::string::npos);
    CHECK(constructed.output.find("ground {0,1,2}") != std::string::npos);

    auto verified = run("verify --graph " + tmp.at("g.txt") + " --labeling " + tmp.at("f.txt"));
    CHECK(verified.exit_code == 0);
    CHECK(verified.output.find("iasfl: true") != std::string::npos);
    CHECK(verified.output.find("tiasl: true") != std::string::npos);
    CHECK(verified.output.find("iasgl: false") != std::string::npos);

    // and for every other supported ground-set size
    for (std::string ground : {"0,1", "0,1,2,3", "0,1,2,3,4"}) {
        auto c = run("construct --ground " + ground + " --out-graph " + tmp.at("g.txt") +
                     " --out-labeling " + tmp.at("f.txt"));
        REQUIRE(c.exit_code == 0);
        auto v = run("verify --graph " + tmp.at("g.txt") + " --labeling " + tmp.at("f.txt"));
        CHECK(v.exit_code == 0);
        CHECK(v.output.find("iasfl: true") != std::string::npos);
    }
}

TEST_CASE("construct writes default file names in the working directory") {
    TempDir tmp;
    std::string cmd = "cd " + tmp.path.string() + " && " + std::string(IASL_CLI_PATH) +
                      " construct --ground 0,1 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {
    }
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(fs::exists(tmp.path / "iasf-graph.txt"));
    CHECK(fs::exists(tmp.path / "iasf-labeling.txt"));
}

TEST_CASE("search reports UNSAT with the order reason on a path") {
    TempDir tmp;
    std::string p3 = tmp.file("p3.txt", "a b\nb c\n");
    auto res = run("search --graph " + p3);
    CHECK(res.exit_code == 1);
    CHECK(res.first_line() == "UNSAT: order 3 is not 2^{n-1}");
}

TEST_CASE("search SAT output re-verifies through the labeling parser") {
    TempDir tmp;
    std::string star = tmp.file("star.txt", "a b\na c\na d\n");
    auto res = run("search --graph " + star + " --bound 6");
    REQUIRE(res.exit_code == 0);
    auto lines = res.lines();
    REQUIRE(lines.size() >= 4);
    CHECK(lines[0] == "SAT");
    // everything after the SAT marker parses as a labeling file (the
    // # explored / # searched lines are comments in that format)
    std::string witness_text;
    for (std::size_t i = 1; i < lines.size(); ++i) witness_text += lines[i] + "\n";
    std::string witness = tmp.file("witness.txt", witness_text);
    auto verified = run("verify --graph " + star + " --labeling " + witness);
    CHECK(verified.exit_code == 0);
    CHECK(verified.output.find("iasfl: true") != std::string::npos);
}

TEST_CASE("search over a cycle exhausts its universe") {
    TempDir tmp;
    std::string c4 = tmp.file("c4.txt", "a b\nb c\nc d\nd a\n");
    auto res = run("search --graph " + c4 + " --bound 6");
    CHECK(res.exit_code == 1);
    CHECK(res.first_line() == "UNSAT: exhausted X in {0..6} with 0 in X and |X| = 3");
}

TEST_CASE("search json output carries the full result") {
    TempDir tmp;
    std::string p3 = tmp.file("p3.txt", "a b\nb c\n");
    auto res = run("search --graph " + p3 + " --json");
    CHECK(res.exit_code == 1);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j["status"] == "unsat");
    CHECK(j["witness"].is_null());
    CHECK(j["reason"] == "order 3 is not 2^{n-1}");
    CHECK(j["searched_universe"] == "none");

    std::string k2 = tmp.file("k2.txt", "a b\n");
    auto sat = run("search --graph " + k2 + " --json");
    CHECK(sat.exit_code == 0);
    auto js = nlohmann::json::parse(sat.output);
    CHECK(js["status"] == "sat");
    CHECK(js["witness"]["ground"] == "0,1");
    CHECK(js["witness"]["assignment"]["a"] == "0");
    CHECK(js["witness"]["assignment"]["b"] == "0,1");
}

TEST_CASE("verify rejects a labeling naming an unknown vertex") {
    TempDir tmp;
    std::string g = tmp.file("g.txt", "a b\n");
    std::string bad = tmp.file("bad.txt", "a: 1\nq: 2\n");
    auto res = run("verify --graph " + g + " --labeling " + bad);
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("unknown vertex 'q'") != std::string::npos);
    CHECK(res.output.find("bad.txt") != std::string::npos);
}

TEST_CASE("verify reports a non-injective labeling with exit 1") {
    TempDir tmp;
    std::string g = tmp.file("g.txt", "a b\n");
    std::string f = tmp.file("f.txt", "a: 1\nb: 1\n");
    auto res = run("verify --graph " + g + " --labeling " + f);
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("iasl: false") != std::string::npos);
}

TEST_CASE("verify json matches the report schema and the text output") {
    TempDir tmp;
    std::string g = tmp.file("g.txt", "a b\nb c\n");
    std::string f = tmp.file("f.txt", "ground: 0,1\na: 1\nb: 0\nc: 0,1\n");
    auto text = run("verify --graph " + g + " --labeling " + f);
    auto json = run("verify --graph " + g + " --labeling " + f + " --json");
    CHECK(text.exit_code == 0);
    CHECK(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.output);
    std::vector<std::string> expect = {"iasl",
                                       "iasi",
                                       "iasfl",
                                       "iasfl_by_characterization",
                                       "eiasl",
                                       "eiasl_by_characterization",
                                       "tiasl",
                                       "iasgl",
                                       "iassl",
                                       "wiasl",
                                       "wiasl_by_characterization",
                                       "siasl",
                                       "siasl_by_characterization",
                                       "arithmetic",
                                       "uniform_k"};
    CHECK(j.size() == expect.size());
    for (const auto& key : expect) {
        REQUIRE(j.contains(key));
        if (key == "uniform_k") continue;
        bool json_true = j[key].is_boolean() && j[key].get<bool>();
        bool text_true = text.output.find(key + ": true") != std::string::npos;
        // guard against substring aliasing (iasl is a prefix of several keys)
        if (key == "iasl" || key == "iasi") continue;
        CHECK(json_true == text_true);
    }
    CHECK(j["iasgl"] == true);
    CHECK(j["iassl"]["value"] == false);
}

TEST_CASE("oracle lists matches in canonical order") {
    TempDir tmp;
    std::string p3 = tmp.file("p3.txt", "a b\nb c\n");
    auto res = run("oracle --graph " + p3 + " --ground 0,1 --predicate iasgl");
    CHECK(res.exit_code == 0);
    CHECK(res.output ==
          "match: a={1} b={0} c={0,1}\n"
          "match: a={0,1} b={0} c={1}\n"
          "count: 2\n");

    auto counted = run("oracle --graph " + p3 + " --ground 0,1 --predicate iasgl --count-only");
    CHECK(counted.output == "count: 2\n");
}

TEST_CASE("oracle scale guard is an input error unless forced") {
    TempDir tmp;
    std::string big = tmp.file("big.txt", "a b\nb c\nc d\nd e\ne f\nf g\n");
    auto refused = run("oracle --graph " + big + " --ground 0,1 --predicate iasl");
    CHECK(refused.exit_code == 2);
    CHECK(refused.output.find("enumeration guard") != std::string::npos);

    auto forced = run("oracle --graph " + big + " --ground 0,1 --predicate iasl --force");
    CHECK(forced.exit_code == 0);
    CHECK(forced.output == "count: 0\n");
}

TEST_CASE("theorem suite prints one line per item plus a JSON summary") {
    auto res = run("theorems --max-n 2");
    CHECK(res.exit_code == 0);
    auto lines = res.lines();
    REQUIRE(lines.size() == 11);
    for (int i = 0; i < 10; ++i) {
        std::string prefix = "PASS item-" + std::to_string(i + 1) + " ";
        CHECK(lines[i].substr(0, prefix.size()) == prefix);
    }
    auto j = nlohmann::json::parse(lines[10]);
    CHECK(j["all_pass"] == true);
    CHECK(j["max_ground_size"] == 2);
    CHECK(j["items"].size() == 10);
}

TEST_CASE("theorem suite rejects out-of-range sizes") {
    auto res = run("theorems --max-n 1");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("error:") != std::string::npos);
}

TEST_CASE("malformed inputs and flags exit 2") {
    TempDir tmp;
    std::string bad = tmp.file("bad.txt", "a b\nb b\n");
    auto loop = run("verify --graph " + bad + " --labeling " + bad);
    CHECK(loop.exit_code == 2);
    CHECK(loop.output.find("line 2") != std::string::npos);

    CHECK(run("search --graph " + tmp.at("missing.txt")).exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
    CHECK(run("search --graph x --bogus-flag").exit_code == 2);
    CHECK(run("").exit_code == 2);  // a subcommand is required
    CHECK(run("--help").exit_code == 0);
    CHECK(run("search --help").exit_code == 0);
}
