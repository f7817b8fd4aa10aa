#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "striple/cli.hpp"
#include "striple/corpus.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = striple::cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("verify subcommand") {
    auto ok = run({"verify", "1,5/4,14645/484", "--strong"});
    CHECK(ok.code == 0);
    CHECK(ok.parsed()["verdict"] == true);

    auto fail = run({"verify", "1,2,3", "--q", "-1", "--strong"});
    CHECK(fail.code == 1);
    auto j = fail.parsed();
    CHECK(j["verdict"] == false);
    CHECK(j["conditions"]["a2a2"]["value"] == "3");
    CHECK(j["conditions"]["a2a2"]["witness"].is_null());

    auto fermat = run({"verify", "1,3,8,120", "--q", "1"});
    CHECK(fermat.code == 0);

    auto quad = run({"verify", "1,125/117,689/400,14353373/13130325", "--d", "26"});
    CHECK(quad.code == 0);

    auto euler = run({"verify", "0,1/4,14161/484", "--eulerian"});
    CHECK(euler.code == 0);

    auto bad = run({"verify", "1,xyz"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());

    auto none = run({"verify"});
    CHECK(none.code == 2);
}

TEST_CASE("verify from file") {
    std::string path = "cli_test_tuples.txt";
    {
        std::ofstream f(path);
        f << "1,5/4,14645/484\n";
        f << "493/468,1313/1088,33137/32912\n";
    }
    auto res = run({"verify", "--file", path, "--strong"});
    CHECK(res.code == 0);
    CHECK(res.parsed()["reports"].size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("generate subcommand") {
    auto a = run({"generate", "--family", "A", "--u", "1", "--m", "2"});
    CHECK(a.code == 0);
    auto ja = a.parsed();
    CHECK(ja["elements"] == json::array({"1", "5/4", "14645/484"}));
    CHECK(ja["family"] == "A");
    CHECK(ja["params"]["u"] == "1");

    auto deg = run({"generate", "--family", "A", "--u", "1", "--m", "1"});
    CHECK(deg.code == 1);
    CHECK(deg.parsed()["kind"] == "degenerate");

    auto bad = run({"generate", "--family", "A", "--u", "zilch", "--m", "2"});
    CHECK(bad.code == 2);

    auto b = run({"generate", "--family", "B", "--w", "1", "--m", "0", "--n", "1"});
    CHECK(b.code == 0);

    auto c = run({"generate", "--family", "C", "--t", "8/25", "--closed-form"});
    CHECK(c.code == 0);
    auto jc = c.parsed();
    CHECK(jc["elements"].size() == 2);

    auto maps = run({"generate", "--family", "A", "--u", "1", "--m", "2", "--show-maps"});
    CHECK(maps.code == 0);
    CHECK(maps.parsed().contains("maps"));
    CHECK(!maps.parsed()["maps"]["backward_v"].get<std::string>().empty());
}

TEST_CASE("specialize subcommand") {
    auto a = run({"specialize", "--family", "A", "--at", "6"});
    CHECK(a.code == 0);
    auto ja = a.parsed();
    CHECK(ja["curve"] == json::array({"0", "61644", "0", "836402720", "0"}));
    CHECK(ja["point"] == json::array({"-20740", "497760"}));
    CHECK(ja["point_equals_generator"] == true);

    auto b = run({"specialize", "--family", "B", "--at", "6"});
    CHECK(b.code == 0);
    auto jb = b.parsed();
    CHECK(jb["curve"] == json::array({"0", "17558832", "0", "61973480694272", "0"}));
    CHECK(jb["q_equals_generator"] == true);
    CHECK(jb["p_minus_generator_torsion"]["order"] == 2);
    CHECK(jb["p_minus_generator_torsion"]["t"] == json::array({"-12665888", "0"}));

    // a non-anchored parameter still specializes
    auto other = run({"specialize", "--family", "A", "--at", "3/2"});
    CHECK(other.code == 0);
    CHECK(other.parsed()["point_on_curve"] == true);
}

TEST_CASE("symbolic subcommand") {
    auto a = run({"symbolic", "--family", "A", "--m", "2"});
    CHECK(a.code == 0);
    auto ja = a.parsed();
    CHECK(ja["elements"].size() == 3);

    auto b = run({"symbolic", "--family", "B"});
    CHECK(b.code == 0);
    CHECK(b.parsed().contains("x_q"));

    auto c = run({"symbolic", "--family", "C"});
    CHECK(c.code == 0);
    CHECK(c.parsed().contains("closed_form_b_of_t"));
}

TEST_CASE("search subcommand emits JSON lines") {
    auto res = run({"search", "--mode", "triples", "--height", "14645", "--jobs", "2"});
    CHECK(res.code == 0);
    std::istringstream lines(res.out);
    std::string line;
    size_t count = 0;
    bool found = false;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        auto j = json::parse(line);
        ++count;
        found = found || j["elements"] == json::array({"1", "5/4", "14645/484"});
    }
    CHECK(count >= 1);
    CHECK(found);
    CHECK(res.err.find("chunk") != std::string::npos);

    auto singles = run({"search", "--mode", "singletons", "--height", "5"});
    CHECK(singles.code == 0);
}

TEST_CASE("corpus subcommand") {
    auto res = run({"corpus"});
    CHECK(res.code == 0);
    auto j = res.parsed();
    CHECK(j["verdict"] == true);
    size_t total = 0;
    for (auto& g : j["groups"]) total += g["verified"].get<size_t>();
    CHECK(total == 50); // 7 + 23 + 18 + 1 + 1
}

TEST_CASE("csv format") {
    auto res = run({"corpus", "--format", "csv"});
    CHECK(res.code == 0);
    CHECK(res.out.rfind("key,value", 0) == 0);
    CHECK(res.out.find("verdict,true") != std::string::npos);

    auto v = run({"verify", "1,5/4,14645/484", "--strong", "--format", "csv"});
    CHECK(v.code == 0);
    CHECK(v.out.find("conditions.a2a3.witness,267/44") != std::string::npos);
}

TEST_CASE("embedded corpus matches the repository data file") {
#ifdef STRIPLE_CORPUS_FILE
    std::ifstream f(STRIPLE_CORPUS_FILE);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(json::parse(buf.str()) == json::parse(striple::corpus_json_text()));
#endif
}

TEST_CASE("unknown subcommand exits 2") {
    auto res = run({"frobnicate"});
    CHECK(res.code == 2);
    auto nothing = run({});
    CHECK(nothing.code == 2);
}
