#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path tmp = fs::temp_directory_path() / ("tightsrg_cli_" + std::to_string(counter++));
    std::string cmd = std::string(TIGHTSRG_CLI_PATH) + " " + args + " > " + tmp.string() +
                      " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::ostringstream buf;
    buf << in.rdbuf();
    fs::remove(tmp);
    int code = (status >= 256) ? status / 256 : status;  // WEXITSTATUS
    return {code, buf.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

}  // namespace

TEST_CASE("scan usage errors exit 2") {
    CHECK(run("scan --min-v 200 --max-v 199 --min-eplus 2").code == 2);
    CHECK(run("scan").code == 2);
    CHECK(run("bogus-subcommand").code == 2);
}

TEST_CASE("scan csv output") {
    auto r = run("scan --min-v 1 --max-v 100 --min-eplus 2 --format csv");
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "v,k,lambda,mu,eplus,eminus,mminus,s1,s2,cocliques");
    std::vector<std::string> rows;
    while (std::getline(in, line)) rows.push_back(line);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].substr(0, 9) == "76,21,2,7");
    CHECK(rows[1].substr(0, 9) == "77,16,0,4");
    CHECK(rows[2].substr(0, 12) == "95,40,12,20,");

    // byte-stable across runs
    auto r2 = run("scan --min-v 1 --max-v 100 --min-eplus 2 --format csv");
    CHECK(r2.out == r.out);
}

TEST_CASE("scan with the facts file changes the bound column") {
    std::string facts = std::string(TIGHTSRG_DATA_DIR) + "/facts.txt";
    auto with = run("scan --min-v 261 --max-v 261 --min-eplus 2 --format csv --facts-file " +
                    facts);
    CHECK(with.out.find("261,176,112,132,2,-22,29,16,18,0") != std::string::npos);
    auto without = run("scan --min-v 261 --max-v 261 --min-eplus 2 --format csv");
    CHECK(without.out.find("261,176,112,132,2,-22,29,16,18,1") != std::string::npos);
}

TEST_CASE("analyze exit codes and verdicts") {
    auto r = run("analyze --eplus 2 --eminus -6");
    CHECK(r.code == 0);
    CHECK(r.out.find("(77,16,0,4)") != std::string::npos);
    CHECK(r.out.find("at most 22") != std::string::npos);

    CHECK(run("analyze --eplus 2 --eminus -5").code == 1);  // k = 35/3
    CHECK(run("analyze --eplus 2 --eminus -4").code == 1);  // mu = 0
    CHECK(run("analyze").code == 2);

    auto fp = run("analyze --from-params 77,16,0,4");
    CHECK(fp.code == 0);
    CHECK(fp.out.find("at most 22") != std::string::npos);

    auto json = run("analyze --eplus 3 --eminus -17 --format json");
    CHECK(json.code == 0);
    CHECK(json.out.find("\"bound\": \"0\"") != std::string::npos);
    CHECK(json.out.find("blokhuis-calderbank-p") != std::string::npos);
}

TEST_CASE("graph construct and verify round trip") {
    auto g6 = run("graph construct petersen");
    REQUIRE(g6.code == 0);
    auto file = write_temp("petersen.g6", g6.out);
    auto v = run("graph verify " + file.string());
    CHECK(v.code == 0);
    CHECK(v.out.find("(10,3,0,1)") != std::string::npos);
    CHECK(v.out.find("tight") != std::string::npos);
    fs::remove(file);

    CHECK(run("graph construct kneser2 6").code == 0);
    CHECK(run("graph construct kneser2").code == 2);  // missing n
    CHECK(run("graph construct nosuch").code == 2);
}

TEST_CASE("graph verify rejects malformed input") {
    auto file = write_temp("bad.g6", "this is not graph6 at all ~~~\x01");
    CHECK(run("graph verify " + file.string()).code == 2);
    fs::remove(file);

    // structurally valid graph6 that is not an SRG
    auto path_file = write_temp("path.g6", "BG\n");  // P3
    CHECK(run("graph verify " + path_file.string()).code == 1);
    fs::remove(path_file);
}

TEST_CASE("graph cocliques output") {
    auto g6 = run("graph construct kneser2 5");
    auto file = write_temp("pet2.g6", g6.out);
    auto r = run("graph cocliques " + file.string());
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int coclique_lines = 0;
    bool has_pairwise = false, has_design = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find("pairwise") != std::string::npos) has_pairwise = true;
            if (line.find("quasisymmetric") != std::string::npos) has_design = true;
        } else {
            ++coclique_lines;
        }
    }
    CHECK(coclique_lines == 5);
    CHECK(has_pairwise);
    CHECK(has_design);
    fs::remove(file);
}

TEST_CASE("lemma-71 extension through the cli") {
    auto g6 = run("graph construct petersen");
    auto file = write_temp("pet3.g6", g6.out);
    auto r = run("graph extend-lemma71 " + file.string());
    CHECK(r.code == 0);
    auto ext = write_temp("clebsch.g6", r.out);
    auto v = run("graph verify " + ext.string());
    CHECK(v.out.find("(16,5,0,2)") != std::string::npos);
    fs::remove(file);
    fs::remove(ext);
}

TEST_CASE("design check") {
    auto fano = write_temp("fano.blk",
                           "7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n");
    auto r = run("design check " + fano.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("2-(7,3,1)") != std::string::npos);
    CHECK(r.out.find("symmetric") != std::string::npos);
    fs::remove(fano);

    auto bad = write_temp("bad.blk", "3 2\n0 1\n");
    CHECK(run("design check " + bad.string()).code == 2);
    fs::remove(bad);

    auto notdesign = write_temp("nd.blk", "3 2\n0 1\n0 2\n");
    CHECK(run("design check " + notdesign.string()).code == 1);
    fs::remove(notdesign);
}

TEST_CASE("design params") {
    auto r = run("design params --eplus 5 --eminus -45");
    CHECK(r.code == 0);
    CHECK(r.out.find("equality design 2-(111,11,1)") != std::string::npos);
}

TEST_CASE("design extend finds the petersen completion") {
    auto base = write_temp("petbase.blk", "4 3\n1 2\n1 3\n2 3\n");
    fs::path out = fs::temp_directory_path() / "found.blk";
    auto r = run("design extend " + base.string() +
                 " --target-quasisym 4,2,1,0,1,6 --max-nodes 1e6 --out " + out.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("\"status\": \"found\"") != std::string::npos);
    std::ifstream in(out);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    fs::remove(base);
    fs::remove(out);

    // budgets are mandatory
    auto base2 = write_temp("petbase2.blk", "4 3\n1 2\n1 3\n2 3\n");
    CHECK(run("design extend " + base2.string() + " --target-quasisym 4,2,1,0,1,6").code == 2);
    fs::remove(base2);
}
