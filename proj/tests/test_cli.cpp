#include "testing.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include <bmn/json_io.hpp>

#include "bmn_app/app.hpp"

using namespace bmn;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "bmn");
    std::ostringstream out;
    std::ostringstream err;
    const int code = app::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "bmn_test_cli";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    fs::remove(p);
    return p;
}

std::vector<std::string> lines(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("simulate") {
    const Result nt = cli({"simulate", "J-- / -J-"});
    CHECK(nt.code == app::kExitNonTerminating);
    const auto j = nlohmann::json::parse(nt.out);
    CHECK(j["kind"] == "non-terminating");
    CHECK(j["period"] == 2);

    const Result t = cli({"simulate", "A- / --"});
    CHECK(t.code == app::kExitOk);
    CHECK(nlohmann::json::parse(t.out)["kind"] == "terminated");

    CHECK(cli({"simulate", "J-- / -J-", "--max-tricks", "1", "--detect", "none"}).code == app::kExitCutOff);
    CHECK(cli({"simulate", "J-- / -J-", "--detect", "floyd"}).code == app::kExitUsage);
    CHECK(cli({"simulate", "JX- / -J-"}).code == app::kExitUsage);
    CHECK(cli({"simulate", " / -J- (1)"}).code == app::kExitUsage);
    CHECK(cli({"simulate", "--file", "/nonexistent/state.txt"}).code == app::kExitIo);

    const Result cyc = cli({"simulate", "J-- / -J-", "--cycle"});
    CHECK(nlohmann::json::parse(cyc.out)["cycleStates"].size() == 2);
    const Result trace = cli({"simulate", "A- / --", "--trace"});
    CHECK(trace.code == app::kExitOk);
    CHECK(trace.out.find("1. A- 2. -- (1)") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == app::kExitUsage);
    CHECK(cli({"frobnicate"}).code == app::kExitUsage);
    CHECK(cli({"stats", "--games", "0"}).code == app::kExitUsage);
    CHECK(cli({"stats", "--games", "10", "--policy", "rigged"}).code == app::kExitUsage);
    CHECK(cli({"mutate", "J-- / -J-", "--max-edits", "4"}).code == app::kExitUsage);
    CHECK(cli({"verify", "--only", "nonsense"}).code == app::kExitUsage);
    CHECK(cli({"--help"}).code == app::kExitOk);
}

TEST_CASE("search-random log replays") {
    const fs::path log = scratch("records.jsonl");
    const Result r = cli({"search-random", "--games", "3000", "--seed", "1", "--threshold", "150", "--record-log",
                          log.string(), "--workers", "2"});
    REQUIRE(r.code == app::kExitOk);
    const auto summary = nlohmann::json::parse(r.out);
    const auto entries = lines(log);
    CHECK(entries.size() == summary["logged"].get<std::size_t>());
    REQUIRE_FALSE(entries.empty());
    for (const auto& line : entries) {
        const auto e = nlohmann::json::parse(line);
        const GameState deal = gameStateFromJson(e["deal"]);
        CHECK(deal == randomDeal({*parseDealKind(e["policy"].get<std::string>()), e["seed"].get<std::uint64_t>()},
                                 e["index"].get<std::uint64_t>()));
        const PlayOutcome o = playGame(deal);
        CHECK(o.tricks == e["tricks"].get<std::uint64_t>());
        CHECK(o.cardsPlayed == e["cards"].get<std::uint64_t>());
        CHECK(o.tricks > 150);
        CHECK(e.contains("timestamp"));
    }
    // Appending keeps earlier lines.
    REQUIRE(cli({"search-random", "--games", "3000", "--seed", "1", "--threshold", "150", "--record-log",
                 log.string()})
                .code == app::kExitOk);
    CHECK(lines(log).size() == 2 * entries.size());
}

TEST_CASE("stats writes a histogram") {
    const fs::path csv = scratch("hist.csv");
    const fs::path out = scratch("summary.json");
    const Result r = cli({"stats", "--games", "2000", "--csv", csv.string(), "--out", out.string()});
    REQUIRE(r.code == app::kExitOk);
    const auto rows = lines(csv);
    REQUIRE(rows.size() > 2);
    CHECK(rows[0] == "length,trickCount,cardCount");
    std::ifstream in(out);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["games"] == 2000);
    CHECK(cli({"stats", "--games", "10", "--out", "/nonexistent/dir/x.json"}).code == app::kExitIo);
}

TEST_CASE("bench reports throughput") {
    const Result r = cli({"bench", "--games", "20000", "--workers", "1"});
    REQUIRE(r.code == app::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["gamesPerHourPerCore"].get<double>() > 0);
    CHECK(j.contains("meetsTarget"));
}

TEST_CASE("piece store and assembly") {
    const fs::path store = scratch("pieces.txt");
    REQUIRE(cli({"search-pieces", "--max-len", "6", "--out", store.string(), "--workers", "2"}).code == app::kExitOk);
    const auto rows = lines(store);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "# bmn pieces filter=--K---A----AA budget=10000");
    CHECK(rows[1] == "--");

    const Result a = cli({"assemble", "--", "--K---A----AA", "--", "--------K---------Q-Q-K---Q-KAQ"});
    CHECK(a.code == app::kExitNonTerminating);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["standard"] == true);
    CHECK(j["state"]["hand1"] == "--K---A----AAJ--J--------K---------Q-Q-K---Q-KAQJ-");
    CHECK(cli({"assemble", "--store", store.string()}).code == app::kExitNonTerminating);
    CHECK(cli({"assemble", "A"}).code == app::kExitFailure);
    CHECK(cli({"assemble", "--store", "/nonexistent/p.txt"}).code == app::kExitIo);
}

TEST_CASE("backward") {
    const Result r = cli({"backward", "--printed-cycle", "--report-balanced"});
    REQUIRE(r.code == app::kExitOk);
    const auto counts = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
    CHECK(counts["nodes"] == 2608);
    CHECK(counts["balancedNodes"] == 30);
    CHECK(r.out.find("1. ---K---Q-KQAJ-----AAJ--J-- 2. ----------Q----KQ-J-----KA (1) depth 4 source") !=
          std::string::npos);

    const fs::path dot = scratch("family.dot");
    REQUIRE(cli({"backward", "--cycle-of", "J-- / -J-", "--format", "dot", "--out", dot.string()}).code ==
            app::kExitOk);
    const auto g = lines(dot);
    REQUIRE_FALSE(g.empty());
    CHECK(g[0].rfind("digraph", 0) == 0);

    const Result js = cli({"backward", "--state", "J- / -J (1)", "--max-depth", "3"});
    REQUIRE(js.code == app::kExitOk);
    std::istringstream jl(js.out);
    std::size_t n = 0;
    for (std::string l; std::getline(jl, l);) {
        const auto node = nlohmann::json::parse(l);
        CHECK(node["depth"].get<int>() <= 3);
        ++n;
    }
    CHECK(n > 0);
    CHECK(cli({"backward", "--state", "J- / -J", "--format", "svg"}).code == app::kExitUsage);
    CHECK(cli({"backward"}).code == app::kExitUsage);
}

TEST_CASE("expand and mutate") {
    const Result e = cli({"expand", "J-- / -J-"});
    CHECK(e.code == app::kExitOk);
    CHECK(nlohmann::json::parse(e.out)["expanded"]["hand1"] == "--J---J-");
    CHECK(cli({"expand", "A- / --"}).code == app::kExitFailure);

    const Result m = cli({"mutate", "J-- / -J-", "--ops", "s", "--max-edits", "1"});
    CHECK(m.code == app::kExitOk);
    CHECK(m.out.empty());
    CHECK(m.err == "0 non-terminating variants\n");
    const Result m2 = cli({"mutate", "J-- / -J-", "--ops", "s", "--max-edits", "2"});
    CHECK(m2.out.find("--J- / J- (1)") != std::string::npos);
    CHECK(cli({"mutate", "J-- / -J-", "--ops", "x"}).code == app::kExitUsage);
    CHECK(cli({"mutate", "J-- / -J-", "--window", "5"}).code == app::kExitUsage);
}

TEST_CASE("verify and registry") {
    const Result v = cli({"verify", "--only", "pieces,constructions,decks,cycle,family"});
    CHECK(v.code == app::kExitOk);
    CHECK(v.out.find("FAIL") == std::string::npos);
    CHECK(cli({"verify"}).code == app::kExitFailure);
    const Result c = cli({"registry", "--checksum"});
    CHECK(c.code == app::kExitOk);
    CHECK(c.out == "3cff208a19b1be09\n");
    const Result d = cli({"registry", "--section", "cycle"});
    CHECK(d.code == app::kExitOk);
    CHECK(std::count(d.out.begin(), d.out.end(), '\n') == 62);
}
