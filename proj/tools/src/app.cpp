#include "bmn_app/app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <bmn/construct.hpp>
#include <bmn/engine.hpp>
#include <bmn/json_io.hpp>
#include <bmn/reverse.hpp>
#include <bmn/stochastic.hpp>

#include "bmn_app/registry.hpp"
#include "bmn_app/verify.hpp"

namespace bmn::app {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Output goes to `path` when set, else to the fallback stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (path.empty() || path == "-") return;
        file_.open(path, std::ios::binary | std::ios::trunc);
        if (!file_) throw IoError("cannot write " + path);
        out_ = &file_;
    }
    std::ostream& operator*() { return *out_; }
    void finish() {
        out_->flush();
        if (!*out_) throw IoError("write failed");
    }

private:
    std::ofstream file_;
    std::ostream* out_;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// A state written as JSON, as "1. <seq> 2. <seq> (n)", or as "<seq> / <seq>".
GameState stateFromText(const std::string& text) {
    const std::string t = trim(text);
    if (!t.empty() && t.front() == '{') return gameStateFromJson(json::parse(t));
    return parseGameState(t);
}

GameState stateInput(const std::string& inline_, const std::string& file) {
    if (!file.empty()) {
        const std::string text = readFile(file);
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            line = trim(line);
            if (!line.empty() && line.front() != '#') return stateFromText(line);
        }
        throw ParseError(ParseError::Kind::MalformedState, 0, file + " holds no state");
    }
    if (inline_.empty()) throw UsageError("a state is required (argument or --file)");
    return stateFromText(inline_);
}

std::vector<GameState> statesFromFile(const std::string& path) {
    std::vector<GameState> out;
    std::istringstream lines(readFile(path));
    std::string line;
    while (std::getline(lines, line)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        // JSON lines from `backward` carry the state under "state".
        if (line.front() == '{') {
            const json j = json::parse(line);
            out.push_back(gameStateFromJson(j.contains("state") ? j["state"] : j));
        } else {
            out.push_back(parseGameState(line));
        }
    }
    return out;
}

int exitFor(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::Terminated: return kExitOk;
        case OutcomeKind::NonTerminating: return kExitNonTerminating;
        case OutcomeKind::CutOff: return kExitCutOff;
    }
    return kExitFailure;
}

std::string utcNow() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Detect detectFrom(const std::string& s) {
    if (auto d = parseDetect(s)) return *d;
    throw UsageError("unknown detection mode: " + s);
}

DealKind policyFrom(const std::string& s) {
    if (auto k = parseDealKind(s)) return *k;
    throw UsageError("unknown deal policy: " + s);
}

// ---- simulate ---------------------------------------------------------------

struct SimulateArgs {
    std::string state, file, detect = "hashset";
    std::uint64_t maxTricks = kDefaultMaxTricks;
    bool trace = false, cycle = false;
};

int cmdSimulate(const SimulateArgs& a, std::ostream& out) {
    const GameState start = stateInput(a.state, a.file);
    if (start.hand(start.leader).empty()) throw EmptyLeaderHand();
    const PlayOutcome o = playGame(start, a.maxTricks, detectFrom(a.detect));
    if (a.trace) {
        // One line per trick boundary, up to the end or the first repeat.
        Table table(start);
        out << formatGameState(start) << '\n';
        for (std::uint64_t i = 0; i < o.tricks; ++i) {
            const Table::Trick t = table.playTrick();
            if (t.ended) break;
            out << formatGameState(table.state()) << '\n';
            if (table.hand(other(t.winner)).empty()) break;
        }
    }
    out << toJson(o, a.cycle).dump() << '\n';
    return exitFor(o.kind);
}

// ---- verify -----------------------------------------------------------------

int cmdVerify(const std::vector<std::string>& only, std::ostream& out, std::ostream& err) {
    std::vector<std::string> sections = only.empty() ? verifySections() : only;
    std::size_t passed = 0, total = 0;
    std::optional<Check> firstFail;
    for (const auto& section : sections) {
        if (std::find(verifySections().begin(), verifySections().end(), section) == verifySections().end()) {
            throw UsageError("unknown section " + section);
        }
        for (const Check& c : runSection(section)) {
            ++total;
            if (c.pass) ++passed;
            if (!c.pass && !firstFail) firstFail = c;
            out << (c.pass ? "PASS " : "FAIL ") << c.section << ' ' << c.item << ": " << c.detail << '\n';
        }
        if (section == "family") {
            const FamilyCounts fc = familyCounts(printedCycleClosure().nodes);
            out << "     family nodes " << fc.nodes << ", sources " << fc.sources << ", balanced nodes "
                << fc.balancedNodes << ", balanced sources " << fc.balancedSources << '\n';
        }
    }
    out << passed << '/' << total << " checks passed\n";
    if (firstFail) {
        err << "first failure: " << firstFail->section << ' ' << firstFail->item << ": " << firstFail->detail << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

// ---- search-random / stats / bench -----------------------------------------

struct BatchArgs {
    std::uint64_t seed = 1, games = 1'000'000, maxTricks = kDefaultMaxTricks, firstIndex = 0;
    std::uint64_t tailStart = kDefaultTailStart;
    unsigned workers = 0;
    std::string policy = "uniform", out, csv, recordLog;
    std::optional<std::uint64_t> threshold;
};

json summaryJson(const LengthSummary& s, const BatchArgs& a) {
    std::optional<TailFit> fit;
    std::string tailError;
    try {
        fit = fitExponentialTail(s, a.tailStart);
    } catch (const InsufficientTailMass& e) {
        tailError = e.what();
    }
    json j = toJson(s, fit);
    j["policy"] = a.policy;
    j["seed"] = a.seed;
    j["firstIndex"] = a.firstIndex;
    j["tailStart"] = a.tailStart;
    if (!tailError.empty()) j["tailError"] = tailError;
    try {
        j["survival20"] = survivalRatio(s, a.tailStart, a.tailStart + 100, 20);
    } catch (const std::exception&) {
        j["survival20"] = nullptr;
    }
    return j;
}

int cmdSearchRandom(const BatchArgs& a, std::ostream& out, std::ostream& err) {
    const DealPolicy policy{policyFrom(a.policy), a.seed};
    std::ofstream log;
    if (!a.recordLog.empty()) {
        log.open(a.recordLog, std::ios::app);
        if (!log) throw IoError("cannot append to " + a.recordLog);
    }
    BatchOptions options;
    options.maxTricks = a.maxTricks;
    options.workers = a.workers;
    options.firstIndex = a.firstIndex;
    options.cancel = &interrupted();
    options.notableTricks = a.threshold.value_or(recordTricksToBeat());
    std::uint64_t logged = 0;
    options.onNotable = [&](const NotableGame& g) {
        ++logged;
        json j{{"deal", toJson(g.deal)},
               {"kind", toString(g.outcome.kind)},
               {"tricks", g.outcome.tricks},
               {"cards", g.outcome.cardsPlayed},
               {"policy", a.policy},
               {"seed", a.seed},
               {"index", g.index},
               {"timestamp", utcNow()}};
        if (g.outcome.period) j["period"] = *g.outcome.period;
        if (log.is_open()) {
            log << j.dump() << '\n';
            log.flush();
        } else {
            err << "notable: " << j.dump() << '\n';
        }
    };
    const LengthSummary s = runBatch(policy, a.games, options);
    json j = summaryJson(s, a);
    j["logged"] = logged;
    j["threshold"] = options.notableTricks;
    j["interrupted"] = interrupted().load();
    Sink sink(a.out, out);
    *sink << j.dump(2) << '\n';
    sink.finish();
    if (log.is_open() && !log.flush()) throw IoError("write to " + a.recordLog + " failed");
    return kExitOk;
}

int cmdStats(const BatchArgs& a, std::ostream& out) {
    const DealPolicy policy{policyFrom(a.policy), a.seed};
    BatchOptions options;
    options.maxTricks = a.maxTricks;
    options.workers = a.workers;
    options.firstIndex = a.firstIndex;
    options.cancel = &interrupted();
    const LengthSummary s = runBatch(policy, a.games, options);
    if (!a.csv.empty()) {
        Sink csv(a.csv, out);
        writeHistogramCsv(s, *csv);
        csv.finish();
    }
    json j = summaryJson(s, a);
    j["interrupted"] = interrupted().load();
    Sink sink(a.out, out);
    *sink << j.dump(2) << '\n';
    sink.finish();
    return kExitOk;
}

int cmdBench(const BatchArgs& a, std::ostream& out) {
    const DealPolicy policy{policyFrom(a.policy), a.seed};
    BatchOptions options;
    options.maxTricks = a.maxTricks;
    options.workers = std::max(1u, a.workers);
    const auto t0 = std::chrono::steady_clock::now();
    const LengthSummary s = runBatch(policy, a.games, options);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double perHourPerCore = static_cast<double>(s.games) / secs * 3600.0 / options.workers;
    constexpr double kTarget = 1e8;
    out << json{{"games", s.games},
                {"workers", options.workers},
                {"seconds", secs},
                {"gamesPerSecond", static_cast<double>(s.games) / secs},
                {"gamesPerHourPerCore", perHourPerCore},
                {"meanTricks", s.meanTricks()},
                {"target", kTarget},
                {"meetsTarget", perHourPerCore >= kTarget}}
               .dump(2)
        << '\n';
    return kExitOk;
}

// ---- search-pieces / assemble ---------------------------------------------

struct PieceArgs {
    std::size_t maxLen = 6;
    std::string mode = "base4", filter = "--K---A----AA", out;
    std::size_t queens = 0, kings = 0, aces = 0;
    std::uint64_t budget = kTemplateBudget;
    unsigned workers = 0, maxNumberEdits = 3;
    bool noDedupe = false;
};

int cmdSearchPieces(const PieceArgs& a, std::ostream& out, std::ostream& err) {
    EnumerateOptions o;
    o.maxLen = a.maxLen;
    if (a.mode == "base4") {
        o.mode = EnumerationMode::Base4;
    } else if (a.mode == "multiset") {
        o.mode = EnumerationMode::Multiset;
        o.faces.queens = a.queens;
        o.faces.kings = a.kings;
        o.faces.aces = a.aces;
    } else {
        throw UsageError("unknown mode: " + a.mode);
    }
    o.budgetTricks = a.budget;
    o.dedupe = !a.noDedupe;
    o.workers = a.workers;
    o.classOptions.maxNumberEdits = a.maxNumberEdits;
    const Piece filter{parseCardSeq(a.filter), true};
    const PieceSearch found = enumeratePieces(o, filter);
    Sink sink(a.out, out);
    *sink << "# bmn pieces filter=" << a.filter << " budget=" << a.budget << '\n';
    for (const auto& p : found.representatives) *sink << formatCardSeq(p.cards) << '\n';
    sink.finish();
    err << "tested " << found.tested << ", certified " << found.certified.size() << ", stored "
        << found.representatives.size() << '\n';
    return kExitOk;
}

std::vector<CardSeq> readPieceStore(const std::string& path) {
    std::vector<CardSeq> out;
    std::istringstream lines(readFile(path));
    std::string line;
    while (std::getline(lines, line)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        out.push_back(parseCardSeq(line));
    }
    return out;
}

int cmdAssemble(const std::vector<std::string>& pieces, const std::string& store, std::uint64_t maxTricks,
                std::ostream& out, std::ostream& err) {
    std::vector<Piece> list;
    if (!store.empty()) {
        for (auto& c : readPieceStore(store)) list.push_back({std::move(c), true});
    }
    for (const auto& p : pieces) list.push_back({parseCardSeq(p), true});
    if (list.empty()) throw UsageError("no pieces given");
    try {
        const Assembly a = assembleDeck(list, maxTricks);
        const DeckComposition& c = a.composition;
        out << json{{"state", toJson(a.state)},
                    {"composition", {c.numbers, c.jacks, c.queens, c.kings, c.aces}},
                    {"standard", c == DeckComposition::standard()},
                    {"outcome", toJson(a.outcome)}}
                   .dump()
            << '\n';
        return kExitNonTerminating;
    } catch (const AssemblyNotNonTerminating& e) {
        err << e.what() << '\n';
        out << json{{"outcome", toJson(e.outcome())}}.dump() << '\n';
        return kExitFailure;
    }
}

// ---- backward ---------------------------------------------------------------

struct BackwardArgs {
    std::string state, anchors, cycleOf, format = "json", out;
    bool printedCycle = false, reportBalanced = false;
    std::uint32_t maxDepth = 64;
    std::size_t maxStates = 1'000'000;
};

void writeDot(const ClosureResult& c, const std::vector<GameState>& anchors, std::ostream& out) {
    std::map<std::string, std::string> ids;
    auto id = [&](const GameState& s) {
        const std::string key = formatCompact(s);
        auto [it, inserted] = ids.try_emplace(key, "s" + std::to_string(ids.size()));
        return it->second;
    };
    out << "digraph family {\n  rankdir=LR;\n  node [fontname=\"monospace\" fontsize=9];\n";
    for (const auto& a : anchors) {
        out << "  " << id(a) << " [label=\"" << formatCompact(a) << "\" shape=ellipse style=filled fillcolor=gray90];\n";
    }
    for (const auto& n : c.nodes) {
        // Sources led by player 1 are drawn dog-eared.
        const char* shape = !n.isSource ? "plaintext" : n.state.leader == Player::One ? "note" : "box";
        out << "  " << id(n.state) << " [label=\"" << formatCompact(n.state) << "\" shape=" << shape
            << (n.state.balanced() ? " color=blue penwidth=2" : "") << "];\n";
    }
    for (const auto& n : c.nodes) {
        out << "  " << id(n.state) << " -> " << id(playTrick(n.state).next) << ";\n";
    }
    out << "}\n";
}

int cmdBackward(const BackwardArgs& a, std::ostream& out) {
    std::vector<GameState> anchors;
    const int given = !a.state.empty() + !a.anchors.empty() + !a.cycleOf.empty() + a.printedCycle;
    if (given != 1) throw UsageError("give exactly one of --state, --anchors, --cycle-of, --printed-cycle");
    if (!a.state.empty()) anchors.push_back(stateFromText(a.state));
    if (!a.anchors.empty()) anchors = statesFromFile(a.anchors);
    if (a.printedCycle) anchors = registry().cycle;
    if (!a.cycleOf.empty()) {
        const PlayOutcome o = playGame(stateFromText(a.cycleOf));
        if (o.kind != OutcomeKind::NonTerminating) throw UsageError("--cycle-of state does not cycle");
        anchors = o.cycleStates;
    }
    if (anchors.empty()) throw UsageError("no anchor states");
    if (a.format != "json" && a.format != "dot") throw UsageError("format must be json or dot");

    const ClosureResult c = backwardClosure(anchors, {a.maxDepth, a.maxStates});
    const bool dump = !a.reportBalanced || !a.out.empty();
    if (dump) {
        Sink sink(a.out, out);
        if (a.format == "dot") {
            writeDot(c, anchors, *sink);
        } else {
            for (const auto& n : c.nodes) *sink << toJson(n).dump() << '\n';
        }
        sink.finish();
    }
    if (a.reportBalanced) {
        const FamilyCounts fc = familyCounts(c.nodes);
        out << json{{"anchors", anchors.size()},
                    {"budgetHit", toString(c.budgetHit)},
                    {"nodes", fc.nodes},
                    {"sources", fc.sources},
                    {"balancedNodes", fc.balancedNodes},
                    {"balancedSources", fc.balancedSources},
                    {"balancedLeaderOne", fc.balancedLeaderOne},
                    {"balancedLeaderTwo", fc.balancedLeaderTwo},
                    {"balancedUpToSwap", fc.balancedUpToSwap}}
                   .dump()
            << '\n';
        for (const auto& n : c.nodes) {
            if (!n.state.balanced()) continue;
            out << formatGameState(n.state) << " depth " << n.depth << (n.isSource ? " source" : "") << '\n';
        }
    } else if (c.budgetHit != ClosureBudget::None && !a.out.empty()) {
        out << "budget hit: " << toString(c.budgetHit) << '\n';
    }
    return kExitOk;
}

// ---- expand / mutate --------------------------------------------------------

int cmdExpand(const std::string& state, const std::string& file, std::uint64_t budget, std::ostream& out,
              std::ostream& err) {
    const GameState start = stateInput(state, file);
    const PlayOutcome o = playGame(start, budget);
    if (o.kind != OutcomeKind::NonTerminating) {
        err << "state is " << toString(o.kind) << "; expansion needs a cycle\n";
        return kExitFailure;
    }
    try {
        const GameState e = expandLoop({o.cycleStates}, budget);
        out << json{{"loopLength", o.cycleStates.size()}, {"cards", e.cardCount()}, {"expanded", toJson(e)}}.dump()
            << '\n';
        return kExitOk;
    } catch (const ExpansionNotNonTerminating& ex) {
        err << ex.what() << '\n';
        return kExitFailure;
    }
}

struct MutateArgs {
    std::string state, file, ops = "irs", window, out;
    unsigned maxEdits = 1, workers = 0;
    std::uint64_t budget = kTemplateBudget;
    bool standardOnly = false;
};

int cmdMutate(const MutateArgs& a, std::ostream& out, std::ostream& err) {
    const GameState start = stateInput(a.state, a.file);
    MutateOptions o;
    o.ops = {};
    for (char c : a.ops) {
        if (c == 'i') o.ops.add(EditOp::Insert);
        else if (c == 'r') o.ops.add(EditOp::Remove);
        else if (c == 's') o.ops.add(EditOp::Swap);
        else throw UsageError("--ops takes letters from 'irs'");
    }
    if (a.maxEdits > 3) throw UsageError("--max-edits is at most 3");
    o.maxEdits = a.maxEdits;
    o.budgetTricks = a.budget;
    o.workers = a.workers;
    if (!a.window.empty()) {
        const auto colon = a.window.find(':');
        if (colon == std::string::npos) throw UsageError("--window takes BEGIN:END");
        try {
            o.window = std::pair{std::stoul(a.window.substr(0, colon)), std::stoul(a.window.substr(colon + 1))};
        } catch (const std::exception&) {
            throw UsageError("--window takes BEGIN:END");
        }
    }
    const auto found = mutate(start, o);
    Sink sink(a.out, out);
    std::size_t kept = 0;
    for (const auto& s : found) {
        if (a.standardOnly && composition(s) != DeckComposition::standard()) continue;
        *sink << formatCompact(s) << '\n';
        ++kept;
    }
    sink.finish();
    err << kept << " non-terminating variants\n";
    return kExitOk;
}

// ---- registry ---------------------------------------------------------------

int cmdRegistry(const std::string& section, bool checksum, std::ostream& out) {
    const Registry& r = registry();
    if (checksum) {
        out << std::hex << registryChecksum() << std::dec << '\n';
        return kExitOk;
    }
    if (section == "cycle") {
        for (const auto& s : r.cycle) out << formatGameState(s) << '\n';
    } else if (section == "records") {
        for (const auto& e : r.records) {
            out << e.id << " (" << e.date << ") " << e.tricks << " tricks, " << e.cards << " cards: "
                << formatCompact(e.deal) << '\n';
        }
    } else if (section == "pieces") {
        for (const auto& p : r.pieces) out << formatCardSeq(p) << '\n';
    } else if (section == "constructions") {
        for (const auto& s : r.constructions) out << formatCompact(s) << '\n';
    } else if (section == "predecessors") {
        out << formatGameState(r.predecessorOrigin) << '\n';
        for (const auto& s : r.predecessors) out << formatGameState(s) << '\n';
    } else if (section == "decks") {
        for (const auto* s : {&r.balancedDeal, &r.sixCardGame, &r.sixCardDoubled, &r.expansionDeck,
                              &r.expansionDeckTrimmed, &r.mutationDeck}) {
            out << formatCompact(*s) << '\n';
        }
    } else {
        throw UsageError("unknown registry section: " + section);
    }
    return kExitOk;
}

}  // namespace

std::atomic<bool>& interrupted() {
    static std::atomic<bool> flag{false};
    return flag;
}

unsigned defaultWorkers() {
    if (const char* env = std::getenv("BMN_THREADS")) {
        try {
            const unsigned long n = std::stoul(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Beggar-My-Neighbor lab"};
    app.name(args.empty() ? "bmn" : args.front());
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Play one game and print its outcome as JSON");
    simulate->add_option("state", sim.state, "State, e.g. \"J-- / -J-\" or \"1. J-- 2. -J- (1)\"");
    simulate->add_option("--file", sim.file, "Read the state from a file");
    simulate->add_option("--max-tricks", sim.maxTricks)->check(CLI::PositiveNumber);
    simulate->add_option("--detect", sim.detect, "hashset, brent or none");
    simulate->add_flag("--trace", sim.trace, "Print every trick-boundary state");
    simulate->add_flag("--cycle", sim.cycle, "Include cycle states in the JSON");

    std::vector<std::string> only;
    auto* verify = app.add_subcommand("verify", "Check the embedded reference data against the engine");
    verify->add_option("--only", only, "Sections: records, pieces, constructions, decks, cycle, predecessors, family")
        ->delimiter(',');

    BatchArgs batch;
    batch.workers = defaultWorkers();
    auto addBatch = [&](CLI::App* c) {
        c->add_option("--seed", batch.seed);
        c->add_option("--games", batch.games)->check(CLI::PositiveNumber);
        c->add_option("--workers", batch.workers)->check(CLI::PositiveNumber);
        c->add_option("--policy", batch.policy, "uniform or face-balanced");
        c->add_option("--max-tricks", batch.maxTricks)->check(CLI::PositiveNumber);
        c->add_option("--first-index", batch.firstIndex);
        c->add_option("--tail-start", batch.tailStart);
        c->add_option("--out", batch.out, "Summary JSON file");
    };
    auto* searchRandom = app.add_subcommand("search-random", "Play random deals, logging record-length games");
    addBatch(searchRandom);
    searchRandom->add_option("--record-log", batch.recordLog, "Append-only JSON lines log");
    searchRandom->add_option("--threshold", batch.threshold, "Log games longer than this (default: record)");
    auto* stats = app.add_subcommand("stats", "Game-length histogram and tail fit");
    addBatch(stats);
    stats->add_option("--csv", batch.csv, "Histogram CSV file");
    auto* bench = app.add_subcommand("bench", "Measure random-game throughput");
    addBatch(bench);

    PieceArgs pieces;
    pieces.workers = defaultWorkers();
    auto* searchPieces = app.add_subcommand("search-pieces", "Enumerate pieces with the jack template");
    searchPieces->add_option("--max-len", pieces.maxLen)->check(CLI::Range(1, 40));
    searchPieces->add_option("--mode", pieces.mode, "base4 or multiset");
    searchPieces->add_option("--queens", pieces.queens);
    searchPieces->add_option("--kings", pieces.kings);
    searchPieces->add_option("--aces", pieces.aces);
    searchPieces->add_option("--filter-piece", pieces.filter);
    searchPieces->add_option("--budget", pieces.budget)->check(CLI::PositiveNumber);
    searchPieces->add_option("--workers", pieces.workers)->check(CLI::PositiveNumber);
    searchPieces->add_option("--max-number-edits", pieces.maxNumberEdits);
    searchPieces->add_flag("--no-dedupe", pieces.noDedupe, "Store every certified sequence");
    searchPieces->add_option("--out", pieces.out, "Piece store file");

    std::vector<std::string> assemblePieces;
    std::string store;
    std::uint64_t assembleBudget = kDefaultMaxTricks;
    auto* assemble = app.add_subcommand("assemble", "Join pieces with jacks into a deck against J-");
    assemble->add_option("pieces", assemblePieces);
    assemble->add_option("--store", store, "Use every piece in a piece store");
    assemble->add_option("--max-tricks", assembleBudget)->check(CLI::PositiveNumber);

    BackwardArgs back;
    auto* backward = app.add_subcommand("backward", "Backward closure (family of deals) from anchor states");
    backward->add_option("--state", back.state);
    backward->add_option("--anchors", back.anchors, "File with one state per line");
    backward->add_option("--cycle-of", back.cycleOf, "Anchor on the cycle this state reaches");
    backward->add_flag("--printed-cycle", back.printedCycle, "Anchor on the embedded 62-state cycle");
    backward->add_option("--max-depth", back.maxDepth)->check(CLI::PositiveNumber);
    backward->add_option("--max-states", back.maxStates)->check(CLI::PositiveNumber);
    backward->add_option("--format", back.format, "json or dot");
    backward->add_option("--out", back.out);
    backward->add_flag("--report-balanced", back.reportBalanced, "Print family counts and balanced members");

    std::string expandState, expandFile;
    std::uint64_t expandBudget = kDefaultMaxTricks;
    auto* expand = app.add_subcommand("expand", "Concatenate a game's loop states into a larger game");
    expand->add_option("state", expandState);
    expand->add_option("--file", expandFile);
    expand->add_option("--max-tricks", expandBudget)->check(CLI::PositiveNumber);

    MutateArgs mut;
    mut.workers = defaultWorkers();
    auto* mutateCmd = app.add_subcommand("mutate", "Non-terminating variants within a few edits");
    mutateCmd->add_option("state", mut.state);
    mutateCmd->add_option("--file", mut.file);
    mutateCmd->add_option("--ops", mut.ops, "Letters: i insert, r remove, s swap");
    mutateCmd->add_option("--max-edits", mut.maxEdits);
    mutateCmd->add_option("--window", mut.window, "BEGIN:END positions of hand1+hand2");
    mutateCmd->add_option("--budget", mut.budget)->check(CLI::PositiveNumber);
    mutateCmd->add_option("--workers", mut.workers)->check(CLI::PositiveNumber);
    mutateCmd->add_flag("--standard-only", mut.standardOnly);
    mutateCmd->add_option("--out", mut.out);

    std::string regSection = "cycle";
    bool checksum = false;
    auto* reg = app.add_subcommand("registry", "Print embedded reference data");
    reg->add_option("--section", regSection, "cycle, records, pieces, constructions, predecessors, decks");
    reg->add_flag("--checksum", checksum);

    try {
        std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
        std::reverse(rest.begin(), rest.end());
        app.parse(std::move(rest));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*simulate) return cmdSimulate(sim, out);
        if (*verify) return cmdVerify(only, out, err);
        if (*searchRandom) return cmdSearchRandom(batch, out, err);
        if (*stats) return cmdStats(batch, out);
        if (*bench) return cmdBench(batch, out);
        if (*searchPieces) return cmdSearchPieces(pieces, out, err);
        if (*assemble) return cmdAssemble(assemblePieces, store, assembleBudget, out, err);
        if (*backward) return cmdBackward(back, out);
        if (*expand) return cmdExpand(expandState, expandFile, expandBudget, out, err);
        if (*mutateCmd) return cmdMutate(mut, out, err);
        if (*reg) return cmdRegistry(regSection, checksum, out);
    } catch (const ParseError& e) {
        err << "parse error at position " << e.position() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        err << "bad JSON: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const EmptyLeaderHand& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bmn::app
