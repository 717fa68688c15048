#include "bmn_app/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include <bmn/construct.hpp>
#include <bmn/engine.hpp>

#include "bmn_app/registry.hpp"

namespace bmn::app {

namespace {

std::string counts(std::uint64_t tricks, std::uint64_t cards) {
    return std::to_string(tricks) + " tricks, " + std::to_string(cards) + " cards";
}

std::string describe(const PlayOutcome& o) {
    std::string s(toString(o.kind));
    if (o.kind == OutcomeKind::NonTerminating) {
        s += " (lead-in " + std::to_string(*o.leadIn) + ", period " + std::to_string(*o.period) + ")";
    } else {
        s += " after " + counts(o.tricks, o.cardsPlayed);
    }
    return s;
}

Check nonTerminating(const std::string& section, const std::string& item, const GameState& s) {
    const PlayOutcome o = playGame(s);
    return {section, item, o.kind == OutcomeKind::NonTerminating, describe(o)};
}

}  // namespace

std::vector<Check> checkRecords() {
    std::vector<Check> out;
    Simulator sim;
    for (const auto& r : registry().records) {
        const PlayOutcome o = sim.play(r.deal, {kDefaultMaxTricks, Detect::HashSet, false});
        const bool pass = o.kind == OutcomeKind::Terminated && o.tricks == r.tricks && o.cardsPlayed == r.cards;
        out.push_back({"records", r.id + " (" + r.date + ")", pass,
                       "expected " + counts(r.tricks, r.cards) + ", got " + describe(o)});
    }
    return out;
}

std::vector<Check> checkPieces() {
    std::vector<Check> out;
    for (const auto& p : registry().pieces) {
        const PlayOutcome o = templateTest(p);
        out.push_back({"pieces", formatCardSeq(p), o.kind == OutcomeKind::NonTerminating, describe(o)});
    }
    return out;
}

std::vector<Check> checkConstructions() {
    std::vector<Check> out;
    const auto& cs = registry().constructions;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Check c = nonTerminating("constructions", "#" + std::to_string(i + 1), cs[i]);
        if (composition(cs[i]) != DeckComposition::standard()) {
            c.pass = false;
            c.detail += "; not a standard deck";
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Check> checkDecks() {
    const Registry& r = registry();
    std::vector<Check> out;
    out.push_back(nonTerminating("decks", "balanced deal", r.balancedDeal));
    out.push_back(nonTerminating("decks", "J--/-J-", r.sixCardGame));
    out.push_back(nonTerminating("decks", "J--J--/-J--J-", r.sixCardDoubled));
    out.push_back(nonTerminating("decks", "expansion deck (" + std::to_string(r.expansionDeck.cardCount()) + " cards)",
                                 r.expansionDeck));
    out.push_back(nonTerminating("decks", "mutation deck", r.mutationDeck));
    Check trimmed = nonTerminating("decks", "expansion deck minus A---J numbers", r.expansionDeckTrimmed);
    if (composition(r.expansionDeckTrimmed) != DeckComposition::standard()) {
        trimmed.pass = false;
        trimmed.detail += "; not a standard deck";
    }
    out.push_back(std::move(trimmed));
    return out;
}

std::vector<Check> checkCycle() {
    const Registry& r = registry();
    const PlayOutcome o = playGame(r.balancedDeal);
    std::vector<Check> out;
    const bool shape = o.kind == OutcomeKind::NonTerminating && *o.leadIn == 4 && *o.period == 62;
    if (!shape) {
        out.push_back({"cycle", "lead-in 4, period 62", false, describe(o)});
        return out;
    }
    const auto& got = o.cycleStates;
    const auto d1 = std::find(got.begin(), got.end(), r.cycle.front());
    const std::size_t offset = d1 == got.end() ? 0 : static_cast<std::size_t>(d1 - got.begin());
    for (std::size_t i = 0; i < r.cycle.size(); ++i) {
        const GameState& emitted = got[(offset + i) % got.size()];
        const TrickOutcome t = playTrick(r.cycle[i]);
        const bool closes = !t.ended && t.next == r.cycle[(i + 1) % r.cycle.size()];
        const bool pass = d1 != got.end() && emitted == r.cycle[i] && closes;
        std::string detail = emitted == r.cycle[i] ? "matches" : "emitted " + formatGameState(emitted);
        if (!closes) detail += "; next trick gives " + formatGameState(t.next);
        out.push_back({"cycle", "state " + std::to_string(i + 1), pass, detail});
    }
    return out;
}

std::vector<Check> checkPredecessors() {
    const Registry& r = registry();
    const PredecessorSet got = predecessorsOf(r.predecessorOrigin);
    std::vector<Check> out;
    for (std::size_t i = 0; i < r.predecessors.size(); ++i) {
        const bool found = std::find(got.predecessors.begin(), got.predecessors.end(), r.predecessors[i]) !=
                           got.predecessors.end();
        out.push_back({"predecessors", "printed #" + std::to_string(i + 1), found,
                       found ? "found" : "missing " + formatGameState(r.predecessors[i])});
    }
    std::string extras;
    for (const auto& p : got.predecessors) {
        if (std::find(r.predecessors.begin(), r.predecessors.end(), p) == r.predecessors.end()) {
            extras += (extras.empty() ? "" : "; ") + formatGameState(p);
        }
    }
    out.push_back({"predecessors", "exactly the printed set", extras.empty() && got.predecessors.size() == r.predecessors.size(),
                   std::to_string(got.predecessors.size()) + " found" + (extras.empty() ? "" : ", extra: " + extras)});
    return out;
}

const ClosureResult& printedCycleClosure() {
    static const ClosureResult closure = backwardClosure(registry().cycle, {64, 1'000'000});
    return closure;
}

std::vector<Check> checkFamily() {
    const ClosureResult& c = printedCycleClosure();
    const GameState& deal = registry().balancedDeal;
    auto it = std::find_if(c.nodes.begin(), c.nodes.end(), [&](const FamilyNode& n) { return n.state == deal; });
    const bool pass = it != c.nodes.end() && it->depth == 4 && it->isSource;
    std::string detail = it == c.nodes.end() ? "not in closure"
                                             : "depth " + std::to_string(it->depth) + (it->isSource ? ", source" : ", not a source");
    return {{"family", "balanced deal at depth 4", pass, detail}};
}

const std::vector<std::string>& verifySections() {
    static const std::vector<std::string> names{"records", "pieces", "constructions", "decks",
                                                "cycle", "predecessors", "family"};
    return names;
}

std::vector<Check> runSection(const std::string& section) {
    if (section == "records") return checkRecords();
    if (section == "pieces") return checkPieces();
    if (section == "constructions") return checkConstructions();
    if (section == "decks") return checkDecks();
    if (section == "cycle") return checkCycle();
    if (section == "predecessors") return checkPredecessors();
    if (section == "family") return checkFamily();
    throw std::invalid_argument("unknown verify section: " + section);
}

}  // namespace bmn::app
