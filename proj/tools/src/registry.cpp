#include "bmn_app/registry.hpp"

#include <algorithm>

namespace bmn::app {

namespace {

GameState fromText(const StateText& t) {
    return {parseCardSeq(t.hand1), parseCardSeq(t.hand2), t.leader == 2 ? Player::Two : Player::One};
}

GameState fromPair(const char* h1, const char* h2) { return {parseCardSeq(h1), parseCardSeq(h2), Player::One}; }

// Drops the number cards between the Ace and the Jack of the first "A---J".
GameState trimAJ(GameState s) {
    const CardSeq run = parseCardSeq("A---J");
    auto it = std::search(s.hand1.begin(), s.hand1.end(), run.begin(), run.end());
    if (it != s.hand1.end()) s.hand1.erase(it + 1, it + 4);
    return s;
}

Registry build() {
    Registry r;
    for (const auto& t : recordTexts()) {
        r.records.push_back({t.id, t.holder, t.date, t.tricks, t.cards, fromPair(t.hand1, t.hand2)});
    }
    for (const auto& p : pieceTexts()) r.pieces.push_back(parseCardSeq(p));
    for (const auto& t : constructionTexts()) r.constructions.push_back(fromText(t));
    for (const auto& t : cycleTexts()) r.cycle.push_back(fromText(t));
    const auto& b = predecessorTexts();
    r.predecessorOrigin = fromText(b.front());
    for (std::size_t i = 1; i < b.size(); ++i) r.predecessors.push_back(fromText(b[i]));
    r.balancedDeal = fromPair("---K---Q-KQAJ-----AAJ--J--", "----------Q----KQ-J-----KA");
    r.expansionDeck = fromPair("--Q-K-J-----------------KJ--Q----A-Q-A-A---J--Q-K-A-K", "J-");
    r.mutationDeck = fromPair("--------------------J--Q-Q-Q-Q-K-KJ--K-K-A-A-A-AJ-", "J-");
    r.expansionDeckTrimmed = trimAJ(r.expansionDeck);
    r.sixCardGame = fromPair("J--", "-J-");
    r.sixCardDoubled = fromPair("J--J--", "-J--J-");
    return r;
}

void feed(std::uint64_t& h, std::string_view s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
}

}  // namespace

const Registry& registry() {
    static const Registry r = build();
    return r;
}

std::uint64_t registryChecksum() {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& t : recordTexts()) {
        for (std::string_view s : {t.id, t.holder, t.date, t.hand1, t.hand2}) feed(h, s);
        feed(h, std::to_string(t.tricks));
        feed(h, std::to_string(t.cards));
    }
    for (const auto* list : {&predecessorTexts(), &constructionTexts(), &cycleTexts()}) {
        for (const auto& t : *list) {
            feed(h, t.hand1);
            feed(h, t.hand2);
            feed(h, std::to_string(t.leader));
        }
    }
    for (const auto& p : pieceTexts()) feed(h, p);
    return h;
}

std::uint64_t recordTricksToBeat() {
    std::uint64_t best = 0;
    for (const auto& r : registry().records) best = std::max(best, r.tricks);
    return best;
}

}  // namespace bmn::app
