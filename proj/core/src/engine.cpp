#include "bmn/engine.hpp"

#include <string>
#include <unordered_map>

#include "bmn/state_key.hpp"

namespace bmn {

namespace {

PlayOutcome terminated(Player winner, std::uint64_t tricks, std::uint64_t cards) {
    PlayOutcome out;
    out.kind = OutcomeKind::Terminated;
    out.winner = winner;
    out.tricks = tricks;
    out.cardsPlayed = cards;
    return out;
}

PlayOutcome cutOff(std::uint64_t tricks, std::uint64_t cards) {
    PlayOutcome out;
    out.kind = OutcomeKind::CutOff;
    out.tricks = tricks;
    out.cardsPlayed = cards;
    return out;
}

// Result of one step of whole-game play: either the game continues from a new
// trick boundary or it is over.
struct Step {
    std::size_t cards = 0;
    std::optional<Player> gameWinner;
};

// A game is over when a player cannot lay a required card, or when a trick
// leaves one player holding every card.
Step advance(Table& table) {
    const Table::Trick trick = table.playTrick();
    if (trick.ended) return {trick.cardsLaid + 1, trick.ended};
    if (table.hand(other(trick.winner)).empty()) return {trick.cardsLaid, trick.winner};
    return {trick.cardsLaid, std::nullopt};
}

StateKey packedKey(const Table& table) {
    StateKey key;
    std::size_t slot = 0;
    for (Player p : {Player::One, Player::Two}) {
        const auto& hand = table.hand(p);
        for (std::size_t i = 0; i < hand.size(); ++i, ++slot) {
            key.words[slot / 21] |= static_cast<std::uint64_t>(hand[i]) << (3 * (slot % 21));
        }
    }
    key.words[4] = static_cast<std::uint64_t>(table.hand(Player::One).size()) |
                   (static_cast<std::uint64_t>(table.hand(Player::Two).size()) << 8) |
                   (static_cast<std::uint64_t>(number(table.leader())) << 16);
    return key;
}

// Variable-length key for states too large for StateKey.
std::string wideKey(const Table& table) {
    const auto& h1 = table.hand(Player::One);
    const auto& h2 = table.hand(Player::Two);
    std::string key;
    key.reserve(h1.size() + h2.size() + 6);
    key.push_back(static_cast<char>(number(table.leader())));
    const auto n1 = static_cast<std::uint32_t>(h1.size());
    key.append(reinterpret_cast<const char*>(&n1), sizeof n1);
    for (std::size_t i = 0; i < h1.size(); ++i) key.push_back(static_cast<char>(h1[i]));
    for (std::size_t i = 0; i < h2.size(); ++i) key.push_back(static_cast<char>(h2[i]));
    return key;
}

}  // namespace

std::string_view toString(Detect d) {
    switch (d) {
        case Detect::HashSet: return "hashset";
        case Detect::Brent: return "brent";
        case Detect::None: return "none";
    }
    return "?";
}

std::string_view toString(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::Terminated: return "terminated";
        case OutcomeKind::NonTerminating: return "non-terminating";
        case OutcomeKind::CutOff: return "cut-off";
    }
    return "?";
}

std::optional<Detect> parseDetect(std::string_view s) {
    if (s == "hashset") return Detect::HashSet;
    if (s == "brent") return Detect::Brent;
    if (s == "none") return Detect::None;
    return std::nullopt;
}

TrickOutcome playTrick(const GameState& state) {
    if (state.hand(state.leader).empty()) throw EmptyLeaderHand();
    Table table(state);
    const Table::Trick trick = table.playTrick();
    return {table.state(), trick.cardsLaid, trick.winner, trick.ended};
}

PlayOutcome Simulator::play(const GameState& start, const PlayOptions& options) {
    if (start.hand(start.leader).empty()) throw EmptyLeaderHand();
    if (start.hand(other(start.leader)).empty()) return terminated(start.leader, 0, 0);
    table_.load(start);
    switch (options.detect) {
        case Detect::None: return playNone(options.maxTricks);
        case Detect::HashSet: return playHashSet(start, options.maxTricks, options.collectCycle);
        case Detect::Brent: return playBrent(start, options.maxTricks, options.collectCycle);
    }
    return playNone(options.maxTricks);
}

PlayOutcome Simulator::playNone(std::uint64_t maxTricks) {
    std::uint64_t cards = 0;
    for (std::uint64_t tricks = 0; tricks < maxTricks;) {
        const Step step = advance(table_);
        cards += step.cards;
        ++tricks;
        if (step.gameWinner) return terminated(*step.gameWinner, tricks, cards);
    }
    return cutOff(maxTricks, cards);
}

PlayOutcome Simulator::playHashSet(const GameState& start, std::uint64_t maxTricks, bool collect) {
    const bool packed = start.cardCount() <= kStateKeyCapacity;
    std::unordered_map<StateKey, std::uint64_t, StateKeyHash> seenPacked;
    std::unordered_map<std::string, std::uint64_t> seenWide;

    // Returns the trick index at which the current state was first seen, if any.
    auto remember = [&](std::uint64_t index) -> std::optional<std::uint64_t> {
        if (packed) {
            auto [it, inserted] = seenPacked.try_emplace(packedKey(table_), index);
            if (!inserted) return it->second;
        } else {
            auto [it, inserted] = seenWide.try_emplace(wideKey(table_), index);
            if (!inserted) return it->second;
        }
        return std::nullopt;
    };

    remember(0);
    std::uint64_t cards = 0;
    for (std::uint64_t tricks = 0; tricks < maxTricks;) {
        const Step step = advance(table_);
        cards += step.cards;
        ++tricks;
        if (step.gameWinner) return terminated(*step.gameWinner, tricks, cards);
        if (auto first = remember(tricks)) {
            PlayOutcome out;
            out.kind = OutcomeKind::NonTerminating;
            out.tricks = tricks;
            out.cardsPlayed = cards;
            out.leadIn = *first;
            out.period = tricks - *first;
            if (collect) collectCycle(start, out);
            return out;
        }
    }
    return cutOff(maxTricks, cards);
}

PlayOutcome Simulator::playBrent(const GameState& start, std::uint64_t maxTricks, bool collect) {
    // Phase 1: the tortoise is parked at successive powers of two while the
    // hare runs ahead; a match gives the period.
    aux_ = table_;
    std::uint64_t power = 1;
    std::uint64_t period = 0;
    std::uint64_t cards = 0;
    std::uint64_t tricks = 0;
    for (;;) {
        if (tricks >= maxTricks) return cutOff(tricks, cards);
        const Step step = advance(table_);
        cards += step.cards;
        ++tricks;
        ++period;
        if (step.gameWinner) return terminated(*step.gameWinner, tricks, cards);
        if (table_.sameState(aux_)) break;
        if (period == power) {
            aux_ = table_;
            power <<= 1;
            period = 0;
        }
    }

    // Phase 2: restart both walkers, the hare `period` tricks ahead, and
    // advance together until they meet at the first repeated state.
    aux_.load(start);
    table_.load(start);
    cards = 0;
    for (std::uint64_t i = 0; i < period; ++i) cards += advance(table_).cards;
    std::uint64_t leadIn = 0;
    while (!aux_.sameState(table_)) {
        advance(aux_);
        cards += advance(table_).cards;
        ++leadIn;
    }

    PlayOutcome out;
    out.kind = OutcomeKind::NonTerminating;
    out.tricks = leadIn + period;
    out.cardsPlayed = cards;
    out.leadIn = leadIn;
    out.period = period;
    if (collect) collectCycle(start, out);
    return out;
}

void Simulator::collectCycle(const GameState& start, PlayOutcome& out) {
    aux_.load(start);
    for (std::uint64_t i = 0; i < *out.leadIn; ++i) aux_.playTrick();
    out.cycleStates.clear();
    out.cycleStates.reserve(*out.period);
    for (std::uint64_t i = 0; i < *out.period; ++i) {
        out.cycleStates.push_back(aux_.state());
        aux_.playTrick();
    }
}

PlayOutcome playGame(const GameState& start, std::uint64_t maxTricks, Detect detect) {
    Simulator sim;
    return sim.play(start, {maxTricks, detect, true});
}

}  // namespace bmn
