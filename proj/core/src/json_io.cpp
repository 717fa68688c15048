#include "bmn/json_io.hpp"

namespace bmn {

namespace {

template <class T>
nlohmann::json orNull(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json toJson(const GameState& state) {
    return {{"hand1", formatCardSeq(state.hand1)},
            {"hand2", formatCardSeq(state.hand2)},
            {"leader", number(state.leader)}};
}

GameState gameStateFromJson(const nlohmann::json& j) {
    GameState s;
    s.hand1 = parseCardSeq(j.at("hand1").get<std::string>());
    s.hand2 = parseCardSeq(j.at("hand2").get<std::string>());
    const int leader = j.value("leader", 1);
    if (leader != 1 && leader != 2) {
        throw ParseError(ParseError::Kind::InvalidLeader, 0, "leader must be 1 or 2");
    }
    s.leader = leader == 1 ? Player::One : Player::Two;
    return s;
}

nlohmann::json toJson(const PlayOutcome& outcome, bool withCycle) {
    nlohmann::json j{{"kind", toString(outcome.kind)},
                     {"winner", outcome.winner ? nlohmann::json(number(*outcome.winner)) : nlohmann::json()},
                     {"tricks", outcome.tricks},
                     {"cardsPlayed", outcome.cardsPlayed},
                     {"leadIn", orNull(outcome.leadIn)},
                     {"period", orNull(outcome.period)}};
    if (withCycle) {
        auto& states = j["cycleStates"] = nlohmann::json::array();
        for (const auto& s : outcome.cycleStates) states.push_back(toJson(s));
    }
    return j;
}

nlohmann::json toJson(const FamilyNode& node) {
    return {{"state", toJson(node.state)}, {"depth", node.depth}, {"isSource", node.isSource}};
}

nlohmann::json toJson(const LengthSummary& summary, const std::optional<TailFit>& fit) {
    nlohmann::json j{{"games", summary.games},
                     {"terminated", summary.terminated()},
                     {"cutOffs", summary.cutOffs},
                     {"nonTerminating", summary.nonTerminating},
                     {"meanTricks", summary.meanTricks()},
                     {"meanCards", summary.meanCards()},
                     {"maxTricks", summary.maxTricks},
                     {"maxCards", summary.maxCards},
                     {"recordDeal", summary.recordDeal ? toJson(*summary.recordDeal) : nlohmann::json()},
                     {"recordIndex", summary.recordIndex}};
    if (summary.recordDeal) j["recordDealText"] = formatGameState(*summary.recordDeal);
    if (fit) {
        j["tail"] = {{"rate", fit->rate},
                     {"halfLife", fit->halfLife},
                     {"stderrRate", fit->stderrRate},
                     {"tailGames", fit->tailGames}};
    }
    return j;
}

}  // namespace bmn
