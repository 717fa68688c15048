#include "bmn/reverse.hpp"

#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "bmn/engine.hpp"

namespace bmn {

namespace {

// Replays forward rules over `pile` with `leader` laying first. Returns true
// when the cards form exactly one complete trick, ending on the last card and
// won by `winner`; `laidBy` receives the player for each card.
bool replayTranscript(std::span<const Card> pile, Player leader, Player winner,
                      std::vector<Player>& laidBy) {
    laidBy.clear();
    Player turn = leader;
    Player courtHolder = leader;
    bool courtSeen = false;
    int owed = 0;
    for (std::size_t i = 0; i < pile.size(); ++i) {
        const Card c = pile[i];
        laidBy.push_back(turn);
        if (isCourt(c)) {
            courtHolder = turn;
            courtSeen = true;
            owed = penaltyOf(c);
            turn = other(turn);
        } else if (!courtSeen) {
            turn = other(turn);
        } else if (--owed == 0) {
            return i + 1 == pile.size() && courtHolder == winner;
        }
    }
    return false;
}

std::string keyOf(const GameState& s) {
    std::string key;
    key.reserve(s.cardCount() + 2);
    key.push_back(static_cast<char>('0' + number(s.leader)));
    key += formatCardSeq(s.hand1);
    key.push_back('/');
    key += formatCardSeq(s.hand2);
    return key;
}

GameState mirrored(const GameState& s) { return {s.hand2, s.hand1, other(s.leader)}; }

}  // namespace

std::string_view toString(ClosureBudget b) {
    switch (b) {
        case ClosureBudget::None: return "none";
        case ClosureBudget::Depth: return "depth";
        case ClosureBudget::States: return "states";
    }
    return "?";
}

PredecessorSet predecessorsOf(const GameState& state) {
    PredecessorSet out{state, {}};
    const Player winner = state.leader;
    const CardSeq& won = state.hand(winner);
    std::vector<Player> laidBy;
    std::set<std::string> seen;

    for (std::size_t k = 2; k <= won.size(); ++k) {
        const std::span<const Card> pile(won.data() + (won.size() - k), k);
        for (Player leader : {Player::One, Player::Two}) {
            if (!replayTranscript(pile, leader, winner, laidBy)) continue;

            GameState prev = state;
            prev.hand(winner).resize(won.size() - k);
            prev.leader = leader;
            CardSeq laid[2];
            for (std::size_t i = 0; i < k; ++i) laid[seat(laidBy[i])].push_back(pile[i]);
            prev.hand1.insert(prev.hand1.begin(), laid[0].begin(), laid[0].end());
            prev.hand2.insert(prev.hand2.begin(), laid[1].begin(), laid[1].end());

            if (prev == state || !seen.insert(keyOf(prev)).second) continue;
            const TrickOutcome check = playTrick(prev);
            if (check.ended || check.next != state) {
                throw std::logic_error("predecessor does not replay to its origin: " +
                                       formatGameState(prev));
            }
            out.predecessors.push_back(std::move(prev));
        }
    }
    return out;
}

ClosureResult backwardClosure(const std::vector<GameState>& anchors, const ClosureOptions& options) {
    if (anchors.empty()) throw std::invalid_argument("backwardClosure needs at least one anchor");
    if (options.maxDepth < 1 || options.maxStates < 1) {
        throw std::invalid_argument("closure budgets must be at least 1");
    }

    ClosureResult result;
    std::unordered_map<std::string, std::size_t> visited;  // key -> node index
    constexpr std::size_t kAnchor = static_cast<std::size_t>(-1);
    for (const auto& a : anchors) visited.emplace(keyOf(a), kAnchor);

    std::vector<bool> classified;
    // Frontier entries index into `anchors` (first level) or `result.nodes`.
    std::vector<std::size_t> frontier(anchors.size());
    for (std::size_t i = 0; i < anchors.size(); ++i) frontier[i] = i;
    bool anchorLevel = true;

    bool stop = false;
    for (std::uint32_t depth = 1; !frontier.empty() && !stop; ++depth) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            if (stop) break;
            const PredecessorSet preds =
                predecessorsOf(anchorLevel ? anchors[idx] : result.nodes[idx].state);
            if (!anchorLevel) {
                result.nodes[idx].isSource = preds.predecessors.empty();
                classified[idx] = true;
            }
            for (const auto& p : preds.predecessors) {
                auto key = keyOf(p);
                if (visited.contains(key)) continue;
                if (depth > options.maxDepth) {
                    result.budgetHit = ClosureBudget::Depth;
                    break;
                }
                if (result.nodes.size() >= options.maxStates) {
                    result.budgetHit = ClosureBudget::States;
                    stop = true;
                    break;
                }
                visited.emplace(std::move(key), result.nodes.size());
                next.push_back(result.nodes.size());
                result.nodes.push_back({p, depth, false});
                classified.push_back(false);
            }
        }
        if (depth > options.maxDepth) break;
        frontier = std::move(next);
        anchorLevel = false;
    }

    for (std::size_t i = 0; i < result.nodes.size(); ++i) {
        if (!classified[i]) {
            result.nodes[i].isSource = predecessorsOf(result.nodes[i].state).predecessors.empty();
        }
    }
    return result;
}

std::vector<GameState> balancedMembers(const std::vector<FamilyNode>& nodes) {
    std::vector<GameState> out;
    for (const auto& n : nodes) {
        if (n.state.balanced()) out.push_back(n.state);
    }
    return out;
}

FamilyCounts familyCounts(const std::vector<FamilyNode>& nodes) {
    FamilyCounts c;
    std::set<std::string> upToSwap;
    for (const auto& n : nodes) {
        ++c.nodes;
        if (n.isSource) ++c.sources;
        if (!n.state.balanced()) continue;
        ++c.balancedNodes;
        if (n.isSource) ++c.balancedSources;
        (n.state.leader == Player::One ? c.balancedLeaderOne : c.balancedLeaderTwo) += 1;
        upToSwap.insert(std::min(keyOf(n.state), keyOf(mirrored(n.state))));
    }
    c.balancedUpToSwap = upToSwap.size();
    return c;
}

}  // namespace bmn
