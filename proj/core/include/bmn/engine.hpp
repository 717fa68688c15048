#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "bmn/card.hpp"
#include "bmn/table.hpp"

namespace bmn {

class EmptyLeaderHand : public std::invalid_argument {
public:
    EmptyLeaderHand() : std::invalid_argument("the leading player has no cards") {}
};

struct TrickOutcome {
    GameState next;
    std::size_t cardsLaid = 0;
    Player trickWinner = Player::One;
    /// Winner of the game, when a player had to lay a card from an empty hand.
    std::optional<Player> ended;
};

/// Resolves exactly one trick. Won cards go under the winner's pack in the
/// order they were laid.
TrickOutcome playTrick(const GameState& state);

enum class Detect { HashSet, Brent, None };

enum class OutcomeKind { Terminated, NonTerminating, CutOff };

std::string_view toString(Detect d);
std::string_view toString(OutcomeKind k);
std::optional<Detect> parseDetect(std::string_view s);

struct PlayOutcome {
    OutcomeKind kind = OutcomeKind::CutOff;
    std::optional<Player> winner;
    /// Completed tricks, plus the final partial trick of a terminated game.
    std::uint64_t tricks = 0;
    /// Turns at which a player had to lay a card, including the final turn the
    /// loser could not meet.
    std::uint64_t cardsPlayed = 0;
    std::optional<std::uint64_t> leadIn;
    std::optional<std::uint64_t> period;
    /// cycleStates[0] is the first repeated state.
    std::vector<GameState> cycleStates;
};

inline constexpr std::uint64_t kDefaultMaxTricks = 100'000;

struct PlayOptions {
    std::uint64_t maxTricks = kDefaultMaxTricks;
    Detect detect = Detect::HashSet;
    bool collectCycle = true;
};

/// Reusable player; keeps its buffers between games so batch loops do not
/// allocate per deal.
class Simulator {
public:
    PlayOutcome play(const GameState& start, const PlayOptions& options);

private:
    PlayOutcome playNone(std::uint64_t maxTricks);
    PlayOutcome playHashSet(const GameState& start, std::uint64_t maxTricks, bool collect);
    PlayOutcome playBrent(const GameState& start, std::uint64_t maxTricks, bool collect);
    void collectCycle(const GameState& start, PlayOutcome& out);

    Table table_;
    Table aux_;
};

PlayOutcome playGame(const GameState& start, std::uint64_t maxTricks = kDefaultMaxTricks,
                     Detect detect = Detect::HashSet);

}  // namespace bmn
