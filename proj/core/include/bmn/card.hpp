#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bmn {

/// Rank class of a card. Number cards carry no identity; the numeric value of
/// each enumerator is the penalty it demands from the opponent.
enum class Card : std::uint8_t { Number = 0, Jack = 1, Queen = 2, King = 3, Ace = 4 };

inline constexpr std::array<Card, 5> kAllCards{Card::Number, Card::Jack, Card::Queen,
                                               Card::King, Card::Ace};

constexpr int penaltyOf(Card c) noexcept { return static_cast<int>(c); }
constexpr bool isCourt(Card c) noexcept { return c != Card::Number; }

constexpr char toChar(Card c) noexcept {
    constexpr std::array<char, 5> glyphs{'-', 'J', 'Q', 'K', 'A'};
    return glyphs[static_cast<std::size_t>(c)];
}

/// Front = top of the pack (next card to play); back = where won tricks go.
using CardSeq = std::vector<Card>;

enum class Player : std::uint8_t { One = 1, Two = 2 };

constexpr Player other(Player p) noexcept { return p == Player::One ? Player::Two : Player::One; }
constexpr std::size_t seat(Player p) noexcept { return p == Player::One ? 0 : 1; }
constexpr int number(Player p) noexcept { return static_cast<int>(p); }

struct DeckComposition {
    std::size_t numbers = 0;
    std::size_t jacks = 0;
    std::size_t queens = 0;
    std::size_t kings = 0;
    std::size_t aces = 0;

    std::size_t& operator[](Card c);
    std::size_t operator[](Card c) const;
    std::size_t total() const noexcept { return numbers + jacks + queens + kings + aces; }
    std::size_t courts() const noexcept { return jacks + queens + kings + aces; }

    static DeckComposition standard() noexcept { return {36, 4, 4, 4, 4}; }

    friend bool operator==(const DeckComposition&, const DeckComposition&) = default;
};

/// Trick-boundary state: both hands and the player who lays the next card.
struct GameState {
    CardSeq hand1;
    CardSeq hand2;
    Player leader = Player::One;

    CardSeq& hand(Player p) noexcept { return p == Player::One ? hand1 : hand2; }
    const CardSeq& hand(Player p) const noexcept { return p == Player::One ? hand1 : hand2; }
    std::size_t cardCount() const noexcept { return hand1.size() + hand2.size(); }
    bool balanced() const noexcept { return hand1.size() == hand2.size(); }

    friend bool operator==(const GameState&, const GameState&) = default;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { InvalidCharacter, MalformedState, InvalidLeader };

    ParseError(Kind kind, std::size_t position, const std::string& what)
        : std::runtime_error(what), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    /// Offset into the parsed text.
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

CardSeq parseCardSeq(std::string_view text);
std::string formatCardSeq(const CardSeq& seq);

/// Accepts `1. <seq> 2. <seq> (<n>)` (leader annotation optional) or
/// `<seq> / <seq>` optionally followed by `(<n>)`. Leader defaults to player 1.
GameState parseGameState(std::string_view text);

/// Numbered line: `1. <seq> 2. <seq> (<n>)`.
std::string formatGameState(const GameState& state);
/// Compact form: `<seq> / <seq> (<n>)`.
std::string formatCompact(const GameState& state);

DeckComposition composition(const CardSeq& seq);
DeckComposition composition(const GameState& state);

CardSeq concat(const CardSeq& a, const CardSeq& b);

/// Shortlex order over `-` < `J` < `Q` < `K` < `A`.
bool shortlexLess(const CardSeq& a, const CardSeq& b);

}  // namespace bmn
