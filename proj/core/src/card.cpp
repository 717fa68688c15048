#include "bmn/card.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace bmn {

namespace {

std::optional<Card> cardFromChar(char ch) {
    switch (ch) {
        case '-': return Card::Number;
        case 'J': return Card::Jack;
        case 'Q': return Card::Queen;
        case 'K': return Card::King;
        case 'A': return Card::Ace;
        default: return std::nullopt;
    }
}

bool isSpace(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

// Parses a card sequence starting at `pos`, stopping at whitespace-separated
// tokens that are not card characters. `base` is added to reported offsets.
CardSeq parseRun(std::string_view text, std::size_t base) {
    CardSeq out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (isSpace(ch)) continue;
        auto card = cardFromChar(ch);
        if (!card) {
            throw ParseError(ParseError::Kind::InvalidCharacter, base + i,
                             "invalid card character '" + std::string(1, ch) + "' at position " +
                                 std::to_string(base + i));
        }
        out.push_back(*card);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && isSpace(s.front())) s.remove_prefix(1);
    while (!s.empty() && isSpace(s.back())) s.remove_suffix(1);
    return s;
}

// Strips a trailing "(n)" annotation, returning the leader if present.
std::optional<Player> takeLeader(std::string_view& body, std::size_t base) {
    body = trim(body);
    if (body.empty() || body.back() != ')') return std::nullopt;
    const auto open = body.rfind('(');
    if (open == std::string_view::npos) {
        throw ParseError(ParseError::Kind::MalformedState, base + body.size() - 1,
                         "unbalanced ')' in state");
    }
    const auto inner = trim(body.substr(open + 1, body.size() - open - 2));
    body = body.substr(0, open);
    if (inner == "1") return Player::One;
    if (inner == "2") return Player::Two;
    throw ParseError(ParseError::Kind::InvalidLeader, base + open + 1,
                     "leader must be 1 or 2, got '" + std::string(inner) + "'");
}

}  // namespace

std::size_t& DeckComposition::operator[](Card c) {
    switch (c) {
        case Card::Number: return numbers;
        case Card::Jack: return jacks;
        case Card::Queen: return queens;
        case Card::King: return kings;
        case Card::Ace: return aces;
    }
    return numbers;
}

std::size_t DeckComposition::operator[](Card c) const {
    return const_cast<DeckComposition&>(*this)[c];
}

CardSeq parseCardSeq(std::string_view text) { return parseRun(text, 0); }

std::string formatCardSeq(const CardSeq& seq) {
    std::string out;
    out.reserve(seq.size());
    for (Card c : seq) out.push_back(toChar(c));
    return out;
}

GameState parseGameState(std::string_view text) {
    std::string_view body = text;
    GameState state;
    state.leader = takeLeader(body, 0).value_or(Player::One);
    body = trim(body);

    if (body.starts_with("1.")) {
        const auto second = body.find("2.");
        if (second == std::string_view::npos) {
            throw ParseError(ParseError::Kind::MalformedState, body.size(),
                             "annotated state is missing the '2.' hand");
        }
        const std::size_t base1 = static_cast<std::size_t>(body.data() - text.data()) + 2;
        state.hand1 = parseRun(body.substr(2, second - 2), base1);
        state.hand2 = parseRun(body.substr(second + 2), base1 + second);
        return state;
    }

    const auto slash = body.find('/');
    if (slash == std::string_view::npos) {
        throw ParseError(ParseError::Kind::MalformedState, 0,
                         "state must be '1. <hand> 2. <hand> (n)' or '<hand> / <hand>'");
    }
    const std::size_t base = static_cast<std::size_t>(body.data() - text.data());
    state.hand1 = parseRun(body.substr(0, slash), base);
    state.hand2 = parseRun(body.substr(slash + 1), base + slash + 1);
    return state;
}

std::string formatGameState(const GameState& state) {
    return "1. " + formatCardSeq(state.hand1) + " 2. " + formatCardSeq(state.hand2) + " (" +
           std::to_string(number(state.leader)) + ")";
}

std::string formatCompact(const GameState& state) {
    return formatCardSeq(state.hand1) + " / " + formatCardSeq(state.hand2) + " (" +
           std::to_string(number(state.leader)) + ")";
}

DeckComposition composition(const CardSeq& seq) {
    DeckComposition out;
    for (Card c : seq) ++out[c];
    return out;
}

DeckComposition composition(const GameState& state) {
    DeckComposition out = composition(state.hand1);
    for (Card c : state.hand2) ++out[c];
    return out;
}

CardSeq concat(const CardSeq& a, const CardSeq& b) {
    CardSeq out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool shortlexLess(const CardSeq& a, const CardSeq& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace bmn
