#include "testing.hpp"

#include <algorithm>
#include <random>

#include <bmn/card.hpp>

using namespace bmn;

TEST_CASE("penalties and glyphs") {
    CHECK(penaltyOf(Card::Number) == 0);
    CHECK(penaltyOf(Card::Jack) == 1);
    CHECK(penaltyOf(Card::Queen) == 2);
    CHECK(penaltyOf(Card::King) == 3);
    CHECK(penaltyOf(Card::Ace) == 4);
    CHECK(kAllCards.size() == 5);
    CHECK(Card::Number == Card::Number);
}

TEST_CASE("parseCardSeq") {
    CHECK(parseCardSeq("J-") == CardSeq{Card::Jack, Card::Number});
    CHECK(parseCardSeq("").empty());
    CHECK(parseCardSeq(" -A \nJ") == CardSeq{Card::Number, Card::Ace, Card::Jack});
}

TEST_CASE("parseCardSeq rejects other characters with their position") {
    try {
        parseCardSeq("--q-");
        FAIL("lowercase accepted");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::InvalidCharacter);
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parseCardSeq("10"), ParseError);
}

TEST_CASE("formatCardSeq") {
    CHECK(formatCardSeq({Card::Jack, Card::Number}) == "J-");
    CHECK(formatCardSeq({}).empty());
    CHECK(formatCardSeq({Card::Number, Card::King, Card::Ace}) == "-KA");
}

TEST_CASE("round trip drops whitespace only") {
    std::mt19937_64 rng(7);
    const std::string alphabet = "-JQKA \t\n";
    for (int i = 0; i < 2000; ++i) {
        std::string text;
        const auto len = rng() % 60;
        for (std::size_t k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
        std::string stripped;
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
        }
        CHECK(formatCardSeq(parseCardSeq(text)) == stripped);
    }
}

TEST_CASE("parseGameState forms") {
    const GameState six = parseGameState("1. J-- 2. -J- (1)");
    CHECK(formatCardSeq(six.hand1) == "J--");
    CHECK(formatCardSeq(six.hand2) == "-J-");
    CHECK(six.leader == Player::One);

    const GameState b = parseGameState("1. K-A-AJ 2. -K-A-A-J- (2)");
    CHECK(b.leader == Player::Two);

    const GameState dflt = parseGameState("1. - 2. - ");
    CHECK(dflt.leader == Player::One);
    CHECK(dflt.hand1.size() == 1);

    const GameState compact = parseGameState("J-- / -J- (2)");
    CHECK(compact.leader == Player::Two);
    CHECK(compact == GameState{parseCardSeq("J--"), parseCardSeq("-J-"), Player::Two});
    CHECK(parseGameState(formatGameState(compact)) == compact);
    CHECK(parseGameState(formatCompact(compact)) == compact);
}

TEST_CASE("parseGameState errors") {
    auto kindOf = [](const char* text) {
        try {
            parseGameState(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        FAIL("no error for " << text);
        return ParseError::Kind::MalformedState;
    };
    CHECK(kindOf("J--") == ParseError::Kind::MalformedState);
    CHECK(kindOf("1. J--") == ParseError::Kind::MalformedState);
    CHECK(kindOf("J-- / -J- (3)") == ParseError::Kind::InvalidLeader);
    CHECK(kindOf("J-x / -J-") == ParseError::Kind::InvalidCharacter);
    try {
        parseGameState("J-- / -Jx");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
}

TEST_CASE("composition") {
    const GameState balanced = parseGameState("---K---Q-KQAJ-----AAJ--J-- / ----------Q----KQ-J-----KA");
    CHECK(composition(balanced) == DeckComposition::standard());
    CHECK(composition(GameState{}) == DeckComposition{});
    const GameState expansion = parseGameState("--Q-K-J-----------------KJ--Q----A-Q-A-A---J--Q-K-A-K / J-");
    CHECK(composition(expansion).numbers == 39);
    CHECK(composition(expansion).courts() == 16);
}

TEST_CASE("composition ignores order and seating") {
    std::mt19937_64 rng(11);
    CardSeq deck = parseCardSeq("---K---Q-KQAJ-----AAJ--J------------Q----KQ-J-----KA");
    const DeckComposition c = composition(deck);
    for (int i = 0; i < 200; ++i) {
        std::shuffle(deck.begin(), deck.end(), rng);
        const auto cut = static_cast<std::ptrdiff_t>(rng() % (deck.size() + 1));
        const GameState s{CardSeq(deck.begin(), deck.begin() + cut), CardSeq(deck.begin() + cut, deck.end()),
                          Player::Two};
        CHECK(composition(s) == c);
    }
}

TEST_CASE("shortlex order") {
    CHECK(shortlexLess(parseCardSeq("A"), parseCardSeq("--")));
    CHECK(shortlexLess(parseCardSeq("-J"), parseCardSeq("-Q")));
    CHECK(shortlexLess(parseCardSeq("QA"), parseCardSeq("K-")));
    CHECK_FALSE(shortlexLess(parseCardSeq("--"), parseCardSeq("--")));
}
