#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <bmn/card.hpp>

namespace bmn::app {

struct RecordText {
    const char* id;
    const char* holder;
    const char* date;
    std::uint64_t tricks;
    std::uint64_t cards;
    const char* hand1;
    const char* hand2;
};

struct StateText {
    const char* hand1;
    const char* hand2;
    int leader;
};

// Raw transcriptions of the published data.
const std::vector<RecordText>& recordTexts();
/// Origin first, then its printed predecessors.
const std::vector<StateText>& predecessorTexts();
const std::vector<std::string>& pieceTexts();
const std::vector<StateText>& constructionTexts();
const std::vector<StateText>& cycleTexts();

struct RecordEntry {
    std::string id;
    std::string holder;
    std::string date;
    std::uint64_t tricks = 0;
    std::uint64_t cards = 0;
    GameState deal;
};

struct Registry {
    std::vector<RecordEntry> records;
    std::vector<CardSeq> pieces;
    std::vector<GameState> constructions;
    /// Printed cycle states 1..62.
    std::vector<GameState> cycle;
    GameState predecessorOrigin;
    std::vector<GameState> predecessors;
    GameState balancedDeal;
    /// The deck found by expansion (55 cards as printed) and the standard
    /// deck found by mutation.
    GameState expansionDeck;
    GameState mutationDeck;
    /// expansionDeck with the three number cards of its "A---J" run removed.
    GameState expansionDeckTrimmed;
    GameState sixCardGame;
    GameState sixCardDoubled;
};

/// Parsed registry; built once.
const Registry& registry();

/// FNV-1a over every transcribed string and number, in a fixed order.
std::uint64_t registryChecksum();

/// Longest record game in tricks.
std::uint64_t recordTricksToBeat();

}  // namespace bmn::app
