#pragma once

#include <string>
#include <vector>

#include <bmn/reverse.hpp>

namespace bmn::app {

struct Check {
    std::string section;
    std::string item;
    bool pass = false;
    std::string detail;
};

std::vector<Check> checkRecords();
std::vector<Check> checkPieces();
std::vector<Check> checkConstructions();
/// Balanced deal, 6-card games and the two unbalanced standard decks.
std::vector<Check> checkDecks();
std::vector<Check> checkCycle();
std::vector<Check> checkPredecessors();
std::vector<Check> checkFamily();

/// Section names accepted by `verify --only`.
const std::vector<std::string>& verifySections();
std::vector<Check> runSection(const std::string& section);

/// Closure from the 62 printed cycle states, cached.
const ClosureResult& printedCycleClosure();

}  // namespace bmn::app
