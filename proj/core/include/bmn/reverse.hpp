#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bmn/card.hpp"

namespace bmn {

struct PredecessorSet {
    GameState origin;
    std::vector<GameState> predecessors;
};

/// Every state from which one forward trick yields `state`. The trick winner
/// is `state.leader`; each suffix of the winner's hand is tried as the won
/// pile under both possible previous leaders, and kept when forward rules
/// replayed over it describe exactly one complete trick won by that player.
PredecessorSet predecessorsOf(const GameState& state);

struct FamilyNode {
    GameState state;
    /// Tricks from this state to the nearest anchor.
    std::uint32_t depth = 0;
    /// No state plays into this one.
    bool isSource = false;
};

enum class ClosureBudget { None, Depth, States };

std::string_view toString(ClosureBudget b);

struct ClosureResult {
    /// Breadth-first order; each state appears once, at its smallest depth.
    std::vector<FamilyNode> nodes;
    ClosureBudget budgetHit = ClosureBudget::None;
};

struct ClosureOptions {
    std::uint32_t maxDepth = 64;
    std::size_t maxStates = 1'000'000;
};

/// Expands predecessors breadth-first from all anchors. Anchors themselves
/// are never reported as nodes.
ClosureResult backwardClosure(const std::vector<GameState>& anchors, const ClosureOptions& options);

std::vector<GameState> balancedMembers(const std::vector<FamilyNode>& nodes);

/// Counts of "starting deal" candidates under the conventions one might use
/// to read a family of deals feeding one cycle.
struct FamilyCounts {
    std::size_t nodes = 0;
    std::size_t sources = 0;
    std::size_t balancedNodes = 0;
    std::size_t balancedSources = 0;
    std::size_t balancedLeaderOne = 0;
    std::size_t balancedLeaderTwo = 0;
    /// Balanced nodes identified up to exchanging the two hands.
    std::size_t balancedUpToSwap = 0;
};

FamilyCounts familyCounts(const std::vector<FamilyNode>& nodes);

}  // namespace bmn
