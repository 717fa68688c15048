#pragma once

#include <nlohmann/json.hpp>

#include "bmn/card.hpp"
#include "bmn/engine.hpp"
#include "bmn/reverse.hpp"
#include "bmn/stochastic.hpp"

namespace bmn {

/// {"hand1": "...", "hand2": "...", "leader": 1|2}
nlohmann::json toJson(const GameState& state);
GameState gameStateFromJson(const nlohmann::json& j);

/// {"kind", "winner", "tricks", "cardsPlayed", "leadIn", "period"}; absent
/// optionals are null. Cycle states are added under "cycleStates" on request.
nlohmann::json toJson(const PlayOutcome& outcome, bool withCycle = false);

/// {"state": {...}, "depth": n, "isSource": bool}
nlohmann::json toJson(const FamilyNode& node);

/// Summary without histograms, plus the tail fit when one is given.
nlohmann::json toJson(const LengthSummary& summary, const std::optional<TailFit>& fit = std::nullopt);

}  // namespace bmn
