#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "bmn/card.hpp"
#include "bmn/engine.hpp"

namespace bmn {

enum class DealKind { Uniform, FaceBalanced };

std::string_view toString(DealKind k);
std::optional<DealKind> parseDealKind(std::string_view s);

struct DealPolicy {
    DealKind kind = DealKind::Uniform;
    std::uint64_t seed = 0;
};

/// Counter-based generator: draw `index` of a seed is computable on its own.
class DealRng {
public:
    DealRng(std::uint64_t seed, std::uint64_t index) noexcept;
    std::uint64_t next() noexcept;
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) noexcept;

private:
    std::uint64_t state_;
};

/// A standard 26/26 deal, player 1 to lead.
GameState randomDeal(const DealPolicy& policy, std::uint64_t index);

struct LengthSummary {
    std::uint64_t games = 0;
    std::map<std::uint64_t, std::uint64_t> trickHistogram;
    std::map<std::uint64_t, std::uint64_t> cardHistogram;
    std::uint64_t totalTricks = 0;
    std::uint64_t totalCards = 0;
    /// Longest terminated game by tricks (ties: more cards, then lower draw index).
    std::uint64_t maxTricks = 0;
    std::uint64_t maxCards = 0;
    std::optional<GameState> recordDeal;
    std::uint64_t recordIndex = 0;
    std::uint64_t cutOffs = 0;
    std::uint64_t nonTerminating = 0;

    std::uint64_t terminated() const noexcept { return games - cutOffs - nonTerminating; }
    double meanTricks() const noexcept;
    double meanCards() const noexcept;

    /// Adds one game's outcome; `index` is its draw index.
    void add(const GameState& deal, std::uint64_t index, const PlayOutcome& outcome);
    /// Order-insensitive union of two summaries.
    void merge(const LengthSummary& other);

    friend bool operator==(const LengthSummary&, const LengthSummary&) = default;
};

/// A game worth logging, reported while a batch runs.
struct NotableGame {
    GameState deal;
    std::uint64_t index = 0;
    PlayOutcome outcome;
};

struct BatchOptions {
    std::uint64_t maxTricks = kDefaultMaxTricks;
    unsigned workers = 1;
    Detect detect = Detect::Brent;
    /// First draw index; draws run over [firstIndex, firstIndex + games).
    std::uint64_t firstIndex = 0;
    /// Polled between chunks; a set flag stops the batch early.
    const std::atomic<bool>* cancel = nullptr;
    /// Called (serialised) for terminated games longer than this many tricks
    /// and for every non-terminating deal.
    std::uint64_t notableTricks = UINT64_MAX;
    std::function<void(const NotableGame&)> onNotable;
};

/// Plays `games` deals. For a fixed policy and index range the summary does
/// not depend on the worker count.
LengthSummary runBatch(const DealPolicy& policy, std::uint64_t games, const BatchOptions& options = {});

/// Columns: length, trickCount, cardCount.
void writeHistogramCsv(const LengthSummary& summary, std::ostream& out);

class InsufficientTailMass : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TailFit {
    /// Per-trick decay rate of the survival function.
    double rate = 0;
    double halfLife = 0;
    double stderrRate = 0;
    std::uint64_t tailGames = 0;
};

inline constexpr std::uint64_t kDefaultTailStart = 100;

/// Maximum-likelihood geometric (discrete exponential) fit to trick lengths
/// above `tailStart`.
TailFit fitExponentialTail(const LengthSummary& summary, std::uint64_t tailStart = kDefaultTailStart,
                           std::uint64_t minTailGames = 1000);

/// Pooled P(length >= t + delta | length >= t) over t in [tailStart, tailEnd).
double survivalRatio(const LengthSummary& summary, std::uint64_t tailStart, std::uint64_t tailEnd,
                     std::uint64_t delta = 20);

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// H_n, summed as 1/n + 1/(n-1) + ... + 1 up to n = 10^6 and by the
/// asymptotic series beyond.
double harmonic(std::uint64_t n);

struct RecordModel {
    double mu = 1;
    double A = 1;
    double k = 0;
    double gamma = kEulerGamma;
};

double expectedRecord(const RecordModel& model, std::uint64_t n);
double expectedRecordOverTime(const RecordModel& model, double t);

}  // namespace bmn
