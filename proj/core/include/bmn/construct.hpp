#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmn/card.hpp"
#include "bmn/engine.hpp"

namespace bmn {

/// A Jack-free card run that, terminated by a Jack, keeps the jack template
/// non-terminating.
struct Piece {
    CardSeq cards;
    bool certified = false;

    friend bool operator==(const Piece&, const Piece&) = default;
};

/// Trick-boundary states of a detected cycle, in play order.
struct LoopTrace {
    std::vector<GameState> states;
};

class ExpansionNotNonTerminating : public std::runtime_error {
public:
    explicit ExpansionNotNonTerminating(const std::string& what) : std::runtime_error(what) {}
};

class AssemblyNotNonTerminating : public std::runtime_error {
public:
    AssemblyNotNonTerminating(const std::string& what, PlayOutcome outcome)
        : std::runtime_error(what), outcome_(std::move(outcome)) {}
    const PlayOutcome& outcome() const noexcept { return outcome_; }

private:
    PlayOutcome outcome_;
};

inline constexpr std::uint64_t kTemplateBudget = 10'000;

/// The filter piece used throughout: `--K---A----AA`.
const Piece& defaultFilter();

/// Checks that each state plays into the next and the last into the first.
bool verifyLoop(const LoopTrace& loop);

/// Concatenates the loop states' hands into one game, each state seated so its
/// leader takes the seat of states[0].leader. Throws ExpansionNotNonTerminating
/// when the result does not cycle within `budgetTricks`.
GameState expandLoop(const LoopTrace& loop, std::uint64_t budgetTricks = kDefaultMaxTricks);

enum class EditOp : unsigned { Insert = 1, Remove = 2, Swap = 4 };

struct EditOps {
    unsigned mask = 0;
    static EditOps all() { return {7}; }
    EditOps& add(EditOp op) {
        mask |= static_cast<unsigned>(op);
        return *this;
    }
    bool has(EditOp op) const noexcept { return (mask & static_cast<unsigned>(op)) != 0; }
};

struct MutateOptions {
    EditOps ops = EditOps::all();
    unsigned maxEdits = 1;
    std::uint64_t budgetTricks = kTemplateBudget;
    /// Restricts edits to positions [begin, end) of hand1 followed by hand2.
    std::optional<std::pair<std::size_t, std::size_t>> window;
    unsigned workers = 1;
};

/// Edits the concatenated deck up to `maxEdits` times, tries every split into
/// two hands, and keeps the non-terminating results (deduplicated, sorted).
std::vector<GameState> mutate(const GameState& state, const MutateOptions& options);

/// Plays `--J` + filter + `J` + candidate + `J-` against `J-`.
PlayOutcome templateTest(const CardSeq& candidate, const Piece& filter = defaultFilter(),
                         std::uint64_t budgetTricks = kTemplateBudget);

bool certifies(const CardSeq& candidate, const Piece& filter = defaultFilter(),
               std::uint64_t budgetTricks = kTemplateBudget);

struct SwapClassOptions {
    /// Limit on number-card insertions plus removals away from the seed.
    unsigned maxNumberEdits = 3;
    std::uint64_t budgetTricks = kTemplateBudget;
    std::size_t maxMembers = 200'000;
};

/// Certified pieces reachable from `piece` by face-for-face swaps (unbounded)
/// and number-card insertions/removals (bounded), every step re-certified.
/// Sorted shortlex; includes the seed.
std::vector<Piece> findSwapClass(const Piece& piece, const Piece& filter = defaultFilter(),
                                 const SwapClassOptions& options = {});

enum class EnumerationMode { Base4, Multiset };

struct EnumerateOptions {
    std::size_t maxLen = 6;
    EnumerationMode mode = EnumerationMode::Base4;
    /// Multiset mode: face-card counts (jacks must be zero). Number cards
    /// range from zero up to maxLen minus the face cards.
    DeckComposition faces{};
    std::uint64_t budgetTricks = kTemplateBudget;
    bool dedupe = true;
    SwapClassOptions classOptions{};
    unsigned workers = 1;
};

struct PieceSearch {
    std::uint64_t tested = 0;
    /// Every certified candidate, shortlex order.
    std::vector<CardSeq> certified;
    /// One representative per face-swap class: the shortlex-least certified
    /// candidate not already absorbed by an earlier class.
    std::vector<Piece> representatives;
};

inline constexpr std::size_t kMaxPieceDigits = 40;

PieceSearch enumeratePieces(const EnumerateOptions& options, const Piece& filter = defaultFilter());

/// Calls `visit` for every candidate the base-4 scan tests, in scan order:
/// counting upward over maxLen digits (`-`=0, Q=1, K=2, A=3, leftmost digit
/// most significant) and, for each count, testing the full-width sequence
/// then repeatedly dropping the leftmost digit down to the first face card.
/// The all-number count is tested at every width down to one card.
/// Candidates exceeding 4 of one face kind or 12 face cards are skipped.
void scanBase4(std::size_t maxLen, const std::function<void(const CardSeq&)>& visit);

struct Assembly {
    GameState state;
    DeckComposition composition;
    PlayOutcome outcome;
};

/// piece1 + J + piece2 + J + ... + pieceK + `J-` against `J-`, player 1 to lead.
Assembly assembleDeck(const std::vector<Piece>& pieces, std::uint64_t budgetTricks = kDefaultMaxTricks);

}  // namespace bmn
