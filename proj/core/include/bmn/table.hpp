#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "bmn/card.hpp"

namespace bmn {

/// Power-of-two ring buffer of cards. Capacity is fixed at reset() to the
/// total card count of a game, which play conserves.
class CardRing {
public:
    void reset(std::size_t capacity) {
        const auto cap = std::bit_ceil(std::max<std::size_t>(capacity, 1));
        if (buf_.size() < cap) buf_.resize(cap);
        mask_ = static_cast<std::uint32_t>(buf_.size() - 1);
        head_ = 0;
        size_ = 0;
    }

    void assign(const CardSeq& seq) {
        head_ = 0;
        size_ = 0;
        for (Card c : seq) push(c);
    }

    bool empty() const noexcept { return size_ == 0; }
    std::size_t size() const noexcept { return size_; }
    Card operator[](std::size_t i) const noexcept { return buf_[(head_ + i) & mask_]; }

    Card pop() noexcept {
        const Card c = buf_[head_];
        head_ = (head_ + 1) & mask_;
        --size_;
        return c;
    }

    void push(Card c) noexcept {
        buf_[(head_ + size_) & mask_] = c;
        ++size_;
    }

    void append(const std::vector<Card>& cards) noexcept {
        for (Card c : cards) push(c);
    }

    CardSeq toSeq() const {
        CardSeq out(size_);
        for (std::size_t i = 0; i < size_; ++i) out[i] = (*this)[i];
        return out;
    }

    bool equals(const CardRing& other) const noexcept {
        if (size_ != other.size_) return false;
        for (std::size_t i = 0; i < size_; ++i) {
            if ((*this)[i] != other[i]) return false;
        }
        return true;
    }

    bool equals(const CardSeq& seq) const noexcept {
        if (size_ != seq.size()) return false;
        for (std::size_t i = 0; i < size_; ++i) {
            if ((*this)[i] != seq[i]) return false;
        }
        return true;
    }

private:
    std::vector<Card> buf_;
    std::uint32_t mask_ = 0;
    std::uint32_t head_ = 0;
    std::uint32_t size_ = 0;
};

/// Mutable game position used by the hot play loop.
class Table {
public:
    struct Trick {
        std::size_t cardsLaid = 0;
        Player winner = Player::One;
        /// Set when a player was required to lay a card with an empty hand;
        /// holds the opponent, who then collects the pile.
        std::optional<Player> ended;
    };

    Table() = default;
    explicit Table(const GameState& state) { load(state); }

    void load(const GameState& state) {
        const std::size_t total = state.cardCount();
        hands_[0].reset(total);
        hands_[1].reset(total);
        hands_[0].assign(state.hand1);
        hands_[1].assign(state.hand2);
        leader_ = state.leader;
        pile_.clear();
        pile_.reserve(total);
    }

    GameState state() const { return {hands_[0].toSeq(), hands_[1].toSeq(), leader_}; }

    const CardRing& hand(Player p) const noexcept { return hands_[seat(p)]; }
    Player leader() const noexcept { return leader_; }
    const std::vector<Card>& lastPile() const noexcept { return pile_; }

    Trick playTrick() noexcept {
        pile_.clear();
        Player turn = leader_;
        Player courtHolder = leader_;
        bool courtSeen = false;
        int owed = 0;
        for (;;) {
            CardRing& hand = hands_[seat(turn)];
            if (hand.empty()) {
                const Player winner = other(turn);
                hands_[seat(winner)].append(pile_);
                leader_ = winner;
                return {pile_.size(), winner, winner};
            }
            const Card c = hand.pop();
            pile_.push_back(c);
            if (isCourt(c)) {
                courtHolder = turn;
                courtSeen = true;
                owed = penaltyOf(c);
                turn = other(turn);
            } else if (!courtSeen) {
                turn = other(turn);
            } else if (--owed == 0) {
                hands_[seat(courtHolder)].append(pile_);
                leader_ = courtHolder;
                return {pile_.size(), courtHolder, std::nullopt};
            }
        }
    }

    bool sameState(const Table& other) const noexcept {
        return leader_ == other.leader_ && hands_[0].equals(other.hands_[0]) &&
               hands_[1].equals(other.hands_[1]);
    }

    bool sameState(const GameState& s) const noexcept {
        return leader_ == s.leader && hands_[0].equals(s.hand1) && hands_[1].equals(s.hand2);
    }

private:
    CardRing hands_[2];
    Player leader_ = Player::One;
    std::vector<Card> pile_;
};

}  // namespace bmn
