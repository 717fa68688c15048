#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "bmn/card.hpp"

namespace bmn {

class CapacityExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Packed trick-boundary state: 3 bits per card, hand1 then hand2, 21 cards
/// per word, plus a trailer word holding both lengths and the leader.
/// Injective for states of up to kStateKeyCapacity cards.
struct StateKey {
    std::array<std::uint64_t, 5> words{};

    friend bool operator==(const StateKey&, const StateKey&) = default;
};

inline constexpr std::size_t kStateKeyCapacity = 64;

StateKey stateKey(const GameState& state);

struct StateKeyHash {
    std::size_t operator()(const StateKey& key) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : key.words) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

}  // namespace bmn

template <>
struct std::hash<bmn::StateKey> : bmn::StateKeyHash {};
