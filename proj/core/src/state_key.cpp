#include "bmn/state_key.hpp"

#include <string>

namespace bmn {

StateKey stateKey(const GameState& state) {
    const std::size_t total = state.cardCount();
    if (total > kStateKeyCapacity) {
        throw CapacityExceeded("state of " + std::to_string(total) +
                               " cards exceeds packed key capacity of " +
                               std::to_string(kStateKeyCapacity));
    }
    StateKey key;
    std::size_t slot = 0;
    auto put = [&](Card c) {
        key.words[slot / 21] |= static_cast<std::uint64_t>(c) << (3 * (slot % 21));
        ++slot;
    };
    for (Card c : state.hand1) put(c);
    for (Card c : state.hand2) put(c);
    key.words[4] = static_cast<std::uint64_t>(state.hand1.size()) |
                   (static_cast<std::uint64_t>(state.hand2.size()) << 8) |
                   (static_cast<std::uint64_t>(number(state.leader)) << 16);
    return key;
}

}  // namespace bmn
