#pragma once

// bmn::toString would otherwise win doctest's unqualified lookup for enums.
#define DOCTEST_STRINGIFY(...) ::doctest::toString(__VA_ARGS__)
#include <doctest.h>

#include <optional>
#include <ostream>

#include <bmn/card.hpp>
#include <bmn/engine.hpp>
#include <bmn/reverse.hpp>
#include <bmn/stochastic.hpp>

namespace bmn {

inline std::ostream& operator<<(std::ostream& os, const GameState& s) { return os << formatCompact(s); }
inline std::ostream& operator<<(std::ostream& os, Player p) { return os << number(p); }
inline std::ostream& operator<<(std::ostream& os, OutcomeKind k) { return os << toString(k); }
inline std::ostream& operator<<(std::ostream& os, Detect d) { return os << toString(d); }
inline std::ostream& operator<<(std::ostream& os, DealKind k) { return os << toString(k); }
inline std::ostream& operator<<(std::ostream& os, ClosureBudget b) { return os << toString(b); }
inline std::ostream& operator<<(std::ostream& os, const DeckComposition& d) {
    return os << d.numbers << '/' << d.jacks << '/' << d.queens << '/' << d.kings << '/' << d.aces;
}

}  // namespace bmn

namespace doctest {

template <class T>
struct StringMaker<std::optional<T>> {
    static String convert(const std::optional<T>& v) { return v ? ::doctest::toString(*v) : String("nullopt"); }
};

}  // namespace doctest
