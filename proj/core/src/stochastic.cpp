#include "bmn/stochastic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <ostream>
#include <vector>

#include "parallel.hpp"

namespace bmn {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

template <std::size_t N>
void shuffle(std::array<Card, N>& cards, std::size_t count, DealRng& rng) {
    for (std::size_t i = count; i > 1; --i) {
        std::swap(cards[i - 1], cards[rng.below(i)]);
    }
}

// Whether `a` beats `b` for the record slot.
bool betterRecord(std::uint64_t ta, std::uint64_t ca, std::uint64_t ia, std::uint64_t tb,
                  std::uint64_t cb, std::uint64_t ib) {
    if (ta != tb) return ta > tb;
    if (ca != cb) return ca > cb;
    return ia < ib;
}

}  // namespace

std::string_view toString(DealKind k) {
    return k == DealKind::Uniform ? "uniform" : "face-balanced";
}

std::optional<DealKind> parseDealKind(std::string_view s) {
    if (s == "uniform") return DealKind::Uniform;
    if (s == "face-balanced" || s == "balanced") return DealKind::FaceBalanced;
    return std::nullopt;
}

DealRng::DealRng(std::uint64_t seed, std::uint64_t index) noexcept
    : state_(mix(seed + kGolden) ^ mix(index * kGolden + 0x632be59bd9b4e019ULL)) {}

std::uint64_t DealRng::next() noexcept {
    state_ += kGolden;
    return mix(state_);
}

std::uint64_t DealRng::below(std::uint64_t bound) noexcept {
    // Lemire's multiply-shift with rejection.
    for (;;) {
        const u128 m = static_cast<u128>(next()) * bound;
        const auto low = static_cast<std::uint64_t>(m);
        if (low >= bound || low >= (0 - bound) % bound) return static_cast<std::uint64_t>(m >> 64);
    }
}

GameState randomDeal(const DealPolicy& policy, std::uint64_t index) {
    DealRng rng(policy.seed, index);
    GameState s;
    s.leader = Player::One;
    if (policy.kind == DealKind::Uniform) {
        std::array<Card, 52> deck{};
        std::size_t pos = 36;
        for (Card c : {Card::Jack, Card::Queen, Card::King, Card::Ace}) {
            for (int i = 0; i < 4; ++i) deck[pos++] = c;
        }
        shuffle(deck, deck.size(), rng);
        s.hand1.assign(deck.begin(), deck.begin() + 26);
        s.hand2.assign(deck.begin() + 26, deck.end());
        return s;
    }
    for (CardSeq* hand : {&s.hand1, &s.hand2}) {
        std::array<Card, 26> cards{};
        std::size_t pos = 18;
        for (Card c : {Card::Jack, Card::Queen, Card::King, Card::Ace}) {
            cards[pos++] = c;
            cards[pos++] = c;
        }
        shuffle(cards, cards.size(), rng);
        hand->assign(cards.begin(), cards.end());
    }
    return s;
}

double LengthSummary::meanTricks() const noexcept {
    const auto n = terminated();
    return n == 0 ? 0.0 : static_cast<double>(totalTricks) / static_cast<double>(n);
}

double LengthSummary::meanCards() const noexcept {
    const auto n = terminated();
    return n == 0 ? 0.0 : static_cast<double>(totalCards) / static_cast<double>(n);
}

void LengthSummary::add(const GameState& deal, std::uint64_t index, const PlayOutcome& outcome) {
    ++games;
    if (outcome.kind == OutcomeKind::CutOff) {
        ++cutOffs;
        return;
    }
    if (outcome.kind == OutcomeKind::NonTerminating) {
        ++nonTerminating;
        return;
    }
    ++trickHistogram[outcome.tricks];
    ++cardHistogram[outcome.cardsPlayed];
    totalTricks += outcome.tricks;
    totalCards += outcome.cardsPlayed;
    if (!recordDeal ||
        betterRecord(outcome.tricks, outcome.cardsPlayed, index, maxTricks, maxCards, recordIndex)) {
        maxTricks = outcome.tricks;
        maxCards = outcome.cardsPlayed;
        recordDeal = deal;
        recordIndex = index;
    }
}

void LengthSummary::merge(const LengthSummary& other) {
    games += other.games;
    cutOffs += other.cutOffs;
    nonTerminating += other.nonTerminating;
    totalTricks += other.totalTricks;
    totalCards += other.totalCards;
    for (const auto& [len, n] : other.trickHistogram) trickHistogram[len] += n;
    for (const auto& [len, n] : other.cardHistogram) cardHistogram[len] += n;
    if (other.recordDeal &&
        (!recordDeal || betterRecord(other.maxTricks, other.maxCards, other.recordIndex, maxTricks,
                                     maxCards, recordIndex))) {
        maxTricks = other.maxTricks;
        maxCards = other.maxCards;
        recordDeal = other.recordDeal;
        recordIndex = other.recordIndex;
    }
}

LengthSummary runBatch(const DealPolicy& policy, std::uint64_t games, const BatchOptions& options) {
    if (games < 1) throw std::invalid_argument("runBatch needs at least one game");
    const unsigned workers = std::max(1u, options.workers);
    constexpr std::size_t kChunk = 4096;
    const std::size_t chunks = static_cast<std::size_t>((games + kChunk - 1) / kChunk);

    std::vector<LengthSummary> perChunk(chunks);
    std::vector<Simulator> sims(workers);
    std::mutex notableMutex;
    const PlayOptions play{options.maxTricks, options.detect, false};

    detail::parallelFor(
        chunks, workers,
        [&](std::size_t c, unsigned w) {
            if (options.cancel && options.cancel->load(std::memory_order_relaxed)) return;
            LengthSummary& part = perChunk[c];
            const std::uint64_t begin = options.firstIndex + c * kChunk;
            const std::uint64_t end = options.firstIndex + std::min<std::uint64_t>(games, (c + 1) * kChunk);
            for (std::uint64_t i = begin; i < end; ++i) {
                const GameState deal = randomDeal(policy, i);
                const PlayOutcome outcome = sims[w].play(deal, play);
                part.add(deal, i, outcome);
                const bool notable = outcome.kind == OutcomeKind::NonTerminating ||
                                     (outcome.kind == OutcomeKind::Terminated &&
                                      outcome.tricks > options.notableTricks);
                if (notable && options.onNotable) {
                    std::lock_guard lock(notableMutex);
                    options.onNotable({deal, i, outcome});
                }
            }
        },
        1);

    LengthSummary out;
    for (const auto& part : perChunk) out.merge(part);
    return out;
}

void writeHistogramCsv(const LengthSummary& summary, std::ostream& out) {
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> rows;
    for (const auto& [len, n] : summary.trickHistogram) rows[len].first = n;
    for (const auto& [len, n] : summary.cardHistogram) rows[len].second = n;
    out << "length,trickCount,cardCount\n";
    for (const auto& [len, counts] : rows) {
        out << len << ',' << counts.first << ',' << counts.second << '\n';
    }
}

TailFit fitExponentialTail(const LengthSummary& summary, std::uint64_t tailStart,
                           std::uint64_t minTailGames) {
    std::uint64_t n = 0;
    long double excess = 0;
    for (auto it = summary.trickHistogram.upper_bound(tailStart); it != summary.trickHistogram.end(); ++it) {
        n += it->second;
        excess += static_cast<long double>(it->first - tailStart - 1) * it->second;
    }
    if (n < minTailGames) {
        throw InsufficientTailMass("only " + std::to_string(n) + " games exceed " +
                                   std::to_string(tailStart) + " tricks; need " +
                                   std::to_string(minTailGames));
    }
    if (excess == 0) throw InsufficientTailMass("tail lengths are all equal; the rate is unbounded");

    // Excess lengths are geometric on {0, 1, ...} with success probability p.
    const double p = static_cast<double>(n / (n + excess));
    TailFit fit;
    fit.tailGames = n;
    fit.rate = -std::log1p(-p);
    fit.halfLife = std::log(2.0) / fit.rate;
    fit.stderrRate = p / std::sqrt(static_cast<double>(n) * (1 - p));
    return fit;
}

double survivalRatio(const LengthSummary& summary, std::uint64_t tailStart, std::uint64_t tailEnd,
                     std::uint64_t delta) {
    if (tailEnd <= tailStart) throw std::invalid_argument("survivalRatio needs tailEnd > tailStart");
    // atLeast[t] for t in [tailStart, tailEnd + delta).
    const std::uint64_t span = tailEnd + delta - tailStart;
    std::vector<std::uint64_t> atLeast(span + 1, 0);
    for (auto it = summary.trickHistogram.lower_bound(tailStart); it != summary.trickHistogram.end(); ++it) {
        const std::uint64_t top = std::min<std::uint64_t>(it->first - tailStart, span);
        atLeast[top] += it->second;
    }
    for (std::uint64_t i = span; i > 0; --i) atLeast[i - 1] += atLeast[i];
    long double num = 0;
    long double den = 0;
    for (std::uint64_t t = 0; t < tailEnd - tailStart; ++t) {
        den += atLeast[t];
        num += atLeast[t + delta];
    }
    if (den == 0) throw InsufficientTailMass("no games reach the survival window");
    return static_cast<double>(num / den);
}

double harmonic(std::uint64_t n) {
    constexpr std::uint64_t kDirectLimit = 1'000'000;
    if (n <= kDirectLimit) {
        double h = 0;
        for (std::uint64_t i = 1; i <= n; ++i) h += 1.0 / static_cast<double>(n - i + 1);
        return h;
    }
    const double x = static_cast<double>(n);
    const double inv2 = 1.0 / (x * x);
    return kEulerGamma + std::log(x) + 0.5 / x - inv2 / 12 + inv2 * inv2 / 120;
}

double expectedRecord(const RecordModel& model, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("expectedRecord needs n >= 1");
    return model.mu * harmonic(n);
}

double expectedRecordOverTime(const RecordModel& model, double t) {
    if (model.A < 1 || model.k < 0) throw std::invalid_argument("record model needs A >= 1 and k >= 0");
    return model.mu * (model.gamma + std::log(model.A) + model.k * t);
}

}  // namespace bmn
