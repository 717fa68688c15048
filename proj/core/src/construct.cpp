#include "bmn/construct.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

#include "parallel.hpp"

namespace bmn {

namespace {

constexpr std::array<Card, 3> kFaces{Card::Queen, Card::King, Card::Ace};

void requireJackFree(const CardSeq& seq, const char* what) {
    if (std::find(seq.begin(), seq.end(), Card::Jack) != seq.end()) {
        throw std::invalid_argument(std::string(what) + " must not contain a Jack: " +
                                    formatCardSeq(seq));
    }
}

CardSeq jackTemplate(const CardSeq& candidate, const Piece& filter) {
    CardSeq hand1{Card::Number, Card::Number, Card::Jack};
    hand1.insert(hand1.end(), filter.cards.begin(), filter.cards.end());
    hand1.push_back(Card::Jack);
    hand1.insert(hand1.end(), candidate.begin(), candidate.end());
    hand1.push_back(Card::Jack);
    hand1.push_back(Card::Number);
    return hand1;
}

bool withinStandardCaps(const CardSeq& seq) {
    const DeckComposition c = composition(seq);
    return c.queens <= 4 && c.kings <= 4 && c.aces <= 4 && c.courts() <= 12;
}

struct ShortlexLess {
    bool operator()(const CardSeq& a, const CardSeq& b) const { return shortlexLess(a, b); }
};

// Certifies each candidate, in parallel, returning one flag per candidate.
std::vector<char> certifyAll(const std::vector<CardSeq>& candidates, const Piece& filter,
                             std::uint64_t budget, unsigned workers) {
    std::vector<char> ok(candidates.size(), 0);
    std::vector<Simulator> sims(std::max(1u, workers));
    detail::parallelFor(candidates.size(), workers, [&](std::size_t i, unsigned w) {
        const GameState s{jackTemplate(candidates[i], filter), {Card::Jack, Card::Number}, Player::One};
        ok[i] = sims[w].play(s, {budget, Detect::Brent, false}).kind == OutcomeKind::NonTerminating;
    });
    return ok;
}

}  // namespace

const Piece& defaultFilter() {
    static const Piece filter{parseCardSeq("--K---A----AA"), true};
    return filter;
}

bool verifyLoop(const LoopTrace& loop) {
    const auto n = loop.states.size();
    if (n == 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (loop.states[i].hand(loop.states[i].leader).empty()) return false;
        const TrickOutcome t = playTrick(loop.states[i]);
        if (t.ended || t.next != loop.states[(i + 1) % n]) return false;
    }
    return true;
}

GameState expandLoop(const LoopTrace& loop, std::uint64_t budgetTricks) {
    if (!verifyLoop(loop)) throw std::invalid_argument("expandLoop needs a verified, non-empty loop");
    if (loop.states.size() == 1) return loop.states.front();

    const Player seatOfLeader = loop.states.front().leader;
    GameState out;
    out.leader = seatOfLeader;
    for (const auto& s : loop.states) {
        const bool flip = s.leader != seatOfLeader;
        const CardSeq& a = flip ? s.hand2 : s.hand1;
        const CardSeq& b = flip ? s.hand1 : s.hand2;
        out.hand1.insert(out.hand1.end(), a.begin(), a.end());
        out.hand2.insert(out.hand2.end(), b.begin(), b.end());
    }
    const PlayOutcome outcome = playGame(out, budgetTricks, Detect::Brent);
    if (outcome.kind != OutcomeKind::NonTerminating) {
        throw ExpansionNotNonTerminating("expanded game " + formatCompact(out) + " is " +
                                         std::string(toString(outcome.kind)) + " after " +
                                         std::to_string(outcome.tricks) + " tricks");
    }
    return out;
}

std::vector<GameState> mutate(const GameState& state, const MutateOptions& options) {
    if (options.maxEdits > 3) throw std::invalid_argument("mutate supports at most 3 edits");
    Simulator sim;
    auto cycles = [&](Simulator& s, const GameState& g) {
        return s.play(g, {options.budgetTricks, Detect::Brent, false}).kind ==
               OutcomeKind::NonTerminating;
    };
    if (options.maxEdits == 0) {
        if (!state.hand(state.leader).empty() && cycles(sim, state)) return {state};
        return {};
    }

    const CardSeq deck = concat(state.hand1, state.hand2);
    std::size_t winBegin = 0;
    std::size_t winEnd = deck.size();
    if (options.window) {
        winBegin = std::min(options.window->first, deck.size());
        winEnd = std::clamp(options.window->second, winBegin, deck.size());
    }

    // Every card list reachable in 1..maxEdits edits. The window's right edge
    // follows the list length, since every edit lands inside the window.
    std::set<CardSeq> variants;
    std::set<CardSeq> level{deck};
    for (unsigned e = 0; e < options.maxEdits; ++e) {
        std::set<CardSeq> next;
        for (const CardSeq& cur : level) {
            const std::size_t end = winEnd + cur.size() - deck.size();
            if (options.ops.has(EditOp::Insert)) {
                for (std::size_t pos = winBegin; pos <= end; ++pos) {
                    for (Card c : kAllCards) {
                        CardSeq v = cur;
                        v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), c);
                        next.insert(std::move(v));
                    }
                }
            }
            if (options.ops.has(EditOp::Remove)) {
                for (std::size_t pos = winBegin; pos < end; ++pos) {
                    CardSeq v = cur;
                    v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos));
                    next.insert(std::move(v));
                }
            }
            if (options.ops.has(EditOp::Swap)) {
                for (std::size_t pos = winBegin; pos < end; ++pos) {
                    for (Card c : kAllCards) {
                        if (c == cur[pos]) continue;
                        CardSeq v = cur;
                        v[pos] = c;
                        next.insert(std::move(v));
                    }
                }
            }
        }
        variants.insert(next.begin(), next.end());
        level = std::move(next);
    }

    std::vector<GameState> candidates;
    for (const CardSeq& v : variants) {
        for (std::size_t split = 1; split < v.size(); ++split) {
            GameState g;
            g.hand1.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(split));
            g.hand2.assign(v.begin() + static_cast<std::ptrdiff_t>(split), v.end());
            g.leader = state.leader;
            candidates.push_back(std::move(g));
        }
    }

    std::vector<char> keep(candidates.size(), 0);
    std::vector<Simulator> sims(std::max(1u, options.workers));
    detail::parallelFor(candidates.size(), options.workers, [&](std::size_t i, unsigned w) {
        keep[i] = cycles(sims[w], candidates[i]);
    });

    std::vector<GameState> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (keep[i]) out.push_back(std::move(candidates[i]));
    }
    return out;
}

PlayOutcome templateTest(const CardSeq& candidate, const Piece& filter, std::uint64_t budgetTricks) {
    requireJackFree(candidate, "template candidate");
    const GameState s{jackTemplate(candidate, filter), {Card::Jack, Card::Number}, Player::One};
    return playGame(s, budgetTricks, Detect::Brent);
}

bool certifies(const CardSeq& candidate, const Piece& filter, std::uint64_t budgetTricks) {
    return templateTest(candidate, filter, budgetTricks).kind == OutcomeKind::NonTerminating;
}

std::vector<Piece> findSwapClass(const Piece& piece, const Piece& filter,
                                 const SwapClassOptions& options) {
    requireJackFree(piece.cards, "piece");
    if (!certifies(piece.cards, filter, options.budgetTricks)) {
        throw std::invalid_argument("findSwapClass seed does not certify: " +
                                    formatCardSeq(piece.cards));
    }

    std::map<CardSeq, bool> certCache;
    auto certified = [&](const CardSeq& s) {
        auto it = certCache.find(s);
        if (it != certCache.end()) return it->second;
        const bool ok = certifies(s, filter, options.budgetTricks);
        certCache.emplace(s, ok);
        return ok;
    };

    // 0-1 breadth-first search: swaps are free, number-card edits cost one.
    std::map<CardSeq, unsigned> best;
    std::deque<std::pair<CardSeq, unsigned>> queue;
    best.emplace(piece.cards, 0);
    certCache.emplace(piece.cards, true);
    queue.emplace_back(piece.cards, 0);

    auto relax = [&](CardSeq next, unsigned cost, unsigned step) {
        const unsigned d = cost + step;
        if (d > options.maxNumberEdits) return;
        auto it = best.find(next);
        if (it != best.end() && it->second <= d) return;
        if (best.size() >= options.maxMembers && it == best.end()) return;
        if (!certified(next)) return;
        best[next] = d;
        if (step == 0) {
            queue.emplace_front(std::move(next), d);
        } else {
            queue.emplace_back(std::move(next), d);
        }
    };

    while (!queue.empty()) {
        auto [cur, cost] = std::move(queue.front());
        queue.pop_front();
        if (best.at(cur) < cost) continue;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (!isCourt(cur[i])) continue;
            for (Card f : kFaces) {
                if (f == cur[i]) continue;
                CardSeq v = cur;
                v[i] = f;
                relax(std::move(v), cost, 0);
            }
        }
        for (std::size_t i = 0; i <= cur.size(); ++i) {
            CardSeq v = cur;
            v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), Card::Number);
            relax(std::move(v), cost, 1);
        }
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] != Card::Number) continue;
            CardSeq v = cur;
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
            relax(std::move(v), cost, 1);
        }
    }

    std::vector<Piece> out;
    out.reserve(best.size());
    for (const auto& [seq, d] : best) out.push_back({seq, true});
    std::sort(out.begin(), out.end(),
              [](const Piece& a, const Piece& b) { return shortlexLess(a.cards, b.cards); });
    return out;
}

void scanBase4(std::size_t maxLen, const std::function<void(const CardSeq&)>& visit) {
    if (maxLen == 0) return;
    if (maxLen > kMaxPieceDigits) {
        throw std::invalid_argument("base-4 scans are limited to " +
                                    std::to_string(kMaxPieceDigits) + " digits");
    }
    constexpr std::array<Card, 4> digitCard{Card::Number, Card::Queen, Card::King, Card::Ace};
    std::vector<unsigned> digits(maxLen, 0);
    CardSeq seq(maxLen, Card::Number);
    for (;;) {
        if (withinStandardCaps(seq)) {
            std::size_t firstFace = 0;
            while (firstFace < maxLen && seq[firstFace] == Card::Number) ++firstFace;
            const std::size_t lastDrop = std::min(firstFace, maxLen - 1);
            for (std::size_t drop = 0; drop <= lastDrop; ++drop) {
                visit(CardSeq(seq.begin() + static_cast<std::ptrdiff_t>(drop), seq.end()));
            }
        }
        // Odometer increment, least significant digit on the right.
        std::size_t pos = maxLen;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < 4) {
                seq[pos] = digitCard[digits[pos]];
                break;
            }
            digits[pos] = 0;
            seq[pos] = Card::Number;
            if (pos == 0) return;
        }
    }
}

PieceSearch enumeratePieces(const EnumerateOptions& options, const Piece& filter) {
    std::vector<CardSeq> candidates;
    if (options.mode == EnumerationMode::Base4) {
        scanBase4(options.maxLen, [&](const CardSeq& c) { candidates.push_back(c); });
    } else {
        const DeckComposition& f = options.faces;
        if (f.jacks != 0) throw std::invalid_argument("pieces are Jack-free; multiset has jacks");
        const std::size_t faces = f.queens + f.kings + f.aces;
        if (faces > options.maxLen) throw std::invalid_argument("face cards exceed maxLen");
        for (std::size_t numbers = 0; numbers + faces <= options.maxLen; ++numbers) {
            if (numbers + faces == 0) continue;
            CardSeq seq;
            seq.insert(seq.end(), numbers, Card::Number);
            seq.insert(seq.end(), f.queens, Card::Queen);
            seq.insert(seq.end(), f.kings, Card::King);
            seq.insert(seq.end(), f.aces, Card::Ace);
            do {
                candidates.push_back(seq);
            } while (std::next_permutation(seq.begin(), seq.end()));
        }
    }

    PieceSearch out;
    out.tested = candidates.size();
    const std::vector<char> ok = certifyAll(candidates, filter, options.budgetTricks, options.workers);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (ok[i]) out.certified.push_back(std::move(candidates[i]));
    }
    std::sort(out.certified.begin(), out.certified.end(), ShortlexLess{});
    out.certified.erase(std::unique(out.certified.begin(), out.certified.end()), out.certified.end());

    if (!options.dedupe) {
        for (const auto& c : out.certified) out.representatives.push_back({c, true});
        return out;
    }
    SwapClassOptions classOptions = options.classOptions;
    classOptions.budgetTricks = options.budgetTricks;
    std::set<CardSeq> absorbed;
    for (const auto& c : out.certified) {
        if (absorbed.contains(c)) continue;
        out.representatives.push_back({c, true});
        for (const Piece& member : findSwapClass({c, true}, filter, classOptions)) {
            absorbed.insert(member.cards);
        }
    }
    return out;
}

Assembly assembleDeck(const std::vector<Piece>& pieces, std::uint64_t budgetTricks) {
    if (pieces.empty()) throw std::invalid_argument("assembleDeck needs at least one piece");
    GameState state;
    state.leader = Player::One;
    state.hand2 = {Card::Jack, Card::Number};
    for (const Piece& p : pieces) {
        requireJackFree(p.cards, "piece");
        state.hand1.insert(state.hand1.end(), p.cards.begin(), p.cards.end());
        state.hand1.push_back(Card::Jack);
    }
    state.hand1.push_back(Card::Number);

    Assembly out{state, composition(state), playGame(state, budgetTricks, Detect::HashSet)};
    if (out.outcome.kind != OutcomeKind::NonTerminating) {
        throw AssemblyNotNonTerminating("assembled deck " + formatCompact(state) + " is " +
                                            std::string(toString(out.outcome.kind)),
                                        out.outcome);
    }
    return out;
}

}  // namespace bmn
