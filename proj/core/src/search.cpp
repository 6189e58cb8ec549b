#include "nanoword/moves.hpp"

#include "nanoword/error.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace nanoword {

namespace {

std::vector<MoveInstance> filtered_moves(const Phrase& p, const std::set<MoveKind>& allowed,
                                         int max_letters) {
    const bool wants_inverses =
        allowed.count(MoveKind::H1Inv) || allowed.count(MoveKind::H2Inv) ||
        allowed.count(MoveKind::H3Inv) || allowed.count(MoveKind::ShiftInv) ||
        allowed.count(MoveKind::AbabInv);
    const int budget = std::max(0, max_letters - p.letter_count());
    auto moves = enumerate_moves(p, wants_inverses, budget);
    std::erase_if(moves, [&allowed](const MoveInstance& m) { return !allowed.count(m.kind); });
    return moves;
}

std::string serialize_certificate(const std::vector<MoveInstance>& cert,
                                  const Alphabet& alphabet) {
    std::string out;
    for (const auto& m : cert) {
        out += to_string(m, alphabet);
        out += '\n';
    }
    return out;
}

struct Node {
    Phrase phrase;             // canonical
    std::vector<MoveInstance> path;  // moves from this side's source
};

}  // namespace

Phrase replay_certificate(const Phrase& start, const std::vector<MoveInstance>& cert) {
    Phrase cur = canonicalize(start).phrase;
    for (const MoveInstance& m : cert) cur = canonicalize(apply_move(cur, m)).phrase;
    return cur;
}

EquivResult equiv_search(const Phrase& p1, const Phrase& p2, const EquivOptions& opt) {
    if (!(p1.alphabet() == p2.alphabet()))
        throw DomainError("equivalence search requires a common alphabet");
    require_gauss(p1);
    require_gauss(p2);

    EquivResult result;
    const Alphabet& alphabet = p1.alphabet();

    // Moves preserve the component count, so unequal lengths settle it.
    if (p1.component_count() != p2.component_count()) return result;

    std::set<MoveKind> backward_allowed;
    for (MoveKind k : opt.allowed) backward_allowed.insert(inverse_kind(k));

    const CanonicalForm c1 = canonicalize(p1);
    const CanonicalForm c2 = canonicalize(p2);

    // visited[side]: canonical key -> node; forward grows from p1 with the
    // allowed kinds, backward from p2 with their inverses.  Backward paths
    // are stored already inverted, in meeting-point-to-p2 order.
    std::map<std::string, Node> visited[2];
    std::vector<std::string> frontier[2];
    visited[0].emplace(c1.key(), Node{c1.phrase, {}});
    visited[1].emplace(c2.key(), Node{c2.phrase, {}});
    frontier[0].push_back(c1.key());
    frontier[1].push_back(c2.key());

    auto make_certificate = [&](const Node& fwd, const Node& bwd) {
        std::vector<MoveInstance> cert = fwd.path;
        cert.insert(cert.end(), bwd.path.begin(), bwd.path.end());
        return cert;
    };

    if (c1.key() == c2.key()) {
        result.verdict = EquivResult::Verdict::Equivalent;
        return result;
    }

    int depth = 0;
    while (depth < opt.max_depth && !frontier[0].empty() && !frontier[1].empty()) {
        const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        const auto& allowed = side == 0 ? opt.allowed : backward_allowed;
        ++depth;

        std::vector<std::string> next;
        bool found = false;
        std::vector<MoveInstance> best;
        std::string best_serial;

        std::vector<std::string> level = frontier[static_cast<size_t>(side)];
        std::sort(level.begin(), level.end());
        for (const std::string& key : level) {
            const Node node = visited[static_cast<size_t>(side)].at(key);
            for (const MoveInstance& m : filtered_moves(node.phrase, allowed,
                                                        opt.max_letters)) {
                Phrase raw = apply_move(node.phrase, m);
                if (raw.letter_count() > opt.max_letters) {
                    result.stats.letter_bound_hit = true;
                    continue;
                }
                ++result.stats.expanded;
                CanonicalForm c = canonicalize(raw);
                std::string k = c.key();
                if (visited[static_cast<size_t>(side)].count(k)) continue;
                Node succ{c.phrase, node.path};
                if (side == 0) {
                    succ.path.push_back(m);
                } else {
                    // Store inverted and in replay order: newest move undone
                    // first on the way back to p2.
                    succ.path.insert(succ.path.begin(), inverse_move(node.phrase, m));
                }
                auto other = visited[static_cast<size_t>(1 - side)].find(k);
                if (other != visited[static_cast<size_t>(1 - side)].end()) {
                    const auto cert = side == 0 ? make_certificate(succ, other->second)
                                                : make_certificate(other->second, succ);
                    std::string serial = serialize_certificate(cert, alphabet);
                    if (!found || cert.size() < best.size() ||
                        (cert.size() == best.size() && serial < best_serial)) {
                        best = cert;
                        best_serial = std::move(serial);
                    }
                    found = true;
                }
                visited[static_cast<size_t>(side)].emplace(std::move(k), std::move(succ));
                next.push_back(c.key());
            }
        }
        if (found) {
            result.verdict = EquivResult::Verdict::Equivalent;
            result.certificate = std::move(best);
            return result;
        }
        frontier[static_cast<size_t>(side)] = std::move(next);
    }
    result.stats.depth_bound_hit = depth >= opt.max_depth;
    return result;
}

WalkResult random_walk(const Phrase& p, int steps, std::uint64_t seed,
                       const std::set<MoveKind>& allowed, int growth_budget) {
    require_gauss(p);
    std::mt19937_64 rng(seed);
    const int letter_cap = p.letter_count() + growth_budget;
    WalkResult out{canonicalize(p).phrase, {}};
    for (int i = 0; i < steps; ++i) {
        auto moves = filtered_moves(out.phrase, allowed, letter_cap);
        if (moves.empty()) break;
        const auto& m = moves[static_cast<size_t>(rng() % moves.size())];
        out.phrase = canonicalize(apply_move(out.phrase, m)).phrase;
        out.certificate.push_back(m);
    }
    return out;
}

}  // namespace nanoword
