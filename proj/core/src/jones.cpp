#include "nanoword/jones.hpp"

#include "nanoword/error.hpp"
#include "nanoword/moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

namespace nanoword {

bool over_alpha1(const Phrase& p) { return p.alphabet() == *Alphabet::alpha1(); }
bool over_star(const Phrase& p) { return p.alphabet() == *Alphabet::star(); }

namespace {

void require_alpha1(const Phrase& p, const char* what) {
    if (!over_alpha1(p))
        throw DomainError(std::string(what) + " requires a phrase over alpha1");
}

// +-1 value of an alpha1 projection (symbol 0 is "1", symbol 1 is "-1").
int sign_value(Symbol s) { return s == 0 ? 1 : -1; }

// Applies tau to once-occurring and nu to twice-occurring letters of the
// subword given as an occurrence list.
void twist_by(std::vector<Symbol>& proj, const Alphabet& a,
              const std::vector<LetterIdx>& subword) {
    std::vector<int> count(proj.size(), 0);
    for (LetterIdx l : subword) ++count[static_cast<size_t>(l)];
    for (size_t l = 0; l < proj.size(); ++l) {
        if (count[l] == 1)
            proj[l] = a.tau(proj[l]);
        else if (count[l] == 2)
            proj[l] = a.nu(proj[l]);
    }
}

// Rebuilds a phrase with one letter removed from the letter table.
Phrase drop_letter(const Phrase& p, LetterIdx gone, std::vector<Symbol> proj,
                   std::vector<std::vector<LetterIdx>> comps) {
    std::vector<std::string> names;
    std::vector<Symbol> kept;
    std::vector<LetterIdx> remap(static_cast<size_t>(p.letter_count()), -1);
    for (LetterIdx l = 0; l < p.letter_count(); ++l) {
        if (l == gone) continue;
        remap[static_cast<size_t>(l)] = static_cast<LetterIdx>(names.size());
        names.push_back(p.letter_name(l));
        kept.push_back(proj[static_cast<size_t>(l)]);
    }
    for (auto& comp : comps)
        for (auto& l : comp) l = remap[static_cast<size_t>(l)];
    return Phrase(p.alphabet_ptr(), std::move(names), std::move(kept), std::move(comps));
}

}  // namespace

int writhe(const Phrase& p) {
    require_alpha1(p, "writhe");
    int w = 0;
    for (LetterIdx l = 0; l < p.letter_count(); ++l) w += sign_value(p.proj(l));
    return w;
}

Phrase star_step(const Phrase& p, LetterIdx letter, int mark) {
    require_alpha1(p, "deformation");
    if (mark != 1 && mark != -1) throw DomainError("marker must be -1 or +1");
    const auto [q1, q2] = p.occurrences(letter);
    auto [c1, o1] = p.locate(q1);
    auto [c2, o2] = p.locate(q2);

    // Bring an occurrence to the head of its component(s); over alpha1
    // cyclic shifts keep every projection.
    Phrase cur = p;
    for (int i = 0; i < o1; ++i) cur = nu_shift(cur, c1);
    if (c1 == c2) {
        o2 -= o1;
    } else {
        for (int i = 0; i < o2; ++i) cur = nu_shift(cur, c2);
        o2 = 0;
    }

    auto comps = cur.components();
    std::vector<Symbol> proj = cur.projections();
    const bool straight = mark == sign_value(cur.proj(letter));
    if (c1 == c2) {
        // Component reads A x A y.
        const auto& host = comps[static_cast<size_t>(c1)];
        std::vector<LetterIdx> x(host.begin() + 1, host.begin() + o2);
        std::vector<LetterIdx> y(host.begin() + o2 + 1, host.end());
        if (straight) {
            comps[static_cast<size_t>(c1)] = x;
            comps.insert(comps.begin() + c1 + 1, y);
        } else {
            std::vector<LetterIdx> merged(x.rbegin(), x.rend());
            merged.insert(merged.end(), y.begin(), y.end());
            comps[static_cast<size_t>(c1)] = std::move(merged);
            twist_by(proj, p.alphabet(), x);
        }
    } else {
        // Components read A x | A y; the merge lands in the earlier slot.
        std::vector<LetterIdx> x(comps[static_cast<size_t>(c1)].begin() + 1,
                                 comps[static_cast<size_t>(c1)].end());
        std::vector<LetterIdx> y(comps[static_cast<size_t>(c2)].begin() + 1,
                                 comps[static_cast<size_t>(c2)].end());
        std::vector<LetterIdx> merged;
        if (straight) {
            merged = x;
        } else {
            merged.assign(x.rbegin(), x.rend());
        }
        merged.insert(merged.end(), y.begin(), y.end());
        comps[static_cast<size_t>(c1)] = std::move(merged);
        comps.erase(comps.begin() + c2);
        if (!straight) twist_by(proj, p.alphabet(), x);
    }
    return drop_letter(cur, letter, std::move(proj), std::move(comps));
}

namespace {

StateSummary reduce_with_order(const Phrase& p, const State& s,
                               const std::function<LetterIdx(const Phrase&)>& pick) {
    require_alpha1(p, "state reduction");
    require_gauss(p);
    if (p.component_count() == 0)
        throw DomainError("state reduction requires at least one component");
    if (static_cast<int>(s.mark.size()) != p.letter_count())
        throw DomainError("state does not cover the letter set");
    StateSummary out;
    for (int m : s.mark) out.sigma += m;
    // Letter names survive deletions, so marks are carried by name.
    std::vector<std::pair<std::string, int>> marks;
    for (LetterIdx l = 0; l < p.letter_count(); ++l)
        marks.emplace_back(p.letter_name(l), s.mark[static_cast<size_t>(l)]);
    Phrase cur = p;
    while (cur.letter_count() > 0) {
        const LetterIdx l = pick(cur);
        const auto& name = cur.letter_name(l);
        int mark = 0;
        for (const auto& [n, m] : marks)
            if (n == name) mark = m;
        cur = star_step(cur, l, mark);
    }
    out.loops = cur.component_count();
    return out;
}

}  // namespace

StateSummary reduce_state(const Phrase& p, const State& s) {
    return reduce_with_order(p, s, [](const Phrase& cur) {
        const auto flat = cur.flat();
        return flat.front();
    });
}

StateSummary reduce_state(const Phrase& p, const State& s, std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return reduce_with_order(p, s, [rng](const Phrase& cur) {
        return static_cast<LetterIdx>((*rng)() % static_cast<std::uint64_t>(
                                          cur.letter_count()));
    });
}

namespace {

LaurentPoly bracket_range(const Phrase& p, std::uint64_t begin, std::uint64_t end) {
    const int n = p.letter_count();
    LaurentPoly acc;
    State s;
    s.mark.resize(static_cast<size_t>(n));
    for (std::uint64_t code = begin; code < end; ++code) {
        int plus = 0;
        for (int i = 0; i < n; ++i) {
            const bool minus = (code >> i) & 1;
            s.mark[static_cast<size_t>(i)] = minus ? -1 : 1;
            if (!minus) ++plus;
        }
        const StateSummary summary = reduce_state(p, s);
        acc += LaurentPoly::monomial(1, plus, n - plus, summary.loops - 1);
    }
    return acc;
}

int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("NANOWORD_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return static_cast<int>(hw);
}

}  // namespace

LaurentPoly bracket_generic(const Phrase& p) {
    require_alpha1(p, "bracket");
    require_gauss(p);
    if (p.component_count() == 0)
        throw DomainError("bracket of the length-0 phrase is undefined");
    const int n = p.letter_count();
    const std::uint64_t states = std::uint64_t(1) << n;
    const int threads = n >= 12 ? std::min<int>(thread_budget(), 64) : 1;
    if (threads <= 1) return bracket_range(p, 0, states);

    std::vector<LaurentPoly> partial(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (states + static_cast<std::uint64_t>(threads) - 1) /
                                static_cast<std::uint64_t>(threads);
    for (int t = 0; t < threads; ++t) {
        const std::uint64_t b = std::min<std::uint64_t>(states, chunk * t);
        const std::uint64_t e = std::min<std::uint64_t>(states, b + chunk);
        pool.emplace_back(
            [&p, &partial, t, b, e] { partial[static_cast<size_t>(t)] = bracket_range(p, b, e); });
    }
    for (auto& th : pool) th.join();
    LaurentPoly out;
    for (const auto& part : partial) out += part;  // fixed chunk order
    return out;
}

LaurentPoly specialized_bracket(const Phrase& p) { return bracket_generic(p).specialize(); }

LaurentPoly jones(const Phrase& p) {
    if (p.component_count() == 0) return LaurentPoly::one();  // flagged convention
    const int w = writhe(p);
    // (-t)^{-3w} = (-1)^w t^{-3w}.
    const LaurentPoly prefactor = LaurentPoly::monomial((w % 2) ? -1 : 1, -3LL * w);
    return prefactor * specialized_bracket(p);
}

namespace {

int star_epsilon(const Phrase& p, LetterIdx l) {
    const std::string& s = p.alphabet().name(p.proj(l));
    return (s == "a+" || s == "b+") ? 1 : -1;
}

LaurentPoly turaev_rec(const Phrase& p) {
    const LaurentPoly loop_factor = -(LaurentPoly::t_power(2) + LaurentPoly::t_power(-2));
    if (p.letter_count() == 0)
        return loop_factor.int_pow(p.component_count() - 1);

    // Strip empty components; the phrase still has letters so it is not the
    // single empty word.
    {
        int empties = 0;
        std::vector<std::vector<LetterIdx>> kept;
        for (const auto& comp : p.components()) {
            if (comp.empty())
                ++empties;
            else
                kept.push_back(comp);
        }
        if (empties > 0) {
            Phrase stripped(p.alphabet_ptr(), p.letter_names(), p.projections(),
                            std::move(kept));
            return loop_factor.int_pow(empties) * turaev_rec(stripped);
        }
    }

    Phrase cur = p;
    const LetterIdx a = cur.component(0).front();
    auto [q1, q2] = cur.occurrences(a);
    auto [c1, o1] = cur.locate(q1);
    auto [c2, o2] = cur.locate(q2);

    if (c1 != c2) {
        // Carry the partner component next to the head one; each adjacent
        // transposition nu-twists the letters shared by the swapped pair.
        for (int j = c2; j > 1; --j) cur = nu_permutation(cur, j - 1);
        // Rotate it so the chosen letter heads it.
        for (int i = 0; i < o2; ++i) cur = nu_shift(cur, 1);
        c2 = 1;
        o2 = 0;
    }

    const int eps = star_epsilon(cur, a);
    auto comps = cur.components();
    std::vector<Symbol> proj = cur.projections();

    std::vector<LetterIdx> w, z;
    if (c1 == c2) {
        const auto& host = comps[0];
        w.assign(host.begin() + 1, host.begin() + o2);
        z.assign(host.begin() + o2 + 1, host.end());
    } else {
        w.assign(comps[0].begin() + 1, comps[0].end());
        z.assign(comps[1].begin() + 1, comps[1].end());
    }

    // Smoothed branch: AwAz -> w | z, or Aw|Az -> wz.
    Phrase branch1 = [&] {
        auto cc = comps;
        if (c1 == c2) {
            cc[0] = w;
            cc.insert(cc.begin() + 1, z);
        } else {
            cc[0] = w;
            cc[0].insert(cc[0].end(), z.begin(), z.end());
            cc.erase(cc.begin() + 1);
        }
        return drop_letter(cur, a, proj, std::move(cc));
    }();

    // Twisted branch: (w^- z)_w merged in place.
    Phrase branch2 = [&] {
        auto cc = comps;
        std::vector<LetterIdx> merged(w.rbegin(), w.rend());
        merged.insert(merged.end(), z.begin(), z.end());
        cc[0] = std::move(merged);
        if (c1 != c2) cc.erase(cc.begin() + 1);
        auto twisted = proj;
        twist_by(twisted, cur.alphabet(), w);
        return drop_letter(cur, a, std::move(twisted), std::move(cc));
    }();

    return LaurentPoly::t_power(eps) * turaev_rec(branch1) +
           LaurentPoly::t_power(-eps) * turaev_rec(branch2);
}

}  // namespace

LaurentPoly turaev_bracket(const Phrase& p) {
    if (!over_star(p)) throw DomainError("the recursive bracket expects a star phrase");
    require_gauss(p);
    if (p.component_count() == 0)
        throw DomainError("bracket of the length-0 phrase is undefined");
    return turaev_rec(p);
}

Phrase lift_to_star(const Phrase& p) {
    require_alpha1(p, "lift");
    // 1 -> a+ (0), -1 -> a- (1).
    return p.relabeled(Alphabet::star(), {0, 1});
}

Phrase lift_to_star(const Phrase& p, std::uint64_t seed) {
    require_alpha1(p, "lift");
    std::mt19937_64 rng(seed);
    const auto star = Alphabet::star();
    Phrase out = p.relabeled(star, {0, 1});
    for (LetterIdx l = 0; l < p.letter_count(); ++l) {
        const bool b_side = rng() & 1;
        if (!b_side) continue;
        // 1 -> b+ (2), -1 -> b- (3).
        out = out.with_projection(l, p.proj(l) == 0 ? 2 : 3);
    }
    return out;
}

namespace {

Phrase project_star(const Phrase& p, AlphabetPtr target, std::vector<Symbol> map) {
    if (!over_star(p)) throw DomainError("projection expects a star phrase");
    return p.relabeled(std::move(target), map);
}

}  // namespace

Phrase project_fact_p(const Phrase& p) {
    return project_star(p, Alphabet::alpha1(), {0, 1, 0, 1});
}

Phrase project_fact_s(const Phrase& p) {
    return project_star(p, Alphabet::alpha0(), {0, 0, 1, 1});
}

Phrase project_fact_q(const Phrase& p) {
    return project_star(p, Alphabet::alpha2(), {0, 1, 1, 0});
}

LaurentPoly jones_general(const Phrase& p, const JonesRoute& route) {
    switch (route.kind) {
        case JonesRoute::Kind::Direct:
            if (over_alpha1(p)) return jones(p);
            if (p.alphabet() == *Alphabet::alpha0())
                return jones(relabel_alpha0_to_alpha1(p));
            throw DomainError("direct route requires a phrase over alpha1 or alpha0");
        case JonesRoute::Kind::UL: return jones(u_l_project(p, route.L));
        case JonesRoute::Kind::F1: return jones(functor_apply(p, OrbitClass::One));
        case JonesRoute::Kind::Fstar:
            return jones(project_fact_p(functor_apply(p, OrbitClass::Star)));
    }
    throw DomainError("invalid route");
}

}  // namespace nanoword
