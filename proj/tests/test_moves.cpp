#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nanoword/error.hpp"
#include "nanoword/moves.hpp"
#include "testutil.hpp"

#include <random>

using namespace nanoword;
using test::alpha1_phrase;
using test::make_phrase;

namespace {

int count_kind(const std::vector<MoveInstance>& moves, MoveKind k) {
    int n = 0;
    for (const auto& m : moves)
        if (m.kind == k) ++n;
    return n;
}

Phrase empty_word_phrase(const AlphabetPtr& a, int k = 1) {
    std::vector<std::vector<LetterIdx>> comps(static_cast<size_t>(k));
    return Phrase(a, {}, {}, std::move(comps));
}

}  // namespace

TEST_CASE("H1 locus enumeration and application") {
    const Phrase aa = alpha1_phrase("AA", {1});
    const auto moves = enumerate_moves(aa, false, 0);
    CHECK(count_kind(moves, MoveKind::H1) == 1);
    const Phrase reduced = apply_move(aa, MoveInstance{MoveKind::H1, {0}, {}});
    CHECK(canonicalize(reduced) == canonicalize(empty_word_phrase(Alphabet::alpha1())));
    CHECK(reduced.component_count() == 1);
}

TEST_CASE("H2 locus enumeration and application") {
    const Phrase abba = alpha1_phrase("ABBA", {1, -1});
    CHECK(count_kind(enumerate_moves(abba, false, 0), MoveKind::H2) == 1);
    const Phrase reduced = apply_move(abba, MoveInstance{MoveKind::H2, {0, 2}, {}});
    CHECK(canonicalize(reduced) == canonicalize(empty_word_phrase(Alphabet::alpha1())));
    // Same-sign ABBA violates tau(|A|) = |B|.
    const Phrase bad = alpha1_phrase("ABBA", {1, 1});
    CHECK(count_kind(enumerate_moves(bad, false, 0), MoveKind::H2) == 0);
    CHECK_THROWS_AS(apply_move(bad, MoveInstance{MoveKind::H2, {0, 2}, {}}), MoveError);
}

TEST_CASE("H3 rewrites the three pairs in place") {
    const Phrase p = alpha1_phrase("ABACBC", {1, 1, 1});
    const auto moves = enumerate_moves(p, false, 0);
    CHECK(count_kind(moves, MoveKind::H3) == 1);
    const Phrase q = apply_move(p, MoveInstance{MoveKind::H3, {0, 2, 4}, {}});
    CHECK(canonicalize(q) == canonicalize(alpha1_phrase("BACACB", {1, 1, 1})));
    // (1,1,1) is in S_1; a projection combination outside S_1 must refuse.
    const Phrase bad = alpha1_phrase("ABACBC", {1, -1, 1});
    CHECK_THROWS_AS(apply_move(bad, MoveInstance{MoveKind::H3, {0, 2, 4}, {}}), MoveError);
}

TEST_CASE("every enumerated move undoes by its inverse") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Phrase p = canonicalize(test::random_alpha1_phrase(rng, 5)).phrase;
        for (const auto& m : enumerate_moves(p, true, 2)) {
            const Phrase q = apply_move(p, m);
            CHECK(validate_gauss(q).ok());
            const MoveInstance back = inverse_move(p, m);
            CHECK(canonicalize(apply_move(q, back)) == canonicalize(p));
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("H-move bookkeeping: letter counts and projections") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const Phrase p = test::random_alpha1_phrase(rng, 5);
        for (const auto& m : enumerate_moves(p, false, 0)) {
            const Phrase q = apply_move(p, m);
            switch (m.kind) {
                case MoveKind::H1: CHECK(q.letter_count() == p.letter_count() - 1); break;
                case MoveKind::H2: CHECK(q.letter_count() == p.letter_count() - 2); break;
                case MoveKind::H3:
                    CHECK(q.letter_count() == p.letter_count());
                    CHECK(q.projections() == p.projections());
                    break;
                default: break;
            }
            CHECK(q.component_count() == p.component_count());
        }
    }
}

TEST_CASE("nu-shift keeps or twists per occurrence count") {
    // Over alpha0 (nu: a <-> b): ABAB shifts to BABA with |A| twisted.
    const Phrase p = make_phrase(Alphabet::alpha0(), "ABAB", {"a", "a"});
    const Phrase q = nu_shift(p, 0);
    CHECK(q.alphabet().name(q.proj(0)) == "b");
    CHECK(q.alphabet().name(q.proj(1)) == "a");
    CHECK(q.component(0) == std::vector<LetterIdx>{1, 0, 1, 0});
    // Ax|Ay: A appears once in w_1, so shifting keeps |A|.
    const Phrase two = make_phrase(Alphabet::alpha0(), "AB|AB", {"a", "a"});
    const Phrase shifted = nu_shift(two, 0);
    CHECK(shifted.alphabet().name(shifted.proj(0)) == "a");
    // Over alpha1 shifts never change projections.
    const Phrase p1 = alpha1_phrase("ABAB", {1, -1});
    CHECK(nu_shift(p1, 0).projections() == p1.projections());
    CHECK_THROWS_AS(nu_shift(empty_word_phrase(Alphabet::alpha1()), 0), DomainError);
}

TEST_CASE("a full cycle of shifts is the identity") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const Phrase p = test::random_phrase(rng, Alphabet::star(), 4, 2);
        for (int c = 0; c < p.component_count(); ++c) {
            const int len = static_cast<int>(p.component(c).size());
            if (len == 0) continue;
            Phrase q = p;
            for (int i = 0; i < len; ++i) q = nu_shift(q, c);
            CHECK(q == p);
            CHECK(nu_shift_back(nu_shift(p, c), c) == p);
        }
    }
}

TEST_CASE("nu-permutation twists shared letters and is involutive") {
    const Phrase p = make_phrase(Alphabet::alpha0(), "AB|AC|BC", {"a", "a", "b"});
    const Phrase q = nu_permutation(p, 0);
    CHECK(q.alphabet().name(q.proj(0)) == "b");  // A in both w_1 and w_2
    CHECK(q.alphabet().name(q.proj(1)) == "a");
    CHECK(q.alphabet().name(q.proj(2)) == "b");
    CHECK(nu_permutation(q, 0) == p);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const Phrase r = test::random_phrase(rng, Alphabet::star(), 5, 3);
        for (int i = 0; i + 1 < r.component_count(); ++i)
            CHECK(nu_permutation(nu_permutation(r, i), i) == r);
    }
}

TEST_CASE("nu-inversion reverses and twists; alpha1 double inversion is isomorphic") {
    // Single component AA over alpha1: A occurs twice, nu = id.
    const Phrase aa = alpha1_phrase("AA", {1});
    const Phrase inv = nu_inversion(aa, 0);
    CHECK(inv.alphabet().name(inv.proj(0)) == "1");
    // Ax|Ay: A occurs once in w_1, so |A| picks up tau.
    const Phrase p = alpha1_phrase("AB|AB", {1, 1});
    const Phrase q = nu_inversion(p, 0);
    CHECK(q.alphabet().name(q.proj(0)) == "-1");
    CHECK(q.alphabet().name(q.proj(1)) == "-1");
    CHECK(q.component(0) == std::vector<LetterIdx>{1, 0});  // reversed
    for (const Phrase& r : test::all_alpha1_phrases(3, true))
        for (int i = 0; i < r.component_count(); ++i)
            CHECK(canonicalize(nu_inversion(nu_inversion(r, i), i)) == canonicalize(r));
}

TEST_CASE("component count is preserved by shifts, permutations, inversions") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const Phrase p = test::random_phrase(rng, Alphabet::star(), 5, 3);
        for (int c = 0; c < p.component_count(); ++c) {
            if (!p.component(c).empty())
                CHECK(nu_shift(p, c).component_count() == p.component_count());
            CHECK(nu_inversion(p, c).component_count() == p.component_count());
        }
        for (int c = 0; c + 1 < p.component_count(); ++c)
            CHECK(nu_permutation(p, c).component_count() == p.component_count());
    }
}

TEST_CASE("abab collapses under the triple-set hypothesis") {
    const Phrase p = alpha1_phrase("ABAB", {1, -1});
    const Phrase q = apply_abab(p, 0, 2);
    CHECK(canonicalize(q) == canonicalize(empty_word_phrase(Alphabet::alpha1())));
    // Over alphaG the hypothesis holds with a single symbol.
    const Phrase g = make_phrase(Alphabet::alphaG(), "ABAB", {"a", "a"});
    CHECK(canonicalize(apply_abab(g, 0, 2)) ==
          canonicalize(empty_word_phrase(Alphabet::alphaG())));
    // An alphabet whose S misses some (., b, b) refuses the move.
    auto starved = std::make_shared<Alphabet>(
        std::vector<std::string>{"x", "y"}, std::vector<Symbol>{1, 0},
        std::vector<Symbol>{0, 1}, TripleSet{Triple{0, 0, 0}});
    const Phrase s = make_phrase(starved, "ABAB", {"x", "y"});
    CHECK_THROWS_AS(apply_abab(s, 0, 2), MoveError);
    // Wrong projections refuse too.
    CHECK_THROWS_AS(apply_abab(alpha1_phrase("ABAB", {1, 1}), 0, 2), MoveError);
}

TEST_CASE("lemma1 side conditions follow the variant") {
    // Variant i's pattern xAByCAzBCt with empty slots reads ABCABC: pairs
    // AB@0, CA@2, BC@4.  The condition (|A|, tau(|B|), |C|) in S_1 needs
    // |B| = -1 when |A| = |C| = 1.
    const Phrase p = alpha1_phrase("ABCABC", {1, -1, 1});
    const Phrase q = apply_lemma1(p, Lemma1Variant::I, {0, 2, 4});
    CHECK(canonicalize(q) == canonicalize(alpha1_phrase("BAACCB", {-1, 1, 1})));
    // All-positive projections fail it: (1, tau(1), 1) = (1, -1, 1) is not
    // in S_1.
    CHECK_THROWS_AS(
        apply_lemma1(alpha1_phrase("ABCABC", {1, 1, 1}), Lemma1Variant::I, {0, 2, 4}),
        MoveError);
    // Variant ii's pattern xAByCAzCBt reads ABCACB; with (|A|,|B|,|C|) =
    // (1,1,-1) the twisted triple (tau(1), tau(1), -1) = (-1,-1,-1) holds.
    const Phrase r = alpha1_phrase("ABCACB", {1, 1, -1});
    const Phrase r2 = apply_lemma1(r, Lemma1Variant::II, {0, 2, 4});
    CHECK(canonicalize(r2) == canonicalize(alpha1_phrase("BAACBC", {1, 1, -1})));
    // Variant ii fails when the twisted triple leaves S_1.
    const Phrase bad = alpha1_phrase("ABCACB", {1, -1, -1});
    // (tau(1), tau(-1), -1) = (-1, 1, -1) not in S_1.
    CHECK_THROWS_AS(apply_lemma1(bad, Lemma1Variant::II, {0, 2, 4}), MoveError);
}

TEST_CASE("equiv_search certifies one-move reductions") {
    const Phrase empty1 = empty_word_phrase(Alphabet::alpha1());
    EquivOptions opt;
    opt.max_letters = 3;
    opt.max_depth = 4;

    auto r1 = equiv_search(alpha1_phrase("AA", {1}), empty1, opt);
    REQUIRE(r1.verdict == EquivResult::Verdict::Equivalent);
    REQUIRE(r1.certificate.size() == 1);
    CHECK(r1.certificate[0].kind == MoveKind::H1);

    auto r2 = equiv_search(alpha1_phrase("ABBA", {1, -1}), empty1, opt);
    REQUIRE(r2.verdict == EquivResult::Verdict::Equivalent);
    REQUIRE(r2.certificate.size() == 1);
    CHECK(r2.certificate[0].kind == MoveKind::H2);
}

TEST_CASE("certificates replay onto the target canonical form") {
    std::mt19937_64 rng(53);
    EquivOptions opt;
    opt.max_letters = 6;
    opt.max_depth = 6;
    opt.allowed = {MoveKind::H1,  MoveKind::H1Inv, MoveKind::H2,    MoveKind::H2Inv,
                   MoveKind::H3,  MoveKind::H3Inv, MoveKind::Shift, MoveKind::ShiftInv,
                   MoveKind::Permute};
    int equivalents = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Phrase p = test::random_alpha1_phrase(rng, 4);
        const auto walk = random_walk(p, 3, rng(), opt.allowed, 2);
        const auto res = equiv_search(p, walk.phrase, opt);
        if (res.verdict != EquivResult::Verdict::Equivalent) continue;
        ++equivalents;
        CHECK(canonicalize(replay_certificate(p, res.certificate)) ==
              canonicalize(walk.phrase));
    }
    CHECK(equivalents > 30);
}

TEST_CASE("search distinguishes where an invariant differs") {
    // ABAB(+,+) vs the empty word: their Jones polynomials differ, so no
    // certificate can exist; the bounded search must stay Unknown.
    EquivOptions opt;
    opt.max_letters = 4;
    opt.max_depth = 6;
    const auto res =
        equiv_search(alpha1_phrase("ABAB", {1, 1}), empty_word_phrase(Alphabet::alpha1()), opt);
    CHECK(res.verdict == EquivResult::Verdict::Unknown);
}

TEST_CASE("lemma1 and abab outputs are certified equivalent to inputs") {
    // On <= 3-letter alpha1 instances, over the inverse-closed homotopy
    // move set.  A letter budget of input+2 is provably insufficient for
    // variants ii/iii (the bounded space exhausts without a certificate);
    // input+3 admits length-6 derivations.
    EquivOptions opt;
    opt.max_depth = 12;
    opt.allowed = {MoveKind::H1, MoveKind::H1Inv, MoveKind::H2, MoveKind::H2Inv,
                   MoveKind::H3, MoveKind::H3Inv};
    int certified = 0;
    for (const Phrase& p : test::all_alpha1_phrases(3, false)) {
        opt.max_letters = p.letter_count() + 3;
        for (MoveKind kind : {MoveKind::Lemma1i, MoveKind::Lemma1ii, MoveKind::Lemma1iii}) {
            const int n = p.total_length();
            for (int p1 = 0; p1 + 1 < n; ++p1)
                for (int p2 = p1 + 2; p2 + 1 < n; ++p2)
                    for (int p3 = p2 + 2; p3 + 1 < n; ++p3) {
                        Phrase q = p;
                        try {
                            q = apply_move(p, MoveInstance{kind, {p1, p2, p3}, {}});
                        } catch (const MoveError&) {
                            continue;
                        }
                        const auto res = equiv_search(p, q, opt);
                        CHECK(res.verdict == EquivResult::Verdict::Equivalent);
                        ++certified;
                    }
        }
    }
    // ABAB loci for the abab move on <= 3-letter phrases.  The bare ABAB
    // instance needs input+4 fresh letters (length-7 certificates; the +3
    // space exhausts without one).
    opt.max_depth = 14;
    for (int letters = 2; letters <= 3; ++letters)
        for (const Phrase& p : test::all_alpha1_phrases(letters, false)) {
            const int n = p.total_length();
            for (int p1 = 0; p1 + 1 < n; ++p1)
                for (int p2 = p1 + 2; p2 + 1 < n; ++p2) {
                    Phrase q = p;
                    try {
                        q = apply_abab(p, p1, p2);
                    } catch (const MoveError&) {
                        continue;
                    }
                    opt.max_letters = p.letter_count() + 4;
                    const auto res = equiv_search(p, q, opt);
                    CHECK(res.verdict == EquivResult::Verdict::Equivalent);
                    ++certified;
                }
        }
    CHECK(certified > 20);
}

TEST_CASE("random walks are deterministic and respect the growth budget") {
    std::mt19937_64 seed_rng(59);
    const std::set<MoveKind> allowed = {MoveKind::H1,    MoveKind::H1Inv, MoveKind::H2,
                                        MoveKind::H2Inv, MoveKind::H3,    MoveKind::Shift,
                                        MoveKind::Permute};
    for (int trial = 0; trial < 50; ++trial) {
        const Phrase p = test::random_alpha1_phrase(seed_rng, 4);
        const std::uint64_t seed = seed_rng();
        const auto a = random_walk(p, 8, seed, allowed, 2);
        const auto b = random_walk(p, 8, seed, allowed, 2);
        CHECK(a.phrase == b.phrase);
        CHECK(a.certificate == b.certificate);
        CHECK(a.phrase.letter_count() <= p.letter_count() + 2);
        CHECK(canonicalize(replay_certificate(p, a.certificate)) == canonicalize(a.phrase));
    }
    const Phrase aa = alpha1_phrase("AA", {1});
    const auto none = random_walk(aa, 0, 1, allowed, 0);
    CHECK(none.certificate.empty());
    CHECK(canonicalize(none.phrase) == canonicalize(aa));
}
