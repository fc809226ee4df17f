#include <doctest.h>

#include <random>

#include "barx/pairing.hpp"

using namespace barx;

TEST_CASE("circle partitions")
{
    CHECK(enumerate_partitions(3, 1).size() == 3);
    CHECK(enumerate_partitions(3, 2).size() == 12);
    CHECK(enumerate_partitions(1, 1).size() == 1);

    SUBCASE("blocks cover the circle without repetition")
    {
        for (const auto& p : enumerate_partitions(4, 3)) {
            std::vector<int> seen;
            for (int b = 0; b < p.blocks(); ++b)
                for (int pt : p.block(b))
                    seen.push_back(pt);
            CHECK(seen.size() == 4);
            std::sort(seen.begin(), seen.end());
            for (int i = 0; i < 4; ++i)
                CHECK(seen[i] == i);
        }
    }
    SUBCASE("partitions are pairwise distinct")
    {
        auto ps = enumerate_partitions(3, 2);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                bool same = ps[i].start == ps[j].start && ps[i].lengths == ps[j].lengths;
                CHECK_FALSE(same);
            }
    }
}

TEST_CASE("signed exchange squares to the identity")
{
    std::mt19937_64 rng(0);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<int> degs(n);
        for (auto& d : degs)
            d = static_cast<int>(rng() % 5) - 2;
        int i = static_cast<int>(rng() % n);
        int j = static_cast<int>(rng() % n);
        if (i == j)
            continue;
        ExchangeOp r{i, j};
        std::vector<int> swapped = degs;
        r.apply(swapped);
        CHECK(r.sign(degs) * r.sign(swapped) == Rat(1));
    }
}

namespace {

struct PairFix {
    GPairings g;
    explicit PairFix(const FdAlgebra& a) : g(make_g_pairings(a, 8, 2, 3)) {}

    std::vector<std::pair<XChain, int>> x_chains(const BarXOps& x, int max_letters,
                                                 int max_total) const
    {
        std::vector<std::pair<XChain, int>> out;
        for (const auto& w : x.basis_words(std::min(max_letters, max_total))) {
            XChain c;
            c.even = Form0(w);
            out.push_back({c, x.parity_even_word(w)});
        }
        for (int head : x.bar().letters().alphabet)
            for (const auto& w : x.basis_words(std::min(max_letters, max_total) - 1)) {
                NatKey k{head, w};
                XChain c;
                c.nat = NatForm(k);
                out.push_back({c, x.parity_nat(k)});
            }
        return out;
    }

    static int chain_letters(const XChain& c)
    {
        int n = 0;
        for (const auto& [w, q] : c.even.terms())
            n = std::max<int>(n, static_cast<int>(w.size()));
        for (const auto& [k, q] : c.nat.terms())
            n = std::max<int>(n, 1 + static_cast<int>(k.tail.size()));
        return n;
    }
};

} // namespace

TEST_CASE("Puschnigg lift")
{
    FdAlgebra a = FdAlgebra::dual_numbers();
    BarCoalgebra ba1 = bar_of_algebra(a, 6);
    BarCoalgebra ba2 = bar_of_algebra(a, 6);
    BarXOps x1(ba1), x2(ba2);
    PuschniggProduct p(x1, x2);

    SUBCASE("even times even is the identity inclusion")
    {
        XChain ca, cb;
        ca.even = Form0(Word{0, 1});
        cb.even = Form0(Word{1});
        X2Chain out = p.apply(ca, cb);
        CHECK(out.zero == Form0(encode_pair({0, 1}, {1})));
        CHECK(out.one.is_zero());
        CHECK(out.two.is_zero());
    }
    SUBCASE("zero input gives zero output")
    {
        CHECK(p.apply(XChain{}, XChain{}).is_zero());
    }
    SUBCASE("chain map on basis pairs, lengths <= 2")
    {
        auto chains = [&](const BarXOps& x) {
            std::vector<std::pair<XChain, int>> out;
            for (const auto& w : x.basis_words(2)) {
                XChain c;
                c.even = Form0(w);
                out.push_back({c, x.parity_even_word(w)});
            }
            for (int head : x.bar().letters().alphabet)
                for (const auto& w : x.basis_words(1)) {
                    NatKey k{head, w};
                    XChain c;
                    c.nat = NatForm(k);
                    out.push_back({c, x.parity_nat(k)});
                }
            return out;
        };
        for (const auto& [ca, pa] : chains(x1))
            for (const auto& [cb, pb] : chains(x2)) {
                X2Chain res = p.chain_residual(ca, pa, cb);
                CHECK(res.is_zero());
            }
    }
}

TEST_CASE("composite pairings of the deformation complex")
{
    PairFix f(FdAlgebra::dual_numbers());

    SUBCASE("structure maps are DG coalgebra morphisms")
    {
        CHECK_NOTHROW(f.g.on_bv->verify_morphism(2, 2));
        CHECK_NOTHROW(f.g.on_bv0->verify_morphism(2, 3));
    }
    SUBCASE("a broken morphism is rejected with a witness")
    {
        WordMorphism bad = [](const Word& w) {
            auto [alpha, beta] = decode_pair(w);
            return Lin<Word>(concat(alpha, beta)); // concatenation: not a morphism
        };
        ComposedPairing cp(*f.g.xv0, *f.g.xv0, *f.g.xv0, bad);
        CHECK_THROWS_AS(cp.verify_morphism(2, 2), NotACoalgebraMorphism);
    }
    SUBCASE("pairing with the counit-like chain is the identity on the small side")
    {
        XChain unit;
        unit.even = Form0(Word{});
        for (const auto& [c, par] : f.x_chains(*f.g.xv0, 3, 3)) {
            XChain out = f.g.on_bv0->apply(unit, c);
            CHECK(out == c);
        }
    }
    SUBCASE("second pairing is a chain map on sampled pairs")
    {
        std::mt19937_64 rng(0);
        auto big = f.x_chains(*f.g.xv, 2, 2);
        auto small = f.x_chains(*f.g.xv0, 2, 2);
        for (int trial = 0; trial < 25; ++trial) {
            const auto& [ca, pa] = big[rng() % big.size()];
            const auto& [cb, pb] = small[rng() % small.size()];
            if (PairFix::chain_letters(ca) + PairFix::chain_letters(cb) > 3)
                continue;
            CHECK(f.g.on_bv0->chain_residual(ca, pa, cb).is_zero());
        }
    }
    SUBCASE("first pairing is a chain map on sampled pairs")
    {
        std::mt19937_64 rng(1);
        auto big = f.x_chains(*f.g.xv, 2, 2);
        for (int trial = 0; trial < 15; ++trial) {
            const auto& [ca, pa] = big[rng() % big.size()];
            const auto& [cb, pb] = big[rng() % big.size()];
            if (PairFix::chain_letters(ca) + PairFix::chain_letters(cb) > 3)
                continue;
            CHECK(f.g.on_bv->chain_residual(ca, pa, cb).is_zero());
        }
    }
    SUBCASE("output parity adds")
    {
        std::mt19937_64 rng(2);
        auto big = f.x_chains(*f.g.xv, 2, 2);
        auto small = f.x_chains(*f.g.xv0, 2, 2);
        for (int trial = 0; trial < 20; ++trial) {
            const auto& [ca, pa] = big[rng() % big.size()];
            const auto& [cb, pb] = small[rng() % small.size()];
            XChain out = f.g.on_bv0->apply(ca, cb);
            int want = (pa + pb) % 2;
            for (const auto& [w, c] : out.even.terms())
                CHECK(f.g.xv0->parity_even_word(w) == want);
            for (const auto& [k, c] : out.nat.terms())
                CHECK(f.g.xv0->parity_nat(k) == want);
        }
    }
}
