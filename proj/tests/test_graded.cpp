#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <tuple>

#include "barx/graded.hpp"

using namespace barx;

TEST_CASE("koszul_sign basics")
{
    CHECK(koszul_sign({0, 1, 2}, {5, 7, 9}) == Rat(1));
    CHECK(koszul_sign({1, 0}, {1, 1}) == Rat(-1));
    CHECK(koszul_sign({1, 0}, {2, 3}) == Rat(1)); // (-1)^{2*3}
    CHECK_THROWS(koszul_sign({0, 1}, {1}));
}

TEST_CASE("koszul_sign composes like a homomorphism")
{
    std::mt19937_64 rng(0); // fixed seed per run config
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        std::vector<int> degs(n);
        for (auto& d : degs)
            d = static_cast<int>(rng() % 5) - 2;
        std::vector<int> sigma(n), tau(n);
        for (int i = 0; i < n; ++i)
            sigma[i] = tau[i] = i;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::shuffle(tau.begin(), tau.end(), rng);
        // compose: first tau, then sigma on the already-permuted list
        std::vector<int> comp(n), degs_tau(n);
        for (int i = 0; i < n; ++i) {
            comp[i] = tau[sigma[i]];
            degs_tau[i] = degs[tau[i]];
        }
        Rat lhs = koszul_sign(comp, degs);
        Rat rhs = koszul_sign(tau, degs) * koszul_sign(sigma, degs_tau);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("deconcat")
{
    SUBCASE("empty word")
    {
        auto d = deconcat({});
        CHECK(d.size() == 1);
        CHECK(d.coeff({Word{}, Word{}}) == Rat(1));
    }
    SUBCASE("length one")
    {
        auto d = deconcat({7});
        CHECK(d.size() == 2);
        CHECK(d.coeff({Word{}, Word{7}}) == Rat(1));
        CHECK(d.coeff({Word{7}, Word{}}) == Rat(1));
    }
    SUBCASE("length three: four terms in order, all +1")
    {
        Word w{1, 2, 3};
        auto d = deconcat(w);
        CHECK(d.size() == 4);
        for (const auto& [pair, c] : d.terms()) {
            CHECK(c == Rat(1));
            CHECK(concat(pair.first, pair.second) == w);
        }
    }
}

namespace {

/* Small standalone coalgebra over two degree-0 letters: words with
 * deconcatenation, zero differential.  Enough structure to exercise the
 * generic coalgebra operations without the bar machinery. */
CoalgebraSpec word_coalgebra(int truncation, int letter_sdeg)
{
    CoalgebraSpec c;
    c.name = "words";
    c.truncation = truncation;
    c.counit_word = {};
    c.degree = [letter_sdeg](const Word& w) { return letter_sdeg * static_cast<int>(w.size()); };
    c.counit = [](const Word& w) { return w.empty() ? Rat(1) : Rat(0); };
    c.letters = [](const Word& w) { return static_cast<int>(w.size()); };
    c.coproduct = [](const Word& w) { return deconcat(w); };
    c.differential = [](const Word&) { return Lin<Word>(); };
    return c;
}

std::vector<Word> all_words(int max_len, int alphabet)
{
    std::vector<Word> out{{}};
    std::vector<Word> frontier{{}};
    for (int l = 0; l < max_len; ++l) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (int a = 0; a < alphabet; ++a) {
                Word nw = w;
                nw.push_back(a);
                next.push_back(nw);
                out.push_back(nw);
            }
        frontier = std::move(next);
    }
    return out;
}

/* (Delta x 1)Delta - (1 x Delta)Delta applied to a basis word, compared as
 * triples. */
bool coassociative_at(const CoalgebraSpec& c, const Word& w)
{
    using Triple = std::tuple<Word, Word, Word>;
    Lin<Triple> lhs, rhs;
    for (const auto& [p, cp] : c.coproduct(w).terms()) {
        for (const auto& [q, cq] : c.coproduct(p.first).terms())
            lhs.add({q.first, q.second, p.second}, cp * cq);
        for (const auto& [q, cq] : c.coproduct(p.second).terms())
            rhs.add({p.first, q.first, q.second}, cp * cq);
    }
    return lhs == rhs;
}

} // namespace

TEST_CASE("deconcat coalgebra is coassociative and counital")
{
    auto c = word_coalgebra(4, -1);
    for (const auto& w : all_words(4, 2)) {
        CHECK(coassociative_at(c, w));
        // counit laws
        Lin<Word> left, right;
        for (const auto& [p, cp] : c.coproduct(w).terms()) {
            left.add(p.second, cp * c.counit(p.first));
            right.add(p.first, cp * c.counit(p.second));
        }
        CHECK(left == Lin<Word>(w));
        CHECK(right == Lin<Word>(w));
    }
}

TEST_CASE("tensor_coalgebra")
{
    auto c = word_coalgebra(3, -1);
    auto d = word_coalgebra(3, -1);

    SUBCASE("trivial factor acts as a unit object")
    {
        CoalgebraSpec triv = word_coalgebra(0, -1); // only the empty word
        auto e = tensor_coalgebra(triv, c);
        for (const auto& w : all_words(3, 2)) {
            Word ew = encode_pair({}, w);
            CHECK(e.counit(ew) == c.counit(w));
            CHECK(e.degree(ew) == c.degree(w));
            // coproduct transported along u <-> ((), u)
            Lin<WordPair> mapped;
            for (const auto& [p, cp] : c.coproduct(w).terms())
                mapped.add({encode_pair({}, p.first), encode_pair({}, p.second)}, cp);
            CHECK(e.coproduct(ew) == mapped);
        }
    }
    SUBCASE("counit of the product is the product of counits")
    {
        auto e = tensor_coalgebra(c, d);
        for (const auto& u : all_words(2, 2))
            for (const auto& v : all_words(2, 2))
                CHECK(e.counit(encode_pair(u, v)) == c.counit(u) * d.counit(v));
    }
    SUBCASE("product coproduct is coassociative, total letters <= 4")
    {
        auto e = tensor_coalgebra(c, d);
        for (const auto& u : all_words(2, 2))
            for (const auto& v : all_words(2, 2)) {
                if (u.size() + v.size() > 4)
                    continue;
                CHECK(coassociative_at(e, encode_pair(u, v)));
            }
    }
}

TEST_CASE("cofree_lift")
{
    // one odd letter (shifted degree -1), m = degree-one concatenation part
    auto sdeg = [](int) { return -1; };
    auto m = [](const Word& a, const Word& b) -> Element {
        if (a.size() == 1 && b.empty())
            return Element(a[0]);
        if (a.empty() && b.size() == 1)
            return Element(b[0]);
        return Element();
    };

    SUBCASE("lift is the signed shuffle product (independent oracle)")
    {
        // oracle: sum over shuffles keeping each factor's order, sign =
        // Koszul of the interleaving permutation
        auto shuffle = [&](const Word& a, const Word& b) {
            Lin<Word> out;
            const int p = static_cast<int>(a.size()), q = static_cast<int>(b.size());
            std::vector<int> sel(p + q);
            std::function<void(int, int, int)> rec = [&](int i, int ai, int bi) {
                if (i == p + q) {
                    std::vector<int> perm(p + q);
                    std::vector<int> degs(p + q);
                    Word w(p + q);
                    int an = 0, bn = 0;
                    for (int k = 0; k < p + q; ++k) {
                        if (sel[k] == 0) {
                            perm[k] = an;
                            w[k] = a[an++];
                        } else {
                            perm[k] = p + bn;
                            w[k] = b[bn++];
                        }
                        degs[perm[k]] = -1;
                    }
                    out.add(w, koszul_sign(perm, degs));
                    return;
                }
                if (ai < p) { sel[i] = 0; rec(i + 1, ai + 1, bi); }
                if (bi < q) { sel[i] = 1; rec(i + 1, ai, bi + 1); }
            };
            rec(0, 0, 0);
            return out;
        };
        for (const auto& a : all_words(3, 1))
            for (const auto& b : all_words(3, 1))
                CHECK(cofree_lift_apply(m, sdeg, a, b, 8) == shuffle(a, b));
    }
    SUBCASE("degree-one component of the lift returns m")
    {
        for (const auto& a : all_words(2, 1))
            for (const auto& b : all_words(2, 1)) {
                Element back;
                for (const auto& [w, c] : cofree_lift_apply(m, sdeg, a, b, 8).terms())
                    if (w.size() == 1)
                        back.add(w[0], c);
                CHECK(back == m(a, b));
            }
    }
    SUBCASE("counitality")
    {
        for (const auto& b : all_words(3, 1)) {
            CHECK(cofree_lift_apply(m, sdeg, {}, b, 8) == Lin<Word>(b));
            CHECK(cofree_lift_apply(m, sdeg, b, {}, 8) == Lin<Word>(b));
        }
    }
    SUBCASE("lift is a coalgebra morphism on the window")
    {
        auto c = word_coalgebra(6, -1);
        for (const auto& a : all_words(2, 1))
            for (const auto& b : all_words(2, 1)) {
                // Delta(lift(a,b)) vs (lift x lift)(Delta-tilde(a,b))
                Lin<WordPair> lhs;
                for (const auto& [w, cw] : cofree_lift_apply(m, sdeg, a, b, 8).terms())
                    lhs.add(deconcat(w), cw);
                Lin<WordPair> rhs;
                for (const auto& [pa, ca] : deconcat(a).terms())
                    for (const auto& [pb, cb] : deconcat(b).terms()) {
                        long x = long(c.degree(pa.second)) * long(c.degree(pb.first));
                        Rat sign = (x % 2 == 0) ? Rat(1) : Rat(-1);
                        auto left = cofree_lift_apply(m, sdeg, pa.first, pb.first, 8);
                        auto right = cofree_lift_apply(m, sdeg, pa.second, pb.second, 8);
                        for (const auto& [wl, cl] : left.terms())
                            for (const auto& [wr, cr] : right.terms())
                                rhs.add({wl, wr}, sign * ca * cb * cl * cr);
                    }
                CHECK(lhs == rhs);
            }
    }
    SUBCASE("overflow is flagged, never dropped")
    {
        Word a{0, 0, 0};
        CHECK_THROWS_AS(cofree_lift_apply(m, sdeg, a, a, 4), TruncationOverflow);
    }
}
