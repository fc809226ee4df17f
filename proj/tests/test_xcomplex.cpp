#include <doctest.h>

#include <memory>
#include <random>

#include "barx/xcomplex.hpp"

using namespace barx;

namespace {

struct XFix {
    FdAlgebra alg;
    BarCoalgebra ba;
    BarXOps x;

    explicit XFix(FdAlgebra a, int L = 6)
        : alg(std::move(a)), ba(bar_of_algebra(alg, L)), x(ba)
    {
    }
};

struct XGradedFix {
    FdAlgebra alg;
    std::shared_ptr<CochainSpace> space;
    std::shared_ptr<BraceStructure> braces;
    std::shared_ptr<DgCochainAlgebra> dg;
    BarCoalgebra bv;
    BarXOps x;

    explicit XGradedFix(FdAlgebra a, int arity_cap = 6, int letter_cap = 2, int L = 5)
        : alg(std::move(a)),
          space(std::make_shared<CochainSpace>(alg, arity_cap)),
          braces(std::make_shared<BraceStructure>(space)),
          dg(std::make_shared<DgCochainAlgebra>(braces,
                                                space->intern(CochainTable::multiplication(alg)))),
          bv(letters_of_cochains(dg, letter_cap), L),
          x(bv)
    {
    }
};

} // namespace

TEST_CASE("form operator identities over an algebra bar")
{
    XFix f(FdAlgebra::dual_numbers());
    const FormOps& ops = f.x.forms();

    for (const auto& w : f.ba.words_up_to(4)) {
        // b^2 = 0 through form degrees 0 -> 1 -> 2
        CHECK(ops.b1(ops.b0(w)).is_zero());
        // d b = 0 on 0-forms
        CHECK(ops.d1(ops.b0(w)).is_zero());
        // the coalgebra-direction lift of the bar differential
        CHECK(ops.lift0(w) == f.ba.differential(w));
    }
    // d1 d2 = 0 on assorted 2-forms
    for (const auto& u : f.ba.words_up_to(1))
        for (const auto& v : f.ba.words_up_to(1)) {
            if (v.empty())
                continue;
            for (const auto& z : f.ba.words_up_to(1)) {
                if (z.empty())
                    continue;
                CHECK(ops.d1(ops.d2(F2{u, v, z})).is_zero());
            }
        }
}

TEST_CASE("internal lift anticommutes with the coproduct operators (graded)")
{
    XGradedFix f(FdAlgebra::dual_numbers());
    const FormOps& ops = f.x.forms();
    std::mt19937_64 rng(0);
    const auto& alphabet = f.bv.letters().alphabet;
    auto rand_word = [&](int len) {
        Word w(len);
        for (auto& l : w)
            l = alphabet[rng() % alphabet.size()];
        return w;
    };
    for (int trial = 0; trial < 30; ++trial) {
        Word w = rand_word(static_cast<int>(rng() % 3) + 1);
        // 0-forms: lift then b vs b then lift
        CHECK((ops.lift1(ops.b0(w)) + ops.b0(ops.lift0(w))).is_zero());
        CHECK(ops.lift0(ops.lift0(w)).is_zero());
        // 1-forms
        Word v = rand_word(static_cast<int>(rng() % 2) + 1);
        F1 k{w, v};
        CHECK((ops.lift2(ops.b1(k)) + ops.b1(ops.lift1(k))).is_zero());
        CHECK((ops.lift0(ops.d1(k)) + ops.d1(ops.lift1(k))).is_zero());
        CHECK(ops.lift1(ops.lift1(k)).is_zero());
        // 2-forms
        Word z = rand_word(1);
        F2 k2{v, w, z};
        CHECK((ops.lift1(ops.d2(k2)) + ops.d2(ops.lift2(k2))).is_zero());
        CHECK(ops.lift2(ops.lift2(k2)).is_zero());
    }
}

TEST_CASE("theta")
{
    XFix f(FdAlgebra::dual_numbers());

    SUBCASE("explicit values in the split presentation")
    {
        // theta(1 x a x beta) = a x beta; zero when the left word is nonempty
        for (int a = 0; a < f.alg.dim(); ++a)
            for (const auto& beta : f.ba.words_up_to(2)) {
                NatForm expect(NatKey{a, beta});
                CHECK(f.x.theta(f.x.one_form_from_split({}, a, beta)) == expect);
                for (const auto& alpha : f.ba.words_up_to(2)) {
                    if (alpha.empty())
                        continue;
                    CHECK(f.x.theta(f.x.one_form_from_split(alpha, a, beta)).is_zero());
                }
            }
    }
    SUBCASE("values on raw one-forms")
    {
        // head-letter slot: identity; counit slot: rotate with a minus
        Word beta{0, 1};
        CHECK(f.x.theta(F1{Word{1}, beta}) == NatForm(NatKey{1, beta}));
        NatForm expect(NatKey{0, Word{1}}, Rat(-1));
        CHECK(f.x.theta(F1{Word{}, Word{0, 1}}) == expect);
        CHECK(f.x.theta(F1{Word{0, 1}, beta}).is_zero());
    }
    SUBCASE("left inverse of the cocommutator inclusion")
    {
        for (int head = 0; head < f.alg.dim(); ++head)
            for (const auto& w : f.ba.words_up_to(3)) {
                NatKey k{head, w};
                CHECK(f.x.theta(f.x.iota_nat(k)) == NatForm(k));
            }
    }
}

TEST_CASE("nabla")
{
    XFix f(FdAlgebra::dual_numbers());

    SUBCASE("support condition: last slot must be a single letter")
    {
        CHECK(f.x.nabla(F2{Word{0}, Word{1}, Word{0, 1}}).is_zero());
        CHECK(f.x.nabla(F2{Word{}, Word{0, 0}, Word{1, 1, 0}}).is_zero());
    }
    SUBCASE("transposition with coefficient one, in the split presentation")
    {
        Form1 got = f.x.nabla(F2{Word{0, 1}, Word{1}, Word{0}});
        // leading term: the transposed tensor with coefficient +1
        CHECK(got.coeff(F1{Word{1}, Word{0, 0, 1}}) == Rat(1));
        // and the whole value is the presented transposition
        Form1 expect = Rat(-1) * f.x.one_form_from_split(Word{1}, 0, Word{0, 1});
        CHECK(got == expect);
    }
    SUBCASE("connection identities on the window bases")
    {
        auto rep = verify_connection_identities(f.x, 3);
        INFO(rep.witness);
        CHECK(rep.ok);
    }
}

TEST_CASE("natural inclusion into the second level")
{
    XFix f(FdAlgebra::dual_numbers());

    SUBCASE("zero chain and pure even chains")
    {
        CHECK(f.x.include(XChain{}).is_zero());
        Word w{0, 1};
        XChain c;
        c.even = Form0(w);
        X2Chain inc = f.x.include(c);
        CHECK(inc.zero == Form0(w));
        CHECK(inc.two.is_zero());
        CHECK(inc.one.is_zero());
    }
    SUBCASE("chain map for the full differential")
    {
        for (const auto& c : f.x.basis_x(3)) {
            X2Chain lhs = f.x.dx2(f.x.include(c), DiffParts::D1D2);
            X2Chain rhs = f.x.include(f.x.dx(c, DiffParts::D1D2));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("second-level differential squares to zero")
{
    XFix f(FdAlgebra::dual_numbers());
    for (const auto& c : f.x.basis_x2(3)) {
        CHECK(f.x.dx2(f.x.dx2(c, DiffParts::BOnly), DiffParts::BOnly).is_zero());
        CHECK(f.x.dx2(f.x.dx2(c, DiffParts::D1), DiffParts::D1).is_zero());
        CHECK(f.x.dx2(f.x.dx2(c, DiffParts::D1D2), DiffParts::D1D2).is_zero());
    }
    for (const auto& c : f.x.basis_x(3))
        CHECK(f.x.dx(f.x.dx(c, DiffParts::D1D2), DiffParts::D1D2).is_zero());
}

TEST_CASE("special deformation retracts")
{
    XFix f(FdAlgebra::dual_numbers());

    SUBCASE("level one: Hochschild-direction only")
    {
        auto rep = verify_sdr(f.x, DiffParts::BOnly, 3);
        INFO(rep.witness);
        CHECK(rep.ok);
    }
    SUBCASE("level two: full coproduct direction")
    {
        auto rep = verify_sdr(f.x, DiffParts::D1, 3);
        INFO(rep.witness);
        CHECK(rep.ok);
    }
    SUBCASE("level three: everything")
    {
        auto rep = verify_sdr(f.x, DiffParts::D1D2, 3);
        INFO(rep.witness);
        CHECK(rep.ok);
    }
    SUBCASE("degenerate input: no 2-form part")
    {
        for (const auto& c : f.x.basis_x(3)) {
            X2Chain inc = f.x.include(c);
            CHECK(f.x.retract(inc) == f.x.r_prime(inc));
        }
    }
}

TEST_CASE("graded coefficients: retracts over a cochain bar")
{
    XGradedFix f(FdAlgebra::dual_numbers(), 6, 1, 4);

    SUBCASE("differential squares to zero on the window")
    {
        for (const auto& c : f.x.basis_x2(2))
            CHECK(f.x.dx2(f.x.dx2(c, DiffParts::D1D2), DiffParts::D1D2).is_zero());
    }
    SUBCASE("full retract identities")
    {
        auto rep = verify_sdr(f.x, DiffParts::D1D2, 2);
        INFO(rep.witness);
        CHECK(rep.ok);
    }
    SUBCASE("connection identities")
    {
        auto rep = verify_connection_identities(f.x, 2);
        INFO(rep.witness);
        CHECK(rep.ok);
    }
}
