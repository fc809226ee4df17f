#pragma once

#include <memory>
#include <mutex>

#include "barx/xcomplex.hpp"

namespace barx {

/* Signed exchange of two tensor slots; the sign is the Koszul sign of the
 * permutation moving slot i to slot j and back. */
struct ExchangeOp {
    int i, j; // 0-based slot indices

    /* sign and new degree list for homogeneous slot degrees */
    Rat sign(const std::vector<int>& degrees) const;
    template <class T>
    void apply(std::vector<T>& slots) const
    {
        std::swap(slots.at(i), slots.at(j));
    }
};

/* Partition of cyclically ordered points 0..n_points-1 into k clockwise
 * intervals, possibly empty; a partition remembers where each block starts,
 * so the full circle read from different points gives different
 * partitions. */
struct PartitionOnCircle {
    int n_points = 0;
    int start = 0;            // first point of block 0
    std::vector<int> lengths; // k block lengths, sum = n_points

    int blocks() const { return static_cast<int>(lengths.size()); }
    std::vector<int> block(int b) const; // point labels, clockwise
};

std::vector<PartitionOnCircle> enumerate_partitions(int n_points, int k);

/* Puschnigg's lift p : X(C) x X(D) -> second level over C (x) D, dualized:
 * identity on even x even, half-sum of coproduct exchanges elsewhere. */
class PuschniggProduct {
public:
    PuschniggProduct(const BarXOps& xc, const BarXOps& xd);

    const CoalgebraSpec& product_coalgebra() const { return e_; }
    const FormOps& product_forms() const { return eops_; }

    X2Chain apply(const XChain& a, const XChain& b) const;

    /* components on presented forms */
    Form0 p00(const Word& c, const Word& d) const;
    Form1 p01(const Word& c, const Form1& omega) const;
    Form1 p10(const Form1& omega, const Word& d) const;

    /* The 2-form component: the half-sum representative formula followed by
     * the cocommutator projection (the representative alone is not
     * cocommutator-valued, so the level-two differential would not see the
     * right class). */
    Form2 p11(const Form1& oc, const Form1& od) const;
    Form2 p11_representative(const Form1& oc, const Form1& od) const;

    /* residual of the chain-map property on a homogeneous pair */
    X2Chain chain_residual(const XChain& a, int parity_a, const XChain& b) const;

private:
    const BarXOps* xc_;
    const BarXOps* xd_;
    CoalgebraSpec e_;
    FormOps eops_;
};

/* word-level coalgebra morphism into a target bar */
using WordMorphism = std::function<Lin<Word>(const Word&)>;

/* Composite supercomplex map from a DG coalgebra morphism C (x) D -> BV:
 * retraction after pushing the lift through the morphism. */
class ComposedPairing {
public:
    ComposedPairing(const BarXOps& xc, const BarXOps& xd, const BarXOps& target,
                    WordMorphism f);

    XChain apply(const XChain& a, const XChain& b) const;
    X2Chain middle(const XChain& a, const XChain& b) const; // before retraction

    /* residual of the chain-map property on a homogeneous pair */
    XChain chain_residual(const XChain& a, int parity_a, const XChain& b) const;

    /* checks the morphism property on window words; throws
     * NotACoalgebraMorphism with a witness otherwise. */
    void verify_morphism(int max_letters_c, int max_letters_d) const;

    const PuschniggProduct& lift() const { return p_; }

private:
    const BarXOps* xc_;
    const BarXOps* xd_;
    const BarXOps* target_;
    WordMorphism f_;
    PuschniggProduct p_;

    Form0 push0(const Form0& x) const;
    Form1 push1(const Form1& x) const;
    Form2 push2(const Form2& x) const;
};

/* The two pairings of a homotopy Gerstenhaber algebra: on the X complex of
 * its bar construction, and on the degree-zero restriction. */
struct GPairings {
    std::shared_ptr<FdAlgebra> algebra; // owns the algebra everything points at
    std::shared_ptr<CochainSpace> space;
    std::shared_ptr<BraceStructure> braces;
    std::shared_ptr<DgCochainAlgebra> dg;
    std::shared_ptr<BarCoalgebra> bv;
    std::shared_ptr<BarCoalgebra> bv0;
    std::shared_ptr<BarXOps> xv;
    std::shared_ptr<BarXOps> xv0;
    std::shared_ptr<ComposedPairing> on_bv;  // X(BV) x X(BV) -> X(BV)
    std::shared_ptr<ComposedPairing> on_bv0; // X(BV) x X(BV0) -> X(BV0)
};

GPairings make_g_pairings(const FdAlgebra& a, int arity_cap, int letter_cap, int bar_cap);

/* Explicit circle-partition evaluation of the second pairing; agrees with
 * the composite term by term.  check=true computes both and throws
 * SignMismatch naming the first disagreeing component. */
XChain eta_explicit(const GPairings& g, const XChain& big, const XChain& small,
                    bool check_against_composite = false);

} // namespace barx
