#pragma once

#include <memory>

#include "barx/brace.hpp"
#include "barx/graded.hpp"

namespace barx {

/* Letters of a DG algebra, the input data for a bar construction.  sdeg is
 * the shifted degree of a letter; prod/diff land in letter combinations. */
struct DgLetters {
    std::string name;
    std::vector<int> alphabet;
    std::function<int(int)> sdeg;
    std::function<Element(int, int)> prod;
    std::function<Element(int)> diff;
};

DgLetters letters_of_algebra(const FdAlgebra& a);
DgLetters letters_of_cochains(std::shared_ptr<const DgCochainAlgebra> dg, int alphabet_arity_cap);

/* Bar construction of a DG algebra: tensor coalgebra on the shifted letters
 * with differential b' + delta.  Conventions (validated by the identity
 * suite, see tests):
 *   b'(x_1..x_n)    = sum_i (-1)^{s_1+..+s_{i-1} + |x_i||x_{i+1}|} (.., x_i x_{i+1}, ..)
 *   delta(x_1..x_n) = - sum_i (-1)^{s_1+..+s_{i-1}} (.., dx_i, ..)
 * with s = shifted degree, |.| = s + 1.  Both are coderivations for the
 * sign-free deconcatenation, (b'+delta)^2 = 0, and the cup coalgebra map is
 * a derivation for them. */
class BarCoalgebra {
public:
    BarCoalgebra(DgLetters letters, int truncation);

    const DgLetters& letters() const { return letters_; }
    const CoalgebraSpec& spec() const { return spec_; }
    int truncation() const { return spec_.truncation; }

    int word_sdeg(const Word& w) const;
    Lin<Word> b_prime(const Word& w) const;
    Lin<Word> delta_int(const Word& w) const;
    Lin<Word> differential(const Word& w) const; // b' + delta
    Lin<Word> differential(const Lin<Word>& w) const;

    /* all basis words with at most max_len letters */
    std::vector<Word> words_up_to(int max_len) const;

private:
    DgLetters letters_;
    CoalgebraSpec spec_;
};

BarCoalgebra bar_of_algebra(const FdAlgebra& a, int truncation);

/* Bar Leibniz residual (the DG-bialgebra criterion):
 * (b'+d)(a cup b) - (b'+d)a cup b - (-1)^{|a|} a cup (b'+d)b. */
Lin<Word> bar_leibniz_residual(const BarCoalgebra& bv, const BraceStructure& braces,
                               const Word& alpha, const Word& beta, int cap);

/* Restricted product BV x BV_0 -> BV_0.  omega is a word of cochain letters,
 * a is a word over the algebra (degree-zero letters); each inserted cochain
 * consumes exactly arity-many letters and evaluates in A. */
Lin<Word> cup1(const CochainSpace& space, const Word& omega, const Word& a, int cap);

/* V -> V_0 projection and inclusion at the word level (cochain letters
 * versus algebra letters). */
Lin<Word> bv_word_to_bv0(const CochainSpace& space, const Word& w);
Word bv0_word_to_bv(const CochainSpace& space, const Word& w);

} // namespace barx
