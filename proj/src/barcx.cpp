#include "barx/barcx.hpp"

namespace barx {

DgLetters letters_of_algebra(const FdAlgebra& a)
{
    DgLetters l;
    l.name = "B(" + a.name() + ")";
    for (int i = 0; i < a.dim(); ++i)
        l.alphabet.push_back(i);
    l.sdeg = [](int) { return -1; };
    l.prod = [alg = a](int i, int j) { return alg.mul(i, j); };
    l.diff = [](int) { return Element(); };
    return l;
}

DgLetters letters_of_cochains(std::shared_ptr<const DgCochainAlgebra> dg, int alphabet_arity_cap)
{
    DgLetters l;
    const CochainSpace& s = dg->space();
    l.name = "B(C(" + s.algebra().name() + "))";
    for (int arity = 0; arity <= alphabet_arity_cap && arity <= s.arity_cap(); ++arity)
        for (int id : s.ids_of_arity(arity))
            l.alphabet.push_back(id);
    l.sdeg = [dg](int id) { return dg->space().sdeg(id); };
    l.prod = [dg](int i, int j) { return dg->product(Element(i), Element(j)); };
    l.diff = [dg](int i) { return dg->differential(Element(i)); };
    return l;
}

namespace {

Lin<Word> bprime_impl(const DgLetters& letters, const Word& w)
{
    Lin<Word> out;
    const int n = static_cast<int>(w.size());
    long prefix = 0;
    for (int i = 0; i + 1 < n; ++i) {
        Rat sign = (prefix % 2 == 0) ? Rat(1) : Rat(-1);
        for (const auto& [l, c] : letters.prod(w[i], w[i + 1]).terms()) {
            Word nw;
            nw.reserve(n - 1);
            nw.insert(nw.end(), w.begin(), w.begin() + i);
            nw.push_back(l);
            nw.insert(nw.end(), w.begin() + i + 2, w.end());
            out.add(nw, sign * c);
        }
        prefix += letters.sdeg(w[i]);
    }
    return out;
}

Lin<Word> delta_impl(const DgLetters& letters, const Word& w)
{
    // sign runs over the prefix including the differentiated letter
    Lin<Word> out;
    const int n = static_cast<int>(w.size());
    long prefix = 0;
    for (int i = 0; i < n; ++i) {
        prefix += letters.sdeg(w[i]);
        Rat sign = (prefix % 2 == 0) ? Rat(1) : Rat(-1);
        for (const auto& [l, c] : letters.diff(w[i]).terms()) {
            Word nw = w;
            nw[i] = l;
            out.add(nw, sign * c);
        }
    }
    return out;
}

} // namespace

BarCoalgebra::BarCoalgebra(DgLetters letters, int truncation) : letters_(std::move(letters))
{
    spec_.name = letters_.name;
    spec_.truncation = truncation;
    spec_.counit_word = {};
    auto sdeg = letters_.sdeg;
    spec_.degree = [sdeg](const Word& w) {
        int d = 0;
        for (int l : w)
            d += sdeg(l);
        return d;
    };
    spec_.counit = [](const Word& w) { return w.empty() ? Rat(1) : Rat(0); };
    spec_.letters = [](const Word& w) { return static_cast<int>(w.size()); };
    spec_.coproduct = [](const Word& w) { return deconcat(w); };
    DgLetters lt = letters_;
    spec_.differential = [lt](const Word& w) { return bprime_impl(lt, w) + delta_impl(lt, w); };
}

int BarCoalgebra::word_sdeg(const Word& w) const
{
    int d = 0;
    for (int l : w)
        d += letters_.sdeg(l);
    return d;
}

Lin<Word> BarCoalgebra::b_prime(const Word& w) const { return bprime_impl(letters_, w); }

Lin<Word> BarCoalgebra::delta_int(const Word& w) const { return delta_impl(letters_, w); }

Lin<Word> BarCoalgebra::differential(const Word& w) const
{
    return b_prime(w) + delta_int(w);
}

Lin<Word> BarCoalgebra::differential(const Lin<Word>& w) const
{
    Lin<Word> out;
    for (const auto& [k, c] : w.terms())
        out.add(differential(k), c);
    return out;
}

std::vector<Word> BarCoalgebra::words_up_to(int max_len) const
{
    std::vector<Word> out{{}};
    std::vector<Word> frontier{{}};
    for (int l = 0; l < max_len; ++l) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (int a : letters_.alphabet) {
                Word nw = w;
                nw.push_back(a);
                next.push_back(nw);
                out.push_back(nw);
            }
        frontier = std::move(next);
    }
    return out;
}

BarCoalgebra bar_of_algebra(const FdAlgebra& a, int truncation)
{
    return BarCoalgebra(letters_of_algebra(a), truncation);
}

Lin<Word> bar_leibniz_residual(const BarCoalgebra& bv, const BraceStructure& braces,
                               const Word& alpha, const Word& beta, int cap)
{
    Lin<Word> lhs = bv.differential(cup_words(braces, alpha, beta, cap));

    Lin<Word> rhs;
    for (const auto& [w, c] : bv.differential(alpha).terms())
        rhs.add(cup_words(braces, w, beta, cap), c);
    Rat sign = (bv.word_sdeg(alpha) % 2 == 0) ? Rat(1) : Rat(-1);
    for (const auto& [w, c] : bv.differential(beta).terms())
        rhs.add(cup_words(braces, alpha, w, cap), sign * c);
    return lhs - rhs;
}

Lin<Word> cup1(const CochainSpace& space, const Word& omega, const Word& a, int cap)
{
    const int m = static_cast<int>(omega.size());
    const int n = static_cast<int>(a.size());
    std::vector<int> width(m);
    int total_width = 0;
    for (int p = 0; p < m; ++p) {
        width[p] = space.arity_of(omega[p]);
        total_width += width[p];
    }
    const int out_len = n - total_width + m;
    if (out_len > cap)
        throw TruncationOverflow("cup1 output length exceeds cap");
    Lin<Word> out;
    if (out_len < 0 || total_width > n)
        return out;

    std::vector<int> pos(m);
    std::function<void(int, int, long)> rec = [&](int p, int min_pos, long expo) {
        if (p == m) {
            Lin<Word> acc(Word{}, (expo % 2 == 0) ? Rat(1) : Rat(-1));
            int j = 0;
            for (int q = 0; q <= m; ++q) {
                int stop = (q < m) ? pos[q] : n;
                for (; j < stop; ++j) {
                    Lin<Word> next;
                    for (const auto& [w, c] : acc.terms()) {
                        Word nw = w;
                        nw.push_back(a[j]);
                        next.add(nw, c);
                    }
                    acc = std::move(next);
                }
                if (q < m) {
                    CochainTable t = space.table_of(omega[q]);
                    std::vector<int> block(a.begin() + pos[q], a.begin() + pos[q] + width[q]);
                    Element val = t.value(block); // full evaluation in A
                    j += width[q];
                    Lin<Word> next;
                    for (const auto& [w, c] : acc.terms())
                        for (const auto& [l, cl] : val.terms()) {
                            Word nw = w;
                            nw.push_back(l);
                            next.add(nw, c * cl);
                        }
                    acc = std::move(next);
                }
            }
            out += acc;
            return;
        }
        for (int i = min_pos; i + width[p] <= n; ++i) {
            pos[p] = i;
            rec(p + 1, i + width[p], expo + long(space.sdeg(omega[p])) * i);
        }
    };
    rec(0, 0, 0);
    return out;
}

Lin<Word> bv_word_to_bv0(const CochainSpace& space, const Word& w)
{
    Word out;
    out.reserve(w.size());
    for (int id : w) {
        if (space.arity_of(id) != 0)
            return Lin<Word>();
        Element a = space.to_algebra(Element(id));
        out.push_back(a.terms().begin()->first);
    }
    return Lin<Word>(out);
}

Word bv0_word_to_bv(const CochainSpace& space, const Word& w)
{
    Word out;
    out.reserve(w.size());
    for (int i : w)
        out.push_back(space.algebra_id(i));
    return out;
}

} // namespace barx
