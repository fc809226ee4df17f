#include "barx/graded.hpp"

#include <algorithm>
#include <numeric>

namespace barx {

int GradedBasis::element_degree(const Element& e) const
{
    if (e.is_zero())
        throw ValidationError("degree of zero element is undefined");
    int deg = 0;
    bool first = true;
    for (const auto& [k, v] : e.terms()) {
        if (first) {
            deg = degree(k);
            first = false;
        } else if (degree(k) != deg) {
            throw ValidationError("element has mixed degrees");
        }
    }
    return deg;
}

bool GradedBasis::is_homogeneous(const Element& e) const
{
    if (e.is_zero())
        return true;
    int deg = 0;
    bool first = true;
    for (const auto& [k, v] : e.terms()) {
        if (first) {
            deg = degree(k);
            first = false;
        } else if (degree(k) != deg) {
            return false;
        }
    }
    return true;
}

Rat koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees)
{
    if (perm.size() != degrees.size())
        throw ValidationError("koszul_sign: length mismatch");
    long exponent = 0;
    for (std::size_t k = 0; k < perm.size(); ++k)
        for (std::size_t l = k + 1; l < perm.size(); ++l)
            if (perm[k] > perm[l])
                exponent += long(degrees.at(perm[k])) * long(degrees.at(perm[l]));
    return (exponent % 2 == 0) ? Rat(1) : Rat(-1);
}

Lin<WordPair> deconcat(const Word& w)
{
    Lin<WordPair> out;
    for (std::size_t i = 0; i <= w.size(); ++i) {
        Word left(w.begin(), w.begin() + i);
        Word right(w.begin() + i, w.end());
        out.add({std::move(left), std::move(right)}, Rat(1));
    }
    return out;
}

int word_degree(const Word& w, const std::function<int(int)>& sdeg)
{
    int d = 0;
    for (int letter : w)
        d += sdeg(letter);
    return d;
}

Lin<WordPair> CoalgebraSpec::reduced_coproduct(const Word& w) const
{
    Lin<WordPair> out;
    for (const auto& [pair, c] : coproduct(w).terms()) {
        if (counit(pair.first) != 0 || counit(pair.second) != 0)
            continue;
        out.add(pair, c);
    }
    return out;
}

Word encode_pair(const Word& c, const Word& d)
{
    Word e = c;
    e.push_back(-1);
    e.insert(e.end(), d.begin(), d.end());
    return e;
}

WordPair decode_pair(const Word& e)
{
    auto it = std::find(e.begin(), e.end(), -1);
    if (it == e.end())
        throw ValidationError("decode_pair: no separator");
    return {Word(e.begin(), it), Word(it + 1, e.end())};
}

CoalgebraSpec tensor_coalgebra(const CoalgebraSpec& c, const CoalgebraSpec& d)
{
    CoalgebraSpec e;
    e.name = c.name + "*" + d.name;
    e.truncation = c.truncation + d.truncation;
    e.counit_word = encode_pair(c.counit_word, d.counit_word);
    e.degree = [c, d](const Word& w) {
        auto [cw, dw] = decode_pair(w);
        return c.degree(cw) + d.degree(dw);
    };
    e.counit = [c, d](const Word& w) {
        auto [cw, dw] = decode_pair(w);
        return c.counit(cw) * d.counit(dw);
    };
    e.letters = [c, d](const Word& w) {
        auto [cw, dw] = decode_pair(w);
        return c.letters(cw) + d.letters(dw);
    };
    e.coproduct = [c, d](const Word& w) {
        auto [cw, dw] = decode_pair(w);
        Lin<WordPair> out;
        for (const auto& [cp, cc] : c.coproduct(cw).terms())
            for (const auto& [dp, dc] : d.coproduct(dw).terms()) {
                // middle exchange (c2 past d1) carries the Koszul sign
                long x = long(c.degree(cp.second)) * long(d.degree(dp.first));
                Rat sign = (x % 2 == 0) ? Rat(1) : Rat(-1);
                out.add({encode_pair(cp.first, dp.first), encode_pair(cp.second, dp.second)},
                        sign * cc * dc);
            }
        return out;
    };
    e.differential = [c, d](const Word& w) {
        auto [cw, dw] = decode_pair(w);
        Lin<Word> out;
        for (const auto& [t, v] : c.differential(cw).terms())
            out.add(encode_pair(t, dw), v);
        Rat sign = (c.degree(cw) % 2 == 0) ? Rat(1) : Rat(-1);
        for (const auto& [t, v] : d.differential(dw).terms())
            out.add(encode_pair(cw, t), sign * v);
        return out;
    };
    return e;
}

namespace {

/* All splits of w into n consecutive blocks (empty blocks allowed). */
void enumerate_blocks(const Word& w, int n, std::vector<std::vector<Word>>& out)
{
    std::vector<int> cuts(n - 1);
    std::function<void(int, int)> rec = [&](int idx, int from) {
        if (idx == n - 1) {
            std::vector<Word> blocks;
            int prev = 0;
            for (int cut : cuts) {
                blocks.emplace_back(w.begin() + prev, w.begin() + cut);
                prev = cut;
            }
            blocks.emplace_back(w.begin() + prev, w.end());
            out.push_back(std::move(blocks));
            return;
        }
        for (int c = from; c <= static_cast<int>(w.size()); ++c) {
            cuts[idx] = c;
            rec(idx + 1, c);
        }
    };
    if (n == 1) {
        out.push_back({w});
        return;
    }
    rec(0, 0);
}

} // namespace

Lin<Word> cofree_lift_apply(
    const std::function<Element(const Word&, const Word&)>& m,
    const std::function<int(int)>& sdeg,
    const Word& alpha, const Word& beta, int cap)
{
    Lin<Word> out;
    const int max_n = static_cast<int>(alpha.size() + beta.size());

    // n = 0 only pairs the two counit words; m(() , ()) = 0 by degree, so
    // the empty output word appears exactly when both inputs are empty.
    if (alpha.empty() && beta.empty()) {
        out.add(Word{}, Rat(1));
        return out;
    }

    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::vector<Word>> asplits, bsplits;
        enumerate_blocks(alpha, n, asplits);
        enumerate_blocks(beta, n, bsplits);
        for (const auto& ab : asplits) {
            // degree of every alpha block, for the shuffle sign
            std::vector<int> adeg(n), bdeg(n);
            for (int i = 0; i < n; ++i)
                adeg[i] = word_degree(ab[i], sdeg);
            for (const auto& bb : bsplits) {
                bool dead = false;
                for (int i = 0; i < n && !dead; ++i)
                    if (ab[i].empty() && bb[i].empty())
                        dead = true; // m(1,1) = 0
                if (dead)
                    continue;
                for (int i = 0; i < n; ++i)
                    bdeg[i] = word_degree(bb[i], sdeg);
                // Koszul shuffle: b_i moves left past a_{i+1}..a_n
                long expo = 0;
                for (int i = 0; i < n; ++i) {
                    long tail = 0;
                    for (int j = i + 1; j < n; ++j)
                        tail += adeg[j];
                    expo += long(bdeg[i]) * tail;
                }
                Rat sign = (expo % 2 == 0) ? Rat(1) : Rat(-1);

                // resolve m on every block pair, multiply out
                std::vector<Element> letters(n);
                bool zero = false;
                for (int i = 0; i < n && !zero; ++i) {
                    letters[i] = m(ab[i], bb[i]);
                    if (letters[i].is_zero())
                        zero = true;
                }
                if (zero)
                    continue;
                if (n > cap)
                    throw TruncationOverflow("cofree_lift_apply: output word length exceeds cap");
                Lin<Word> acc(Word{}, sign);
                for (int i = 0; i < n; ++i) {
                    Lin<Word> next;
                    for (const auto& [w, cw] : acc.terms())
                        for (const auto& [l, cl] : letters[i].terms()) {
                            Word nw = w;
                            nw.push_back(l);
                            next.add(nw, cw * cl);
                        }
                    acc = std::move(next);
                }
                out += acc;
            }
        }
    }
    return out;
}

} // namespace barx
