#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "barx/errors.hpp"
#include "barx/rational.hpp"

namespace barx {

/* Sparse linear combination of basis keys with rational coefficients.
 * Zero coefficients are never stored. */
template <class K>
class Lin {
public:
    using Terms = std::map<K, Rat>;

    Lin() = default;
    explicit Lin(const K& k) { terms_[k] = Rat(1); }
    Lin(const K& k, const Rat& c)
    {
        if (c != 0)
            terms_[k] = c;
    }

    static Lin zero() { return Lin(); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /* Ref-qualified so iterating the terms of a temporary stays valid
     * (the rvalue overload hands the map out by value). */
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }

    Rat coeff(const K& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(const K& k, const Rat& c)
    {
        if (c == 0)
            return;
        Rat& cell = terms_[k];
        cell += c;
        if (cell == 0)
            terms_.erase(k);
    }

    void add(const Lin& other, const Rat& c = Rat(1))
    {
        if (c == 0)
            return;
        for (const auto& [k, v] : other.terms_)
            add(k, v * c);
    }

    Lin& operator+=(const Lin& o)
    {
        add(o);
        return *this;
    }
    Lin& operator-=(const Lin& o)
    {
        add(o, Rat(-1));
        return *this;
    }
    friend Lin operator+(Lin a, const Lin& b) { a += b; return a; }
    friend Lin operator-(Lin a, const Lin& b) { a -= b; return a; }
    friend Lin operator*(const Rat& c, Lin a)
    {
        if (c == 0)
            return Lin();
        for (auto& [k, v] : a.terms_)
            v *= c;
        return a;
    }
    friend Lin operator-(Lin a) { return Rat(-1) * std::move(a); }
    friend bool operator==(const Lin& a, const Lin& b) { return a.terms_ == b.terms_; }

    /* Push every key through f (linear extension). */
    template <class F>
    auto map(F&& f) const -> decltype(f(std::declval<K>()))
    {
        using Out = decltype(f(std::declval<K>()));
        Out out;
        for (const auto& [k, v] : terms_)
            out.add(f(k), v);
        return out;
    }

private:
    Terms terms_;
};

using Element = Lin<int>; // combination of basis labels of one graded space

/* Graded space with a named, ordered basis. Degrees are plain integers. */
class GradedBasis {
public:
    GradedBasis() = default;

    int add(const std::string& label, int degree)
    {
        if (index_.count(label))
            throw ValidationError("duplicate basis label '" + label + "'");
        index_[label] = static_cast<int>(labels_.size());
        labels_.push_back(label);
        degrees_.push_back(degree);
        return static_cast<int>(labels_.size()) - 1;
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    int degree(int i) const { return degrees_.at(i); }
    int index(const std::string& label) const
    {
        auto it = index_.find(label);
        if (it == index_.end())
            throw ValidationError("unknown basis label '" + label + "'");
        return it->second;
    }
    bool has(const std::string& label) const { return index_.count(label) != 0; }

    /* Common degree of a homogeneous element; throws on mixed degrees. */
    int element_degree(const Element& e) const;
    bool is_homogeneous(const Element& e) const;

private:
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::map<std::string, int> index_;
};

/* Koszul sign of rearranging homogeneous items. perm[k] = original index of
 * the item standing at position k after the rearrangement. */
Rat koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

/* Words in a tensor coalgebra; letters are basis ids of the underlying
 * space. The suspension shift is bookkept by the degree callback a word's
 * owner supplies, not by relabelling. */
using Word = std::vector<int>;
using WordPair = std::pair<Word, Word>;

inline Word concat(const Word& a, const Word& b)
{
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

/* Deconcatenation coproduct; n+1 terms, all coefficients +1. */
Lin<WordPair> deconcat(const Word& w);

int word_degree(const Word& w, const std::function<int(int)>& sdeg);

/* A truncated DG coalgebra presented on basis words.  Used for bar
 * constructions and their tensor products; forms and X complexes consume
 * this interface. */
struct CoalgebraSpec {
    std::string name;
    int truncation = 0; // L: letter budget per stored word

    Word counit_word;                          // coaugmentation basis word
    std::function<int(const Word&)> degree;    // total (shifted) degree
    std::function<Rat(const Word&)> counit;    // eta on basis words
    std::function<int(const Word&)> letters;   // size against the truncation
    std::function<Lin<WordPair>(const Word&)> coproduct;
    std::function<Lin<Word>(const Word&)> differential; // zero map allowed

    bool reduced(const Word& w) const { return counit(w) == 0; }

    /* Reduced coproduct: both factors in ker(eta). */
    Lin<WordPair> reduced_coproduct(const Word& w) const;
};

/* Tensor product of coalgebras. Pair words are encoded with a -1 separator
 * so every downstream map keeps a single key type. */
Word encode_pair(const Word& c, const Word& d);
WordPair decode_pair(const Word& e);

CoalgebraSpec tensor_coalgebra(const CoalgebraSpec& c, const CoalgebraSpec& d);

/* Cofree lifting property of T(V[1]): the unique coalgebra morphism with a
 * prescribed degree-one component m.  `m` takes a pair of words to an
 * element of V[1]; `sdeg` gives shifted letter degrees.  Output words longer
 * than `cap` letters raise TruncationOverflow. */
Lin<Word> cofree_lift_apply(
    const std::function<Element(const Word&, const Word&)>& m,
    const std::function<int(int)>& sdeg,
    const Word& alpha, const Word& beta, int cap);

} // namespace barx
