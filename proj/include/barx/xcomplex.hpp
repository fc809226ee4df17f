#pragma once

#include <tuple>

#include "barx/barcx.hpp"
#include "barx/exactlin.hpp"
#include "barx/graded.hpp"

namespace barx {

/* Codifferential forms over a truncated DG coalgebra C, in degrees 0..2:
 * pairs / triples of words with the tail slots reduced (non-counit). */
struct F1 {
    Word a, b;
    friend bool operator<(const F1& x, const F1& y)
    {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    }
    friend bool operator==(const F1& x, const F1& y) { return x.a == y.a && x.b == y.b; }
};

struct F2 {
    Word a, b, c;
    friend bool operator<(const F2& x, const F2& y)
    {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    }
    friend bool operator==(const F2& x, const F2& y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

struct F3 {
    Word a, b, c, d;
    friend bool operator<(const F3& x, const F3& y)
    {
        return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
    }
    friend bool operator==(const F3& x, const F3& y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

/* head element of the underlying space tensored with a word: the concrete
 * model of the cocommutator part of 1-forms over a bar coalgebra. */
struct NatKey {
    int head;
    Word tail;
    friend bool operator<(const NatKey& x, const NatKey& y)
    {
        return std::tie(x.head, x.tail) < std::tie(y.head, y.tail);
    }
    friend bool operator==(const NatKey& x, const NatKey& y)
    {
        return x.head == y.head && x.tail == y.tail;
    }
};

using Form0 = Lin<Word>;
using Form1 = Lin<F1>;
using Form2 = Lin<F2>;
using Form3 = Lin<F3>;
using NatForm = Lin<NatKey>;

/* Form operators over a coalgebra.  b raises the form degree (coHochschild
 * boundary: splits plus a signed rotation of the first slot), d lowers it
 * (counit on the first slot, promote the next), and the internal lift
 * extends C's own differential slotwise.  Signs follow the same shifted
 * Koszul bookkeeping as the bar differentials; the identity suite pins
 * them. */
class FormOps {
public:
    explicit FormOps(CoalgebraSpec c);

    const CoalgebraSpec& coalgebra() const { return c_; }

    Form1 b0(const Word& w) const;
    Form2 b1(const F1& k) const;
    Form3 b2(const F2& k) const;
    Form0 d1(const F1& k) const;
    Form1 d2(const F2& k) const;
    Form2 d3(const F3& k) const;

    Form0 lift0(const Word& w) const; // internal differential on 0-forms
    Form1 lift1(const F1& k) const;
    Form2 lift2(const F2& k) const;

    Form1 b0(const Form0& x) const;
    Form2 b1(const Form1& x) const;
    Form3 b2(const Form2& x) const;
    Form0 d1(const Form1& x) const;
    Form1 d2(const Form2& x) const;
    Form2 d3(const Form3& x) const;
    Form0 lift0(const Form0& x) const;
    Form1 lift1(const Form1& x) const;
    Form2 lift2(const Form2& x) const;

    /* Karoubi-type rotation operator on 2-forms: 1 - (d b + b d). */
    Form2 kappa2(const F2& k) const;
    Form2 kappa2(const Form2& x) const;

private:
    CoalgebraSpec c_;
    Rat sgn(long e) const { return (((e % 2) + 2) % 2 == 0) ? Rat(1) : Rat(-1); }
};

/* Projection of 2-forms onto the cocommutator part: the spectral projector
 * of the rotation operator at eigenvalue 1.  kappa2 satisfies
 * (k^3 - 1)(k^2 - 1) = 0, so the projector is the interpolation polynomial
 * (x+1)(x^2+x+1)(5-3x)/12 evaluated at kappa2. */
Form2 project_natural_two(const FormOps& ops, const Form2& x);

/* X machinery over a bar coalgebra: the cocommutator model V x BV, the left
 * inverse theta, the connection nabla, the two-level supercomplexes with
 * their differentials, and the homotopy retraction of the second level onto
 * the first. */
struct XChain {
    Form0 even;  // element of C
    NatForm nat; // element of the cocommutator model
    bool is_zero() const { return even.is_zero() && nat.is_zero(); }
    friend bool operator==(const XChain& x, const XChain& y)
    {
        return x.even == y.even && x.nat == y.nat;
    }
    XChain& operator+=(const XChain& o)
    {
        even += o.even;
        nat += o.nat;
        return *this;
    }
    friend XChain operator-(XChain a, const XChain& b)
    {
        a.even -= b.even;
        a.nat -= b.nat;
        return a;
    }
    friend XChain operator*(const Rat& c, XChain a)
    {
        a.even = c * a.even;
        a.nat = c * a.nat;
        return a;
    }
};

struct X2Chain {
    Form0 zero; // C summand of the even part
    Form2 two;  // cocommutator 2-form summand of the even part
    Form1 one;  // normalized 1-forms (odd part)
    bool is_zero() const { return zero.is_zero() && two.is_zero() && one.is_zero(); }
    friend bool operator==(const X2Chain& x, const X2Chain& y)
    {
        return x.zero == y.zero && x.two == y.two && x.one == y.one;
    }
    X2Chain& operator+=(const X2Chain& o)
    {
        zero += o.zero;
        two += o.two;
        one += o.one;
        return *this;
    }
    friend X2Chain operator-(X2Chain a, const X2Chain& b)
    {
        a.zero -= b.zero;
        a.two -= b.two;
        a.one -= b.one;
        return a;
    }
    friend X2Chain operator*(const Rat& c, X2Chain a)
    {
        a.zero = c * a.zero;
        a.two = c * a.two;
        a.one = c * a.one;
        return a;
    }
};

/* Which differential components to use: the Hochschild-type part only, the
 * full coproduct-driven part (b + dN), or everything including the lift of
 * the coalgebra differential. */
enum class DiffParts { BOnly, D1, D1D2 };

class BarXOps {
public:
    explicit BarXOps(const BarCoalgebra& bar);

    const FormOps& forms() const { return ops_; }
    const CoalgebraSpec& coalgebra() const { return ops_.coalgebra(); }
    const BarCoalgebra& bar() const { return *bar_; }

    // cocommutator model
    Form1 iota_nat(const NatKey& k) const;
    Form1 iota_nat(const NatForm& x) const;
    NatForm theta(const F1& k) const;
    NatForm theta(const Form1& x) const;
    Form1 nabla(const F2& k) const;
    Form1 nabla(const Form2& x) const;

    /* The split presentation u (x) letter (x) w of a 1-form over an algebra
     * bar, expanded into the word-pair model.  theta picks out exactly
     * eta(u) letter (x) w from it. */
    Form1 one_form_from_split(const Word& u, int letter, const Word& w) const;

    // parities of basis chains (total super degree mod 2)
    int parity_even_word(const Word& w) const;
    int parity_nat(const NatKey& k) const;
    int parity_x2_zero(const Word& w) const { return parity_even_word(w); }
    int parity_x2_two(const F2& k) const;
    int parity_x2_one(const F1& k) const;

    // differentials
    XChain dx(const XChain& x, DiffParts parts = DiffParts::D1D2) const;
    X2Chain dx2(const X2Chain& x, DiffParts parts = DiffParts::D1D2) const;

    // inclusion and retraction data
    X2Chain include(const XChain& x) const; // the natural inclusion
    XChain r_prime(const X2Chain& x) const;
    X2Chain h_prime(const X2Chain& x) const;
    XChain r_mid(const X2Chain& x) const; // retraction for the b + dN level
    X2Chain h_mid(const X2Chain& x) const;
    XChain retract(const X2Chain& x) const; // full retraction R
    X2Chain homotopy(const X2Chain& x) const; // full homotopy H

    // window bases of the second-level carrier (over the bar alphabet)
    std::vector<Word> basis_words(int max_letters) const;
    std::vector<NatForm> basis_nat(int max_letters) const;
    std::vector<Form1> basis_normalized_one(int max_letters) const;
    std::vector<Form2> basis_natural_two(int max_letters) const;
    std::vector<XChain> basis_x(int max_letters) const;
    std::vector<X2Chain> basis_x2(int max_letters) const;

private:
    const BarCoalgebra* bar_;
    FormOps ops_;
};

/* Special deformation retract verification: r i = 1, h i = 0,
 * i r = 1 + d h + h d on the supplied basis chains. */
struct SdrReport {
    bool ok = true;
    std::string witness;
};

SdrReport verify_sdr(const BarXOps& x, DiffParts parts, int max_letters);

/* The two connection identities behind the first retraction. */
SdrReport verify_connection_identities(const BarXOps& x, int max_letters);

} // namespace barx
