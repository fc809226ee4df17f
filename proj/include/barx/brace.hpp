#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "barx/graded.hpp"

namespace barx {

/* Finite-dimensional algebra given by structure constants on a named basis.
 * Degrees are concentrated in 0; associativity is a checked property, not an
 * assumption (the brace identities hold without it). */
class FdAlgebra {
public:
    FdAlgebra(std::string name, std::vector<std::string> basis_names,
              std::vector<std::vector<Element>> mul, Element unit);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const std::string& basis_name(int i) const { return basis_names_.at(i); }
    const Element& unit() const { return unit_; }

    const Element& mul(int i, int j) const { return mul_.at(i).at(j); }
    Element mul(const Element& a, const Element& b) const;

    bool is_associative() const;
    /* Index of the basis vector equal to the unit, if there is one. */
    std::optional<int> unit_basis_index() const;

    /* Unit laws must hold; throws ValidationError otherwise. */
    void validate() const;

    static FdAlgebra rationals();
    static FdAlgebra dual_numbers();  // k[x]/(x^2)
    static FdAlgebra two_points();    // k x k
    static FdAlgebra nonassociative_example(); // deliberately broken table

private:
    std::string name_;
    int dim_;
    std::vector<std::string> basis_names_;
    std::vector<std::vector<Element>> mul_;
    Element unit_;
};

/* Hochschild n-cochain stored densely on basis tuples. */
class CochainTable {
public:
    CochainTable() = default;
    CochainTable(int arity, int dim);

    int arity() const { return arity_; }
    int dim() const { return dim_; }

    /* Basis cochain: sends `inputs` to basis vector `out`, all else to 0. */
    static CochainTable basis_cochain(int dim, const std::vector<int>& inputs, int out);
    /* Arity-0 cochain wrapping an algebra element. */
    static CochainTable constant(int dim, const Element& value);
    /* The multiplication cochain of an algebra. */
    static CochainTable multiplication(const FdAlgebra& a);

    const Element& value(const std::vector<int>& inputs) const;
    Element& value(const std::vector<int>& inputs);
    Element evaluate(const std::vector<Element>& inputs) const;

    bool is_zero() const;
    bool is_normalized(const FdAlgebra& a) const; // 0 whenever an input is the unit

    CochainTable& operator+=(const CochainTable& o);
    CochainTable& scale(const Rat& c);
    friend bool operator==(const CochainTable& a, const CochainTable& b);

    std::size_t tuple_count() const { return values_.size(); }
    const Element& value_at(std::size_t rank) const { return values_.at(rank); }
    Element& value_at(std::size_t rank) { return values_.at(rank); }
    std::vector<int> tuple_of_rank(std::size_t rank) const;

private:
    int arity_ = 0;
    int dim_ = 0;
    std::vector<Element> values_;
    std::size_t rank_of(const std::vector<int>& inputs) const;
};

/* x{x_1,...,x_m} for Hochschild cochains: signed sum over non-overlapping
 * insertions; degrees in the shifted grading are arity-1. */
CochainTable hochschild_brace(const FdAlgebra& a, const CochainTable& x,
                              const std::vector<CochainTable>& xs,
                              int arity_hard_cap = 12);

/* Basis of the truncated deformation complex, interned as one graded space.
 * Arity-0 labels double as the algebra itself, so bar words over the degree
 * zero part are just words over A. */
class CochainSpace {
public:
    CochainSpace(const FdAlgebra& a, int arity_cap);

    const FdAlgebra& algebra() const { return alg_; }
    int arity_cap() const { return arity_cap_; }
    const GradedBasis& basis() const { return basis_; }

    int id_of(int arity, const std::vector<int>& inputs, int out) const;
    int arity_of(int id) const;        // degree in V
    int sdeg(int id) const { return arity_of(id) - 1; } // degree in V[1]
    CochainTable table_of(int id) const;
    Element intern(const CochainTable& t) const; // throws ArityOverflow past cap

    int algebra_id(int basis_index) const; // arity-0 label of e_i
    Element algebra_element(const Element& a) const; // A -> V_0 labels
    Element to_algebra(const Element& v0) const;     // V_0 labels -> A

    /* ids of every basis cochain of the given arity */
    std::vector<int> ids_of_arity(int arity) const;

private:
    FdAlgebra alg_; // owned copy: ids index into its basis
    int arity_cap_;
    GradedBasis basis_;
    std::vector<int> arity_of_id_;
    std::vector<std::vector<int>> inputs_of_id_;
    std::vector<int> out_of_id_;
    std::vector<std::vector<int>> ids_by_arity_;
};

/* Brace algebra structure presented on an interned basis; evaluations are
 * memoised since the identity checkers revisit the same instances often. */
class BraceStructure {
public:
    BraceStructure(std::shared_ptr<const CochainSpace> space);

    const CochainSpace& space() const { return *space_; }
    int sdeg(int id) const { return space_->sdeg(id); }
    int element_sdeg(const Element& e) const;

    Element eval(int x, const std::vector<int>& xs) const;
    Element eval(const Element& x, const std::vector<Element>& xs) const;

    /* [x,y] = x{y} - (-1)^{|x||y|} y{x} in the shifted grading. */
    Element lie_bracket(const Element& x, const Element& y) const;

    /* LHS - RHS of the higher pre-Jacobi identity at one instance. */
    Element pre_jacobi_residual(const Element& x, const std::vector<Element>& xs,
                                const std::vector<Element>& ys) const;

private:
    std::shared_ptr<const CochainSpace> space_;
    mutable std::map<std::pair<int, std::vector<int>>, Element> memo_;
    mutable std::mutex memo_mutex_;
};

/* DG algebra structure induced by a degree-one square-zero element:
 * differential (-1)^{|x|} [m,x] and product m{x,y}.  For the deformation
 * complex this is the Hochschild coboundary and the cup product. */
class DgCochainAlgebra {
public:
    DgCochainAlgebra(std::shared_ptr<const BraceStructure> braces, Element m);

    const BraceStructure& braces() const { return *braces_; }
    const CochainSpace& space() const { return braces_->space(); }
    const Element& maurer_cartan() const { return mc_; }

    Element differential(const Element& x) const;
    Element product(const Element& x, const Element& y) const;
    int vdeg(const Element& x) const; // degree in V (arity)

private:
    std::shared_ptr<const BraceStructure> braces_;
    Element mc_;
};

/* Homotopy-Gerstenhaber axiom residuals (distributivity over the product and
 * the homotopy Leibniz rule) at a single instance; both vanish for
 * structures built by DgCochainAlgebra. */
Element hga_distrib_residual(const DgCochainAlgebra& v, const Element& x1, const Element& x2,
                             const std::vector<Element>& ys);
Element hga_leibniz_residual(const DgCochainAlgebra& v, const Element& x,
                             const std::vector<Element>& xs);

/* Explicit coalgebra-map product on words (the closed interleaving formula);
 * agrees with the cofree lift of its degree-one component. */
Lin<Word> cup_words(const BraceStructure& b, const Word& alpha, const Word& beta, int cap);

/* Degree-one component of the cup coalgebra map, for cofree_lift_apply. */
Element cup_generator(const BraceStructure& b, const Word& alpha, const Word& beta);

} // namespace barx
