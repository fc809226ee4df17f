#include "barx/brace.hpp"

#include <algorithm>
#include <sstream>

namespace barx {

// ---------------------------------------------------------------------------
// FdAlgebra

FdAlgebra::FdAlgebra(std::string name, std::vector<std::string> basis_names,
                     std::vector<std::vector<Element>> mul, Element unit)
    : name_(std::move(name)),
      dim_(static_cast<int>(basis_names.size())),
      basis_names_(std::move(basis_names)),
      mul_(std::move(mul)),
      unit_(std::move(unit))
{
    if (static_cast<int>(mul_.size()) != dim_)
        throw ValidationError("mul table has wrong row count");
    for (const auto& row : mul_)
        if (static_cast<int>(row.size()) != dim_)
            throw ValidationError("mul table has wrong column count");
}

Element FdAlgebra::mul(const Element& a, const Element& b) const
{
    Element out;
    for (const auto& [i, ci] : a.terms())
        for (const auto& [j, cj] : b.terms())
            out.add(mul_.at(i).at(j), ci * cj);
    return out;
}

bool FdAlgebra::is_associative() const
{
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                Element lhs = mul(mul(i, j), Element(k));
                Element rhs = mul(Element(i), mul(j, k));
                if (!(lhs == rhs))
                    return false;
            }
    return true;
}

std::optional<int> FdAlgebra::unit_basis_index() const
{
    for (int i = 0; i < dim_; ++i)
        if (unit_ == Element(i))
            return i;
    return std::nullopt;
}

void FdAlgebra::validate() const
{
    if (dim_ <= 0)
        throw ValidationError("algebra must have positive dimension");
    for (int i = 0; i < dim_; ++i) {
        if (!(mul(unit_, Element(i)) == Element(i)))
            throw ValidationError("left unit law fails on basis vector " + basis_names_.at(i));
        if (!(mul(Element(i), unit_) == Element(i)))
            throw ValidationError("right unit law fails on basis vector " + basis_names_.at(i));
    }
}

FdAlgebra FdAlgebra::rationals()
{
    std::vector<std::vector<Element>> mul{{Element(0)}};
    return FdAlgebra("Q", {"1"}, std::move(mul), Element(0));
}

FdAlgebra FdAlgebra::dual_numbers()
{
    // basis 1, x with x^2 = 0
    std::vector<std::vector<Element>> mul(2, std::vector<Element>(2));
    mul[0][0] = Element(0);
    mul[0][1] = Element(1);
    mul[1][0] = Element(1);
    mul[1][1] = Element(); // zero
    return FdAlgebra("Q[x]/(x^2)", {"1", "x"}, std::move(mul), Element(0));
}

FdAlgebra FdAlgebra::two_points()
{
    // orthogonal idempotents e0, e1; unit = e0 + e1
    std::vector<std::vector<Element>> mul(2, std::vector<Element>(2));
    mul[0][0] = Element(0);
    mul[1][1] = Element(1);
    Element unit;
    unit.add(0, Rat(1));
    unit.add(1, Rat(1));
    return FdAlgebra("QxQ", {"e0", "e1"}, std::move(mul), std::move(unit));
}

FdAlgebra FdAlgebra::nonassociative_example()
{
    // unit laws hold but (x*x)*x != x*(x*x)
    std::vector<std::vector<Element>> mul(2, std::vector<Element>(2));
    mul[0][0] = Element(0);
    mul[0][1] = Element(1);
    mul[1][0] = Element(1);
    mul[1][1] = Element(0); // x*x = 1 makes it associative; use x*x = 1, then tweak
    // take x*x = 1 + x instead: ((x)(x))x = (1+x)x = x + 1 + x = 1 + 2x,
    // x((x)(x)) = x(1+x) = x + 1 + x = 1 + 2x ... still associative.
    // Use a genuinely broken table: x*x = 1, but x*1 = 1 kept lawful? That
    // breaks unit law. Break associativity with dim 2 and lawful unit:
    // impossible to break with commutative table? Use x*x = x and
    // check: (xx)x = xx = x, x(xx) = xx = x. Also associative.
    // So go to dim 3: basis 1, u, v with u*u = v, u*v = 1, rest zero-ish.
    std::vector<std::vector<Element>> m3(3, std::vector<Element>(3));
    for (int i = 0; i < 3; ++i) {
        m3[0][i] = Element(i);
        m3[i][0] = Element(i);
    }
    m3[1][1] = Element(2); // u*u = v
    m3[1][2] = Element(0); // u*v = 1
    m3[2][1] = Element();  // v*u = 0
    m3[2][2] = Element();
    // (u*u)*u = v*u = 0 while u*(u*u) = u*v = 1: not associative.
    return FdAlgebra("NonAssoc", {"1", "u", "v"}, std::move(m3), Element(0));
}

// ---------------------------------------------------------------------------
// CochainTable

CochainTable::CochainTable(int arity, int dim) : arity_(arity), dim_(dim)
{
    if (arity < 0 || dim <= 0)
        throw ValidationError("bad cochain shape");
    std::size_t count = 1;
    for (int i = 0; i < arity; ++i)
        count *= static_cast<std::size_t>(dim);
    values_.resize(count);
}

std::size_t CochainTable::rank_of(const std::vector<int>& inputs) const
{
    if (static_cast<int>(inputs.size()) != arity_)
        throw ValidationError("cochain applied to wrong number of inputs");
    std::size_t r = 0;
    for (int i : inputs) {
        if (i < 0 || i >= dim_)
            throw ValidationError("cochain input index out of range");
        r = r * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return r;
}

std::vector<int> CochainTable::tuple_of_rank(std::size_t rank) const
{
    std::vector<int> t(arity_);
    for (int i = arity_ - 1; i >= 0; --i) {
        t[i] = static_cast<int>(rank % dim_);
        rank /= dim_;
    }
    return t;
}

CochainTable CochainTable::basis_cochain(int dim, const std::vector<int>& inputs, int out)
{
    CochainTable t(static_cast<int>(inputs.size()), dim);
    t.value(inputs) = Element(out);
    return t;
}

CochainTable CochainTable::constant(int dim, const Element& value)
{
    CochainTable t(0, dim);
    t.values_[0] = value;
    return t;
}

CochainTable CochainTable::multiplication(const FdAlgebra& a)
{
    CochainTable t(2, a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            t.value({i, j}) = a.mul(i, j);
    return t;
}

const Element& CochainTable::value(const std::vector<int>& inputs) const
{
    return values_.at(rank_of(inputs));
}

Element& CochainTable::value(const std::vector<int>& inputs)
{
    return values_.at(rank_of(inputs));
}

Element CochainTable::evaluate(const std::vector<Element>& inputs) const
{
    if (static_cast<int>(inputs.size()) != arity_)
        throw ValidationError("cochain applied to wrong number of inputs");
    // multilinear expansion
    Element out;
    std::vector<int> tuple(arity_);
    std::function<void(int, const Rat&)> rec = [&](int slot, const Rat& coeff) {
        if (slot == arity_) {
            out.add(values_.at(rank_of(tuple)), coeff);
            return;
        }
        for (const auto& [i, c] : inputs[slot].terms()) {
            tuple[slot] = i;
            rec(slot + 1, coeff * c);
        }
    };
    rec(0, Rat(1));
    return out;
}

bool CochainTable::is_zero() const
{
    for (const auto& v : values_)
        if (!v.is_zero())
            return false;
    return true;
}

bool CochainTable::is_normalized(const FdAlgebra& a) const
{
    // substitute the unit into each slot in turn; all must vanish
    for (int slot = 0; slot < arity_; ++slot) {
        std::vector<Element> inputs(arity_);
        std::vector<int> tuple(arity_ - 1);
        std::function<bool(int)> rec = [&](int pos) -> bool {
            if (pos == arity_ - 1) {
                int k = 0;
                for (int s = 0; s < arity_; ++s)
                    inputs[s] = (s == slot) ? a.unit() : Element(tuple[k++]);
                CochainTable self = *this;
                return self.evaluate(inputs).is_zero();
            }
            for (int i = 0; i < dim_; ++i) {
                tuple[pos] = i;
                if (!rec(pos + 1))
                    return false;
            }
            return true;
        };
        if (!rec(0))
            return false;
    }
    return true;
}

CochainTable& CochainTable::operator+=(const CochainTable& o)
{
    if (arity_ != o.arity_ || dim_ != o.dim_)
        throw ValidationError("cochain shape mismatch in +=");
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] += o.values_[i];
    return *this;
}

CochainTable& CochainTable::scale(const Rat& c)
{
    for (auto& v : values_)
        v = c * v;
    return *this;
}

bool operator==(const CochainTable& a, const CochainTable& b)
{
    return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------
// hochschild_brace

CochainTable hochschild_brace(const FdAlgebra& a, const CochainTable& x,
                              const std::vector<CochainTable>& xs, int arity_hard_cap)
{
    const int d = a.dim();
    const int k = x.arity();
    const int m = static_cast<int>(xs.size());
    std::vector<int> widths(m);
    int width_sum = 0;
    for (int p = 0; p < m; ++p) {
        widths[p] = xs[p].arity();
        width_sum += widths[p];
    }
    const int n = k - m + width_sum;
    if (n > arity_hard_cap)
        throw ArityOverflow("hochschild_brace output arity " + std::to_string(n));
    if (n < 0 || m > k)
        return CochainTable(std::max(n, 0), d);

    CochainTable out(n, d);

    // enumerate insertion positions 0 <= i_1, i_{p+1} >= i_p + d_p, i_m + d_m <= n
    std::vector<int> pos(m);
    std::vector<int> tuple(n);
    std::function<void()> eval_tuple = [&]() {
        std::function<void(int, int, long)> rec = [&](int p, int min_pos, long sign_expo) {
            if (p == m) {
                // assemble outer argument list
                std::vector<Element> args;
                args.reserve(k);
                int j = 0;
                for (int q = 0; q <= m; ++q) {
                    int stop = (q < m) ? pos[q] : n;
                    for (; j < stop; ++j)
                        args.push_back(Element(tuple[j]));
                    if (q < m) {
                        std::vector<Element> block;
                        block.reserve(widths[q]);
                        for (int t = 0; t < widths[q]; ++t)
                            block.push_back(Element(tuple[j + t]));
                        j += widths[q];
                        args.push_back(xs[q].evaluate(block));
                    }
                }
                Rat sign = (sign_expo % 2 == 0) ? Rat(1) : Rat(-1);
                out.value(tuple).add(x.evaluate(args), sign);
                return;
            }
            for (int i = min_pos; i + widths[p] <= n; ++i) {
                pos[p] = i;
                long s = widths[p] - 1;
                rec(p + 1, i + widths[p], sign_expo + s * i);
            }
        };
        rec(0, 0, 0);
    };

    std::function<void(int)> tuples = [&](int slot) {
        if (slot == n) {
            eval_tuple();
            return;
        }
        for (int i = 0; i < d; ++i) {
            tuple[slot] = i;
            tuples(slot + 1);
        }
    };
    tuples(0);
    return out;
}

// ---------------------------------------------------------------------------
// CochainSpace

CochainSpace::CochainSpace(const FdAlgebra& a, int arity_cap)
    : alg_(a), arity_cap_(arity_cap)
{
    ids_by_arity_.resize(arity_cap + 1);
    for (int arity = 0; arity <= arity_cap; ++arity) {
        std::size_t tuples = 1;
        for (int i = 0; i < arity; ++i)
            tuples *= static_cast<std::size_t>(a.dim());
        for (std::size_t r = 0; r < tuples; ++r) {
            std::vector<int> in(arity);
            std::size_t rr = r;
            for (int i = arity - 1; i >= 0; --i) {
                in[i] = static_cast<int>(rr % a.dim());
                rr /= a.dim();
            }
            for (int out = 0; out < a.dim(); ++out) {
                std::ostringstream label;
                label << "f" << arity << "[";
                for (int i = 0; i < arity; ++i)
                    label << (i ? "," : "") << in[i];
                label << "]>" << out;
                int id = basis_.add(label.str(), arity);
                arity_of_id_.push_back(arity);
                inputs_of_id_.push_back(in);
                out_of_id_.push_back(out);
                ids_by_arity_[arity].push_back(id);
            }
        }
    }
}

int CochainSpace::id_of(int arity, const std::vector<int>& inputs, int out) const
{
    if (arity < 0 || arity > arity_cap_)
        throw ArityOverflow("cochain arity " + std::to_string(arity) + " outside interned range");
    std::size_t r = 0;
    for (int i : inputs)
        r = r * alg_.dim() + static_cast<std::size_t>(i);
    return ids_by_arity_.at(arity).at(r * alg_.dim() + out);
}

int CochainSpace::arity_of(int id) const { return arity_of_id_.at(id); }

CochainTable CochainSpace::table_of(int id) const
{
    return CochainTable::basis_cochain(alg_.dim(), inputs_of_id_.at(id), out_of_id_.at(id));
}

Element CochainSpace::intern(const CochainTable& t) const
{
    if (t.arity() > arity_cap_)
        throw ArityOverflow("cochain arity " + std::to_string(t.arity()) +
                            " exceeds interned cap " + std::to_string(arity_cap_));
    Element out;
    for (std::size_t r = 0; r < t.tuple_count(); ++r) {
        const Element& v = t.value_at(r);
        if (v.is_zero())
            continue;
        auto tuple = t.tuple_of_rank(r);
        for (const auto& [k, c] : v.terms())
            out.add(id_of(t.arity(), tuple, k), c);
    }
    return out;
}

int CochainSpace::algebra_id(int basis_index) const
{
    return ids_by_arity_.at(0).at(basis_index);
}

Element CochainSpace::algebra_element(const Element& a) const
{
    Element out;
    for (const auto& [i, c] : a.terms())
        out.add(algebra_id(i), c);
    return out;
}

Element CochainSpace::to_algebra(const Element& v0) const
{
    Element out;
    for (const auto& [id, c] : v0.terms()) {
        if (arity_of(id) != 0)
            throw ValidationError("to_algebra: element has positive arity terms");
        out.add(out_of_id_.at(id), c);
    }
    return out;
}

std::vector<int> CochainSpace::ids_of_arity(int arity) const
{
    return ids_by_arity_.at(arity);
}

// ---------------------------------------------------------------------------
// BraceStructure

BraceStructure::BraceStructure(std::shared_ptr<const CochainSpace> space)
    : space_(std::move(space))
{
}

int BraceStructure::element_sdeg(const Element& e) const
{
    if (e.is_zero())
        throw ValidationError("sdeg of zero element is undefined");
    int deg = 0;
    bool first = true;
    for (const auto& [id, c] : e.terms()) {
        if (first) {
            deg = sdeg(id);
            first = false;
        } else if (sdeg(id) != deg) {
            throw ValidationError("element has mixed degrees in brace evaluation");
        }
    }
    return deg;
}

Element BraceStructure::eval(int x, const std::vector<int>& xs) const
{
    {
        std::lock_guard<std::mutex> lk(memo_mutex_);
        auto it = memo_.find({x, xs});
        if (it != memo_.end())
            return it->second;
    }
    std::vector<CochainTable> tables;
    tables.reserve(xs.size());
    for (int id : xs)
        tables.push_back(space_->table_of(id));
    Element result = space_->intern(hochschild_brace(space_->algebra(), space_->table_of(x), tables));
    {
        std::lock_guard<std::mutex> lk(memo_mutex_);
        memo_[{x, xs}] = result;
    }
    return result;
}

Element BraceStructure::eval(const Element& x, const std::vector<Element>& xs) const
{
    Element out;
    std::vector<int> ids(xs.size());
    std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t slot, const Rat& coeff) {
        if (slot == xs.size()) {
            for (const auto& [xid, xc] : x.terms())
                out.add(eval(xid, ids), coeff * xc);
            return;
        }
        for (const auto& [id, c] : xs[slot].terms()) {
            ids[slot] = id;
            rec(slot + 1, coeff * c);
        }
    };
    rec(0, Rat(1));
    return out;
}

Element BraceStructure::lie_bracket(const Element& x, const Element& y) const
{
    if (x.is_zero() || y.is_zero())
        return Element();
    long sx = element_sdeg(x), sy = element_sdeg(y);
    Rat sign = ((sx * sy) % 2 == 0) ? Rat(1) : Rat(-1);
    return eval(x, {y}) - sign * eval(y, {x});
}

Element BraceStructure::pre_jacobi_residual(const Element& x, const std::vector<Element>& xs,
                                            const std::vector<Element>& ys) const
{
    Element lhs = eval(eval(x, xs), ys);

    const int m = static_cast<int>(xs.size());
    const int n = static_cast<int>(ys.size());
    std::vector<long> sx(m), sy(n);
    for (int p = 0; p < m; ++p)
        sx[p] = xs[p].is_zero() ? 0 : element_sdeg(xs[p]);
    for (int q = 0; q < n; ++q)
        sy[q] = ys[q].is_zero() ? 0 : element_sdeg(ys[q]);

    Element rhs;
    // choose 0 <= i_1 <= j_1 <= ... <= i_m <= j_m <= n
    std::vector<int> iv(m), jv(m);
    std::function<void(int, int)> rec = [&](int p, int from) {
        if (p == m) {
            std::vector<Element> args;
            int q = 0;
            for (int blk = 0; blk <= m; ++blk) {
                int stop = (blk < m) ? iv[blk] : n;
                for (; q < stop; ++q)
                    args.push_back(ys[q]);
                if (blk < m) {
                    std::vector<Element> inner(ys.begin() + iv[blk], ys.begin() + jv[blk]);
                    args.push_back(eval(xs[blk], inner));
                    q = jv[blk];
                }
            }
            long expo = 0;
            for (int p2 = 0; p2 < m; ++p2) {
                long acc = 0;
                for (int q2 = 0; q2 < iv[p2]; ++q2)
                    acc += sy[q2];
                expo += sx[p2] * acc;
            }
            Rat sign = (expo % 2 == 0) ? Rat(1) : Rat(-1);
            rhs.add(eval(x, args), sign);
            return;
        }
        for (int i = from; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                iv[p] = i;
                jv[p] = j;
                rec(p + 1, j);
            }
    };
    rec(0, 0);
    return lhs - rhs;
}

// ---------------------------------------------------------------------------
// DgCochainAlgebra

DgCochainAlgebra::DgCochainAlgebra(std::shared_ptr<const BraceStructure> braces, Element m)
    : braces_(std::move(braces)), mc_(std::move(m))
{
    if (mc_.is_zero())
        return; // degenerate structure: zero differential and product
    if (braces_->element_sdeg(mc_) != 1)
        throw ValidationError("Maurer-Cartan element must have shifted degree 1");
    Element sq = braces_->eval(mc_, {mc_});
    if (!sq.is_zero())
        throw MaurerCartanViolated("m{m} != 0; table is not associative");
}

Element DgCochainAlgebra::differential(const Element& x) const
{
    // (-1)^{|x|} [m, x] computed per homogeneous term
    Element out;
    for (const auto& [id, c] : x.terms()) {
        Element xi(id, c);
        long s = braces_->sdeg(id);
        Rat sign = (s % 2 == 0) ? Rat(1) : Rat(-1);
        out += sign * braces_->eval(mc_, {xi}) - braces_->eval(xi, {mc_});
    }
    return out;
}

Element DgCochainAlgebra::product(const Element& x, const Element& y) const
{
    return braces_->eval(mc_, {x, y});
}

int DgCochainAlgebra::vdeg(const Element& x) const
{
    return braces_->element_sdeg(x) + 1;
}

// ---------------------------------------------------------------------------
// Homotopy-G axiom residuals

Element hga_distrib_residual(const DgCochainAlgebra& v, const Element& x1, const Element& x2,
                             const std::vector<Element>& ys)
{
    const BraceStructure& b = v.braces();
    const int n = static_cast<int>(ys.size());
    Element lhs = b.eval(v.product(x1, x2), ys);

    long s2 = b.element_sdeg(x2);
    Element rhs;
    for (int k = 0; k <= n; ++k) {
        long acc = 0;
        for (int j = 0; j < k; ++j)
            acc += b.element_sdeg(ys[j]);
        Rat sign = ((s2 * acc) % 2 == 0) ? Rat(1) : Rat(-1);
        std::vector<Element> left(ys.begin(), ys.begin() + k);
        std::vector<Element> right(ys.begin() + k, ys.end());
        rhs.add(v.product(b.eval(x1, left), b.eval(x2, right)), sign);
    }
    return lhs - rhs;
}

/* Homotopy Leibniz rule.  The signs below are the degree-one component of the
 * bar Leibniz rule for the induced structure (differential (-1)^{|x|}[m,x],
 * product m{x,y}); that product is the classical cup product only up to the
 * twist (-1)^{p(q-1)}, which shifts several signs relative to naive cup
 * conventions.  k = number of arguments, s = shifted degree, |.| = s + 1. */
Element hga_leibniz_residual(const DgCochainAlgebra& v, const Element& x,
                             const std::vector<Element>& xs)
{
    const BraceStructure& b = v.braces();
    const int k = static_cast<int>(xs.size());
    if (k < 1)
        throw ValidationError("homotopy Leibniz residual needs at least one argument");

    long sx = b.element_sdeg(x);
    std::vector<long> sy(k);
    long S = 0;
    for (int i = 0; i < k; ++i) {
        sy[i] = xs[i].is_zero() ? 0 : b.element_sdeg(xs[i]);
        S += sy[i];
    }
    auto sgn = [](long e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); };

    Element lhs = v.differential(b.eval(x, xs));
    lhs -= sgn(S) * b.eval(v.differential(x), xs);
    for (int i = 0; i < k; ++i) {
        long suffix = 0;
        for (int q = i + 1; q < k; ++q)
            suffix += sy[q];
        std::vector<Element> args = xs;
        args[i] = v.differential(xs[i]);
        if (!args[i].is_zero())
            lhs -= sgn(suffix) * b.eval(x, args);
    }

    Element rhs;
    {
        std::vector<Element> front(xs.begin(), xs.end() - 1);
        rhs += sgn(1 + sx + S) * v.product(b.eval(x, front), xs.back());
    }
    {
        std::vector<Element> rest(xs.begin() + 1, xs.end());
        rhs += sgn(1 + sx + S + sx * sy[0]) * v.product(xs[0], b.eval(x, rest));
    }
    for (int i = 0; i + 1 < k; ++i) {
        long prefix = 0;
        for (int q = 0; q < i; ++q)
            prefix += sy[q];
        std::vector<Element> args;
        args.reserve(k - 1);
        for (int q = 0; q < k; ++q) {
            if (q == i) {
                args.push_back(v.product(xs[q], xs[q + 1]));
                ++q;
            } else {
                args.push_back(xs[q]);
            }
        }
        rhs += sgn(S + prefix) * b.eval(x, args);
    }
    return lhs - rhs;
}

// ---------------------------------------------------------------------------
// cup product on words

Lin<Word> cup_words(const BraceStructure& b, const Word& alpha, const Word& beta, int cap)
{
    const int m = static_cast<int>(alpha.size());
    const int n = static_cast<int>(beta.size());
    std::vector<long> sx(m), sy(n);
    for (int p = 0; p < m; ++p)
        sx[p] = b.sdeg(alpha[p]);
    for (int q = 0; q < n; ++q)
        sy[q] = b.sdeg(beta[q]);

    Lin<Word> out;
    std::vector<int> iv(m), jv(m);
    std::function<void(int, int)> rec = [&](int p, int from) {
        if (p == m) {
            // word: y_1..y_{i_1}, x_1{...}, ..., y_n with multilinear blocks
            long expo = 0;
            for (int p2 = 0; p2 < m; ++p2) {
                long acc = 0;
                for (int q2 = 0; q2 < iv[p2]; ++q2)
                    acc += sy[q2];
                expo += sx[p2] * acc;
            }
            Rat sign = (expo % 2 == 0) ? Rat(1) : Rat(-1);

            int out_len = n + m;
            for (int p2 = 0; p2 < m; ++p2)
                out_len -= (jv[p2] - iv[p2]);
            if (out_len > cap)
                throw TruncationOverflow("cup_words output length exceeds cap");

            Lin<Word> acc(Word{}, sign);
            int q = 0;
            for (int blk = 0; blk <= m; ++blk) {
                int stop = (blk < m) ? iv[blk] : n;
                for (; q < stop; ++q) {
                    Lin<Word> next;
                    for (const auto& [w, c] : acc.terms()) {
                        Word nw = w;
                        nw.push_back(beta[q]);
                        next.add(nw, c);
                    }
                    acc = std::move(next);
                }
                if (blk < m) {
                    std::vector<int> inner(beta.begin() + iv[blk], beta.begin() + jv[blk]);
                    Element letter = b.eval(alpha[blk], inner);
                    q = jv[blk];
                    Lin<Word> next;
                    for (const auto& [w, c] : acc.terms())
                        for (const auto& [l, cl] : letter.terms()) {
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
        for (int i = from; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                iv[p] = i;
                jv[p] = j;
                rec(p + 1, j);
            }
    };
    rec(0, 0);
    return out;
}

Element cup_generator(const BraceStructure& b, const Word& alpha, const Word& beta)
{
    if (alpha.empty() && beta.size() == 1)
        return Element(beta[0]);
    if (alpha.size() == 1 && beta.empty())
        return Element(alpha[0]);
    if (alpha.size() == 1 && !beta.empty()) {
        std::vector<int> inner(beta.begin(), beta.end());
        return b.eval(alpha[0], inner);
    }
    return Element();
}

} // namespace barx
