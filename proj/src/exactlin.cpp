#include "barx/exactlin.hpp"

#include <algorithm>

#include "barx/errors.hpp"

namespace barx {

void SparseMatrix::set(std::size_t r, std::size_t c, const Rat& v)
{
    if (r >= rows_ || c >= cols_)
        throw ValidationError("SparseMatrix::set index out of bounds");
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rat& v)
{
    if (r >= rows_ || c >= cols_)
        throw ValidationError("SparseMatrix::add index out of bounds");
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        if (v != 0)
            entries_[{r, c}] = v;
        return;
    }
    it->second += v;
    if (it->second == 0)
        entries_.erase(it);
}

Rat SparseMatrix::get(std::size_t r, std::size_t c) const
{
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rat(0) : it->second;
}

SparseMatrix SparseMatrix::transposed() const
{
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_)
        t.entries_[{rc.second, rc.first}] = v;
    return t;
}

SparseMatrix SparseMatrix::times(const SparseMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw ValidationError("SparseMatrix::times shape mismatch");
    SparseMatrix out(rows_, rhs.cols_);
    // row-major view of rhs
    std::map<std::size_t, std::vector<std::pair<std::size_t, Rat>>> rhs_rows;
    for (const auto& [rc, v] : rhs.entries_)
        rhs_rows[rc.first].push_back({rc.second, v});
    for (const auto& [rc, v] : entries_) {
        auto it = rhs_rows.find(rc.second);
        if (it == rhs_rows.end())
            continue;
        for (const auto& [c2, v2] : it->second)
            out.add(rc.first, c2, v * v2);
    }
    return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n)
{
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, Rat(1));
    return m;
}

namespace {

/* Working form for elimination: rows as sparse maps. */
struct ElimState {
    std::vector<std::map<std::size_t, Rat>> rows;

    explicit ElimState(const SparseMatrix& m) : rows(m.rows())
    {
        for (const auto& [rc, v] : m.entries())
            rows[rc.first][rc.second] = v;
    }
};

} // namespace

std::size_t rank(const SparseMatrix& m)
{
    ElimState st(m);
    std::vector<bool> row_done(st.rows.size(), false);
    std::size_t r = 0;

    for (;;) {
        // column occupancy among live rows
        std::map<std::size_t, std::size_t> col_count;
        for (std::size_t i = 0; i < st.rows.size(); ++i)
            if (!row_done[i])
                for (const auto& [c, v] : st.rows[i])
                    ++col_count[c];

        // Markowitz pivot: minimise (row_nnz-1)*(col_nnz-1)
        std::size_t best_row = SIZE_MAX, best_col = SIZE_MAX;
        std::size_t best_score = SIZE_MAX;
        for (std::size_t i = 0; i < st.rows.size(); ++i) {
            if (row_done[i] || st.rows[i].empty())
                continue;
            for (const auto& [c, v] : st.rows[i]) {
                std::size_t score = (st.rows[i].size() - 1) * (col_count[c] - 1);
                if (score < best_score) {
                    best_score = score;
                    best_row = i;
                    best_col = c;
                }
            }
        }
        if (best_row == SIZE_MAX)
            break;

        ++r;
        row_done[best_row] = true;
        const Rat pivot = st.rows[best_row][best_col];
        for (std::size_t i = 0; i < st.rows.size(); ++i) {
            if (row_done[i] || st.rows[i].empty())
                continue;
            auto it = st.rows[i].find(best_col);
            if (it == st.rows[i].end())
                continue;
            const Rat factor = it->second / pivot;
            for (const auto& [c, v] : st.rows[best_row]) {
                Rat& cell = st.rows[i][c];
                cell -= factor * v;
                if (cell == 0)
                    st.rows[i].erase(c);
            }
        }
    }
    return r;
}

std::size_t kernel_dim(const SparseMatrix& m)
{
    return m.cols() - rank(m);
}

std::vector<std::map<std::size_t, Rat>> kernel_basis(const SparseMatrix& m)
{
    // Row-reduce a dense-ish copy tracking pivot columns, then back-substitute.
    std::vector<std::map<std::size_t, Rat>> rows;
    rows.reserve(m.rows());
    {
        ElimState st(m);
        rows = std::move(st.rows);
    }
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> col_is_pivot(m.cols(), false);

    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t i = next; i < rows.size(); ++i)
            if (rows[i].count(c)) { sel = i; break; }
        if (sel == SIZE_MAX)
            continue;
        std::swap(rows[next], rows[sel]);
        const Rat pivot = rows[next][c];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next)
                continue;
            auto it = rows[i].find(c);
            if (it == rows[i].end())
                continue;
            const Rat factor = it->second / pivot;
            for (const auto& [cc, v] : rows[next]) {
                Rat& cell = rows[i][cc];
                cell -= factor * v;
                if (cell == 0)
                    rows[i].erase(cc);
            }
        }
        pivot_col_of_row.push_back(c);
        col_is_pivot[c] = true;
        ++next;
        if (next == rows.size())
            break;
    }

    std::vector<std::map<std::size_t, Rat>> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (col_is_pivot[c])
            continue;
        std::map<std::size_t, Rat> vec;
        vec[c] = Rat(1);
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) {
            auto it = rows[i].find(c);
            if (it == rows[i].end())
                continue;
            const Rat val = -it->second / rows[i].at(pivot_col_of_row[i]);
            if (val != 0)
                vec[pivot_col_of_row[i]] = val;
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

std::vector<std::size_t> pivot_columns(const SparseMatrix& m)
{
    std::vector<std::map<std::size_t, Rat>> rows;
    {
        ElimState st(m);
        rows = std::move(st.rows);
    }
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t i = next; i < rows.size(); ++i)
            if (rows[i].count(c)) { sel = i; break; }
        if (sel == SIZE_MAX)
            continue;
        std::swap(rows[next], rows[sel]);
        const Rat pivot = rows[next][c];
        for (std::size_t i = next + 1; i < rows.size(); ++i) {
            auto it = rows[i].find(c);
            if (it == rows[i].end())
                continue;
            const Rat factor = it->second / pivot;
            for (const auto& [cc, v] : rows[next]) {
                Rat& cell = rows[i][cc];
                cell -= factor * v;
                if (cell == 0)
                    rows[i].erase(cc);
            }
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

std::optional<std::map<std::size_t, Rat>> solve_linear(const SparseMatrix& a,
                                                       const std::map<std::size_t, Rat>& rhs)
{
    // eliminate on [A | rhs]
    std::vector<std::map<std::size_t, Rat>> rows;
    {
        ElimState st(a);
        rows = std::move(st.rows);
    }
    const std::size_t bcol = a.cols(); // augmented column
    for (const auto& [r, v] : rhs) {
        if (r >= a.rows())
            throw ValidationError("solve_linear: rhs index out of range");
        if (v != 0)
            rows[r][bcol] = v;
    }
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t next = 0;
    for (std::size_t c = 0; c < a.cols() && next < rows.size(); ++c) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t i = next; i < rows.size(); ++i)
            if (rows[i].count(c)) { sel = i; break; }
        if (sel == SIZE_MAX)
            continue;
        std::swap(rows[next], rows[sel]);
        const Rat pivot = rows[next][c];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next)
                continue;
            auto it = rows[i].find(c);
            if (it == rows[i].end())
                continue;
            const Rat factor = it->second / pivot;
            for (const auto& [cc, v] : rows[next]) {
                Rat& cell = rows[i][cc];
                cell -= factor * v;
                if (cell == 0)
                    rows[i].erase(cc);
            }
        }
        pivots.push_back({next, c});
        ++next;
    }
    // inconsistent if any remaining row is (0 ... 0 | nonzero)
    for (std::size_t i = next; i < rows.size(); ++i)
        if (!rows[i].empty())
            return std::nullopt;
    std::map<std::size_t, Rat> x;
    for (const auto& [r, c] : pivots) {
        auto it = rows[r].find(bcol);
        if (it != rows[r].end())
            x[c] = it->second / rows[r].at(c);
    }
    return x;
}

std::size_t homology_dims(const SparseMatrix& d_in, const SparseMatrix& d_out)
{
    if (d_in.rows() != d_out.cols())
        throw ValidationError("homology_dims: middle dimensions disagree");
    if (!d_out.times(d_in).is_zero())
        throw CompositionNonzero("homology_dims: d_out * d_in != 0");
    return kernel_dim(d_out) - rank(d_in);
}

} // namespace barx
