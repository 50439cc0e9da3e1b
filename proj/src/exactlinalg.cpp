#include "cubcoh/exactlinalg.hpp"

#include "cubcoh/core.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

namespace cubcoh
{

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != rows_ * cols_)
        throw Error("matrix data has " + std::to_string(data_.size()) + " entries, expected "
                    + std::to_string(rows_ * cols_));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (auto const& r : rows)
    {
        if (r.size() != cols_)
            throw Error("ragged matrix literal");
        for (long long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<IntVector const> columns)
{
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
    {
        if (columns[c].size() != rows)
            throw Error("column " + std::to_string(c) + " has length " + std::to_string(columns[c].size())
                        + ", expected " + std::to_string(rows));
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

IntVector IntMatrix::row(std::size_t r) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Integer const& v) { return v.is_zero(); });
}

IntMatrix IntMatrix::operator*(IntMatrix const& other) const
{
    if (cols_ != other.rows_)
        throw Error("matrix product dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k)
        {
            Integer const& a = (*this)(r, k);
            if (a.is_zero())
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                out(r, c) += a * other(k, c);
        }
    return out;
}

IntVector IntMatrix::operator*(std::span<Integer const> v) const
{
    if (v.size() != cols_)
        throw Error("matrix-vector dimension mismatch");
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += (*this)(r, c) * v[c];
    return out;
}

std::string IntMatrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r)
    {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << (*this)(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

// --- Smith normal form ------------------------------------------------------

namespace
{

/// Working state: S with the four transforms kept in sync.
class SmithWorker
{
public:
    explicit SmithWorker(IntMatrix const& a)
        : s_(a),
          u_(IntMatrix::identity(a.rows())),
          u_inv_(IntMatrix::identity(a.rows())),
          v_(IntMatrix::identity(a.cols())),
          v_inv_(IntMatrix::identity(a.cols()))
    {
    }

    SmithForm run()
    {
        std::size_t const limit = std::min(s_.rows(), s_.cols());
        std::vector<Integer> diag;
        for (std::size_t t = 0; t < limit; ++t)
        {
            if (!move_smallest_to(t, t, t))
                break;
            while (true)
            {
                if (clear_column(t) && clear_row(t))
                {
                    auto bad = find_nondivisible(t);
                    if (!bad)
                        break;
                    // Pull the offending row into the pivot row; the next round
                    // of clearing then produces a smaller pivot.
                    add_rows(t, *bad, 1);
                }
            }
            if (s_(t, t) < 0)
                negate_row(t);
            diag.push_back(s_(t, t));
        }

        SmithForm f;
        f.S = std::move(s_);
        f.U = std::move(u_);
        f.U_inv = std::move(u_inv_);
        f.V = std::move(v_);
        f.V_inv = std::move(v_inv_);
        f.diag = std::move(diag);
        return f;
    }

private:
    // Brings the smallest nonzero |entry| of the submatrix starting at
    // (row0, col0) to position (t, t).
    bool move_smallest_to(std::size_t t, std::size_t row0, std::size_t col0)
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_abs;
        for (std::size_t r = row0; r < s_.rows(); ++r)
            for (std::size_t c = col0; c < s_.cols(); ++c)
            {
                Integer const& e = s_(r, c);
                if (e.is_zero())
                    continue;
                Integer const m = abs(e);
                if (!best || m < best_abs)
                {
                    best = {r, c};
                    best_abs = m;
                }
            }
        if (!best)
            return false;
        swap_rows(t, best->first);
        swap_cols(t, best->second);
        return true;
    }

    // Smallest nonzero entry of column t at or below the pivot, then of row t.
    bool repivot_in_column(std::size_t t)
    {
        std::size_t best = t;
        for (std::size_t r = t + 1; r < s_.rows(); ++r)
            if (!s_(r, t).is_zero() && (s_(best, t).is_zero() || abs(s_(r, t)) < abs(s_(best, t))))
                best = r;
        if (best == t)
            return false;
        swap_rows(t, best);
        return true;
    }

    bool repivot_in_row(std::size_t t)
    {
        std::size_t best = t;
        for (std::size_t c = t + 1; c < s_.cols(); ++c)
            if (!s_(t, c).is_zero() && (s_(t, best).is_zero() || abs(s_(t, c)) < abs(s_(t, best))))
                best = c;
        if (best == t)
            return false;
        swap_cols(t, best);
        return true;
    }

    // Returns true once every entry below the pivot is zero.
    bool clear_column(std::size_t t)
    {
        while (true)
        {
            bool remainder = false;
            for (std::size_t r = t + 1; r < s_.rows(); ++r)
            {
                if (s_(r, t).is_zero())
                    continue;
                Integer const q = s_(r, t) / s_(t, t);
                if (!q.is_zero())
                    add_rows(r, t, -q);
                if (!s_(r, t).is_zero())
                    remainder = true;
            }
            if (!remainder)
                return true;
            repivot_in_column(t);
        }
    }

    // Returns true if the row was already clear; false means the column may
    // have been disturbed and must be cleared again.
    bool clear_row(std::size_t t)
    {
        bool untouched_column = true;
        while (true)
        {
            bool remainder = false;
            for (std::size_t c = t + 1; c < s_.cols(); ++c)
            {
                if (s_(t, c).is_zero())
                    continue;
                Integer const q = s_(t, c) / s_(t, t);
                if (!q.is_zero())
                    add_cols(c, t, -q);
                if (!s_(t, c).is_zero())
                    remainder = true;
            }
            if (!remainder)
                return untouched_column;
            if (repivot_in_row(t))
                untouched_column = false;
        }
    }

    std::optional<std::size_t> find_nondivisible(std::size_t t) const
    {
        Integer const& d = s_(t, t);
        for (std::size_t r = t + 1; r < s_.rows(); ++r)
            for (std::size_t c = t + 1; c < s_.cols(); ++c)
                if (!(s_(r, c) % d).is_zero())
                    return r;
        return std::nullopt;
    }

    // row_target += q * row_src
    void add_rows(std::size_t target, std::size_t src, Integer const& q)
    {
        for (std::size_t c = 0; c < s_.cols(); ++c)
            if (!s_(src, c).is_zero())
                s_(target, c) += q * s_(src, c);
        for (std::size_t c = 0; c < u_.cols(); ++c)
            if (!u_(src, c).is_zero())
                u_(target, c) += q * u_(src, c);
        for (std::size_t r = 0; r < u_inv_.rows(); ++r)
            if (!u_inv_(r, target).is_zero())
                u_inv_(r, src) -= q * u_inv_(r, target);
    }

    // col_target += q * col_src
    void add_cols(std::size_t target, std::size_t src, Integer const& q)
    {
        for (std::size_t r = 0; r < s_.rows(); ++r)
            if (!s_(r, src).is_zero())
                s_(r, target) += q * s_(r, src);
        for (std::size_t r = 0; r < v_.rows(); ++r)
            if (!v_(r, src).is_zero())
                v_(r, target) += q * v_(r, src);
        for (std::size_t c = 0; c < v_inv_.cols(); ++c)
            if (!v_inv_(target, c).is_zero())
                v_inv_(src, c) -= q * v_inv_(target, c);
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t c = 0; c < s_.cols(); ++c)
            std::swap(s_(a, c), s_(b, c));
        for (std::size_t c = 0; c < u_.cols(); ++c)
            std::swap(u_(a, c), u_(b, c));
        for (std::size_t r = 0; r < u_inv_.rows(); ++r)
            std::swap(u_inv_(r, a), u_inv_(r, b));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t r = 0; r < s_.rows(); ++r)
            std::swap(s_(r, a), s_(r, b));
        for (std::size_t r = 0; r < v_.rows(); ++r)
            std::swap(v_(r, a), v_(r, b));
        for (std::size_t c = 0; c < v_inv_.cols(); ++c)
            std::swap(v_inv_(a, c), v_inv_(b, c));
    }

    void negate_row(std::size_t t)
    {
        for (std::size_t c = 0; c < s_.cols(); ++c)
            s_(t, c) = -s_(t, c);
        for (std::size_t c = 0; c < u_.cols(); ++c)
            u_(t, c) = -u_(t, c);
        for (std::size_t r = 0; r < u_inv_.rows(); ++r)
            u_inv_(r, t) = -u_inv_(r, t);
    }

    IntMatrix s_;
    IntMatrix u_;
    IntMatrix u_inv_;
    IntMatrix v_;
    IntMatrix v_inv_;
};

} // namespace

SmithForm smith_normal_form(IntMatrix const& a)
{
    SmithForm f = SmithWorker(a).run();
#ifndef NDEBUG
    assert(f.U * a * f.V == f.S);
#endif
    return f;
}

Integer determinant(IntMatrix const& a)
{
    if (a.rows() != a.cols())
        throw Error("determinant of a non-square matrix");
    std::size_t const n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (m(k, k).is_zero())
        {
            std::size_t r = k + 1;
            while (r < n && m(r, k).is_zero())
                ++r;
            if (r == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(k, c), m(r, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
        {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::vector<IntVector> kernel_basis(IntMatrix const& a)
{
    SmithForm const f = smith_normal_form(a);
    std::vector<IntVector> out;
    for (std::size_t c = f.rank(); c < a.cols(); ++c)
        out.push_back(f.V.column(c));
    return out;
}

LatticeSolver::LatticeSolver(IntMatrix b) : b_(std::move(b)), snf_(smith_normal_form(b_)) {}

std::optional<IntVector> LatticeSolver::solve(std::span<Integer const> v) const
{
    if (v.size() != b_.rows())
        throw Error("vector length " + std::to_string(v.size()) + " does not match " + std::to_string(b_.rows())
                    + " matrix rows");
    // B x = v  <=>  S (V^-1 x) = U v
    IntVector const y = snf_.U * v;
    IntVector w(b_.cols());
    for (std::size_t k = 0; k < y.size(); ++k)
    {
        if (k < snf_.rank())
        {
            if (!(y[k] % snf_.diag[k]).is_zero())
                return std::nullopt;
            w[k] = y[k] / snf_.diag[k];
        }
        else if (!y[k].is_zero())
        {
            return std::nullopt;
        }
    }
    return snf_.V * std::span<Integer const>(w);
}

std::optional<IntVector> express_in_lattice(IntMatrix const& b, std::span<Integer const> v)
{
    return LatticeSolver(b).solve(v);
}

// --- prime fields -----------------------------------------------------------

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::uint64_t residue(Integer const& v, std::uint64_t m)
{
    Integer r = v % m;
    if (r < 0)
        r += m;
    return r.convert_to<std::uint64_t>();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p)
{
    // Extended Euclid on signed 128-bit to stay clear of overflow.
    __int128 r0 = static_cast<__int128>(p), r1 = static_cast<__int128>(a % p);
    __int128 s0 = 0, s1 = 1;
    while (r1 != 0)
    {
        __int128 const q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1)
        throw Error(std::to_string(a) + " is not invertible modulo " + std::to_string(p));
    __int128 const mod = static_cast<__int128>(p);
    return static_cast<std::uint64_t>(((s0 % mod) + mod) % mod);
}

namespace
{

using Row = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// row_target -= f * row_src (mod p)
void sub_scaled(Row& target, Row const& src, std::uint64_t f, std::uint64_t p)
{
    if (f == 0)
        return;
    for (std::size_t k = 0; k < target.size(); ++k)
        if (src[k] != 0)
            target[k] = (target[k] + p - mulmod(f, src[k], p)) % p;
}

void scale(Row& row, std::uint64_t f, std::uint64_t p)
{
    for (auto& v : row)
        v = mulmod(v, f, p);
}

} // namespace

FieldKernel field_rank_and_kernel(IntMatrix const& a, std::uint64_t p)
{
    if (!is_prime(p))
        throw Error(std::to_string(p) + " is not prime");
    std::vector<Row> m(a.rows(), Row(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m[r][c] = residue(a(r, c), p);

    // Reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c)
    {
        std::size_t r = row;
        while (r < a.rows() && m[r][c] == 0)
            ++r;
        if (r == a.rows())
            continue;
        std::swap(m[row], m[r]);
        scale(m[row], inverse_mod(m[row][c], p), p);
        for (std::size_t k = 0; k < a.rows(); ++k)
            if (k != row)
                sub_scaled(m[k], m[row], m[k][c], p);
        pivot_cols.push_back(c);
        ++row;
    }

    FieldKernel out;
    out.rank = pivot_cols.size();
    std::vector<char> is_pivot(a.cols(), 0);
    for (std::size_t c : pivot_cols)
        is_pivot[c] = 1;
    for (std::size_t free = 0; free < a.cols(); ++free)
    {
        if (is_pivot[free])
            continue;
        Row v(a.cols(), 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k)
            v[pivot_cols[k]] = (p - m[k][free]) % p;
        out.kernel.push_back(std::move(v));
    }
    return out;
}

FieldSolver::FieldSolver(std::vector<std::vector<std::uint64_t>> columns, std::size_t length, std::uint64_t p)
    : p_(p), length_(length), ncols_(columns.size())
{
    if (!is_prime(p))
        throw Error(std::to_string(p) + " is not prime");
    // Rows of [M | I] where M has the given columns.
    std::vector<Row> aug(length, Row(ncols_ + length, 0));
    for (std::size_t c = 0; c < ncols_; ++c)
    {
        if (columns[c].size() != length)
            throw Error("column length mismatch in field solver");
        for (std::size_t r = 0; r < length; ++r)
            aug[r][c] = columns[c][r] % p;
    }
    for (std::size_t r = 0; r < length; ++r)
        aug[r][ncols_ + r] = 1;

    for (std::size_t c = 0; c < ncols_; ++c)
    {
        std::size_t r = c;
        while (r < length && aug[r][c] == 0)
            ++r;
        if (r == length)
            throw Error("field solver columns are linearly dependent");
        std::swap(aug[c], aug[r]);
        scale(aug[c], inverse_mod(aug[c][c], p), p);
        for (std::size_t k = 0; k < length; ++k)
            if (k != c)
                sub_scaled(aug[k], aug[c], aug[k][c], p);
    }
    transform_.reserve(length);
    for (auto& r : aug)
        transform_.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(ncols_), r.end());
}

std::optional<std::vector<std::uint64_t>> FieldSolver::solve(std::span<std::uint64_t const> v) const
{
    if (v.size() != length_)
        throw Error("vector length mismatch in field solver");
    std::vector<std::uint64_t> w(length_, 0);
    for (std::size_t r = 0; r < length_; ++r)
    {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < length_; ++k)
            if (transform_[r][k] != 0 && v[k] != 0)
                acc = (acc + mulmod(transform_[r][k], v[k] % p_, p_)) % p_;
        w[r] = acc;
    }
    for (std::size_t r = ncols_; r < length_; ++r)
        if (w[r] != 0)
            return std::nullopt;
    w.resize(ncols_);
    return w;
}

} // namespace cubcoh
