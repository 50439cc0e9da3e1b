// Exact integer matrix algebra.

#ifndef CUBCOH_EXACTLINALG_HPP
#define CUBCOH_EXACTLINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cubcoh
{

/// Arbitrary-precision integer; expression templates off so results are plain values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntMatrix
{
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors, each of length `rows`.
    static IntMatrix from_columns(std::size_t rows, std::span<IntVector const> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Integer const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;
    bool is_zero() const;

    IntMatrix operator*(IntMatrix const& other) const;
    IntVector operator*(std::span<Integer const> v) const;

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/**
 * Smith normal form U * A * V = S with unimodular U, V.  The inverses of
 * both transforms are tracked alongside, since lifting quotient generators
 * back to cochains needs U^-1.
 *
 * diag holds the nonzero invariant factors d_1 | d_2 | ... | d_rank, all > 0.
 */
struct SmithForm
{
    IntMatrix U;
    IntMatrix V;
    IntMatrix U_inv;
    IntMatrix V_inv;
    IntMatrix S;
    std::vector<Integer> diag;

    std::size_t rank() const { return diag.size(); }
};

/// Pivots on the smallest nonzero magnitude; ties go to the lowest row, then
/// the lowest column.
SmithForm smith_normal_form(IntMatrix const& a);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(IntMatrix const& a);

/// Lattice basis of {v : A v = 0}; cols - rank vectors.
std::vector<IntVector> kernel_basis(IntMatrix const& a);

/// Decides B x = v over the integers and returns one solution.
class LatticeSolver
{
public:
    explicit LatticeSolver(IntMatrix b);

    std::size_t rows() const { return b_.rows(); }
    std::size_t cols() const { return b_.cols(); }

    /// nullopt when v lies outside the column lattice of B.
    std::optional<IntVector> solve(std::span<Integer const> v) const;

private:
    IntMatrix b_;
    SmithForm snf_;
};

std::optional<IntVector> express_in_lattice(IntMatrix const& b, std::span<Integer const> v);

// --- prime fields -----------------------------------------------------------

bool is_prime(std::uint64_t p);

/// Nonnegative residue of v modulo m.
std::uint64_t residue(Integer const& v, std::uint64_t m);

struct FieldKernel
{
    std::size_t rank = 0;
    /// Basis vectors with entries in [0, p).
    std::vector<std::vector<std::uint64_t>> kernel;
};

/// Gaussian elimination over Z/p.  Throws if p is not prime.
FieldKernel field_rank_and_kernel(IntMatrix const& a, std::uint64_t p);

/// Row-reduced data for solving against a fixed set of linearly independent
/// column vectors over Z/p.
class FieldSolver
{
public:
    FieldSolver(std::vector<std::vector<std::uint64_t>> columns, std::size_t length, std::uint64_t p);

    /// Coordinates c with sum c_k * column_k = v, or nullopt outside the span.
    std::optional<std::vector<std::uint64_t>> solve(std::span<std::uint64_t const> v) const;

private:
    std::uint64_t p_;
    std::size_t length_;
    std::size_t ncols_;
    // T with T * [columns] = [I; 0], from Gauss-Jordan on [columns | I].
    std::vector<std::vector<std::uint64_t>> transform_;
};

/// Modular inverse of a nonzero residue modulo a prime.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

} // namespace cubcoh

#endif
