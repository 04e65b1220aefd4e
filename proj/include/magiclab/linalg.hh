#ifndef MAGICLAB_LINALG_HH
#define MAGICLAB_LINALG_HH

#include <magiclab/graph.hh>

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace magiclab
{
    using BigInt = boost::multiprecision::cpp_int;

    /// Dense matrix of arbitrary-precision integers, row-major.
    class IntMatrix
    {
    public:
        IntMatrix(int rows, int cols);
        IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

        static auto identity(int n) -> IntMatrix;

        auto rows() const -> int { return _rows; }
        auto cols() const -> int { return _cols; }
        auto square() const -> bool { return _rows == _cols; }

        auto operator()(int i, int j) -> BigInt & { return _entries[static_cast<std::size_t>(i) * _cols + j]; }
        auto operator()(int i, int j) const -> const BigInt & { return _entries[static_cast<std::size_t>(i) * _cols + j]; }

        auto operator==(const IntMatrix &) const -> bool = default;

        /// JSON array of rows, entries as decimal numbers.
        auto to_json_string() const -> std::string;

    private:
        int _rows;
        int _cols;
        std::vector<BigInt> _entries;
    };

    auto adjacency_matrix(const Graph & g) -> IntMatrix;

    /// Determinant by Bareiss fraction-free elimination. Throws std::invalid_argument
    /// for non-square input.
    auto det_exact(const IntMatrix & m) -> BigInt;

    /// Rank by fraction-free elimination; works for rectangular input.
    auto rank_exact(const IntMatrix & m) -> int;

    /// cols - rank. Throws std::invalid_argument for non-square input.
    auto nullity(const IntMatrix & m) -> int;

    /// Multiplicity of lambda as an adjacency eigenvalue, i.e. nullity(A - lambda I).
    auto eigenvalue_multiplicity(const Graph & g, long long lambda) -> int;

    /// det(A - lambda I) == 0, decided exactly.
    auto has_integer_eigenvalue(const Graph & g, long long lambda) -> bool;

    /// Root data of x^2 + (c-a)x + (c-r) = 0, the non-principal eigenvalues of an SRG.
    /// Roots are only materialised when both are integers; otherwise they remain
    /// (-linear +- sqrt(discriminant)) / 2.
    struct QuadraticEigenpair
    {
        long long linear = 0;
        long long constant = 0;
        long long discriminant = 0;
        bool square_discriminant = false;
        std::optional<long long> sqrt_discriminant;
        /// Larger root first.
        std::optional<long long> root_high;
        std::optional<long long> root_low;

        auto integral() const -> bool { return root_high.has_value(); }
        auto has_root(long long x) const -> bool { return x * x + linear * x + constant == 0; }

        /// "1, -3" or "(-1 +- sqrt(5))/2"
        auto to_string() const -> std::string;
    };

    /// Throws std::domain_error when the discriminant is negative.
    auto srg_eigen(const SrgParams & p) -> QuadraticEigenpair;

    /// The (d+1) x (d+1) tridiagonal matrix with T[i][i-1] = b_{i-1}, T[i][i] = a_i and
    /// T[i][i+1] = c_{i+1}, whose eigenvalues are those of a distance-regular graph with
    /// the given array.
    auto tridiagonal_T(const IntersectionArray & arr) -> IntMatrix;

    /// Zero determinant of the block of T on rows and columns 2..d. Since det T = -b_0 times
    /// that block's determinant, this says 0 is an eigenvalue. Needs diameter >= 2.
    auto lemma_det_condition(const IntersectionArray & arr) -> bool;

    auto integer_sqrt(long long x) -> std::optional<long long>;
}

#endif
