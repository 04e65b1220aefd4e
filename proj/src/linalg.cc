#include <magiclab/linalg.hh>

#include <cmath>
#include <sstream>
#include <stdexcept>

using std::optional;
using std::string;
using std::vector;

namespace magiclab
{
    IntMatrix::IntMatrix(int rows, int cols) :
        _rows(rows),
        _cols(cols),
        _entries(static_cast<std::size_t>(rows) * cols)
    {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("negative matrix dimension");
    }

    IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) :
        IntMatrix(static_cast<int>(rows.size()), rows.size() ? static_cast<int>(rows.begin()->size()) : 0)
    {
        int i = 0;
        for (auto & row : rows) {
            if (static_cast<int>(row.size()) != _cols)
                throw std::invalid_argument("ragged matrix literal");
            int j = 0;
            for (auto v : row)
                (*this)(i, j++) = v;
            ++i;
        }
    }

    auto IntMatrix::identity(int n) -> IntMatrix
    {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    auto IntMatrix::to_json_string() const -> string
    {
        std::ostringstream s;
        s << "[";
        for (int i = 0; i < _rows; ++i) {
            s << (i ? "," : "") << "[";
            for (int j = 0; j < _cols; ++j)
                s << (j ? "," : "") << (*this)(i, j);
            s << "]";
        }
        s << "]";
        return s.str();
    }

    auto adjacency_matrix(const Graph & g) -> IntMatrix
    {
        IntMatrix m(g.order(), g.order());
        for (Vertex u = 0; u < g.order(); ++u)
            for (auto v : g.neighbours(u))
                m(u, v) = 1;
        return m;
    }

    namespace
    {
        struct Elimination
        {
            int rank = 0;
            // Sign of the row permutation times the last pivot; only meaningful when full rank.
            BigInt last_pivot = 1;
            int swaps = 0;
        };

        // Bareiss fraction-free elimination in place. Every intermediate entry is a minor
        // of the input, so the divisions below are exact.
        auto bareiss(IntMatrix & m) -> Elimination
        {
            Elimination e;
            BigInt previous = 1;
            int row = 0;
            for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
                int pivot = row;
                while (pivot < m.rows() && m(pivot, col) == 0)
                    ++pivot;
                if (pivot == m.rows())
                    continue;
                if (pivot != row) {
                    for (int j = 0; j < m.cols(); ++j)
                        swap(m(pivot, j), m(row, j));
                    ++e.swaps;
                }
                for (int i = row + 1; i < m.rows(); ++i) {
                    for (int j = col + 1; j < m.cols(); ++j) {
                        m(i, j) = m(row, col) * m(i, j) - m(i, col) * m(row, j);
                        m(i, j) /= previous;
                    }
                    m(i, col) = 0;
                }
                previous = m(row, col);
                ++row;
            }
            e.rank = row;
            e.last_pivot = previous;
            return e;
        }
    }

    auto det_exact(const IntMatrix & m) -> BigInt
    {
        if (! m.square())
            throw std::invalid_argument("determinant of a non-square matrix");
        if (m.rows() == 0)
            return 1;
        IntMatrix work = m;
        auto e = bareiss(work);
        if (e.rank < m.rows())
            return 0;
        return (e.swaps % 2) ? BigInt(-e.last_pivot) : e.last_pivot;
    }

    auto rank_exact(const IntMatrix & m) -> int
    {
        IntMatrix work = m;
        return bareiss(work).rank;
    }

    auto nullity(const IntMatrix & m) -> int
    {
        if (! m.square())
            throw std::invalid_argument("nullity of a non-square matrix");
        return m.cols() - rank_exact(m);
    }

    auto eigenvalue_multiplicity(const Graph & g, long long lambda) -> int
    {
        auto m = adjacency_matrix(g);
        for (int i = 0; i < m.rows(); ++i)
            m(i, i) -= lambda;
        return nullity(m);
    }

    auto has_integer_eigenvalue(const Graph & g, long long lambda) -> bool
    {
        auto m = adjacency_matrix(g);
        for (int i = 0; i < m.rows(); ++i)
            m(i, i) -= lambda;
        return det_exact(m) == 0;
    }

    auto integer_sqrt(long long x) -> optional<long long>
    {
        if (x < 0)
            return std::nullopt;
        auto s = static_cast<long long>(std::sqrt(static_cast<long double>(x)));
        while (s > 0 && s > x / s)
            --s;
        while (s + 1 <= x / (s + 1))
            ++s;
        if (s * s != x)
            return std::nullopt;
        return s;
    }

    auto QuadraticEigenpair::to_string() const -> string
    {
        std::ostringstream s;
        if (integral())
            s << *root_high << ", " << *root_low;
        else
            s << "(" << -linear << " +- sqrt(" << discriminant << "))/2";
        return s.str();
    }

    auto srg_eigen(const SrgParams & p) -> QuadraticEigenpair
    {
        QuadraticEigenpair q;
        q.linear = p.c - p.a;
        q.constant = p.c - p.r;
        q.discriminant = q.linear * q.linear - 4 * q.constant;
        if (q.discriminant < 0)
            throw std::domain_error("negative discriminant for SRG parameters " + p.to_string());
        q.sqrt_discriminant = integer_sqrt(q.discriminant);
        q.square_discriminant = q.sqrt_discriminant.has_value();
        if (q.square_discriminant && (q.linear + *q.sqrt_discriminant) % 2 == 0) {
            q.root_high = (-q.linear + *q.sqrt_discriminant) / 2;
            q.root_low = (-q.linear - *q.sqrt_discriminant) / 2;
        }
        return q;
    }

    auto tridiagonal_T(const IntersectionArray & arr) -> IntMatrix
    {
        arr.validate();
        int d = arr.diameter();
        IntMatrix t(d + 1, d + 1);
        for (int i = 0; i <= d; ++i) {
            if (i > 0)
                t(i, i - 1) = arr.b_at(i - 1);
            t(i, i) = arr.a_at(i);
            if (i < d)
                t(i, i + 1) = arr.c_at(i + 1);
        }
        return t;
    }

    auto lemma_det_condition(const IntersectionArray & arr) -> bool
    {
        if (arr.diameter() < 2)
            throw std::invalid_argument("determinant condition needs diameter at least 2");
        auto t = tridiagonal_T(arr);
        int size = arr.diameter() - 1;
        IntMatrix block(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
                block(i, j) = t(i + 2, j + 2);
        return det_exact(block) == 0;
    }
}
