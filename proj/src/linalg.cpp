#include "qsym/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace qsym::linalg {

int rref(const Ring& field, QMatrix& m) {
    if (!field.is_field()) throw RingError("rref requires a field, got " + field.name());
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && field.normalize(m[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        mpq_class inv = field.invert(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = field.normalize(m[r][j] * inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            mpq_class f = field.normalize(m[i][c]);
            if (f == 0) continue;
            for (size_t j = c; j < cols; ++j)
                m[i][j] = field.normalize(m[i][j] - f * m[r][j]);
        }
        ++r;
    }
    return static_cast<int>(r);
}

int rank(const Ring& field, QMatrix m) { return rref(field, m); }

std::vector<std::vector<mpq_class>> kernel_basis(const Ring& field, QMatrix m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    rref(field, m);

    std::vector<long> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        if (field.normalize(m[r][c]) != 0) {
            pivot_of_col[c] = static_cast<long>(r);
            ++r;
        }
    }

    std::vector<std::vector<mpq_class>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (pivot_of_col[free_c] >= 0) continue;
        std::vector<mpq_class> v(cols, 0);
        v[free_c] = 1;
        for (size_t c = 0; c < cols; ++c) {
            long pr = pivot_of_col[c];
            if (pr >= 0) v[c] = field.normalize(-m[static_cast<size_t>(pr)][free_c]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_integer(ZMatrix m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    mpz_class prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                mpz_class num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<mpz_class> smith_invariant_factors(ZMatrix m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<mpz_class> factors;
    size_t t = 0;  // top-left corner of the active block
    while (t < rows && t < cols) {
        // find a nonzero entry in the active block
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < rows && !found; ++i)
            for (size_t j = t; j < cols && !found; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                mpz_class q = m[i][t] / m[t][t];
                for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                mpz_class q = m[t][j] / m[t][t];
                for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
        }
        ++t;
    }
    // Collect diagonal, enforce divisibility chain.
    for (size_t i = 0; i < t; ++i) {
        mpz_class d = abs(m[i][i]);
        if (d != 0) factors.push_back(d);
    }
    for (size_t i = 0; i + 1 < factors.size(); ++i) {
        for (size_t j = i + 1; j < factors.size(); ++j) {
            mpz_class g, l;
            mpz_gcd(g.get_mpz_t(), factors[i].get_mpz_t(), factors[j].get_mpz_t());
            l = factors[i] / g * factors[j];
            factors[i] = g;
            factors[j] = l;
        }
    }
    return factors;
}

}  // namespace qsym::linalg
