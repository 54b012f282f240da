#ifndef QANALOGY_TESTS_DENSE_ORACLE_HPP
#define QANALOGY_TESTS_DENSE_ORACLE_HPP

// Test-only reference: builds the full 2^n x 2^n register operator with plain
// std::complex loops and multiplies it out. Shares nothing with apply_gate
// except the basis-ordering convention (qubit 0 = most significant bit).

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace qanalogy::testing {

using Complex = std::complex<double>;
using DenseMatrix = std::vector<std::vector<Complex>>;

inline DenseMatrix textbook_gate(int which) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (which) {
        case 0:
            return {{1, 0}, {0, 1}};
        case 1:
            return {{0, 1}, {1, 0}};
        case 2:
            return {{h, h}, {h, -h}};
        case 3: {
            DenseMatrix m(4, std::vector<Complex>(4, 0));
            m[0][0] = m[1][1] = m[2][3] = m[3][2] = 1;
            return m;
        }
        default: {
            DenseMatrix m(8, std::vector<Complex>(8, 0));
            for (int i = 0; i < 8; ++i) m[i][i] = 1;
            m[5][5] = m[6][6] = 0;
            m[5][6] = m[6][5] = 1;
            return m;
        }
    }
}

inline int bit_of(std::size_t index, int qubit, int n) { return int((index >> (n - 1 - qubit)) & 1U); }

/// Full-register operator: <row|U|col> = G[local(row)][local(col)] when the
/// non-target bits of row and col agree, else 0.
inline DenseMatrix embed(const DenseMatrix& gate, const std::vector<int>& targets, int n) {
    const std::size_t dim = std::size_t{1} << n;
    const int k = int(targets.size());
    DenseMatrix full(dim, std::vector<Complex>(dim, 0));
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            bool same_rest = true;
            for (int q = 0; q < n; ++q) {
                bool is_target = false;
                for (int t : targets) is_target = is_target || (t == q);
                if (!is_target && bit_of(row, q, n) != bit_of(col, q, n)) same_rest = false;
            }
            if (!same_rest) continue;
            std::size_t lr = 0;
            std::size_t lc = 0;
            for (int j = 0; j < k; ++j) {
                lr = (lr << 1) | std::size_t(bit_of(row, targets[j], n));
                lc = (lc << 1) | std::size_t(bit_of(col, targets[j], n));
            }
            full[row][col] = gate[lr][lc];
        }
    }
    return full;
}

inline std::vector<Complex> multiply(const DenseMatrix& m, const std::vector<Complex>& v) {
    std::vector<Complex> out(v.size(), 0);
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
    }
    return out;
}

/// Haar-ish random normalized vector from Gaussian components.
inline std::vector<Complex> random_state(std::mt19937_64& gen, int n) {
    std::normal_distribution<double> normal;
    std::vector<Complex> v(std::size_t{1} << n);
    double norm2 = 0;
    for (auto& a : v) {
        a = Complex(normal(gen), normal(gen));
        norm2 += std::norm(a);
    }
    for (auto& a : v) a /= std::sqrt(norm2);
    return v;
}

/// All ordered tuples of k distinct qubits out of n.
inline std::vector<std::vector<int>> target_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int q = 0; q < n; ++q) {
            bool used = false;
            for (int c : cur) used = used || c == q;
            if (used) continue;
            cur.push_back(q);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace qanalogy::testing

#endif  // QANALOGY_TESTS_DENSE_ORACLE_HPP
