#include "mtv/lindep.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtv {

namespace {

Integer row_dot(const std::vector<Integer>& u, const std::vector<Integer>& v) {
    Integer s;
    for (size_t i = 0; i < u.size(); ++i) s.addmul(u[i], v[i]);
    return s;
}

void row_submul(std::vector<Integer>& u, const Integer& q,
                const std::vector<Integer>& v) {
    for (size_t i = 0; i < u.size(); ++i) u[i].submul(q, v[i]);
}

// Raised when the floating Gram-Schmidt data cannot certify a positive
// squared norm: either the working precision was too small for the
// cancellation in <b_k, b*_k>, or the rows are genuinely dependent. The
// caller retries at higher precision and only then reports deficiency.
struct GSPrecisionFailure {};

// Exact-basis LLL with floating Gram-Schmidt data (mu, squared norms B)
// maintained incrementally through size reductions and swaps.
struct LLLState {
    std::vector<std::vector<Integer>>& b;
    int n;
    long fp;
    BigReal delta;
    std::vector<std::vector<BigReal>> mu;
    std::vector<BigReal> B;
    int kmax = 0;

    LLLState(std::vector<std::vector<Integer>>& rows, long fprec, double d)
        : b(rows), n(static_cast<int>(rows.size())), fp(fprec), delta(d, fprec) {
        mu.resize(n);
        for (int i = 0; i < n; ++i) mu[i].assign(i, BigReal(fp));
        B.assign(n, BigReal(fp));
        B[0] = BigReal(row_dot(b[0], b[0]), fp);
        if (B[0].is_zero()) throw std::invalid_argument("lll_reduce: zero row");
    }

    // Fresh Gram-Schmidt data for row k against rows 0..k-1.
    void compute_gs_row(int k) {
        std::vector<BigReal> c(k, BigReal(fp)); // c[j] = <b_k, b*_j>
        for (int j = 0; j < k; ++j) {
            BigReal u(row_dot(b[k], b[j]), fp);
            for (int i = 0; i < j; ++i) {
                BigReal t = mu[j][i] * c[i];
                u -= t;
            }
            c[j] = u;
            if (B[j].is_zero()) throw GSPrecisionFailure{};
            mu[k][j] = u / B[j];
        }
        BigReal bk(row_dot(b[k], b[k]), fp);
        for (int j = 0; j < k; ++j) {
            BigReal t = mu[k][j] * c[j];
            bk -= t;
        }
        if (bk.sgn() <= 0) throw GSPrecisionFailure{};
        B[k] = bk;
    }

    void red(int k, int l) {
        // nearest integer to mu; zero exactly when |mu| <= 1/2
        Integer q = mu[k][l].round_to_integer();
        if (q.is_zero()) return;
        row_submul(b[k], q, b[l]);
        BigReal qf(q, fp);
        mu[k][l] -= qf;
        for (int i = 0; i < l; ++i) {
            BigReal t = qf * mu[l][i];
            mu[k][i] -= t;
        }
    }

    void swap_step(int k) {
        std::swap(b[k], b[k - 1]);
        for (int j = 0; j < k - 1; ++j) std::swap(mu[k][j], mu[k - 1][j]);
        BigReal u = mu[k][k - 1];
        BigReal Bp = B[k];
        Bp.addmul(u * u, B[k - 1]);
        mu[k][k - 1] = u * B[k - 1] / Bp;
        B[k] = B[k - 1] * B[k] / Bp;
        B[k - 1] = Bp;
        for (int i = k + 1; i <= kmax; ++i) {
            BigReal t = mu[i][k];
            mu[i][k] = mu[i][k - 1] - u * t;
            mu[i][k - 1] = t;
            mu[i][k - 1].addmul(mu[k][k - 1], mu[i][k]);
        }
    }

    void run() {
        int k = 1;
        while (k < n) {
            if (k > kmax) {
                kmax = k;
                compute_gs_row(k);
            }
            red(k, k - 1);
            BigReal rhs = delta - mu[k][k - 1] * mu[k][k - 1];
            rhs *= B[k - 1];
            if (B[k] < rhs) {
                swap_step(k);
                k = std::max(1, k - 1);
            } else {
                for (int l = k - 2; l >= 0; --l) red(k, l);
                ++k;
            }
        }
    }
};

long max_entry_bits(const IntegerLattice& m) {
    size_t bits = 1;
    for (const auto& row : m.rows)
        for (const auto& e : row)
            if (!e.is_zero()) bits = std::max(bits, e.bits());
    return static_cast<long>(bits);
}

} // namespace

IntegerLattice lll_reduce(const IntegerLattice& basis, double delta) {
    if (basis.rows.empty()) return basis;
    for (const auto& row : basis.rows)
        if (row.size() != basis.ncols())
            throw std::invalid_argument("lll_reduce: ragged rows");
    if (delta <= 0.25 || delta >= 1.0)
        throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1)");
    if (basis.nrows() > basis.ncols())
        throw std::invalid_argument("lll_reduce: more rows than columns");
    IntegerLattice out = basis;
    if (out.nrows() == 1) return out;
    // The fresh Gram-Schmidt norms cancel |row|^2-sized terms down to
    // possibly O(1) remainders, so the working precision must cover twice
    // the entry size; the n-term guard absorbs drift accumulated across
    // swaps. Linearly dependent rows fail at every precision, so a few
    // doublings separate them from mere precision shortfalls.
    for (int attempt = 0; attempt < 4; ++attempt) {
        long fp = (2 * max_entry_bits(out) +
                   16 * static_cast<long>(out.nrows()) + 256)
                  << attempt;
        try {
            LLLState st(out.rows, fp, delta);
            st.run();
            return out;
        } catch (const GSPrecisionFailure&) {
            // rows were only permuted/sheared (unimodular ops), so `out`
            // still spans the input lattice; retry from where it stands
        }
    }
    throw std::invalid_argument("lll_reduce: rank-deficient basis");
}

IntegerLattice hermite_normal_form(const IntegerLattice& basis) {
    auto M = basis.rows;
    size_t rows = M.size();
    size_t cols = basis.ncols();
    for (const auto& row : M)
        if (row.size() != cols)
            throw std::invalid_argument("hermite_normal_form: ragged rows");
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Euclidean elimination of column c below row r
        while (true) {
            size_t piv = SIZE_MAX;
            for (size_t i = r; i < rows; ++i)
                if (!M[i][c].is_zero() &&
                    (piv == SIZE_MAX || abs(M[i][c]) < abs(M[piv][c])))
                    piv = i;
            if (piv == SIZE_MAX) break;
            if (piv != r) std::swap(M[r], M[piv]);
            bool dirty = false;
            for (size_t i = r + 1; i < rows; ++i) {
                if (M[i][c].is_zero()) continue;
                Integer q;
                mpz_tdiv_q(q.raw(), M[i][c].raw(), M[r][c].raw());
                if (!q.is_zero()) row_submul(M[i], q, M[r]);
                if (!M[i][c].is_zero()) dirty = true;
            }
            if (!dirty) break;
        }
        if (M[r][c].is_zero()) continue; // no pivot in this column
        if (M[r][c].sgn() < 0)
            for (auto& e : M[r]) e = -e;
        for (size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.raw(), M[i][c].raw(), M[r][c].raw());
            if (!q.is_zero()) row_submul(M[i], q, M[r]);
        }
        ++r;
    }
    M.resize(r);
    return {M};
}

Integer lattice_determinant(const IntegerLattice& basis) {
    size_t n = basis.nrows();
    if (n == 0) return Integer(1);
    if (basis.ncols() != n)
        throw std::invalid_argument("lattice_determinant: matrix must be square");
    auto M = basis.rows;
    Integer prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            size_t sw = SIZE_MAX;
            for (size_t i = k + 1; i < n; ++i)
                if (!M[i][k].is_zero()) {
                    sw = i;
                    break;
                }
            if (sw == SIZE_MAX) return Integer(0);
            std::swap(M[k], M[sw]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer t = M[i][j] * M[k][k];
                t.submul(M[i][k], M[k][j]);
                mpz_divexact(M[i][j].raw(), t.raw(), prev.raw());
            }
            M[i][k] = Integer(0);
        }
        prev = M[k][k];
    }
    Integer det = M[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

} // namespace mtv
