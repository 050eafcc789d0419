#include "toriclag/lattice.hpp"

#include <stdexcept>

#include "toriclag/linalg.hpp"

namespace toriclag {

namespace {

bool is_zero_row(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// Column-echelon reduction of rows by integer row operations. Processes
// columns left to right; on each column picks the row with the smallest
// nonzero |entry| among unfinished rows and reduces the others against it
// until one nonzero survives, then normalizes sign and clears above.
void hnf_rows_inplace(std::vector<IntVec>& rows, std::vector<IntVec>* transform, int dim) {
    int n = static_cast<int>(rows.size());
    int top = 0;
    auto row_op = [&](int dst, int src, const Int& q) {
        // rows[dst] -= q * rows[src]
        for (int c = 0; c < dim; ++c) rows[dst][c] -= q * rows[src][c];
        if (transform)
            for (std::size_t c = 0; c < (*transform)[dst].size(); ++c)
                (*transform)[dst][c] -= q * (*transform)[src][c];
    };
    auto row_swap = [&](int i, int j) {
        std::swap(rows[i], rows[j]);
        if (transform) std::swap((*transform)[i], (*transform)[j]);
    };
    auto row_negate = [&](int i) {
        for (int c = 0; c < dim; ++c) rows[i][c] = -rows[i][c];
        if (transform)
            for (Int& x : (*transform)[i]) x = -x;
    };
    for (int col = 0; col < dim && top < n; ++col) {
        for (;;) {
            int best = -1;
            for (int r = top; r < n; ++r) {
                if (rows[r][col] == 0) continue;
                if (best < 0 || Int(abs(rows[r][col])) < Int(abs(rows[best][col]))) best = r;
            }
            if (best < 0) break;
            row_swap(top, best);
            bool others = false;
            for (int r = top + 1; r < n; ++r) {
                if (rows[r][col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
                row_op(r, top, q);
                if (rows[r][col] != 0) others = true;
            }
            if (!others) break;
        }
        if (rows[top][col] == 0) continue;
        if (rows[top][col] < 0) row_negate(top);
        // Reduce entries above the pivot into [0, pivot).
        for (int r = 0; r < top; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
            if (q != 0) row_op(r, top, q);
        }
        ++top;
    }
}

Int full_rank_covolume(const std::vector<IntVec>& h) {
    Int cov = 1;
    for (std::size_t i = 0; i < h.size(); ++i) cov *= h[i][i];
    return cov;
}

}  // namespace

IntLatticeBasis hnf(const std::vector<IntVec>& rows, int dim) {
    std::vector<IntVec> work;
    for (const IntVec& r : rows) {
        if (static_cast<int>(r.size()) != dim) throw std::invalid_argument("hnf: row length mismatch");
        work.push_back(r);
    }
    hnf_rows_inplace(work, nullptr, dim);
    IntLatticeBasis out;
    out.dim = dim;
    for (IntVec& r : work)
        if (!is_zero_row(r)) out.basis.push_back(std::move(r));
    if (out.lattice_rank() == dim) {
        // Pivot of HNF row i sits in column i exactly when rank is full.
        out.covolume = full_rank_covolume(out.basis);
    }
    return out;
}

HnfWithTransform hnf_with_transform(const std::vector<IntVec>& rows, int dim) {
    HnfWithTransform out;
    int n = static_cast<int>(rows.size());
    out.h = rows;
    out.u.assign(n, IntVec(n, Int(0)));
    for (int i = 0; i < n; ++i) out.u[i][i] = 1;
    hnf_rows_inplace(out.h, &out.u, dim);
    // hnf_rows_inplace leaves all zero rows below the nonzero ones.
    int nz = 0;
    while (nz < n && !is_zero_row(out.h[nz])) ++nz;
    out.nonzero_rows = nz;
    return out;
}

IntLatticeBasis integer_kernel_basis(const RatMatrix& m) {
    // The rational kernel basis has a free coordinate set to 1 per vector, so
    // clearing denominators gives integer vectors spanning the kernel over Q.
    // Saturation: run HNF-with-transform on the *transpose* trick instead.
    //
    // Direct route: take the integer row span of the cleared kernel vectors,
    // then saturate by intersecting with the rational kernel. Equivalent and
    // simpler: compute U with U * Mt = H for Mt the cleared transpose of m;
    // rows of U matched with zero rows of H form a basis of the left integer
    // kernel of Mt, i.e. the right kernel of m, and it is automatically
    // saturated because U is unimodular.
    int rows = m.cols(), cols = m.rows();
    std::vector<IntVec> mt(rows, IntVec(cols));
    RatVec all;
    all.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) all.push_back(m.at(r, c));
    Int lcm = denominator_lcm(all);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            Rat scaled = m.at(c, r) * Rat(lcm);
            mt[r][c] = scaled.get_num();  // denominator is 1 after scaling
        }
    HnfWithTransform ht = hnf_with_transform(mt, cols);
    std::vector<IntVec> kernel_rows;
    for (int r = ht.nonzero_rows; r < static_cast<int>(ht.h.size()); ++r) kernel_rows.push_back(ht.u[r]);
    return hnf(kernel_rows, rows);
}

bool lattice_contains(const IntLatticeBasis& l, const IntVec& v) {
    if (static_cast<int>(v.size()) != l.dim) return false;
    IntVec rem = v;
    std::size_t next = 0;
    for (int col = 0; col < l.dim; ++col) {
        if (next < l.basis.size()) {
            // Pivot column of basis row `next` is the first nonzero column.
            int pivot_col = 0;
            while (l.basis[next][pivot_col] == 0) ++pivot_col;
            if (pivot_col == col) {
                const Int& p = l.basis[next][col];
                if (mpz_divisible_p(rem[col].get_mpz_t(), p.get_mpz_t())) {
                    Int q = rem[col] / p;
                    for (int c = col; c < l.dim; ++c) rem[c] -= q * l.basis[next][c];
                } else {
                    return false;
                }
                ++next;
                continue;
            }
        }
        if (rem[col] != 0) return false;
    }
    return true;
}

RatMatrix dual_lattice_basis(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("dual_lattice_basis: basis not square");
    int n = m.rows();
    // Row-reduce [M^T | I] to [I | M^{-T}]; the dual rows are the rows of
    // M^{-T}, pairing row i against basis row j to delta_{ij}.
    RatMatrix mt = m.transpose();
    RatMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = mt.at(r, c);
        aug.at(r, n + r) = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() >= n))
        throw std::invalid_argument("dual_lattice_basis: basis not invertible");
    RatMatrix dual(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) dual.at(r, c) = aug.at(r, n + c);
    return dual;
}

}  // namespace toriclag
