#include "dmt/ring.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace dmt {

IntMat mat_mul(const IntMat& a, const IntMat& b, Ring ring) {
    if (a.cols() != b.rows()) throw std::logic_error("mat_mul: dimension mismatch");
    IntMat out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            long long av = a.at(r, k);
            if (av == 0) continue;
            for (int c = 0; c < b.cols(); ++c)
                out.at(r, c) += av * b.at(k, c);
        }
    out.reduce(ring);
    return out;
}

std::vector<long long> mat_vec(const IntMat& a, const std::vector<long long>& x, Ring ring) {
    if (a.cols() != static_cast<int>(x.size())) throw std::logic_error("mat_vec: dimension mismatch");
    std::vector<long long> out(a.rows(), 0);
    for (int r = 0; r < a.rows(); ++r) {
        long long s = 0;
        for (int c = 0; c < a.cols(); ++c) s += a.at(r, c) * x[c];
        out[r] = ring_reduce(s, ring);
    }
    return out;
}

bool vec_equal(const std::vector<long long>& a, const std::vector<long long>& b, Ring ring) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (ring_reduce(a[i], ring) != ring_reduce(b[i], ring)) return false;
    return true;
}

namespace {

// Position of an entry with smallest nonzero absolute value in the trailing
// submatrix starting at (t, t); returns false when the submatrix is zero.
bool find_pivot(const IntMat& m, int t, int& pr, int& pc) {
    long long best = 0;
    bool found = false;
    for (int r = t; r < m.rows(); ++r)
        for (int c = t; c < m.cols(); ++c) {
            long long v = std::llabs(m.at(r, c));
            if (v != 0 && (!found || v < best)) {
                best = v;
                pr = r;
                pc = c;
                found = true;
            }
        }
    return found;
}

void swap_rows(IntMat& m, int a, int b) {
    if (a == b) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMat& m, int a, int b) {
    if (a == b) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

}  // namespace

SmithForm smith_normal_form(IntMat m) {
    SmithForm out;
    int steps = std::min(m.rows(), m.cols());
    out.diagonal.assign(steps, 0);
    for (int t = 0; t < steps; ++t) {
        int pr, pc;
        if (!find_pivot(m, t, pr, pc)) break;
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);
        // Clear row and column t with Euclidean steps; the pivot magnitude
        // strictly decreases whenever a remainder survives, so this terminates.
        for (;;) {
            bool dirty = false;
            for (int r = t + 1; r < m.rows(); ++r) {
                if (m.at(r, t) == 0) continue;
                long long q = m.at(r, t) / m.at(t, t);
                for (int c = t; c < m.cols(); ++c) m.at(r, c) -= q * m.at(t, c);
                if (m.at(r, t) != 0) {
                    swap_rows(m, t, r);
                    dirty = true;
                }
            }
            for (int c = t + 1; c < m.cols(); ++c) {
                if (m.at(t, c) == 0) continue;
                long long q = m.at(t, c) / m.at(t, t);
                for (int r = t; r < m.rows(); ++r) m.at(r, c) -= q * m.at(r, t);
                if (m.at(t, c) != 0) {
                    swap_cols(m, t, c);
                    dirty = true;
                }
            }
            if (!dirty) break;
        }
        // Divisibility: the pivot must divide every remaining entry.  If not,
        // fold the offending row into row t and clear again.
        bool fixed = true;
        do {
            fixed = true;
            for (int r = t + 1; r < m.rows() && fixed; ++r)
                for (int c = t + 1; c < m.cols() && fixed; ++c)
                    if (m.at(r, c) % m.at(t, t) != 0) {
                        for (int cc = t; cc < m.cols(); ++cc) m.at(t, cc) += m.at(r, cc);
                        // Row t regained entries right of the pivot; clear them.
                        for (;;) {
                            bool dirty = false;
                            for (int c2 = t + 1; c2 < m.cols(); ++c2) {
                                if (m.at(t, c2) == 0) continue;
                                long long q = m.at(t, c2) / m.at(t, t);
                                for (int r2 = t; r2 < m.rows(); ++r2) m.at(r2, c2) -= q * m.at(r2, t);
                                if (m.at(t, c2) != 0) {
                                    swap_cols(m, t, c2);
                                    dirty = true;
                                }
                            }
                            for (int r2 = t + 1; r2 < m.rows(); ++r2) {
                                if (m.at(r2, t) == 0) continue;
                                long long q = m.at(r2, t) / m.at(t, t);
                                for (int c2 = t; c2 < m.cols(); ++c2) m.at(r2, c2) -= q * m.at(t, c2);
                                if (m.at(r2, t) != 0) {
                                    swap_rows(m, t, r2);
                                    dirty = true;
                                }
                            }
                            if (!dirty) break;
                        }
                        fixed = false;
                    }
        } while (!fixed);
        out.diagonal[t] = std::llabs(m.at(t, t));
        out.rank = t + 1;
    }
    return out;
}

int rank_mod2(IntMat m) {
    int rank = 0;
    int rows = m.rows(), cols = m.cols();
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (((m.at(r, c) % 2) + 2) % 2 == 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        swap_rows(m, rank, pivot);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            if (((m.at(r, c) % 2) + 2) % 2 == 1)
                for (int cc = c; cc < cols; ++cc) m.at(r, cc) += m.at(rank, cc);
        }
        ++rank;
    }
    return rank;
}

int rank_over_q(const IntMat& m) {
    return smith_normal_form(m).rank;
}

bool invertible(const IntMat& m, Ring ring) {
    if (m.rows() != m.cols()) return false;
    if (m.rows() == 0) return true;
    if (ring == Ring::mod2) return rank_mod2(m) == m.rows();
    SmithForm s = smith_normal_form(m);
    if (s.rank != m.rows()) return false;
    for (long long d : s.diagonal)
        if (d != 1) return false;
    return true;
}

}  // namespace dmt
