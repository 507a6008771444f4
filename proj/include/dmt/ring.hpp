#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dmt {

/// Coefficient ring for Morse boundaries and connectedness homomorphisms.
enum class Ring { integers, mod2 };

inline long long ring_reduce(long long v, Ring ring) {
    if (ring == Ring::mod2) return ((v % 2) + 2) % 2;
    return v;
}

inline std::string ring_name(Ring ring) {
    return ring == Ring::mod2 ? "z2" : "z";
}

/// Dense integer matrix. Small sizes only; entries are exact.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    long long at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const IntMat& o) const = default;

    bool is_zero() const {
        for (long long v : a_) if (v != 0) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (at(r, c) != (r == c ? 1 : 0)) return false;
        return true;
    }

    std::vector<long long> column(int c) const {
        std::vector<long long> v(rows_);
        for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

    void reduce(Ring ring) {
        if (ring == Ring::mod2)
            for (long long& v : a_) v = ((v % 2) + 2) % 2;
    }

private:
    int rows_, cols_;
    std::vector<long long> a_;
};

IntMat mat_mul(const IntMat& a, const IntMat& b, Ring ring);
std::vector<long long> mat_vec(const IntMat& a, const std::vector<long long>& x, Ring ring);
bool vec_equal(const std::vector<long long>& a, const std::vector<long long>& b, Ring ring);

/// Diagonal of the Smith normal form, invariant factors first, then zeros.
struct SmithForm {
    std::vector<long long> diagonal;  // nonnegative, d_i | d_{i+1} among nonzero entries
    int rank = 0;                     // number of nonzero diagonal entries
};

SmithForm smith_normal_form(IntMat m);

int rank_mod2(IntMat m);

/// Rank over the rationals (= rank over Z).
int rank_over_q(const IntMat& m);

/// Square and invertible over the ring: unimodular over Z, nonsingular over Z_2.
bool invertible(const IntMat& m, Ring ring);

}  // namespace dmt
