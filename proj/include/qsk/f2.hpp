#ifndef QSK_F2_HPP
#define QSK_F2_HPP

#include <cstdint>
#include <vector>

namespace qsk {

/* Dense F2 row vector packed into 64-bit words. */
class F2Vec {
  public:
    F2Vec() = default;
    explicit F2Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = 1ULL << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= 1ULL << (i & 63); }
    void resize(std::size_t n);
    void operator^=(const F2Vec& o) {
        for (std::size_t k = 0; k < w_.size() && k < o.w_.size(); ++k)
            w_[k] ^= o.w_[k];
    }
    bool is_zero() const {
        for (auto w : w_)
            if (w)
                return false;
        return true;
    }
    /// index of the lowest set bit, or size() if zero
    std::size_t lowest() const;
    bool operator==(const F2Vec& o) const { return n_ == o.n_ && w_ == o.w_; }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/* Row-reduced F2 matrix.  Pivoting prefers the *lowest* column index so the
   representatives the solvers hand back are canonical-order minimal. */
class F2Solver {
  public:
    explicit F2Solver(std::size_t cols) : cols_(cols) {}

    /// Reduce v against the rows held so far; returns the fully reduced vector.
    F2Vec reduce(F2Vec v) const;

    /// Reduce and insert if independent.  Returns true if v enlarged the span.
    bool add(F2Vec v);

    std::size_t rank() const { return rows_.size(); }
    const F2Vec& row(std::size_t r) const { return rows_[r]; }
    bool contains(const F2Vec& v) const { return reduce(v).is_zero(); }

    /// Coordinates of v over the inserted (pre-reduction) generators, or empty
    /// if v is outside the span.  Generators are indexed by insertion order.
    std::vector<std::size_t> solve(const F2Vec& v) const;

  private:
    std::size_t cols_;
    std::vector<F2Vec> rows_;             // echelon rows
    std::vector<std::size_t> pivot_;      // pivot column per row
    std::vector<F2Vec> comb_;             // row = sum of original generators
    std::size_t n_gens_ = 0;
};

/// Kernel basis of the linear map with the given rows (one row per domain
/// basis vector, entries in the codomain).  Vectors returned are
/// lowest-index-pivot reduced and sorted by their lowest set bit.
std::vector<F2Vec> kernel_basis(const std::vector<F2Vec>& rows, std::size_t codomain_dim);

} // namespace qsk

#endif
