#include "qsk/f2.hpp"

#include <algorithm>

namespace qsk {

std::size_t F2Vec::lowest() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k])
            return (k << 6) + __builtin_ctzll(w_[k]);
    return n_;
}

void F2Vec::resize(std::size_t n) {
    n_ = n;
    w_.resize((n + 63) / 64, 0);
}

F2Vec F2Solver::reduce(F2Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (v.get(pivot_[r]))
            v ^= rows_[r];
    return v;
}

bool F2Solver::add(F2Vec v) {
    const std::size_t gen = n_gens_++;
    for (auto& c : comb_)
        c.resize(n_gens_);
    F2Vec comb(n_gens_);
    comb.set(gen, true);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (v.get(pivot_[r])) {
            v ^= rows_[r];
            comb ^= comb_[r];
        }
    if (v.is_zero())
        return false;
    // back-substitute so rows stay mutually reduced
    std::size_t piv = v.lowest();
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].get(piv)) {
            rows_[r] ^= v;
            comb_[r] ^= comb;
        }
    rows_.push_back(std::move(v));
    pivot_.push_back(piv);
    comb_.push_back(std::move(comb));
    return true;
}

std::vector<std::size_t> F2Solver::solve(const F2Vec& v) const {
    F2Vec x = v;
    F2Vec comb(n_gens_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (x.get(pivot_[r])) {
            x ^= rows_[r];
            F2Vec c = comb_[r];
            c.resize(n_gens_);
            comb ^= c;
        }
    if (!x.is_zero())
        return {};
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n_gens_; ++i)
        if (comb.get(i))
            idx.push_back(i);
    return idx;
}

std::vector<F2Vec> kernel_basis(const std::vector<F2Vec>& rows, std::size_t codomain_dim) {
    (void)codomain_dim;
    const std::size_t n = rows.size();
    struct Aug {
        F2Vec img, pre;
    };
    std::vector<Aug> work;
    work.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        F2Vec pre(n);
        pre.set(i, true);
        work.push_back({rows[i], pre});
    }
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> pivot_row;
    std::vector<F2Vec> ker;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (work[i].img.get(pivots[r])) {
                work[i].img ^= work[pivot_row[r]].img;
                work[i].pre ^= work[pivot_row[r]].pre;
            }
        if (work[i].img.is_zero())
            ker.push_back(work[i].pre);
        else {
            pivots.push_back(work[i].img.lowest());
            pivot_row.push_back(i);
        }
    }
    // canonicalize: mutually reduce, order by lowest pivot
    F2Solver s(n);
    std::vector<F2Vec> out;
    for (auto& v : ker)
        if (s.add(v))
            out.push_back(v);
    out.clear();
    for (std::size_t i = 0; i < s.rank(); ++i)
        out.push_back(s.row(i));
    std::sort(out.begin(), out.end(), [](const F2Vec& a, const F2Vec& b) { return a.lowest() < b.lowest(); });
    return out;
}

} // namespace qsk
