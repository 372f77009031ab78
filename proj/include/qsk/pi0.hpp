#ifndef QSK_PI0_HPP
#define QSK_PI0_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "qsk/error.hpp"

namespace qsk {

/* One cyclic summand of the 2-local pi_0: order 2^d, or infinite cyclic when
   d == -1 (only the k = 0 sphere). */
struct Pi0Summand {
    int d = 1;
    std::string name;
};

/* Element = integer coefficient vector over the summands, reduced mod the
   orders (coefficients of finite summands live in [0, 2^d)). */
using Pi0Elt = std::vector<long long>;

class Pi0Spec {
  public:
    int k = 0;
    std::vector<Pi0Summand> summands;

    std::size_t rank() const { return summands.size(); }
    long long order(std::size_t j) const { return summands[j].d < 0 ? 0 : (1LL << summands[j].d); }

    Pi0Elt zero() const { return Pi0Elt(rank(), 0); }
    Pi0Elt gen(std::size_t j) const;
    Pi0Elt reduce(Pi0Elt v) const;
    Pi0Elt add(const Pi0Elt& a, const Pi0Elt& b) const;
    Pi0Elt neg(const Pi0Elt& a) const;
    Pi0Elt scale(const Pi0Elt& a, long long n) const;
    bool is_zero(const Pi0Elt& a) const;

    int find(const std::string& name) const; // -1 if absent
    std::string render(const Pi0Elt& a) const; // inner text of "[...]"
};

using Pi0Ptr = std::shared_ptr<const Pi0Spec>;

/// 2-local pi_0 QS^{-k} for k <= 9, as shipped in data/pi0.dat.
Pi0Ptr builtin_pi0(int k);

/* pi0 data lines: `pi0 k=<k> summands=2^d1,2^d2,... names=g1,g2,...`
   (k = 0 is `summands=Z`; trivial groups write `summands=-`). */
std::vector<Pi0Spec> load_pi0(std::istream& in, const std::string& what = "<stream>");
void save_pi0(std::ostream& out, const Pi0Spec& spec);

} // namespace qsk

#endif
