#ifndef QSK_SEQ_HPP
#define QSK_SEQ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qsk/error.hpp"

namespace qsk {

/* A sequence I = (i_1, ..., i_r) of Kudo-Araki operation indices.  The empty
   sequence is allowed and stands for no operation. */
using Seq = std::vector<int>;

/* excess(phi) = +infinity, kept as a tagged value so arithmetic stays honest. */
struct Excess {
    bool infinite = false;
    long long value = 0;

    static Excess inf() { return Excess{true, 0}; }
    static Excess fin(long long v) { return Excess{false, v}; }
    bool operator>(long long n) const { return infinite || value > n; }
    bool operator==(const Excess& o) const { return infinite == o.infinite && (infinite || value == o.value); }
};

void check_entries(const Seq& I); // throws on non-positive entries

/// i_j <= 2 i_{j+1} for all adjacent pairs; phi is admissible.
bool is_admissible(const Seq& I);

long long seq_dim(const Seq& I); // sum of entries
inline std::size_t seq_len(const Seq& I) { return I.size(); }

/// i_1 - base_dim - (i_2 + ... + i_r); +infinity for phi.
Excess excess(const Seq& I, long long base_dim = 0);

/// All admissible sequences with seq_dim == d and excess(I, base_dim) > 0,
/// nonempty, in lexicographic order.  d >= 1.
std::vector<Seq> admissible_seqs(int d, int base_dim);

/// Admissible sequences of dim d and excess > base_dim with length exactly len.
std::vector<Seq> admissible_seqs_len(int d, int base_dim, int len);

std::string seq_to_string(const Seq& I);

} // namespace qsk

#endif
