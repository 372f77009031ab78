#include "qsk/seq.hpp"

#include <algorithm>

namespace qsk {

void check_entries(const Seq& I) {
    for (int i : I)
        if (i <= 0)
            throw domain_error("malformed sequence: entry " + std::to_string(i) + " is not positive");
}

bool is_admissible(const Seq& I) {
    check_entries(I);
    for (std::size_t j = 0; j + 1 < I.size(); ++j)
        if (I[j] > 2 * I[j + 1])
            return false;
    return true;
}

long long seq_dim(const Seq& I) {
    long long d = 0;
    for (int i : I)
        d += i;
    return d;
}

Excess excess(const Seq& I, long long base_dim) {
    if (I.empty())
        return Excess::inf();
    check_entries(I);
    return Excess::fin(2LL * I[0] - seq_dim(I) - base_dim);
}

namespace {

// all admissible sequences of dim exactly d, grouped so callers can filter
void gen_admissible(int d, std::vector<Seq>& out) {
    out.push_back({d});
    for (int a = 1; a < d; ++a) {
        std::vector<Seq> tails;
        gen_admissible(d - a, tails);
        for (auto& t : tails)
            if (a <= 2 * t.front()) {
                Seq s;
                s.reserve(t.size() + 1);
                s.push_back(a);
                s.insert(s.end(), t.begin(), t.end());
                out.push_back(std::move(s));
            }
    }
}

} // namespace

std::vector<Seq> admissible_seqs(int d, int base_dim) {
    if (d < 1)
        return {};
    std::vector<Seq> all;
    gen_admissible(d, all);
    std::vector<Seq> out;
    for (auto& s : all)
        if (excess(s) > base_dim)
            out.push_back(std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Seq> admissible_seqs_len(int d, int base_dim, int len) {
    auto all = admissible_seqs(d, base_dim);
    std::vector<Seq> out;
    for (auto& s : all)
        if ((int)s.size() == len)
            out.push_back(std::move(s));
    return out;
}

std::string seq_to_string(const Seq& I) {
    std::string s = "(";
    for (std::size_t j = 0; j < I.size(); ++j) {
        if (j)
            s += ",";
        s += std::to_string(I[j]);
    }
    return s + ")";
}

} // namespace qsk
