#include "wittquant/expkey.hpp"

#include <algorithm>

namespace wittquant {

namespace {

void enumerate(std::size_t nvars, std::size_t slot, uint32_t remaining, ExpKey& cur,
               std::vector<ExpKey>& out) {
    if (slot + 1 == nvars) {
        for (uint32_t e = 0; e <= remaining; ++e) {
            cur.e[slot] = uint16_t(e);
            out.push_back(cur);
        }
        cur.e[slot] = 0;
        return;
    }
    for (uint32_t e = 0; e <= remaining; ++e) {
        cur.e[slot] = uint16_t(e);
        enumerate(nvars, slot + 1, remaining - e, cur, out);
    }
    cur.e[slot] = 0;
}

} // namespace

std::vector<ExpKey> monomials_up_to_degree(std::size_t nvars, uint32_t d) {
    if (nvars == 0 || nvars > ExpKey::capacity)
        throw domain_error("monomials_up_to_degree: variable count out of range");
    std::vector<ExpKey> out;
    ExpKey cur;
    enumerate(nvars, 0, d, cur, out);
    std::sort(out.begin(), out.end(), GradedLexDesc{});
    return out;
}

} // namespace wittquant
