#include "wittquant/polyring/handle.hpp"

namespace wittquant::polyring {

std::string witt_vector_str(const witt::WittVector<PolyRingHandle>& z) {
    std::string out = "[";
    for (uint32_t i = 1; i <= z.length(); ++i) {
        if (i > 1) out += ", ";
        out += z.component(i).str();
    }
    return out + "]";
}

witt::WittVector<PolyRingHandle> parse_witt_vector(std::shared_ptr<const PolyRingHandle> handle,
                                                   const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw parse_error("Witt vector text must be a bracketed component list");
    witt::WittVector<PolyRingHandle> z{handle, {}};
    std::string inner = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    while (start <= inner.size()) {
        std::size_t comma = inner.find(',', start);
        std::string part =
            comma == std::string::npos ? inner.substr(start) : inner.substr(start, comma - start);
        z.comps.push_back(handle->reduce(parse_polynomial(handle->desc, part)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (z.comps.empty()) throw parse_error("Witt vector needs at least one component");
    return z;
}

} // namespace wittquant::polyring
