#include "cubic/fp.hpp"

#include "cubic/series.hpp"

namespace cubic::fp {

std::vector<Vec3> reduced_basis(std::vector<Vec3> vs, std::uint32_t p) {
    std::vector<Vec3> out;
    for (int col = 0; col < 3; ++col) {
        const auto c = static_cast<std::size_t>(col);
        std::size_t piv = vs.size();
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (vs[i][c]) {
                piv = i;
                break;
            }
        if (piv == vs.size()) continue;
        Vec3 v = scale(vs[piv], inv_mod(vs[piv][c], p), p);
        vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(piv));
        for (auto& w : vs)
            if (w[c]) w = add(w, scale(v, p - w[c], p), p);
        for (auto& w : out)
            if (w[c]) w = add(w, scale(v, p - w[c], p), p);
        out.push_back(v);
    }
    return out;
}

std::vector<Vec3> all_vectors(std::uint32_t p) {
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(p) * p * p);
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c) out.push_back({a, b, c});
    return out;
}

} // namespace cubic::fp
