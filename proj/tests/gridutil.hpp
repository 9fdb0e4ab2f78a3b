#pragma once

#include <vector>

#include "planarlie/catalog.hpp"

namespace gridutil {

using planarlie::CatalogType;
using planarlie::Rat;

inline std::vector<std::vector<long>> m_patterns(int n) {
    std::vector<std::vector<long>> out;
    std::vector<long> p1, p2;
    for (long i = 0; i <= n; ++i) p1.push_back(i);
    p2.push_back(-1);
    for (long i = 0; i < n; ++i) p2.push_back(i);
    out.push_back(p1);
    out.push_back(p2);
    switch (n) {
        case 1: out.push_back({-3, 3}); break;
        case 2: out.push_back({-3, 0, 3}); break;
        case 3: out.push_back({-3, -1, 1, 3}); break;
        case 4: out.push_back({-3, -1, 0, 1, 3}); break;
        default: break;
    }
    return out;
}

/// The standard parameter grid: n in 0..4 where applicable, lambda in {0,1},
/// beta in {1, 2, -1, 1/2}, distinct m_i within [-3, 3], alpha in {0, 1, -1},
/// module dimension parameter m in 0..3.
inline std::vector<CatalogType> standard_grid() {
    using namespace planarlie;
    std::vector<CatalogType> g;
    const std::vector<Rat> betas{Rat(1), Rat(2), Rat(-1), Rat(1, 2)};
    const std::vector<Rat> alphas{Rat(0), Rat(1), Rat(-1)};
    const std::vector<Rat> gammas{Rat(0), Rat(1), Rat(-1)};
    for (int n = 1; n <= 4; ++n) g.push_back(T1{n});
    for (int n = 1; n <= 4; ++n) g.push_back(T2{n});
    for (int n = 0; n <= 4; ++n)
        for (int l : {0, 1}) g.push_back(T3{n, l});
    for (int n = 1; n <= 4; ++n)
        for (const auto& b : betas)
            for (const auto& m : m_patterns(n)) g.push_back(T4{n, b, m});
    for (int n = 0; n <= 4; ++n)
        for (const auto& b : betas)
            for (const auto& c : gammas) g.push_back(T5{n, b, c});
    for (int n = 0; n <= 4; ++n) g.push_back(T6{n});
    for (int n = 1; n <= 4; ++n)
        for (const auto& b : betas)
            for (const auto& m : m_patterns(n)) g.push_back(T7{n, b, m});
    for (int n = 0; n <= 4; ++n)
        for (const auto& a : alphas)
            for (const auto& b : betas) g.push_back(T8{n, a, b});
    g.push_back(T9{false});
    g.push_back(T9{true});
    g.push_back(T10{});
    for (int m = 0; m <= 3; ++m) g.push_back(T11{m});
    for (int m = 0; m <= 3; ++m) g.push_back(T12{m});
    return g;
}

} // namespace gridutil
