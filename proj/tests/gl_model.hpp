#ifndef HSSPOS_TESTS_GL_MODEL_HPP
#define HSSPOS_TESTS_GL_MODEL_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "hsspos/chevalley.hpp"

// Matrix-unit model of A_n: e_a = sign[a] * E_ij for a = e_i - e_j.  Signs
// are fixed on simple roots and propagated along [E_ik, E_kj] = E_ij; the
// model is then an independent reference for the whole structure table.
struct GlModel {
    const hsspos::StructureTable* t = nullptr;
    std::vector<int> sign;                     // per root index
    std::vector<std::pair<int, int>> entry;    // (i, j) with root = e_i - e_j

    explicit GlModel(const hsspos::StructureTable& table) : t(&table) {
        const auto& rs = table.roots();
        const auto n = hsspos::RootSystem::Index(rs.size());
        sign.assign(std::size_t(n), 0);
        entry.assign(std::size_t(n), {-1, -1});
        for (hsspos::RootSystem::Index a = 0; a < n; ++a) {
            const auto& tw = rs.root(a).twice();
            for (std::size_t k = 0; k < tw.size(); ++k) {
                if (tw[k] == 2) entry[std::size_t(a)].first = int(k);
                if (tw[k] == -2) entry[std::size_t(a)].second = int(k);
            }
        }
        const auto pc = hsspos::RootSystem::Index(rs.positive_count());
        for (hsspos::RootSystem::Index a = 0; a < pc; ++a) {
            if (rs.height(a) == 1) {
                sign[std::size_t(a)] = 1;
                continue;
            }
            const auto [i, j] = entry[std::size_t(a)];
            const std::size_t dim = rs.ambient_dim();
            const auto b = rs.index_of(hsspos::Root::unit(dim, std::size_t(i)) - hsspos::Root::unit(dim, std::size_t(i + 1)));
            const auto c = rs.index_of(hsspos::Root::unit(dim, std::size_t(i + 1)) - hsspos::Root::unit(dim, std::size_t(j)));
            const int nbc = table.n(b, c);
            if (nbc != 1 && nbc != -1) throw std::logic_error("A-type constant with magnitude != 1");
            sign[std::size_t(a)] = sign[std::size_t(b)] * sign[std::size_t(c)] * nbc;
        }
        for (hsspos::RootSystem::Index a = 0; a < pc; ++a) sign[std::size_t(rs.negative(a))] = sign[std::size_t(a)];
    }

    // Coefficient c with [E_a, E_b] = c E_{a+b} for matrix units, 0 when a+b
    // is not a root.
    int unit_commutator(hsspos::RootSystem::Index a, hsspos::RootSystem::Index b) const {
        const auto [i, j] = entry[std::size_t(a)];
        const auto [k, l] = entry[std::size_t(b)];
        if (j == k && i != l) return 1;
        if (l == i && k != j) return -1;
        return 0;
    }
};

#endif
