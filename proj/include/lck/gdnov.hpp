#pragma once

#include "lck/lca.hpp"

namespace lck {

// a_i o a_j = sum_k m[i][j][k] a_k over Q[params]
struct NovikovAlgebra {
    std::string name;
    std::vector<std::string> basis;
    std::vector<Poly> m;

    NovikovAlgebra() = default;
    NovikovAlgebra(std::string name, std::vector<std::string> basis);
    std::size_t dim() const { return basis.size(); }
    Poly& at(std::size_t i, std::size_t j, std::size_t k) { return m[(i * dim() + j) * dim() + k]; }
    const Poly& at(std::size_t i, std::size_t j, std::size_t k) const { return m[(i * dim() + j) * dim() + k]; }
    std::vector<Poly> mul(const std::vector<Poly>& x, const std::vector<Poly>& y) const;
    bool operator==(const NovikovAlgebra&) const = default;
};

// Novikov algebra with a Lie bracket on the same space.
struct GDBialgebra {
    std::string name;
    NovikovAlgebra novikov;
    LieAlgebra lie;
    bool operator==(const GDBialgebra&) const = default;
};

Report check_novikov(const NovikovAlgebra& v);
Report check_gd(const GDBialgebra& g);

// [a L b] = D(b o a) + L(a o b + b o a) + [b, a]
LcaStructure quadratic_from_gd(const GDBialgebra& g);

Report check_nijenhuis_novikov(const NovikovAlgebra& v, const CdHom& n);
Report check_nijenhuis_lie(const LieAlgebra& g, const CdHom& n);
Report check_nijenhuis_gd(const GDBialgebra& g, const CdHom& n);
NovikovAlgebra deformed_novikov(const NovikovAlgebra& v, const CdHom& n);
LieAlgebra deformed_lie(const LieAlgebra& g, const CdHom& n);
GDBialgebra deformed_gd(const GDBialgebra& g, const CdHom& n);

// Constant-matrix hom on the quadratic algebra; N must be free of D.
CdHom lift_hom(const CdHom& n);
bool is_scalar_matrix(const CdHom& n);

}  // namespace lck
