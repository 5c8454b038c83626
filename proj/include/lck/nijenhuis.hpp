#pragma once

#include "lck/cochain.hpp"

namespace lck {

Report check_nijenhuis_operator(const LcaStructure& l, const CdHom& n);

// rho(N a) S v = S rho(N a) v + rho(a) S^2 v - S rho(a) S v on generators.
Report check_nijenhuis_structure(const RepStructure& r, const CdHom& n, const CdHom& s);

// rho(N a) S v = S rho(N a) v + S rho(a) S v - S^2 rho(a) v on generators.
Report check_semidirect_condition(const RepStructure& r, const CdHom& n, const CdHom& s);

struct SemidirectCharacterization {
    Report semidirect_side;  // N + S Nijenhuis on the semidirect product
    Report component_side;   // N Nijenhuis and the semidirect condition
    bool agree = false;
    Report combined;
};

SemidirectCharacterization check_semidirect_characterization(const RepStructure& r, const CdHom& n, const CdHom& s);

CdHom direct_sum(const CdHom& n, const CdHom& s);

// rho~(a) v = rho(N a) v - rho(a) S v + S rho(a) v over the deformed algebra; both are verified.
RepPtr deformed_rep(const RepStructure& r, const CdHom& n, const CdHom& s);

// varpi(a) v = rho(N a) v + rho(a) S v - S rho(a) v
SesquiTable varpi_table(const RepStructure& r, const CdHom& n, const CdHom& s);

struct LpPair {
    LcaStructure algebra;
    SesquiTable action;
};

// Pair with bracket [.,.] + t dN and action rho + t varpi.
LpPair trivial_pair_deformation(const RepStructure& r, const CdHom& n, const CdHom& s, SymbolId t);
Report check_lp_pair(const LpPair& p, const std::string& name);

}  // namespace lck
