#pragma once

#include <utility>

#include "lck/nijenhuis.hpp"

namespace lck {

// [T u L T v] = T(rho(T u)_L v - rho(T v)_{-L-D} u), T : V -> A
Report check_o_operator(const RepStructure& r, const CdHom& t);

// u *_L v = rho(T u)_L v
SesquiTable induced_lsa(const RepStructure& r, const CdHom& t);
Report check_left_symmetric(const SesquiTable& lsa, const CdModule& m);

// [u L v]^T = u *_L v - v *_{-L-D} u, without any precondition.
LcaStructure subadjacent_table(const RepStructure& r, const CdHom& t);

struct Subadjacent {
    SesquiTable lsa;
    LcaPtr algebra;
    Report report;  // left-symmetry, axioms, homomorphism property
};

// Requires T to pass check_o_operator; throws PreconditionFailed otherwise.
Subadjacent subadjacent(const RepStructure& r, const CdHom& t);

// k1 T1 + k2 T2 is an O-operator for indeterminate k1, k2.
Report check_compatible(const RepStructure& r, const CdHom& t1, const CdHom& t2);

struct OnCandidate {
    CdHom t, n, s;
};

Report check_on_structure(const RepStructure& r, const CdHom& t, const CdHom& n, const CdHom& s);

struct Hierarchy {
    std::vector<CdHom> ops;  // N^k o T for k = 0..kmax
    Report report;
};

Hierarchy hierarchy(const RepStructure& r, const CdHom& t, const CdHom& n, const CdHom& s, unsigned kmax);

// N = T1 o T2^{-1}
CdHom nijenhuis_from_compatible(const RepStructure& r, const CdHom& t1, const CdHom& t2);
// (T, N, S) and (T1, N, S) with S = T^{-1} o T1 and N = T1 o T^{-1}
std::pair<OnCandidate, OnCandidate> on_from_compatible(const RepStructure& r, const CdHom& t, const CdHom& t1);

}  // namespace lck
