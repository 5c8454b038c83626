#pragma once

#include <memory>
#include <string>

#include "lck/lca.hpp"

namespace lck {

// rho(e_i)_L v_j = sum_k Q[i][j][k](L, D) v_k
class RepStructure {
public:
    RepStructure(LcaPtr algebra, CdModule module, SesquiTable table);

    const LcaPtr& algebra_ptr() const { return algebra_; }
    const LcaStructure& algebra() const { return *algebra_; }
    const CdModule& module() const { return module_; }
    const std::string& name() const { return module_.name; }
    std::size_t rank() const { return module_.rank(); }
    const SesquiTable& table() const { return table_; }
    bool verified() const { return verified_; }
    RepStructure renamed(std::string name) const;

private:
    friend std::shared_ptr<const RepStructure> verify(const RepStructure&);
    LcaPtr algebra_;
    CdModule module_;
    SesquiTable table_;
    bool verified_ = false;
};

using RepPtr = std::shared_ptr<const RepStructure>;

Element act(const RepStructure& r, const Element& a, const Element& v, const Poly& spectral);
Element act_eval(const RepStructure& r, const Element& a, const Element& v);

Report check_rep_axioms(const RepStructure& r);
RepPtr verify(const RepStructure& r);

RepStructure adjoint(const LcaPtr& l);
RepStructure trivial(const LcaPtr& l, std::size_t m, const std::string& name = {});
// Action on the conformal dual; generators named <v>_star.
RepStructure coadjoint(const RepStructure& r);

// Basis: algebra generators, then module generators (renamed when they collide).
LcaStructure semidirect(const RepStructure& r);

}  // namespace lck
