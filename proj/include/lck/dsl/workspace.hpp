#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lck/dsl/lexer.hpp"
#include "lck/gdnov.hpp"
#include "lck/symplectic.hpp"

namespace lck::dsl {

enum class ObjectKind { Algebra, Module, Map, Tensor, Form, Lie, Novikov, Gd };

const char* to_string(ObjectKind k);

struct MapObject {
    std::string name;
    std::string src;  // names of the endpoint objects
    std::string dst;
    CdModule src_module;
    CdModule dst_module;
    CdHom hom;
};

struct CheckStmt {
    std::string kind;
    std::vector<std::string> args;
    int line = 0;
    int column = 0;
};

// Names are unique across all object kinds.
struct Workspace {
    std::vector<std::string> scalars;
    std::map<std::string, LcaPtr> algebras;
    std::map<std::string, RepPtr> modules;
    std::map<std::string, MapObject> maps;
    std::map<std::string, Tensor2> tensors;
    std::map<std::string, TwoForm> forms;
    std::map<std::string, LieAlgebra> lies;
    std::map<std::string, NovikovAlgebra> novikovs;
    std::map<std::string, GDBialgebra> gds;
    std::vector<std::pair<ObjectKind, std::string>> order;
    std::vector<CheckStmt> checks;

    std::optional<ObjectKind> kind_of(const std::string& name) const;
    // Module of generators of an algebra, module, Lie, Novikov or GD object.
    std::optional<CdModule> carrier(const std::string& name) const;

    const LcaPtr& algebra(const std::string& name) const;
    const RepPtr& module(const std::string& name) const;
    const MapObject& map(const std::string& name) const;
    const Tensor2& tensor(const std::string& name) const;
    const TwoForm& form(const std::string& name) const;
    const LieAlgebra& lie(const std::string& name) const;
    const NovikovAlgebra& novikov(const std::string& name) const;
    const GDBialgebra& gd(const std::string& name) const;
};

Workspace parse(const std::string& source);
Workspace parse_file(const std::string& path);

// Canonical text of one object preceded by every object it depends on.
std::string emit_object(const Workspace& ws, const std::string& name);
// Several objects sharing one dependency prefix.
std::string emit_objects(const Workspace& ws, const std::vector<std::string>& names);
// Canonical text of the whole workspace.
std::string emit_workspace(const Workspace& ws);

std::string render_element(const Element& e, const std::vector<std::string>& basis);
std::string render_tensor(const Tensor2& t);

// Structural equality of two objects of the same kind.
bool same_object(const Workspace& a, const std::string& na, const Workspace& b, const std::string& nb);

}  // namespace lck::dsl
