#include "lck/symbols.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

#include "lck/errors.hpp"

namespace lck {
namespace {

struct Entry {
    std::string name;
    SymbolKind kind;
};

struct Registry {
    std::mutex mu;
    std::deque<Entry> entries;
    std::unordered_map<std::string, SymbolId> index;

    Registry() {
        add("D", SymbolKind::Deriv);
        add("L", SymbolKind::Spectral);
        add("M", SymbolKind::Spectral);
        add("D1", SymbolKind::Slot);
        add("D2", SymbolKind::Slot);
        add("D3", SymbolKind::Slot);
    }

    SymbolId add(const std::string& name, SymbolKind kind) {
        auto id = static_cast<SymbolId>(entries.size());
        entries.push_back({name, kind});
        index.emplace(name, id);
        return id;
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

SymbolId Symbols::intern(std::string_view name, SymbolKind kind) {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    std::string key(name);
    auto it = r.index.find(key);
    if (it != r.index.end()) {
        if (r.entries[it->second].kind != kind)
            throw Error("symbol '" + key + "' already registered as " + to_string(r.entries[it->second].kind));
        return it->second;
    }
    return r.add(key, kind);
}

std::optional<SymbolId> Symbols::find(std::string_view name) {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    auto it = r.index.find(std::string(name));
    if (it == r.index.end()) return std::nullopt;
    return it->second;
}

const std::string& Symbols::name(SymbolId id) {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    return r.entries.at(id).name;
}

SymbolKind Symbols::kind(SymbolId id) {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    return r.entries.at(id).kind;
}

int Symbols::display_rank(SymbolId id) { return static_cast<int>(kind(id)); }

const char* to_string(SymbolKind kind) {
    switch (kind) {
        case SymbolKind::Deriv: return "DERIV";
        case SymbolKind::Spectral: return "SPECTRAL";
        case SymbolKind::Slot: return "SLOT";
        case SymbolKind::Param: return "PARAM";
    }
    return "?";
}

namespace sym {
SymbolId D() { return 0; }
SymbolId L() { return 1; }
SymbolId M() { return 2; }
SymbolId X() { return 3; }
SymbolId Y() { return 4; }
SymbolId Z() { return 5; }
}  // namespace sym

bool is_reserved_name(std::string_view name) {
    return name == "D" || name == "L" || name == "M" || name == "D1" || name == "D2" || name == "D3" ||
           (!name.empty() && name[0] == '_');
}

}  // namespace lck
