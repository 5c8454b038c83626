#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lck {

enum class SymbolKind { Deriv, Spectral, Slot, Param };

using SymbolId = std::uint32_t;

// Process-wide interning table. Ids are stable for the lifetime of the process.
class Symbols {
public:
    // Returns the existing id when the name is already registered with the same kind.
    static SymbolId intern(std::string_view name, SymbolKind kind);
    static std::optional<SymbolId> find(std::string_view name);
    static const std::string& name(SymbolId id);
    static SymbolKind kind(SymbolId id);
    // Key used for canonical ordering in rendering and oracle point assignment.
    static int display_rank(SymbolId id);
};

const char* to_string(SymbolKind kind);

namespace sym {
SymbolId D();   // output-slot derivation
SymbolId L();   // lambda
SymbolId M();   // mu
SymbolId X();   // tensor slot 1 derivative, token D1
SymbolId Y();   // tensor slot 2 derivative, token D2
SymbolId Z();   // tensor slot 3 derivative, token D3
}  // namespace sym

bool is_reserved_name(std::string_view name);

}  // namespace lck
