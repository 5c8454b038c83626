#include "lck/errors.hpp"

#include <atomic>
#include <cstdlib>

namespace lck {
namespace {

unsigned initial_cap() {
    if (const char* env = std::getenv("LCK_MAX_DEGREE")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 64;
}

std::atomic<unsigned>& cap_storage() {
    static std::atomic<unsigned> cap{initial_cap()};
    return cap;
}

}  // namespace

ExponentOverflow::ExponentOverflow(std::string s, unsigned e, unsigned c)
    : Error("exponent " + std::to_string(e) + " of symbol '" + s + "' exceeds cap " + std::to_string(c)),
      symbol(std::move(s)),
      exponent(e),
      cap(c) {}

UnknownSymbol::UnknownSymbol(std::string s) : Error("unknown symbol '" + s + "'"), symbol(std::move(s)) {}

unsigned max_degree() { return cap_storage().load(); }
void set_max_degree(unsigned cap) { cap_storage().store(cap); }

}  // namespace lck
