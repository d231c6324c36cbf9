#ifndef SCM_SIGN_HPP
#define SCM_SIGN_HPP

#include <cstdint>
#include <optional>

namespace scm {

/// Two-valued variation sign for vertices and edges.
enum class Sign : std::uint8_t { plus, minus };

/// Sign multiplication; plus is the identity.
constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::plus : Sign::minus;
}

/// Influence of a source vertex through an edge: the sign product.
constexpr Sign influence(Sign source, Sign edge) { return source * edge; }

constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// ASP-facing rendering: plus -> 1, minus -> -1.
constexpr int sign_int(Sign s) { return s == Sign::plus ? 1 : -1; }

constexpr std::optional<Sign> sign_from_char(char c) {
    if (c == '+') return Sign::plus;
    if (c == '-') return Sign::minus;
    return std::nullopt;
}

} // namespace scm

#endif
