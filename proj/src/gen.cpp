#include "scm/gen.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace scm {

namespace {

// Unbiased uniform draw in [0, n); rejection keeps the stream reproducible
// across platforms (std::uniform_int_distribution is not portable).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

Sign random_sign(std::mt19937_64& rng) {
    return uniform_below(rng, 2) == 0 ? Sign::plus : Sign::minus;
}

} // namespace

Instance generate(const GenParams& params) {
    const std::int64_t alpha = params.alpha;
    if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
    if (params.beta < 0) throw std::invalid_argument("beta must be nonnegative");
    if (params.gamma < 0 || params.gamma > 1)
        throw std::invalid_argument("gamma must lie in [0, 1]");

    const std::int64_t pair_count = alpha * (alpha - 1);
    const std::int64_t m =
        params.edges ? *params.edges : std::llround(params.beta * static_cast<double>(alpha) / 2.0);
    if (m < 0 || m > pair_count)
        throw std::invalid_argument("edge count " + std::to_string(m) +
                                    " exceeds the " + std::to_string(pair_count) +
                                    " distinct ordered pairs");

    std::mt19937_64 rng(params.seed);
    RawInstance raw;
    for (std::int64_t v = 0; v < alpha; ++v) raw.vertices.push_back("v" + std::to_string(v));

    std::unordered_set<std::int64_t> used;
    used.reserve(static_cast<size_t>(m) * 2);
    while (static_cast<std::int64_t>(used.size()) < m) {
        std::int64_t code = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(pair_count)));
        if (!used.insert(code).second) continue;
        std::int64_t src = code / (alpha - 1);
        std::int64_t off = code % (alpha - 1);
        std::int64_t dst = off + (off >= src); // skip the diagonal
        raw.edges.push_back({raw.vertices[static_cast<size_t>(src)],
                             raw.vertices[static_cast<size_t>(dst)], random_sign(rng)});
    }

    // floor(gamma*alpha), with a nudge so decimal fractions like 0.3*10 land
    // on the intended integer despite binary rounding
    const std::int64_t observed = static_cast<std::int64_t>(
        std::floor(params.gamma * static_cast<double>(alpha) + 1e-9));
    std::vector<std::int64_t> order(static_cast<size_t>(alpha));
    std::iota(order.begin(), order.end(), 0);
    for (std::int64_t i = 0; i < observed; ++i) {
        std::int64_t j =
            i + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(alpha - i)));
        std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
        raw.observations.emplace_back(raw.vertices[static_cast<size_t>(order[static_cast<size_t>(i)])],
                                      random_sign(rng));
    }

    return guess_inputs(validate(raw));
}

} // namespace scm
