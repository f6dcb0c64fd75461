#include "dg/classes.hpp"

#include <vector>

#include "dg/error.hpp"

namespace dg {

std::size_t aut_class_count(const PermGroup& n, const PermGroup& a) {
    return conjugation_orbits(a, n).size();
}

std::uint64_t stars_and_bars(std::uint64_t t, std::uint64_t k) {
    if (t < 1 || k < 1)
        throw PreconditionViolation("stars_and_bars needs t >= 1 and k >= 1");
    // binomial(t + k - 1, k), multiplying small factors first keeps each
    // intermediate value an exact integer
    unsigned __int128 acc = 1;
    std::uint64_t n = t + k - 1;
    std::uint64_t r = k < n - k ? k : n - k;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            throw CapExceeded("binomial overflows 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

std::size_t brute_force_power_classes(const PermGroup& t,
                                      const PermGroup& aut_ambient, int k,
                                      std::size_t state_cap) {
    if (k < 1) throw PreconditionViolation("tuple length must be >= 1");
    const std::size_t n = t.order();
    std::size_t states = 1;
    for (int i = 0; i < k; ++i) {
        if (states > state_cap / n)
            throw CapExceeded("tuple space exceeds the state cap");
        states *= n;
    }
    // conjugation action of each ambient generator on element indices
    std::vector<std::vector<int>> conj;
    for (const Perm& a : aut_ambient.generators()) {
        std::vector<int> m(n);
        for (std::size_t i = 0; i < n; ++i) {
            int j = t.element_index(conjugate(t.elements()[i], a));
            if (j < 0)
                throw NotNormalized("conjugation leaves the base group");
            m[i] = j;
        }
        conj.push_back(std::move(m));
    }
    std::vector<std::size_t> pw(static_cast<std::size_t>(k));  // n^position
    pw[0] = 1;
    for (int i = 1; i < k; ++i) pw[static_cast<std::size_t>(i)] =
        pw[static_cast<std::size_t>(i - 1)] * n;
    auto digit = [&](std::size_t code, int pos) {
        return (code / pw[static_cast<std::size_t>(pos)]) % n;
    };
    std::vector<char> seen(states, 0);
    std::vector<std::size_t> queue;
    std::size_t orbits = 0;
    for (std::size_t start = 0; start < states; ++start) {
        if (seen[start]) continue;
        ++orbits;
        seen[start] = 1;
        queue.assign(1, start);
        while (!queue.empty()) {
            std::size_t code = queue.back();
            queue.pop_back();
            auto push = [&](std::size_t next) {
                if (!seen[next]) {
                    seen[next] = 1;
                    queue.push_back(next);
                }
            };
            for (int pos = 0; pos < k; ++pos) {
                std::size_t d = digit(code, pos);
                for (const auto& m : conj)
                    push(code + (static_cast<std::size_t>(m[d]) - d) *
                                    pw[static_cast<std::size_t>(pos)]);
            }
            for (int pos = 0; pos + 1 < k; ++pos) {
                std::size_t d0 = digit(code, pos), d1 = digit(code, pos + 1);
                push(code + (d1 - d0) * pw[static_cast<std::size_t>(pos)] +
                     (d0 - d1) * pw[static_cast<std::size_t>(pos + 1)]);
            }
        }
    }
    return orbits;
}

}  // namespace dg
