#include "dg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dg {

Perm::Perm(std::vector<int> img) : img_(std::move(img)) {
    const int n = static_cast<int>(img_.size());
    std::vector<char> seen(n, 0);
    for (int x : img_) {
        if (x < 0 || x >= n) {
            throw InvalidPermutation("image value " + std::to_string(x) +
                                     " out of range for degree " + std::to_string(n));
        }
        if (seen[x]) {
            throw InvalidPermutation("repeated image value " + std::to_string(x));
        }
        seen[x] = 1;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i) {
        if (img_[i] != i) return false;
    }
    return true;
}

int Perm::fixed_points() const {
    int c = 0;
    for (int i = 0; i < degree(); ++i) c += (img_[i] == i);
    return c;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) {
        throw PreconditionViolation("compose: degree mismatch");
    }
    std::vector<int> img(p.degree());
    for (int i = 0; i < p.degree(); ++i) img[i] = q[p[i]];
    return Perm(std::move(img));
}

Perm inverse(const Perm& p) {
    std::vector<int> img(p.degree());
    for (int i = 0; i < p.degree(); ++i) img[p[i]] = i;
    return Perm(std::move(img));
}

Perm conjugate(const Perm& p, const Perm& q) {
    // (q^-1 p q)[i] = q[p[q^-1[i]]]
    return compose(compose(inverse(q), p), q);
}

std::vector<int> cycle_type(const Perm& p) {
    const int n = p.degree();
    std::vector<char> seen(n, 0);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

std::uint64_t perm_order(const Perm& p) {
    std::uint64_t ord = 1;
    for (int len : cycle_type(p)) {
        ord = std::lcm(ord, static_cast<std::uint64_t>(len));
    }
    return ord;
}

std::string format_cycles(const Perm& p) {
    const int n = p.degree();
    std::vector<char> seen(n, 0);
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || p[i] == i) {
            seen[i] = 1;
            continue;
        }
        any = true;
        out << '(';
        bool first = true;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            if (!first) out << ' ';
            out << j;
            first = false;
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

}  // namespace dg
