#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dg/error.hpp"

namespace dg {

// A permutation of {0, ..., n-1} stored as its image array: img[i] is the
// image of point i. Composition convention: compose(p, q) applies p first,
// then q, i.e. compose(p, q).img[i] == q.img[p.img[i]].
class Perm {
  public:
    Perm() = default;

    // Validates that img is a bijection on {0..n-1}; throws InvalidPermutation.
    explicit Perm(std::vector<int> img);

    static Perm identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    int fixed_points() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    // Lexicographic order on image arrays; the identity is minimal.
    bool operator<(const Perm& o) const { return img_ < o.img_; }

  private:
    std::vector<int> img_;
};

// Apply p first, then q. Degrees must match.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
// q^-1 * p * q (conjugation compatible with the apply-p-first convention).
Perm conjugate(const Perm& p, const Perm& q);

// Sorted multiset of cycle lengths (including fixed points as 1s).
std::vector<int> cycle_type(const Perm& p);
// Order of the permutation (lcm of cycle lengths).
std::uint64_t perm_order(const Perm& p);

// Cycle notation such as "(0 1 2)(3 4)"; the identity prints as "()".
std::string format_cycles(const Perm& p);

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        // FNV-1a over the image words.
        std::size_t h = 1469598103934665603ull;
        for (int x : p.images()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace dg
