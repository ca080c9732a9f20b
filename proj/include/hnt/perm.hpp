#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hnt/errors.hpp"

namespace hnt {

// A permutation of {0,...,n-1} stored as an image array: i maps to images[i].
// Right-action convention throughout: i^p = p[i], and (xy) means "x then y",
// so i^(xy) = (i^x)^y.
class Perm {
 public:
    explicit Perm(std::uint32_t degree);  // identity

    static Perm from_images(std::vector<std::uint32_t> images);
    static Perm transposition(std::uint32_t degree, std::uint32_t a, std::uint32_t b);
    static Perm full_cycle(std::uint32_t degree);  // (0 1 ... degree-1)

    std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
    std::uint32_t operator[](std::uint32_t i) const { return images_[i]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    Perm then(const Perm& other) const;  // this, then other
    Perm inverse() const;
    bool is_identity() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend bool operator<(const Perm& a, const Perm& b) {
        return a.images_ < b.images_;
    }

 private:
    std::vector<std::uint32_t> images_;
};

// Cycle notation, e.g. "(0 2 1)(3 4)"; the identity prints as "()".
std::string cycle_string(const Perm& p);

}  // namespace hnt
