#include "hnt/perm.hpp"

#include <numeric>

namespace hnt {

Perm::Perm(std::uint32_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0u);
}

Perm Perm::from_images(std::vector<std::uint32_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (std::uint32_t v : images) {
        if (v >= images.size() || seen[v])
            throw ParameterError("Perm: image array is not a bijection");
        seen[v] = true;
    }
    Perm p(0);
    p.images_ = std::move(images);
    return p;
}

Perm Perm::transposition(std::uint32_t degree, std::uint32_t a, std::uint32_t b) {
    if (a >= degree || b >= degree)
        throw ParameterError("Perm::transposition: point out of range");
    Perm p(degree);
    std::swap(p.images_[a], p.images_[b]);
    return p;
}

Perm Perm::full_cycle(std::uint32_t degree) {
    Perm p(degree);
    for (std::uint32_t i = 0; i < degree; ++i) p.images_[i] = (i + 1) % degree;
    return p;
}

Perm Perm::then(const Perm& other) const {
    if (degree() != other.degree())
        throw ParameterError("Perm: degree mismatch in composition");
    Perm result(0);
    result.images_.resize(degree());
    for (std::uint32_t i = 0; i < degree(); ++i)
        result.images_[i] = other.images_[images_[i]];
    return result;
}

Perm Perm::inverse() const {
    Perm result(0);
    result.images_.resize(degree());
    for (std::uint32_t i = 0; i < degree(); ++i) result.images_[images_[i]] = i;
    return result;
}

bool Perm::is_identity() const {
    for (std::uint32_t i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::string cycle_string(const Perm& p) {
    std::string out;
    std::vector<bool> done(p.degree(), false);
    for (std::uint32_t i = 0; i < p.degree(); ++i) {
        if (done[i] || p[i] == i) continue;
        out += "(";
        std::uint32_t j = i;
        bool first = true;
        do {
            if (!first) out += " ";
            first = false;
            out += std::to_string(j);
            done[j] = true;
            j = p[j];
        } while (j != i);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

}  // namespace hnt
