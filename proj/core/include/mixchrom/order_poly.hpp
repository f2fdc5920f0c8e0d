#pragma once

#include "mixchrom/mixed_graph.hpp"
#include "mixchrom/oracle.hpp"
#include "mixchrom/polynomial.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mixchrom {

inline constexpr std::size_t kDefaultPosetBound = 8;

/// Finite strict partial order with a distinguished celeste subset.
///
/// The order is generated by `relations` (any DAG; the transitive closure is
/// computed on construction). A cyclic relation throws DomainError.
class BicoloredPoset {
public:
    BicoloredPoset(std::size_t size, std::vector<std::pair<std::size_t, std::size_t>> relations,
                   std::vector<bool> celeste, std::vector<std::string> names = {});

    std::size_t size() const noexcept { return size_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& relations() const noexcept { return relations_; }
    bool less(std::size_t a, std::size_t b) const { return closure_[a * size_ + b]; }
    bool is_celeste(std::size_t a) const { return celeste_.at(a); }
    const std::vector<bool>& celeste() const noexcept { return celeste_; }
    // Defaults to "0", "1", ... when no names were given.
    const std::string& name(std::size_t a) const { return names_.at(a); }
    const std::vector<std::size_t>& linear_extension() const noexcept { return extension_; }

private:
    std::size_t size_;
    std::vector<std::pair<std::size_t, std::size_t>> relations_;
    std::vector<bool> celeste_;
    std::vector<std::string> names_;
    std::vector<bool> closure_;
    std::vector<std::size_t> extension_;
};

/// Elements are the quotient vertices, u < v for every sigma-directed edge
/// u->v, and the celeste set is C(H) together with T(sigma).
BicoloredPoset poset_from_orientation(const Flat& flat, const Orientation& sigma);

// Maps phi : P -> {1..x} with phi(a) < phi(b) for a < b and phi(c) > y on celeste c.
// Requires 0 <= y <= x.
Count count_strict_maps(const BicoloredPoset& p, Count x, Count y);

// Maps with phi(a) <= phi(b) for a < b and phi(c) >= y on celeste c.
// Requires 1 <= y <= x.
Count count_weak_maps(const BicoloredPoset& p, Count x, Count y);

Polynomial omega_strict(const BicoloredPoset& p, std::size_t bound = kDefaultPosetBound);
Polynomial omega_weak(const BicoloredPoset& p, std::size_t bound = kDefaultPosetBound);

// (-1)^|P| * omega_strict(-x, -y) == omega_weak(x, y + 1) as polynomials.
bool check_bop_reciprocity(const BicoloredPoset& p, std::size_t bound = kDefaultPosetBound);

} // namespace mixchrom
