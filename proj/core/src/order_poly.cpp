#include "mixchrom/order_poly.hpp"

#include "mixchrom/errors.hpp"

#include <algorithm>

namespace mixchrom {

BicoloredPoset::BicoloredPoset(std::size_t size, std::vector<std::pair<std::size_t, std::size_t>> relations,
                               std::vector<bool> celeste, std::vector<std::string> names)
    : size_(size), relations_(std::move(relations)), celeste_(std::move(celeste)), names_(std::move(names)) {
    if (celeste_.size() != size_) {
        throw DomainError("celeste mask size differs from poset size");
    }
    if (names_.empty()) {
        for (std::size_t i = 0; i < size_; ++i) {
            names_.push_back(std::to_string(i));
        }
    } else if (names_.size() != size_) {
        throw DomainError("name list size differs from poset size");
    }
    closure_.assign(size_ * size_, false);
    for (const auto& [a, b] : relations_) {
        if (a >= size_ || b >= size_) {
            throw DomainError("relation names an element outside the poset");
        }
        closure_[a * size_ + b] = true;
    }
    for (std::size_t k = 0; k < size_; ++k) {
        for (std::size_t i = 0; i < size_; ++i) {
            if (!closure_[i * size_ + k]) {
                continue;
            }
            for (std::size_t j = 0; j < size_; ++j) {
                if (closure_[k * size_ + j]) {
                    closure_[i * size_ + j] = true;
                }
            }
        }
    }
    for (std::size_t i = 0; i < size_; ++i) {
        if (closure_[i * size_ + i]) {
            throw DomainError("relation is cyclic");
        }
    }
    // Sorting by number of predecessors yields a linear extension.
    std::vector<std::size_t> below(size_, 0);
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) {
            below[j] += closure_[i * size_ + j];
        }
        extension_.push_back(i);
    }
    std::stable_sort(extension_.begin(), extension_.end(),
                     [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
}

BicoloredPoset poset_from_orientation(const Flat& flat, const Orientation& sigma) {
    const std::size_t n = flat.quotient.vertex_count();
    if (sigma.graph != underlying(flat.quotient)) {
        throw GraphError("orientation does not orient the flat's underlying graph");
    }
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (const auto& a : sigma.directed) {
        relations.emplace_back(a.tail, a.head);
    }
    std::vector<bool> celeste(n, false);
    for (Vertex v : flat.contracted) {
        celeste[v] = true;
    }
    for (Vertex v : tails(flat, sigma)) {
        celeste[v] = true;
    }
    return BicoloredPoset(n, std::move(relations), std::move(celeste), flat.quotient.names());
}

namespace {

// Backtracks along the linear extension: each element's lower bound comes
// from its already-placed predecessors and its celeste threshold.
class MapCounter {
public:
    MapCounter(const BicoloredPoset& p, Count x, Count y, bool strict) : p_(p), x_(x), y_(y), strict_(strict) {
        const std::size_t n = p.size();
        const auto& order = p.linear_extension();
        predecessors_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (p.less(order[j], order[i])) {
                    predecessors_[i].push_back(j);
                }
            }
        }
        // Longest chain strictly above each element caps its value under strict maps.
        headroom_.assign(n, 0);
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (p.less(order[i], order[j])) {
                    headroom_[i] = std::max(headroom_[i], headroom_[j] + 1);
                }
            }
        }
        values_.assign(n, 0);
    }

    Count run() { return extend(0); }

private:
    Count extend(std::size_t pos) {
        if (pos == p_.size()) {
            return 1;
        }
        Count low = 1;
        if (p_.is_celeste(p_.linear_extension()[pos])) {
            low = strict_ ? y_ + 1 : std::max<Count>(y_, 1);
        }
        for (std::size_t j : predecessors_[pos]) {
            low = std::max(low, strict_ ? values_[j] + 1 : values_[j]);
        }
        const Count cap = strict_ ? headroom_[pos] : 0;
        if (x_ < cap || low > x_ - cap) {
            return 0;
        }
        const Count high = x_ - cap;
        if (pos + 1 == p_.size()) {
            return high - low + 1;
        }
        Count total = 0;
        for (Count v = low; v <= high; ++v) {
            values_[pos] = v;
            total += extend(pos + 1);
        }
        return total;
    }

    const BicoloredPoset& p_;
    Count x_;
    Count y_;
    bool strict_;
    std::vector<std::vector<std::size_t>> predecessors_;
    std::vector<Count> headroom_;
    std::vector<Count> values_;
};

void check_size(const BicoloredPoset& p, std::size_t bound) {
    if (p.size() > bound) {
        throw BoundError("order polynomial limit: " + std::to_string(p.size()) + " elements exceeds " +
                         std::to_string(bound));
    }
}

} // namespace

Count count_strict_maps(const BicoloredPoset& p, Count x, Count y) {
    if (y > x) {
        throw DomainError("threshold exceeds palette");
    }
    return MapCounter(p, x, y, true).run();
}

Count count_weak_maps(const BicoloredPoset& p, Count x, Count y) {
    if (y > x) {
        throw DomainError("threshold exceeds palette");
    }
    if (y < 1) {
        throw DomainError("weak maps need a threshold of at least 1");
    }
    return MapCounter(p, x, y, false).run();
}

Polynomial omega_strict(const BicoloredPoset& p, std::size_t bound) {
    check_size(p, bound);
    return interpolate_triangular_grid(static_cast<unsigned>(p.size()),
                                       [&p](Count x, Count y) { return to_integer(count_strict_maps(p, x, y)); });
}

Polynomial omega_weak(const BicoloredPoset& p, std::size_t bound) {
    check_size(p, bound);
    return interpolate_triangular_grid(static_cast<unsigned>(p.size()),
                                       [&p](Count x, Count y) { return to_integer(count_weak_maps(p, x, y)); });
}

bool check_bop_reciprocity(const BicoloredPoset& p, std::size_t bound) {
    Polynomial lhs = negate_vars(omega_strict(p, bound));
    if (p.size() % 2 == 1) {
        lhs = -lhs;
    }
    return lhs == shift_y(omega_weak(p, bound), 1);
}

} // namespace mixchrom
