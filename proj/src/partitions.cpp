#include "schurweyl/partitions.hpp"

#include "schurweyl/errors.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace schurweyl {

namespace {

using u128 = unsigned __int128;

u128 checked_mul(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw numerical_failure_error("128-bit overflow in exact partition arithmetic");
    return r;
}

u128 factorial(unsigned n) {
    u128 r = 1;
    for (unsigned k = 2; k <= n; ++k) r = checked_mul(r, k);
    return r;
}

std::uint64_t to_u64(u128 v, const char* what) {
    if (v > static_cast<u128>(UINT64_MAX))
        throw numerical_failure_error(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(v);
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void check_particle_cap(unsigned n, const char* who) {
    if (n > kMaxParticles)
        throw resource_limit_error(std::string(who) + ": size " + std::to_string(n) +
                                   " exceeds the cap of " + std::to_string(kMaxParticles));
}

} // namespace

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("partition must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
    }
    unsigned sum = 0;
    for (unsigned p : parts_) {
        if (sum > UINT32_MAX - p)
            throw std::invalid_argument("partition total overflows");
        sum += p;
    }
    total_ = sum;
}

std::vector<Partition> enumerate_partitions(unsigned n) {
    if (n == 0) throw std::invalid_argument("enumerate_partitions: n must be positive");
    check_particle_cap(n, "enumerate_partitions");

    std::vector<Partition> out;
    std::vector<unsigned> cur{n};
    for (;;) {
        out.emplace_back(cur);
        // Find the last part greater than 1; everything after it is a tail of 1s.
        std::size_t k = cur.size();
        while (k > 0 && cur[k - 1] == 1) --k;
        if (k == 0) break;                       // all ones: final partition
        unsigned ones = static_cast<unsigned>(cur.size() - k);
        unsigned v = --cur[k - 1];               // shrink the pivot by one
        cur.resize(k);
        unsigned rem = ones + 1;                 // mass to redistribute in parts <= v
        while (rem > v) {
            cur.push_back(v);
            rem -= v;
        }
        if (rem > 0) cur.push_back(rem);
    }
    return out;
}

Partition conjugate_partition(const Partition& p) {
    const auto& parts = p.parts();
    std::vector<unsigned> cols(parts[0]);
    for (unsigned j = 0; j < parts[0]; ++j) {
        unsigned count = 0;
        for (unsigned part : parts)
            if (part >= j + 1) ++count;
        cols[j] = count;
    }
    return Partition(std::move(cols));
}

std::vector<std::vector<unsigned>> hook_lengths(const Partition& p) {
    const auto& parts = p.parts();
    Partition conj = conjugate_partition(p);
    const auto& cols = conj.parts();
    std::vector<std::vector<unsigned>> grid(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        grid[i].resize(parts[i]);
        for (unsigned j = 0; j < parts[i]; ++j)
            grid[i][j] = (parts[i] - (j + 1)) + (cols[j] - (i + 1)) + 1;
    }
    return grid;
}

std::uint64_t dim_symmetric(const Partition& p) {
    check_particle_cap(p.total(), "dim_symmetric");
    u128 hooks = 1;
    for (const auto& row : hook_lengths(p))
        for (unsigned h : row) hooks = checked_mul(hooks, h);
    u128 fact = factorial(p.total());
    if (fact % hooks != 0)
        throw numerical_failure_error("hook product does not divide the factorial");
    return to_u64(fact / hooks, "symmetric-group dimension");
}

std::uint64_t dim_unitary(const Partition& p, unsigned levels) {
    if (levels == 0) throw std::invalid_argument("dim_unitary: levels must be positive");
    check_particle_cap(p.total(), "dim_unitary");
    if (p.rows() > levels) return 0;
    // Product over cells of (levels + j - i) / hook(i, j), reduced as we go.
    auto hooks = hook_lengths(p);
    u128 num = 1, den = 1;
    for (std::size_t i = 0; i < hooks.size(); ++i) {
        for (std::size_t j = 0; j < hooks[i].size(); ++j) {
            u128 content = static_cast<u128>(levels + j - i);   // i < levels here
            num = checked_mul(num, content);
            den = checked_mul(den, hooks[i][j]);
            u128 g = gcd128(num, den);
            num /= g;
            den /= g;
        }
    }
    if (den != 1)
        throw numerical_failure_error("unitary-group dimension is not integral");
    return to_u64(num, "unitary-group dimension");
}

std::uint64_t class_size(const Partition& p) {
    check_particle_cap(p.total(), "class_size");
    // N! / prod_k (k^{m_k} * m_k!) over distinct part values k with multiplicity m_k.
    const auto& parts = p.parts();
    u128 den = 1;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        unsigned mult = static_cast<unsigned>(j - i);
        for (unsigned m = 0; m < mult; ++m) den = checked_mul(den, parts[i]);
        den = checked_mul(den, factorial(mult));
        i = j;
    }
    u128 fact = factorial(p.total());
    if (fact % den != 0)
        throw numerical_failure_error("class size is not integral");
    return to_u64(fact / den, "conjugacy class size");
}

DecompositionTable decomposition_table(unsigned particles, unsigned levels) {
    if (particles == 0) throw std::invalid_argument("decomposition_table: particles must be positive");
    if (levels == 0) throw std::invalid_argument("decomposition_table: levels must be positive");
    check_particle_cap(particles, "decomposition_table");

    DecompositionTable table;
    table.particles = particles;
    table.levels = levels;

    u128 dim = 1;
    for (unsigned k = 0; k < particles; ++k) dim = checked_mul(dim, levels);
    table.space_dim = to_u64(dim, "full space dimension");

    u128 total = 0;
    for (const Partition& shape : enumerate_partitions(particles)) {
        std::uint64_t f = dim_symmetric(shape);
        std::uint64_t d = dim_unitary(shape, levels);
        total += checked_mul(f, d);
        table.rows.push_back({shape, f, d});
    }
    table.total = to_u64(total, "decomposition total");
    if (table.total != table.space_dim)
        throw numerical_failure_error("decomposition table violates sum(f*d) == levels^particles");
    return table;
}

} // namespace schurweyl
