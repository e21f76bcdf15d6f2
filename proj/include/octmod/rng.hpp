#pragma once

#include <cstdint>
#include <string_view>

#include "octmod/bimodule.hpp"
#include "octmod/matrix.hpp"
#include "octmod/octonion.hpp"
#include "octmod/paralinear.hpp"
#include "octmod/rational.hpp"

namespace octmod {

/// splitmix64 step; fixed across platforms so that reports are byte-identical
/// for a given seed.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

[[nodiscard]] constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Per-trial seed: decouples checks from each other and from trial order.
[[nodiscard]] constexpr std::uint64_t derive_trial_seed(std::uint64_t seed, std::string_view check_name,
                                                        std::uint64_t trial) {
    return splitmix64(splitmix64(seed ^ fnv1a64(check_name)) + trial);
}

class Rng {
  public:
    explicit constexpr Rng(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ = splitmix64(state_);
        return state_;
    }

    /// Uniform-enough integer in [lo, hi]; modulo reduction is fine here, the
    /// generators only need reproducible variety.
    constexpr std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

  private:
    std::uint64_t state_;
};

/// Rational with numerator in [-bound, bound] and denominator in [1, bound].
[[nodiscard]] inline Rational gen_rational(Rng& rng, int bound) {
    const std::int64_t num = rng.next_int(-bound, bound);
    const std::int64_t den = rng.next_int(1, bound);
    return Rational(num) / Rational(den);
}

[[nodiscard]] inline Octonion gen_octonion(Rng& rng, int bound) {
    Octonion p;
    for (int i = 0; i < 8; ++i) p[i] = gen_rational(rng, bound);
    return p;
}

[[nodiscard]] inline Octonion gen_nonzero_octonion(Rng& rng, int bound) {
    for (;;) {
        Octonion p = gen_octonion(rng, bound);
        if (!p.is_zero()) return p;
    }
}

[[nodiscard]] inline Element gen_element(Rng& rng, const ModuleShape& shape, int bound) {
    Element x(shape);
    for (auto& c : x.coords) c = gen_octonion(rng, bound);
    return x;
}

[[nodiscard]] inline Matrix gen_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = gen_rational(rng, bound);
    }
    return m;
}

/// Arbitrary para-linear map: the stored real part is a free parameter, so a
/// random rank(cod) x real_dim(dom) matrix is exactly a random map.
[[nodiscard]] inline ParaLinearMap gen_para_linear(Rng& rng, const ModuleShape& dom, const ModuleShape& cod,
                                                   Chirality chi, int bound) {
    return {chi, dom, cod, gen_matrix(rng, cod.rank, dom.real_dim(), bound)};
}

/// Random O-linear map: the para-linear extension of a random real matrix
/// placed on the real parts.
[[nodiscard]] inline ParaLinearMap gen_o_linear(Rng& rng, const ModuleShape& dom, const ModuleShape& cod,
                                                Chirality chi, int bound) {
    Matrix packed(cod.real_dim(), dom.rank);
    for (std::size_t c = 0; c < cod.rank; ++c) {
        for (std::size_t a = 0; a < dom.rank; ++a) {
            packed.at(flat_index(c, 0), a) = gen_rational(rng, bound);
        }
    }
    return ext(packed, dom, cod, chi);
}

/// Random module shape of rank 1..max_rank; conjugated with probability 1/2
/// when allow_conjugated is set.
[[nodiscard]] inline ModuleShape gen_shape(Rng& rng, int max_rank, bool allow_conjugated = true) {
    const auto rank = static_cast<std::size_t>(rng.next_int(1, max_rank));
    const bool conj = allow_conjugated && (rng.next() & 1u) != 0;
    return ModuleShape{rank, conj};
}

} // namespace octmod
