#pragma once

#include <filesystem>
#include <optional>

#include "psl213/matrix.hpp"

namespace psl213 {

// The six-dimensional representation over Q(zeta_13).
//
// The generators satisfy the defining relations only projectively: as
// matrices S^2 = (ST)^3 = -I and T^13 = I, so <S, T> is the direct product
// of {+I, -I} with a simple group of order 1092, and all identities below
// that look asymmetric by a sign become exact after passing to PGL(6).
CycloMatrix gen_S();
CycloMatrix gen_T();

CycloMatrix gen_P();  // S T^-1 S
CycloMatrix gen_Q();  // S T^3

// The distinguished order-6 (projectively) element, as a word in P and Q.
CycloMatrix build_H_word();
// Its expected signed-permutation shape (the word evaluates to the negative).
CycloMatrix h_signed_permutation();

struct RelationsResult {
    // scalar lambda with g = lambda * I, when g is scalar
    std::optional<Cyclotomic> s_squared;
    std::optional<Cyclotomic> t_pow13;
    std::optional<Cyclotomic> st_cubed;
    bool projectively_trivial() const;
    bool strictly_trivial() const;
};
RelationsResult relations_check();

// Versioned on-disk dump of a closure, keyed by a content hash of the exact
// generator entries so stale caches self-invalidate.
std::string generator_content_hash();
void save_group_cache(const std::filesystem::path& file, const MatrixGroup& g);
std::optional<MatrixGroup> load_group_cache(const std::filesystem::path& file);

}  // namespace psl213
