#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psl213/cyclotomic.hpp"

namespace psl213 {

// Dense square matrix over Q(zeta_13) (any single cyclotomic order).
class CycloMatrix {
public:
    CycloMatrix() : size_(0), order_(13) {}
    CycloMatrix(int size, long order)
        : size_(size), order_(order), a_(size * size, Cyclotomic::zero(order)) {}

    static CycloMatrix identity(int size, long order);

    int size() const { return size_; }
    long order() const { return order_; }

    Cyclotomic& at(int r, int c) { return a_[r * size_ + c]; }
    const Cyclotomic& at(int r, int c) const { return a_[r * size_ + c]; }

    CycloMatrix operator*(const CycloMatrix& o) const;
    CycloMatrix operator-() const;
    CycloMatrix pow(unsigned k) const;
    bool operator==(const CycloMatrix& o) const { return size_ == o.size_ && a_ == o.a_; }
    bool operator!=(const CycloMatrix& o) const { return !(*this == o); }

    std::vector<Cyclotomic> apply(std::span<const Cyclotomic> v) const;

    CycloMatrix inverse() const;  // exact Gaussian elimination
    Cyclotomic determinant() const;

    // lambda such that *this == lambda * o, if any
    std::optional<Cyclotomic> scalar_multiple_of(const CycloMatrix& o) const;
    bool is_scalar() const;  // lambda * I

    // canonical row-major serialization of canonical coordinates
    std::string key() const;

    // representative of {M, -M} whose first nonzero canonical coordinate is positive
    CycloMatrix projective_rep() const;

private:
    int size_;
    long order_;
    std::vector<Cyclotomic> a_;
};

struct MatrixGroup {
    std::vector<CycloMatrix> elements;   // deterministic order (sorted by key)
    std::size_t order = 0;               // strict matrix count
    std::size_t projective_order = 0;    // count modulo {+I, -I}
    bool contains_minus_identity = false;
    bool bound_exceeded = false;
};

// Breadth-first closure of the generated matrix group; stops (and flags) when
// more than `bound` strict elements appear.
MatrixGroup closure(std::span<const CycloMatrix> generators, std::size_t bound = 5000);

}  // namespace psl213
