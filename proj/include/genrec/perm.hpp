#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "genrec/error.hpp"

namespace genrec {

/// A permutation of {0,…,m−1} stored as an image array.
///
/// The action convention is left-to-right everywhere in this library:
/// compose(p, r) applies p first, so compose(p, r)(x) == r(p(x)).
class Permutation {
public:
    explicit Permutation(int degree);                 // identity
    explicit Permutation(std::vector<int> images);    // validates bijection

    static Permutation identity(int degree) { return Permutation(degree); }

    /// Parse disjoint-cycle notation over 1-based point names, e.g.
    /// "(1 2 3)(4 5)" or "()" for the identity. Commas are treated as
    /// whitespace. Unnamed points are fixed.
    static Permutation parse_cycles(std::string_view text, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    /// Cycle notation with 1-based points; "()" for the identity.
    std::string to_cycles() const;

    /// Points moved by this permutation, ascending.
    std::vector<int> support() const;
    int smallest_moved_point() const;  // -1 if identity

    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    bool operator!=(const Permutation& other) const { return images_ != other.images_; }

    std::size_t hash() const;

private:
    std::vector<int> images_;
};

/// Left-to-right composition: result(x) = r(p(x)).
Permutation compose(const Permutation& p, const Permutation& r);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

} // namespace genrec
