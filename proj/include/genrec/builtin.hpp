#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genrec/group.hpp"
#include "genrec/projective.hpp"

namespace genrec {

/// A constructed permutation group together with the canonical labels of
/// the points it acts on and the order it must have. The order is checked
/// against the stabilizer chain at construction.
struct BuiltinGroup {
    std::string name;
    std::string family;
    int n = 0;  // projective/affine dimension, or m for sym/alt
    int q = 0;  // 0 for sym/alt
    PermGroup group;
    std::vector<std::string> labels;
    std::uint64_t expected_order = 0;
    std::string generator_scheme;
};

/// Families: pgl, psl, pgammal (on PG(n,q)); agl (on GF(q)^n); sym, alt
/// (natural action on n points; q ignored).
BuiltinGroup builtin_group(const std::string& family, int n, int q);

std::uint64_t pgl_order(int dim, int q);       // dim = n+1
std::uint64_t psl_order(int dim, int q);
std::uint64_t pgammal_order(int dim, int q);
std::uint64_t agl_order(int d, int q);
std::uint64_t factorial(int m);

bool is_builtin_family(const std::string& family);

} // namespace genrec
