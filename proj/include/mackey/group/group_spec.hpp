#pragma once

#include <string_view>
#include <vector>

#include "mackey/group/finite_group.hpp"
#include "mackey/group/subgroup.hpp"

namespace mackey::group {

/// S_n on n points, 1 <= n <= 6.  Generators (1 2), (1 2 ... n).
GroupPtr symmetric_group(unsigned n);
/// Dihedral group of order 2n acting on the n-gon, n >= 3.
/// Generators: rotation (1 2 ... n), reflection i -> n+1-i.
GroupPtr dihedral_group(unsigned n);
/// Z/n acting regularly on n points.  Generator (1 2 ... n).
GroupPtr cyclic_group(unsigned n);
/// Quaternion group acting on itself by right multiplication.  Points 1..8
/// are 1, -1, i, -i, j, -j, k, -k; generators are right multiplication by i
/// and by j.
GroupPtr quaternion_group();
/// A x B acting on the disjoint union of the point sets.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

/// Grammar of group descriptions (whitespace-insensitive):
///
///   spec    := product | 'perm:' '[' cycles (',' cycles)* ']'
///   product := atom ('x' atom)*
///   atom    := 'S' n | 'D' n | 'Z' n | 'C' n | 'Q8'
///
/// e.g. "S4", "D5", "Z12", "S3xZ2", "perm: [(1 2),(1 2 3 4)]".  A perm group
/// acts on as many points as the largest point mentioned.
GroupPtr parse_group_spec(std::string_view spec);

/// Element grammar:
///
///   element := factor ('*'? factor)*
///   factor  := atom ('^' ['-'] integer)?
///   atom    := 'e' | 'g' integer | cycle
///   cycle   := '(' point ((' ' | ',') point)* ')'
///
/// 'gK' is the K-th defining generator of the group (1-based).  A cycle
/// written without separators, such as "(123)", is read digit by digit.
/// Juxtaposed factors multiply left to right: "(1 2)(2 3)" applies (1 2)
/// first.
Element parse_element(const FiniteGroup& g, std::string_view text);

/// Comma-separated element list, optionally wrapped in brackets:
/// "[(1 2), g2^2]".  An empty list "[]" is allowed.
std::vector<Element> parse_element_list(const FiniteGroup& g, std::string_view text);

/// generate_subgroup(g, parse_element_list(g, text))
Subgroup parse_subgroup(const GroupPtr& g, std::string_view text);

}  // namespace mackey::group
