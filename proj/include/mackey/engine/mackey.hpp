#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mackey/rep/representation.hpp"

namespace mackey::engine {

using exact::ExactMatrix;
using group::Element;
using group::Subgroup;
using rep::Representation;

/// G, subgroups H and K, a representation rho of H, and the double cosets
/// K\G/H.  For finite G both subgroups are open, Ind = cInd, and the
/// restriction/induction statement needs no further hypotheses.
struct MackeyInstance {
  group::GroupPtr group;
  Subgroup h;
  Subgroup k;
  Representation rho;
  group::DoubleCosetDecomposition decomposition;

  /// Throws NotASubgroup when H and K live in different groups.
  static MackeyInstance make(const Subgroup& k, Representation rho);
  std::string describe() const;
};

/// One summand Ind_{K cap gH}^K Res (g-rho) of the right-hand side.
struct CosetSummand {
  Element representative;            // g
  Subgroup intersection;             // K cap gHg^-1
  Representation restricted;         // Res_{K cap gH} g-rho
  std::vector<Element> k_representatives;  // right cosets of the intersection in K
  Representation induced;            // Ind_{K cap gH}^K of `restricted`
  std::size_t offset = 0;            // first basis index inside the direct sum
};

struct MackeyRhs {
  std::vector<CosetSummand> summands;
  Representation rep;  // direct sum of the induced summands
};

/// Res_K Ind_H^G rho in the canonical induced basis.
Representation mackey_lhs(const MackeyInstance& inst);

/// Direct sum over g in K\G/H.  `representatives` defaults to the smallest
/// element of each double coset; any other choice must list one element per
/// double coset, in the decomposition's class order.
MackeyRhs mackey_rhs(const MackeyInstance& inst, std::span<const Element> representatives = {});

/// The map LHS -> RHS sending f to (k -> f(g^-1 k)) in the g-summand, i.e.
/// restriction of f to the double coset H g^-1 K followed by evaluation
/// along K.  Written in the canonical bases of both sides.
ExactMatrix mackey_map(const MackeyInstance& inst, const MackeyRhs& rhs);

/// The map RHS -> LHS sending F in the g-summand to the function
/// fhat(h g^-1 k) = rho(h) F(k) on H g^-1 K, extended by zero.  Every
/// factorization of every coset representative is evaluated; disagreement
/// throws IllDefinedExtension.
ExactMatrix mackey_map_inverse(const MackeyInstance& inst, const MackeyRhs& rhs);

/// For each RHS basis vector of the g-summand supported on
/// (K cap gH) k_j, checks that the image under `inverse` is supported on
/// exactly the right cosets inside H g^-1 (K cap gH) k_j.
bool support_identity_holds(const MackeyInstance& inst, const MackeyRhs& rhs,
                            const ExactMatrix& inverse);

/// Another element of each double coset: k_max * g * h_max with k_max, h_max
/// the largest elements of K and H.
std::vector<Element> rotated_representatives(const MackeyInstance& inst);

struct CorollaryReport {
  std::size_t lhs_dim = 0;  // dim Hom_G(Ind_K sigma, Ind_H tau), one nullspace
  std::size_t rhs_dim = 0;  // sum over K\G/H of dim Hom_{K cap gH}(sigma, g-tau)
  std::vector<std::size_t> per_coset;
  bool equal() const noexcept { return lhs_dim == rhs_dim; }
};

/// Both sides of Hom_G(Ind_K^G sigma, Ind_H^G tau) = sum_g Hom_{K cap gH}(sigma, g-tau),
/// each from its own hom_space computation.
CorollaryReport verify_corollary(const Representation& sigma, const Representation& tau);

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Recompute the right-hand side with rotated_representatives() and check
  /// that it is isomorphic to the canonical one via M' M^-1.
  bool check_rotation = false;
  /// Fill the corollary fields with sigma = trivial of K and tau = rho.
  bool compute_corollary = true;
};

struct MackeyReport {
  std::string instance;
  std::size_t lhs_dim = 0;
  std::size_t rhs_dim = 0;
  std::vector<std::string> coset_representatives;
  std::vector<std::size_t> per_coset_dims;
  std::vector<std::size_t> per_coset_indices;  // [K : K cap gH]
  std::size_t index_h = 0;                      // [G : H]
  bool dimension_identity = false;              // sum of indices == [G:H]
  bool dims_equal = false;
  bool map_is_equivariant = false;
  std::size_t equivariance_elements_checked = 0;
  bool map_is_bijective = false;
  bool round_trip_identity = false;
  bool support_identity = false;
  bool characters_equal = false;
  std::optional<bool> rotation_consistent;
  ExactMatrix witness;
  std::optional<std::size_t> corollary_lhs_dim;
  std::optional<std::size_t> corollary_rhs_dim;
  /// First violated check, empty when everything holds.
  std::string first_violation;

  bool passed() const noexcept { return first_violation.empty(); }
};

/// Builds both sides and the explicit maps and runs every exact check.
/// Failed checks are recorded in the report, not thrown.
MackeyReport verify_mackey(const MackeyInstance& inst, const VerifyOptions& options = {});

}  // namespace mackey::engine
