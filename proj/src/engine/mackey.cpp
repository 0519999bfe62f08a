#include "mackey/engine/mackey.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <utility>

#include "mackey/error.hpp"
#include "mackey/rep/character.hpp"
#include "mackey/rep/intertwiner.hpp"

namespace mackey::engine {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// coset_of[y] = i for y in H x_i, over the whole parent group.
std::vector<std::size_t> right_coset_index(const Subgroup& h, std::span<const Element> reps) {
  const auto& g = h.group();
  std::vector<std::size_t> coset_of(g.order(), kNone);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Element y : h.elements()) coset_of[g.compose(y, reps[i])] = i;
  }
  return coset_of;
}

bool block_is_zero(const ExactMatrix& m, std::size_t r0, std::size_t c0, std::size_t rows,
                   std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!m(r0 + r, c0 + c).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

MackeyInstance MackeyInstance::make(const Subgroup& k, Representation rho) {
  const Subgroup h = rho.group();
  if (k.parent() != h.parent()) throw NotASubgroup("H and K must be subgroups of one group");
  auto decomposition = group::enumerate_double_cosets(k, h);
  return MackeyInstance{h.parent(), h, k, std::move(rho), std::move(decomposition)};
}

std::string MackeyInstance::describe() const {
  return "G=" + group->name() + " H=" + h.describe() + " K=" + k.describe() + " rho=" + rho.label();
}

Representation mackey_lhs(const MackeyInstance& inst) {
  return rep::restrict(rep::induce(inst.rho, Subgroup::whole(inst.group)), inst.k);
}

MackeyRhs mackey_rhs(const MackeyInstance& inst, std::span<const Element> representatives) {
  const auto& d = inst.decomposition;
  std::vector<Element> reps(representatives.begin(), representatives.end());
  if (reps.empty()) reps = d.representatives;
  if (reps.size() != d.representatives.size()) {
    throw PreconditionViolated("one representative per double coset is required");
  }
  MackeyRhs out{{}, Representation::trivial(inst.k)};
  std::vector<Representation> parts;
  std::size_t offset = 0;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const Element g = reps[c];
    if (d.class_of[g] != c) throw PreconditionViolated("representative lies in the wrong double coset");
    Subgroup gh = group::conjugate_subgroup(g, inst.h);
    Subgroup inter = group::intersect(inst.k, gh);
    Representation restricted = rep::restrict(rep::conjugate_rep(g, inst.rho), inter);
    auto k_reps = group::right_coset_representatives(inst.k, inter);
    Representation induced = rep::induce(restricted, inst.k, k_reps);
    const std::size_t dim = induced.dim();
    parts.push_back(induced);
    out.summands.push_back(CosetSummand{g, std::move(inter), std::move(restricted), std::move(k_reps),
                                        std::move(induced), offset});
    offset += dim;
  }
  out.rep = rep::direct_sum(inst.k, parts);
  return out;
}

ExactMatrix mackey_map(const MackeyInstance& inst, const MackeyRhs& rhs) {
  const auto& g = *inst.group;
  const auto xs = group::right_coset_representatives(inst.h);
  const auto coset_of = right_coset_index(inst.h, xs);
  const std::size_t d = inst.rho.dim();
  ExactMatrix m(rhs.rep.dim(), xs.size() * d);
  for (const auto& s : rhs.summands) {
    const Element g_inv = g.inverse(s.representative);
    for (std::size_t j = 0; j < s.k_representatives.size(); ++j) {
      // F(k_j) = f(g^-1 k_j) = rho(h') f(x_i) with g^-1 k_j = h' x_i
      const Element y = g.compose(g_inv, s.k_representatives[j]);
      const std::size_t i = coset_of[y];
      const Element hprime = g.compose(y, g.inverse(xs[i]));
      m.set_block(s.offset + j * d, i * d, inst.rho(hprime));
    }
  }
  return m;
}

ExactMatrix mackey_map_inverse(const MackeyInstance& inst, const MackeyRhs& rhs) {
  const auto& g = *inst.group;
  const auto xs = group::right_coset_representatives(inst.h);
  const std::size_t d = inst.rho.dim();
  ExactMatrix m(xs.size() * d, rhs.rep.dim());
  for (const auto& s : rhs.summands) {
    const auto k_coset = right_coset_index(s.intersection, s.k_representatives);
    std::vector<std::optional<ExactMatrix>> blocks(xs.size() * s.k_representatives.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (Element k : inst.k.elements()) {
        // x_i = h' g^-1 k  <=>  h' = x_i k^-1 g
        const Element hprime = g.compose(g.compose(xs[i], g.inverse(k)), s.representative);
        if (!inst.h.contains(hprime)) continue;
        const std::size_t j = k_coset[k];
        const Element l = g.compose(k, g.inverse(s.k_representatives[j]));
        // fhat(x_i) = rho(h') F(k) = rho(h') sigma_g(l) F(k_j)
        ExactMatrix value = inst.rho(hprime) * s.restricted(l);
        auto& slot = blocks[i * s.k_representatives.size() + j];
        if (!slot) {
          slot = std::move(value);
        } else if (!(*slot == value)) {
          throw IllDefinedExtension("extension from the summand of " + g.label(s.representative) +
                                    " depends on the factorization of " + g.label(xs[i]));
        }
      }
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < s.k_representatives.size(); ++j) {
        const auto& slot = blocks[i * s.k_representatives.size() + j];
        if (slot) m.set_block(i * d, s.offset + j * d, *slot);
      }
    }
  }
  return m;
}

bool support_identity_holds(const MackeyInstance& inst, const MackeyRhs& rhs,
                            const ExactMatrix& inverse) {
  const auto& g = *inst.group;
  const auto xs = group::right_coset_representatives(inst.h);
  const auto coset_of = right_coset_index(inst.h, xs);
  const std::size_t d = inst.rho.dim();
  if (d == 0) return true;
  for (const auto& s : rhs.summands) {
    const Element g_inv = g.inverse(s.representative);
    for (std::size_t j = 0; j < s.k_representatives.size(); ++j) {
      // H g^-1 supp F with supp F = (K cap gH) k_j, as a set of right H-cosets
      std::set<std::size_t> expected;
      for (Element l : s.intersection.elements()) {
        expected.insert(coset_of[g.compose(g_inv, g.compose(l, s.k_representatives[j]))]);
      }
      for (std::size_t v = 0; v < d; ++v) {
        std::set<std::size_t> actual;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          if (!block_is_zero(inverse, i * d, s.offset + j * d + v, d, 1)) actual.insert(i);
        }
        if (actual != expected) return false;
      }
    }
  }
  return true;
}

std::vector<Element> rotated_representatives(const MackeyInstance& inst) {
  const auto& g = *inst.group;
  const Element k_max = inst.k.elements().back();
  const Element h_max = inst.h.elements().back();
  std::vector<Element> out;
  for (Element r : inst.decomposition.representatives) {
    out.push_back(g.compose(g.compose(k_max, r), h_max));
  }
  return out;
}

CorollaryReport verify_corollary(const Representation& sigma, const Representation& tau) {
  const Subgroup& k = sigma.group();
  const Subgroup& h = tau.group();
  if (k.parent() != h.parent()) throw NotASubgroup("sigma and tau must live in one group");
  const Subgroup whole = Subgroup::whole(k.parent());
  CorollaryReport out;
  out.lhs_dim = rep::hom_space(rep::induce(sigma, whole), rep::induce(tau, whole)).dimension();
  const auto decomposition = group::enumerate_double_cosets(k, h);
  for (Element g : decomposition.representatives) {
    Subgroup inter = group::intersect(k, group::conjugate_subgroup(g, h));
    const std::size_t dim = rep::hom_space(rep::restrict(sigma, inter),
                                           rep::restrict(rep::conjugate_rep(g, tau), inter))
                                .dimension();
    out.per_coset.push_back(dim);
    out.rhs_dim += dim;
  }
  return out;
}

MackeyReport verify_mackey(const MackeyInstance& inst, const VerifyOptions& options) {
  MackeyReport r;
  r.instance = inst.describe();
  auto fail = [&](const std::string& what) {
    if (r.first_violation.empty()) r.first_violation = what;
  };
  const auto& g = *inst.group;

  const Representation lhs = mackey_lhs(inst);
  const MackeyRhs rhs = mackey_rhs(inst);
  r.lhs_dim = lhs.dim();
  r.rhs_dim = rhs.rep.dim();
  r.index_h = g.order() / inst.h.order();
  std::size_t index_sum = 0;
  for (const auto& s : rhs.summands) {
    r.coset_representatives.push_back(g.label(s.representative));
    r.per_coset_dims.push_back(s.induced.dim());
    r.per_coset_indices.push_back(inst.k.order() / s.intersection.order());
    index_sum += r.per_coset_indices.back();
  }
  r.dimension_identity = index_sum == r.index_h;
  if (!r.dimension_identity) {
    fail("sum of [K : K cap gH] = " + std::to_string(index_sum) + " differs from [G : H] = " +
         std::to_string(r.index_h));
  }
  r.dims_equal = r.lhs_dim == r.rhs_dim && r.lhs_dim == r.index_h * inst.rho.dim();
  if (!r.dims_equal) {
    fail("dim LHS = " + std::to_string(r.lhs_dim) + ", dim RHS = " + std::to_string(r.rhs_dim));
  }

  const ExactMatrix m = mackey_map(inst, rhs);
  r.witness = m;

  // Equivariance: every element of small K, otherwise generators plus 20 random elements.
  std::vector<Element> to_check;
  if (inst.k.order() <= 60) {
    to_check.assign(inst.k.elements().begin(), inst.k.elements().end());
  } else {
    to_check.assign(inst.k.generators().begin(), inst.k.generators().end());
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, inst.k.order() - 1);
    for (int t = 0; t < 20; ++t) to_check.push_back(inst.k.elements()[pick(rng)]);
  }
  r.map_is_equivariant = r.dims_equal;
  if (r.dims_equal) {
    for (Element k : to_check) {
      if (!(m * lhs(k) == rhs.rep(k) * m)) {
        r.map_is_equivariant = false;
        fail("M lhs(k) != rhs(k) M at k = " + g.label(k));
        break;
      }
    }
    r.equivariance_elements_checked = to_check.size();
  }

  if (r.dims_equal) {
    try {
      const ExactMatrix inv = mackey_map_inverse(inst, rhs);
      const ExactMatrix id = ExactMatrix::identity(r.lhs_dim);
      r.round_trip_identity = (m * inv == id) && (inv * m == id);
      if (!r.round_trip_identity) fail("mackey_map and its inverse do not compose to the identity");
      r.map_is_bijective = exact::rank(m) == r.lhs_dim;
      if (!r.map_is_bijective) fail("mackey_map is not of full rank");
      r.support_identity = support_identity_holds(inst, rhs, inv);
      if (!r.support_identity) fail("support of an extended function differs from H g^-1 supp F");
    } catch (const IllDefinedExtension& e) {
      fail(e.what());
    }
  }

  r.characters_equal = rep::character_of(lhs) == rep::character_of(rhs.rep);
  if (!r.characters_equal) fail("characters of the two sides differ");

  if (options.check_rotation && r.dims_equal) {
    const auto rotated = rotated_representatives(inst);
    const MackeyRhs rhs2 = mackey_rhs(inst, rotated);
    const ExactMatrix m2 = mackey_map(inst, rhs2);
    bool ok = rhs2.rep.dim() == r.rhs_dim;
    if (ok && r.round_trip_identity) {
      // M2 M^-1 : RHS -> RHS' must be an invertible intertwiner
      const ExactMatrix w = m2 * mackey_map_inverse(inst, rhs);
      ok = rep::is_intertwiner(w, rhs.rep, rhs2.rep) && exact::rank(w) == r.rhs_dim;
    } else {
      ok = false;
    }
    r.rotation_consistent = ok;
    if (!ok) fail("rotated double coset representatives give a non-isomorphic right-hand side");
  }

  if (options.compute_corollary) {
    const auto cor = verify_corollary(Representation::trivial(inst.k), inst.rho);
    r.corollary_lhs_dim = cor.lhs_dim;
    r.corollary_rhs_dim = cor.rhs_dim;
    if (!cor.equal()) {
      fail("corollary: dim Hom_G = " + std::to_string(cor.lhs_dim) + ", coset sum = " +
           std::to_string(cor.rhs_dim));
    }
  }
  return r;
}

}  // namespace mackey::engine
