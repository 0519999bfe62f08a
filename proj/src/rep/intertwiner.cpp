#include "mackey/rep/intertwiner.hpp"

#include <random>
#include <utility>

#include "mackey/error.hpp"
#include "mackey/rep/character.hpp"

namespace mackey::rep {

namespace {

// Row-major flattening of A (m x n) into a vector of unknowns.
ExactMatrix unflatten(const std::vector<CycloNumber>& v, std::size_t m, std::size_t n) {
  return ExactMatrix(m, n, v);
}

// Sylvester system A s - t A = 0 in the m*n entries of A.
ExactMatrix sylvester_system(const ExactMatrix& s, const ExactMatrix& t) {
  const std::size_t m = t.rows();
  const std::size_t n = s.rows();
  ExactMatrix sys(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        if (!s(k, j).is_zero()) sys(row, i * n + k) += s(k, j);
      }
      for (std::size_t k = 0; k < m; ++k) {
        if (!t(i, k).is_zero()) sys(row, k * n + j) -= t(i, k);
      }
    }
  }
  return sys;
}

}  // namespace

IntertwinerBasis hom_space(const Representation& sigma, const Representation& tau) {
  if (!(sigma.group() == tau.group())) {
    throw NotASubgroup("intertwiners need representations of the same group");
  }
  const std::size_t m = tau.dim();
  const std::size_t n = sigma.dim();
  IntertwinerBasis out;
  if (m == 0 || n == 0) return out;

  const auto gens = sigma.group().generators();
  if (gens.empty()) {
    for (std::size_t idx = 0; idx < m * n; ++idx) {
      std::vector<CycloNumber> v(m * n);
      v[idx] = 1;
      out.basis.push_back(unflatten(v, m, n));
    }
    return out;
  }

  for (const auto& v : exact::solve_nullspace(sylvester_system(sigma(gens[0]), tau(gens[0])))) {
    out.basis.push_back(unflatten(v, m, n));
  }
  for (std::size_t g = 1; g < gens.size() && !out.basis.empty(); ++g) {
    const ExactMatrix& s = sigma(gens[g]);
    const ExactMatrix& t = tau(gens[g]);
    // Columns: the defect B s - t B of each current basis element.
    ExactMatrix sys(m * n, out.basis.size());
    for (std::size_t b = 0; b < out.basis.size(); ++b) {
      ExactMatrix defect = out.basis[b] * s - t * out.basis[b];
      for (std::size_t e = 0; e < m * n; ++e) sys(e, b) = defect.entries()[e];
    }
    std::vector<ExactMatrix> next;
    for (const auto& coeffs : exact::solve_nullspace(sys)) {
      ExactMatrix combo(m, n);
      for (std::size_t b = 0; b < coeffs.size(); ++b) {
        if (!coeffs[b].is_zero()) combo += out.basis[b] * coeffs[b];
      }
      next.push_back(std::move(combo));
    }
    out.basis = std::move(next);
  }
  return out;
}

bool is_intertwiner(const ExactMatrix& a, const Representation& sigma, const Representation& tau) {
  if (!(sigma.group() == tau.group())) return false;
  if (a.rows() != tau.dim() || a.cols() != sigma.dim()) return false;
  for (Element g : sigma.group().elements()) {
    if (!(a * sigma(g) == tau(g) * a)) return false;
  }
  return true;
}

IsomorphismResult is_isomorphic(const Representation& sigma, const Representation& tau,
                                std::uint64_t seed, int max_attempts) {
  IsomorphismResult result;
  if (!(sigma.group() == tau.group()) || sigma.dim() != tau.dim()) return result;
  if (!(character_of(sigma) == character_of(tau))) return result;
  bool same_images = true;
  for (std::size_t i = 0; i < sigma.images().size() && same_images; ++i) {
    same_images = sigma.images()[i] == tau.images()[i];
  }
  if (same_images) {
    result.isomorphic = true;
    result.method = IsomorphismMethod::witness;
    result.witness = ExactMatrix::identity(sigma.dim());
    return result;
  }
  auto hom = hom_space(sigma, tau);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    ExactMatrix a(tau.dim(), sigma.dim());
    for (const auto& b : hom.basis) a += b * CycloNumber(coeff(rng));
    if (!exact::determinant(a).is_zero()) {
      result.isomorphic = true;
      result.method = IsomorphismMethod::witness;
      result.witness = std::move(a);
      return result;
    }
  }
  // Equal characters decide isomorphism in characteristic zero.
  result.isomorphic = true;
  result.method = IsomorphismMethod::character_fallback;
  return result;
}

FrobeniusReciprocity::FrobeniusReciprocity(Representation sigma, Representation pi)
    : sigma_(std::move(sigma)),
      pi_(std::move(pi)),
      induced_(Representation::trivial(pi_.group())),
      restricted_(restrict(pi_, sigma_.group())),
      representatives_(group::right_coset_representatives(pi_.group(), sigma_.group())) {
  induced_ = induce(sigma_, pi_.group(), representatives_);
}

ExactMatrix FrobeniusReciprocity::to_restricted(const ExactMatrix& t) const {
  if (t.rows() != pi_.dim() || t.cols() != induced_.dim()) {
    throw DimensionMismatch("intertwiner has the wrong shape");
  }
  return t.block(0, 0, pi_.dim(), sigma_.dim());
}

ExactMatrix FrobeniusReciprocity::to_induced(const ExactMatrix& s) const {
  if (s.rows() != pi_.dim() || s.cols() != sigma_.dim()) {
    throw DimensionMismatch("intertwiner has the wrong shape");
  }
  const auto& g = pi_.group().group();
  ExactMatrix t(pi_.dim(), induced_.dim());
  for (std::size_t i = 0; i < representatives_.size(); ++i) {
    t.set_block(0, i * sigma_.dim(), pi_(g.inverse(representatives_[i])) * s);
  }
  return t;
}

}  // namespace mackey::rep
