#include "mackey/rep/representation.hpp"

#include <numeric>
#include <optional>
#include <random>
#include <utility>

#include "mackey/error.hpp"

namespace mackey::rep {

namespace {

thread_local InductionObserver* current_observer = nullptr;

}  // namespace

Representation::Representation(Subgroup group, std::size_t dim, std::vector<ExactMatrix> images,
                               std::string label)
    : group_(std::move(group)), dim_(dim), images_(std::move(images)), label_(std::move(label)) {
  if (images_.size() != group_.order()) {
    throw DimensionMismatch("one image per group element is required");
  }
  for (const auto& m : images_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("image has the wrong shape");
  }
}

Representation Representation::from_generators(Subgroup group,
                                               std::span<const ExactMatrix> gen_images,
                                               std::string label) {
  const auto gens = group.generators();
  if (gen_images.size() != gens.size()) {
    throw DimensionMismatch("expected " + std::to_string(gens.size()) + " generator images, got " +
                            std::to_string(gen_images.size()));
  }
  std::size_t dim = 0;
  if (!gen_images.empty()) {
    dim = gen_images.front().rows();
  } else {
    throw PreconditionViolated("a representation of the trivial group needs an explicit dimension");
  }
  for (const auto& m : gen_images) {
    if (m.rows() != dim || m.cols() != dim) {
      throw DimensionMismatch("generator images must be square of one size");
    }
  }
  const auto& g = group.group();
  std::vector<std::optional<ExactMatrix>> images(group.order());
  images[group.position(group::FiniteGroup::identity())] = ExactMatrix::identity(dim);
  std::vector<Element> queue{group::FiniteGroup::identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Element x = queue[q];
    const ExactMatrix& mx = *images[group.position(x)];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element y = g.compose(x, gens[k]);
      ExactMatrix my = mx * gen_images[k];
      auto& slot = images[group.position(y)];
      if (!slot) {
        slot = std::move(my);
        queue.push_back(y);
      } else if (!(*slot == my)) {
        throw NotAHomomorphism("generator images of '" + label +
                               "' violate a relation of the group");
      }
    }
  }
  std::vector<ExactMatrix> out;
  out.reserve(images.size());
  for (auto& m : images) out.push_back(std::move(*m));
  return Representation(std::move(group), dim, std::move(out), std::move(label));
}

Representation Representation::trivial(Subgroup group) {
  std::vector<ExactMatrix> images(group.order(), ExactMatrix::identity(1));
  return Representation(std::move(group), 1, std::move(images), "trivial");
}

Representation Representation::sign(Subgroup group) {
  std::vector<ExactMatrix> images;
  for (Element g : group.elements()) {
    ExactMatrix m(1, 1);
    m(0, 0) = group.group().sign(g);
    images.push_back(std::move(m));
  }
  return Representation(std::move(group), 1, std::move(images), "sign");
}

Representation Representation::regular(Subgroup group) {
  const std::size_t n = group.order();
  const auto& g = group.group();
  std::vector<ExactMatrix> images;
  for (Element x : group.elements()) {
    ExactMatrix m(n, n);
    for (std::size_t col = 0; col < n; ++col) {
      Element y = group.elements()[col];
      m(group.position(g.compose(y, g.inverse(x))), col) = 1;
    }
    images.push_back(std::move(m));
  }
  return Representation(std::move(group), n, std::move(images), "regular");
}

Representation Representation::character_from_generators(Subgroup group,
                                                         std::span<const CycloNumber> values,
                                                         std::string label) {
  if (group.generators().empty() && values.empty()) {
    std::vector<ExactMatrix> images(group.order(), ExactMatrix::identity(1));
    return Representation(std::move(group), 1, std::move(images), std::move(label));
  }
  std::vector<ExactMatrix> gen_images;
  for (const auto& v : values) gen_images.push_back(ExactMatrix(1, 1, {v}));
  return from_generators(std::move(group), gen_images, std::move(label));
}

unsigned Representation::conductor() const {
  unsigned n = 1;
  for (const auto& m : images_) {
    for (const auto& e : m.entries()) n = std::lcm(n, e.conductor());
  }
  return n;
}

bool Representation::check_homomorphism(std::uint64_t seed) const {
  const auto& g = group_.group();
  if (!(*this)(group::FiniteGroup::identity()).is_identity()) return false;
  for (const auto& m : images_) {
    if (m.rows() > 0 && exact::determinant(m).is_zero()) return false;
  }
  const std::size_t n = group_.order();
  auto check_pair = [&](std::size_t i, std::size_t j) {
    Element a = group_.elements()[i];
    Element b = group_.elements()[j];
    return (*this)(g.compose(a, b)) == images_[i] * images_[j];
  };
  if (n <= 60) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!check_pair(i, j)) return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int t = 0; t < 500; ++t) {
    if (!check_pair(pick(rng), pick(rng))) return false;
  }
  return true;
}

Representation restrict(const Representation& rho, const Subgroup& s) {
  if (!s.is_subgroup_of(rho.group())) {
    throw NotASubgroup(s.describe() + " is not a subgroup of " + rho.group().describe());
  }
  std::vector<ExactMatrix> images;
  images.reserve(s.order());
  for (Element g : s.elements()) images.push_back(rho(g));
  return Representation(s, rho.dim(), std::move(images), "Res(" + rho.label() + ")");
}

Representation conjugate_rep(Element g, const Representation& rho) {
  const auto& grp = rho.group().group();
  Subgroup target = group::conjugate_subgroup(g, rho.group());
  const Element g_inv = grp.inverse(g);
  std::vector<ExactMatrix> images;
  images.reserve(target.order());
  for (Element h : target.elements()) images.push_back(rho(grp.conjugate(g_inv, h)));
  return Representation(std::move(target), rho.dim(), std::move(images),
                        "conj[" + grp.label(g) + "](" + rho.label() + ")");
}

Representation induce(const Representation& rho, const Subgroup& target,
                      std::span<const Element> representatives) {
  const Subgroup& h = rho.group();
  if (!h.is_subgroup_of(target)) {
    throw NotASubgroup(h.describe() + " is not a subgroup of " + target.describe());
  }
  const auto& g = target.group();
  const std::size_t r = representatives.size();
  const std::size_t d = rho.dim();

  // coset_of[y] = i with y in H x_i; the transversal must cover L exactly once
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(g.order(), kNone);
  for (std::size_t i = 0; i < r; ++i) {
    if (!target.contains(representatives[i])) {
      throw PreconditionViolated("coset representative outside the target group");
    }
    for (Element y : h.elements()) {
      Element hy = g.compose(y, representatives[i]);
      if (coset_of[hy] != kNone) throw PreconditionViolated("representatives share a coset");
      coset_of[hy] = i;
    }
  }
  if (r * h.order() != target.order()) {
    throw PreconditionViolated("representatives do not cover every coset");
  }

  std::vector<ExactMatrix> images;
  images.reserve(target.order());
  for (Element x : target.elements()) {
    ExactMatrix m(r * d, r * d);
    for (std::size_t j = 0; j < r; ++j) {
      // (x.f)(x_j) = f(x_j x) = rho(h') f(x_i) with x_j x = h' x_i
      Element y = g.compose(representatives[j], x);
      std::size_t i = coset_of[y];
      Element hprime = g.compose(y, g.inverse(representatives[i]));
      m.set_block(j * d, i * d, rho(hprime));
    }
    images.push_back(std::move(m));
  }
  Representation result(target, r * d, std::move(images), "Ind(" + rho.label() + ")");
  InductionObserver::notify(rho, result);
  return result;
}

Representation induce(const Representation& rho, const Subgroup& target) {
  auto reps = group::right_coset_representatives(target, rho.group());
  return induce(rho, target, reps);
}

Representation direct_sum(const Subgroup& group, std::span<const Representation> parts) {
  std::size_t dim = 0;
  std::string label;
  for (const auto& p : parts) {
    if (!(p.group() == group)) throw NotASubgroup("direct sum of representations of different groups");
    dim += p.dim();
    label += label.empty() ? p.label() : " + " + p.label();
  }
  std::vector<ExactMatrix> images;
  images.reserve(group.order());
  for (std::size_t pos = 0; pos < group.order(); ++pos) {
    std::vector<ExactMatrix> blocks;
    blocks.reserve(parts.size());
    for (const auto& p : parts) blocks.push_back(p.images()[pos]);
    images.push_back(exact::block_diagonal(blocks));
  }
  return Representation(group, dim, std::move(images), label.empty() ? "0" : label);
}

InductionObserver::InductionObserver(Callback cb)
    : callback_(std::move(cb)), previous_(current_observer) {
  current_observer = this;
}

InductionObserver::~InductionObserver() { current_observer = previous_; }

void InductionObserver::notify(const Representation& source, const Representation& result) {
  InductionObserver* obs = current_observer;
  if (obs == nullptr) return;
  // Observers may build representations themselves; suspend while they run.
  current_observer = nullptr;
  obs->callback_(source, result);
  current_observer = obs;
}

}  // namespace mackey::rep
