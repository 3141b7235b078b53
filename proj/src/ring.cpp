#include "sally/ring.hpp"

#include <cctype>
#include <set>

namespace sally {

namespace {

bool identifier_shaped(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

RingPresentation::RingPresentation(Field field, std::vector<std::string> variables,
                                   std::vector<Polynomial> relations, Limits limits)
    : field_(field), vars_(std::move(variables)), limits_(limits) {
  if (vars_.empty()) throw InputError("a ring needs at least one variable");
  if (static_cast<int>(vars_.size()) > Monomial::kMaxVars) {
    throw InputError("too many variables (max " + std::to_string(Monomial::kMaxVars) + ")");
  }
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!identifier_shaped(v)) throw InputError("bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
  }
  for (auto& r : relations) {
    r = poly_resort(default_order_, r);
    if (r.is_zero()) continue;
    if (r.width() != nvars()) throw InputError("relation width does not match the ring");
    if (!(r.leading().coeff.field() == field_)) throw InputError("relation field does not match the ring");
    for (const auto& t : r.terms()) {
      if (t.mono.is_unit()) throw InputError("relation has nonzero constant term");
    }
    relations_.push_back(std::move(r));
  }
}

RingPtr RingPresentation::make(Field field, std::vector<std::string> variables,
                               std::vector<Polynomial> relations, Limits limits) {
  return std::make_shared<const RingPresentation>(field, std::move(variables),
                                                  std::move(relations), limits);
}

const GroebnerBasis& RingPresentation::relation_basis(const MonomialOrder& ord) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = relation_bases_.find(ord);
  if (it == relation_bases_.end()) {
    it = relation_bases_.emplace(ord, buchberger(relations_, ord, nvars(), limits_)).first;
  }
  return it->second;
}

int RingPresentation::dimension_cached(const std::function<int()>& compute) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (dim_) return *dim_;
  }
  int d = compute();
  std::lock_guard<std::mutex> lock(mu_);
  if (!dim_) dim_ = d;
  return *dim_;
}

bool RingPresentation::same_ring(const RingPresentation& other) const {
  if (this == &other) return true;
  return field_ == other.field_ && vars_ == other.vars_ && relations_ == other.relations_;
}

Polynomial RingPresentation::variable_poly(int index) const {
  return Polynomial::term(Monomial::variable(nvars(), index), Scalar::one(field_));
}

std::vector<Polynomial> RingPresentation::maximal_ideal_gens() const {
  std::vector<Polynomial> out;
  out.reserve(vars_.size());
  for (int i = 0; i < nvars(); ++i) out.push_back(variable_poly(i));
  return out;
}

}  // namespace sally
