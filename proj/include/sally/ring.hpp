#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sally/groebner.hpp"

namespace sally {

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

// A local ring A = D/a at the origin, presented by the ambient variables of
// the polynomial ring D and relation generators a (all with zero constant
// term). Immutable after construction; the per-order relation bases and the
// Krull dimension are write-once caches.
class RingPresentation {
public:
  RingPresentation(Field field, std::vector<std::string> variables,
                   std::vector<Polynomial> relations, Limits limits = {});

  static RingPtr make(Field field, std::vector<std::string> variables,
                      std::vector<Polynomial> relations, Limits limits = {});

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const MonomialOrder& default_order() const { return default_order_; }
  const Limits& limits() const { return limits_; }

  // Reduced Groebner basis of the relation ideal under ord, cached per order.
  const GroebnerBasis& relation_basis(const MonomialOrder& ord) const;

  // Krull dimension cache; the computation itself lives in the length layer.
  int dimension_cached(const std::function<int()>& compute) const;

  bool same_ring(const RingPresentation& other) const;

  Polynomial variable_poly(int index) const;
  std::vector<Polynomial> maximal_ideal_gens() const;

private:
  Field field_;
  std::vector<std::string> vars_;
  std::vector<Polynomial> relations_;
  MonomialOrder default_order_{MonomialOrder::grevlex()};
  Limits limits_;

  mutable std::mutex mu_;
  mutable std::map<MonomialOrder, GroebnerBasis> relation_bases_;
  mutable std::optional<int> dim_;
};

}  // namespace sally
