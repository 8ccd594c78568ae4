#pragma once

// m-fold cyclic cover of S^3 branched over the annulus axis, built by cutting
// the annular diagram at its seam and stacking m copies side by side.
//
// Lift a of a component c is the cover component through c's base-point
// strand in copy a (copy 0 holds the preferred lift). The deck generator moves
// copy a to copy a+1. A component's base point is its label's position if it
// has one, otherwise the start of its first track.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "satlink/annular_word.hpp"
#include "satlink/diagram.hpp"
#include "satlink/exact_linalg.hpp"

namespace satlink {

class WindingNotDivisible : public std::invalid_argument {
 public:
  WindingNotDivisible(std::string component, int winding, std::size_t m);
  const std::string& component() const noexcept { return component_; }
  int winding() const noexcept { return winding_; }
  std::size_t m() const noexcept { return m_; }

 private:
  std::string component_;
  int winding_;
  std::size_t m_;
};

struct CoverDiagram {
  AnnularWord base;
  std::size_t m = 1;
  AnnularWord word;  // m copies of base.events; lifts labelled "<name>.<copy>"
  Diagram cover;
  Diagram base_diagram;
  // lift_map[c][a]: cover component of lift a of base component c
  std::vector<std::vector<ComponentId>> lift_map;
  // deck[i]: image of cover component i under the generator
  std::vector<ComponentId> deck;

  ComponentId lift(ComponentId base_component, std::size_t copy) const {
    return lift_map.at(base_component.index).at(copy % m);
  }
};

/// (column, position) of the component's base point in the base word.
std::pair<std::size_t, std::size_t> base_point(const Diagram& d, ComponentId c);

/// Name of lift `copy` of `name` in the cover word.
std::string lift_name(const std::string& name, std::size_t copy);

/// Throws WindingNotDivisible, std::invalid_argument for m == 0.
CoverDiagram build_cover(const AnnularWord& w, std::size_t m);

ComponentId deck_translate(const CoverDiagram& cd, ComponentId id, std::size_t k);

/// m x m matrix of lk(eta.j, eta.k) in the cover; diagonal left at 0.
/// Throws DiagramError(UnknownLabel) without an "eta" component.
RationalMatrix lifted_eta_linkings(const CoverDiagram& cd);

/// Base components other than "eta", in component order.
std::vector<ComponentId> surgery_components(const Diagram& d);

struct LiftedData {
  // Linking-framing matrix of the lifted surgery link, indexed
  // copy * k + i for lift `copy` of the i-th surgery component.
  IntMatrix A;
  std::vector<std::string> labels;
  RationalMatrix eta_lk;    // m x m
  RationalMatrix eta_vs_L;  // m x (m k): lk(eta.j, lifted surgery curve)
};

/// Throws LinalgError if a lifted linking number fails to be integral.
LiftedData lifted_linking_matrix(const CoverDiagram& cd);

}  // namespace satlink
