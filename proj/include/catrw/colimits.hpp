#pragma once

#include <map>
#include <vector>

#include "catrw/transformation.hpp"

namespace catrw {

// ---------------------------------------------------------------------------
// Finite colimits, computed object by object with union-find.
// ---------------------------------------------------------------------------

struct DiagramArrow {
  std::size_t src;
  std::size_t tgt;
  Transformation map;
};

/// Colimit of a finite diagram. Apex parts are the equivalence classes of the
/// disjoint union of the node instances, numbered in order of their smallest
/// member (node order, then part order).
class ColimitResult {
 public:
  CSetPtr apex;
  std::vector<Transformation> legs;  // one per node

  /// Mediating map into the apex of another cocone. Throws
  /// CommutativityFailure if the cocone does not commute with the diagram.
  Transformation universal(const std::vector<Transformation>& cocone) const;

 private:
  friend ColimitResult colimit(const std::vector<CSetPtr>&, const std::vector<DiagramArrow>&);
  std::vector<DiagramArrow> arrows_;
  std::vector<std::vector<std::pair<std::size_t, Part>>> reps_;  // [object][apex part]
};

ColimitResult colimit(const std::vector<CSetPtr>& nodes, const std::vector<DiagramArrow>& arrows);
ColimitResult coproduct(const std::vector<CSetPtr>& nodes);

class PushoutResult {
 public:
  CSetPtr apex;
  Transformation left;   // B -> apex
  Transformation right;  // C -> apex

  Transformation universal(const Transformation& u, const Transformation& v) const;

 private:
  friend PushoutResult pushout(const Transformation&, const Transformation&);
  Transformation f_;
  ColimitResult impl_;
};

/// Pushout of B <- A -> C.
PushoutResult pushout(const Transformation& f, const Transformation& g);

class PullbackResult {
 public:
  CSetPtr apex;
  Transformation left;   // apex -> B
  Transformation right;  // apex -> C

  Transformation universal(const Transformation& p, const Transformation& q) const;

 private:
  friend PullbackResult pullback(const Transformation&, const Transformation&);
  std::vector<std::map<std::pair<Part, Part>, Part>> pairs_;
};

/// Pullback of B -> D <- C. Apex parts are the matching pairs (b, c) in
/// lexicographic order.
PullbackResult pullback(const Transformation& f, const Transformation& g);

// ---------------------------------------------------------------------------
// Pushout complements.
// ---------------------------------------------------------------------------

struct ComplementViolation {
  enum class Kind { Identification, Dangling, Boundary };
  Kind kind;
  /// Identification: the object. Dangling: the generator. Boundary: the foot.
  std::size_t which;
  /// Identification: two parts of B merged by g outside the image of f.
  /// Dangling: the surviving part of C and the deleted part it refers to.
  /// Boundary: a surviving foot part and the deleted apex part it maps to.
  Part first;
  Part second;
  ObId object = 0;  // Boundary only
};

std::string to_string(const ComplementViolation& v, const Schema& s);

class ComplementViolations : public Error {
 public:
  ComplementViolations(std::vector<ComplementViolation> v, const Schema& s);
  const std::vector<ComplementViolation>& violations() const { return violations_; }

 private:
  std::vector<ComplementViolation> violations_;
};

/// Identification and dangling conditions for A -f-> B -g-> C. Throws
/// NotMonic if f is not monic.
std::vector<ComplementViolation> check_pushout_complement(const Transformation& f, const Transformation& g);

struct PushoutComplement {
  Transformation a_to_d;
  Transformation d_to_c;
  /// Old part of C -> part of D (kNoPart when deleted).
  std::vector<std::vector<Part>> renumbering;
};

/// D = C minus g(B - f(A)). Throws ComplementViolations when the conditions
/// fail.
PushoutComplement pushout_complement(const Transformation& f, const Transformation& g);

/// Parts of C in g(B - f(A)), per object.
std::vector<std::vector<bool>> deleted_parts(const Transformation& f, const Transformation& g);

// ---------------------------------------------------------------------------
// Partial map classifiers and final pullback complements (acyclic schemas).
// ---------------------------------------------------------------------------

/// T(X) for an acyclic schema. A part of T(X) at object c is a pair (S, h)
/// with S a subfunctor of the representable at c and h : S -> X natural,
/// stored as one entry per path class out of c (kNoPart outside S).
struct PartialMapClassifier {
  CSetPtr T;
  Transformation eta;  // X -> T(X)
  std::vector<std::vector<std::vector<Part>>> records;  // [object][part of T]

  Part find(ObId c, const std::vector<Part>& h) const;

 private:
  friend PartialMapClassifier partial_map_classifier(const CSetPtr&);
  std::vector<std::map<std::vector<Part>, Part>> lookup_;
};

PartialMapClassifier partial_map_classifier(const CSetPtr& X);

/// Characteristic map G -> T(L) of the partial map G -> L inverse to the
/// monic m : L -> G.
Transformation characteristic_map(const Transformation& m, const PartialMapClassifier& TL);

/// T(f) : T(A) -> T(B) for f : A -> B, acting by postcomposition.
Transformation classifier_map(const Transformation& f, const PartialMapClassifier& TA, const PartialMapClassifier& TB);

struct FinalPullbackComplement {
  Transformation i_to_k;
  Transformation k_to_g;
};

/// Final pullback complement of I -l-> L -m-> G with m monic: the pullback of
/// the characteristic map of m against T(l).
FinalPullbackComplement final_pullback_complement(const Transformation& l, const Transformation& m);

}  // namespace catrw
