#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signlab/boolfn.hpp"

namespace signlab {

enum class Gate : std::uint8_t { kAnd, kOr };

/// Binary AND/OR tree over literals. Nodes are stored children-first with the
/// root last; the value is immutable once built.
class Formula {
 public:
  struct Node {
    enum class Kind : std::uint8_t { kLeaf, kAnd, kOr };
    Kind kind;
    bool negated = false;  // leaves only
    int variable = 0;      // leaves only, 1-based
    int left = -1;         // gates only
    int right = -1;
  };

  static Formula literal(int variable, bool negated = false);
  static Formula combine(Gate gate, const Formula& left, const Formula& right);

  /// Number of leaves.
  int size() const noexcept { return leaves_; }
  /// Largest variable index referenced.
  int max_variable() const noexcept;
  int depth() const;

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  int root() const noexcept { return static_cast<int>(nodes_.size()) - 1; }

  /// Prints in the input grammar; parse(to_string()) reproduces the same tree.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  Formula() = default;
  friend class FormulaShapeCursor;

  std::vector<Node> nodes_;
  int leaves_ = 0;
};

/// Grammar: or := and ('|' and)*; and := atom ('&' atom)*;
/// atom := ['!'] 'x' digits | '(' or ')'. Whitespace is ignored.
Formula parse_formula(std::string_view text);

/// Truth table under TRUE = -1. Throws kOutOfRange when a variable exceeds `arity`.
BoolFunction to_function(const Formula& formula, int arity);

/// Bit j set iff the formula is TRUE at mask j; arity <= 6.
std::uint64_t truth_bits(const Formula& formula, int arity);

/// Balanced for power-of-two fan-in, left-leaning near-balanced otherwise.
Formula gate_tree(Gate gate, std::span<const Formula> operands);

/// OR of n blocks, block j an AND tree over variables j*n^2+1 .. (j+1)*n^2.
Formula build_minsky_papert(int n);

/// Complete binary tree with 2^depth leaves x1.., root AND, levels alternating.
Formula build_balanced_and_or(int depth);

using FormulaVisitor = std::function<bool(const Formula&)>;

/// Number of formulas with exactly `size` leaves over `vars` variables:
/// Catalan(size-1) * 2^(size-1) * (2*vars)^size.
std::uint64_t count_formulas(int size, int vars);

/// Every tree shape, gate labeling and literal labeling, by increasing size.
/// The visitor returns false to stop early. Requires max_size, max_vars <= 8.
void enumerate_formulas(int max_size, int max_vars, const FormulaVisitor& visit);

/// Representatives up to variable renaming and per-variable input negation:
/// variables are introduced in order x1, x2, ... and the first occurrence of
/// each variable is unnegated. Every formula of enumerate_formulas is obtained
/// from exactly one representative by an injective renaming plus negating a
/// set of variables everywhere.
void enumerate_canonical_formulas(int max_size, int max_vars, const FormulaVisitor& visit);

std::uint64_t count_canonical_formulas(int size, int vars);

}  // namespace signlab
