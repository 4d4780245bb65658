#include "signlab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace signlab {

using Kind = Formula::Node::Kind;

Formula Formula::literal(int variable, bool negated) {
  if (variable < 1) throw Error(ErrorCode::kInvalidArgument, "variables are 1-indexed");
  Formula f;
  f.nodes_.push_back(Node{Kind::kLeaf, negated, variable, -1, -1});
  f.leaves_ = 1;
  return f;
}

Formula Formula::combine(Gate gate, const Formula& left, const Formula& right) {
  Formula f;
  f.nodes_.reserve(left.nodes_.size() + right.nodes_.size() + 1);
  f.nodes_ = left.nodes_;
  const int offset = static_cast<int>(f.nodes_.size());
  for (auto node : right.nodes_) {
    if (node.kind != Kind::kLeaf) {
      node.left += offset;
      node.right += offset;
    }
    f.nodes_.push_back(node);
  }
  f.nodes_.push_back(Node{gate == Gate::kAnd ? Kind::kAnd : Kind::kOr, false, 0, offset - 1,
                          static_cast<int>(f.nodes_.size()) - 1});
  f.leaves_ = left.leaves_ + right.leaves_;
  return f;
}

int Formula::max_variable() const noexcept {
  int best = 0;
  for (const auto& node : nodes_) {
    if (node.kind == Kind::kLeaf) best = std::max(best, node.variable);
  }
  return best;
}

int Formula::depth() const {
  std::vector<int> d(nodes_.size(), 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].kind != Kind::kLeaf) d[i] = 1 + std::max(d[nodes_[i].left], d[nodes_[i].right]);
  }
  return d.back();
}

namespace {

void print_node(const std::vector<Formula::Node>& nodes, int index, std::string& out) {
  const auto& node = nodes[index];
  if (node.kind == Kind::kLeaf) {
    if (node.negated) out += '!';
    out += 'x';
    out += std::to_string(node.variable);
    return;
  }
  const auto print_child = [&](int child, bool wrap) {
    if (wrap) out += '(';
    print_node(nodes, child, out);
    if (wrap) out += ')';
  };
  const Kind left_kind = nodes[node.left].kind;
  const Kind right_kind = nodes[node.right].kind;
  if (node.kind == Kind::kAnd) {
    print_child(node.left, left_kind == Kind::kOr);
    out += " & ";
    print_child(node.right, right_kind != Kind::kLeaf);
  } else {
    print_child(node.left, false);
    out += " | ";
    print_child(node.right, right_kind == Kind::kOr);
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print_node(nodes_, root(), out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const auto& x = a.nodes_[i];
    const auto& y = b.nodes_[i];
    if (x.kind != y.kind) return false;
    if (x.kind == Kind::kLeaf) {
      if (x.variable != y.variable || x.negated != y.negated) return false;
    } else if (x.left != y.left || x.right != y.right) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_or();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept('|')) f = Formula::combine(Gate::kOr, f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_atom();
    while (accept('&')) f = Formula::combine(Gate::kAnd, f, parse_atom());
    return f;
  }

  Formula parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    if (accept('(')) {
      Formula f = parse_or();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return f;
    }
    const bool negated = accept('!');
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != 'x') throw ParseError(pos_, "expected variable 'x<index>'");
    const std::size_t start = ++pos_;
    long long index = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + (text_[pos_] - '0');
      if (index > std::numeric_limits<int>::max() / 16) throw ParseError(start, "variable index too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected digits after 'x'");
    if (index == 0) throw ParseError(start, "variable index 0 (variables are 1-indexed)");
    return Formula::literal(static_cast<int>(index), negated);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

constexpr std::uint64_t kVariablePattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

std::uint64_t literal_word(int variable0, std::size_t word) {
  if (variable0 < 6) return kVariablePattern[variable0];
  return ((word << 6) >> variable0) & 1U ? ~std::uint64_t{0} : 0;
}

void check_variables(const Formula& formula, int arity) {
  check_arity(arity);
  if (formula.max_variable() > arity) {
    throw Error(ErrorCode::kOutOfRange, "formula references x" + std::to_string(formula.max_variable()) +
                                            " but arity is " + std::to_string(arity));
  }
}

}  // namespace

std::uint64_t truth_bits(const Formula& formula, int arity) {
  check_variables(formula, arity);
  if (arity > 6) throw Error(ErrorCode::kOutOfRange, "truth_bits supports arity <= 6");
  const auto& nodes = formula.nodes();
  std::uint64_t stack[64];
  std::vector<std::uint64_t> heap;
  std::uint64_t* value = stack;
  if (nodes.size() > 64) {
    heap.resize(nodes.size());
    value = heap.data();
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    switch (n.kind) {
      case Kind::kLeaf: {
        const auto w = kVariablePattern[n.variable - 1];
        value[i] = n.negated ? ~w : w;
        break;
      }
      case Kind::kAnd: value[i] = value[n.left] & value[n.right]; break;
      case Kind::kOr: value[i] = value[n.left] | value[n.right]; break;
    }
  }
  const std::uint64_t used = arity == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << arity)) - 1;
  return value[nodes.size() - 1] & used;
}

BoolFunction to_function(const Formula& formula, int arity) {
  check_variables(formula, arity);
  const std::size_t points = cube_size(arity);
  const std::size_t words = (points + 63) / 64;
  const auto& nodes = formula.nodes();
  std::vector<std::vector<std::uint64_t>> value(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    auto& v = value[i];
    v.resize(words);
    for (std::size_t w = 0; w < words; ++w) {
      switch (n.kind) {
        case Kind::kLeaf: {
          const auto bits = literal_word(n.variable - 1, w);
          v[w] = n.negated ? ~bits : bits;
          break;
        }
        case Kind::kAnd: v[w] = value[n.left][w] & value[n.right][w]; break;
        case Kind::kOr: v[w] = value[n.left][w] | value[n.right][w]; break;
      }
    }
    if (n.kind != Kind::kLeaf) {
      value[n.left] = {};
      value[n.right] = {};
    }
  }
  const auto& root = value.back();
  return BoolFunction::from_predicate(arity, [&](InputMask x) { return (root[x >> 6] >> (x & 63)) & 1U; });
}

// ---------------------------------------------------------------------------
// Builders

Formula gate_tree(Gate gate, std::span<const Formula> operands) {
  if (operands.empty()) throw Error(ErrorCode::kInvalidArgument, "gate tree needs at least one operand");
  if (operands.size() == 1) return operands.front();
  const std::size_t left = (operands.size() + 1) / 2;
  return Formula::combine(gate, gate_tree(gate, operands.first(left)), gate_tree(gate, operands.subspan(left)));
}

Formula build_minsky_papert(int n) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "Minsky-Papert size must be >= 1");
  const long long vars = static_cast<long long>(n) * n * n;
  if (vars > kMaxArity) throw Error(ErrorCode::kOutOfRange, "n^3 variables exceed the supported arity");
  const int block = n * n;
  std::vector<Formula> blocks;
  for (int j = 0; j < n; ++j) {
    std::vector<Formula> leaves;
    for (int i = 1; i <= block; ++i) leaves.push_back(Formula::literal(j * block + i));
    blocks.push_back(gate_tree(Gate::kAnd, leaves));
  }
  return gate_tree(Gate::kOr, blocks);
}

Formula build_balanced_and_or(int depth) {
  if (depth < 0 || depth > 20) throw Error(ErrorCode::kOutOfRange, "depth must lie in [0, 20]");
  int next_variable = 1;
  std::function<Formula(int, Gate)> build = [&](int levels, Gate gate) -> Formula {
    if (levels == 0) return Formula::literal(next_variable++);
    const Gate child = gate == Gate::kAnd ? Gate::kOr : Gate::kAnd;
    Formula left = build(levels - 1, child);
    Formula right = build(levels - 1, child);
    return Formula::combine(gate, left, right);
  };
  return build(depth, Gate::kAnd);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::uint64_t catalan(int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void check_enumeration_limits(int max_size, int max_vars) {
  if (max_size < 1 || max_size > 8 || max_vars < 1 || max_vars > 8) {
    throw Error(ErrorCode::kOutOfRange, "enumeration limited to max_size, max_vars in [1, 8]");
  }
}

}  // namespace

/// Walks every labeling of one tree shape in place.
class FormulaShapeCursor {
 public:
  explicit FormulaShapeCursor(Formula shape) : formula_(std::move(shape)) {
    for (std::size_t i = 0; i < formula_.nodes_.size(); ++i) {
      (formula_.nodes_[i].kind == Kind::kLeaf ? leaves_ : gates_).push_back(static_cast<int>(i));
    }
  }

  std::size_t gate_count() const { return gates_.size(); }
  std::size_t leaf_count() const { return leaves_.size(); }

  void set_gates(std::uint64_t labeling) {
    for (std::size_t k = 0; k < gates_.size(); ++k) {
      formula_.nodes_[gates_[k]].kind = ((labeling >> k) & 1U) ? Kind::kOr : Kind::kAnd;
    }
  }

  void set_leaf(std::size_t k, int variable, bool negated) {
    auto& node = formula_.nodes_[leaves_[k]];
    node.variable = variable;
    node.negated = negated;
  }

  const Formula& formula() const { return formula_; }

 private:
  Formula formula_;
  std::vector<int> leaves_;
  std::vector<int> gates_;
};

namespace {

std::vector<Formula> shapes_with_leaves(int leaves) {
  if (leaves == 1) return {Formula::literal(1)};
  std::vector<Formula> out;
  for (int left = 1; left < leaves; ++left) {
    const auto ls = shapes_with_leaves(left);
    const auto rs = shapes_with_leaves(leaves - left);
    for (const auto& l : ls) {
      for (const auto& r : rs) out.push_back(Formula::combine(Gate::kAnd, l, r));
    }
  }
  return out;
}

// Leaf labelings are visited as an odometer; `advance` returns false when exhausted.
template <typename Reset, typename Advance>
bool walk_shapes(int max_size, const FormulaVisitor& visit, Reset&& reset, Advance&& advance) {
  for (int size = 1; size <= max_size; ++size) {
    for (auto& shape : shapes_with_leaves(size)) {
      FormulaShapeCursor cursor(std::move(shape));
      const std::uint64_t labelings = std::uint64_t{1} << cursor.gate_count();
      for (std::uint64_t g = 0; g < labelings; ++g) {
        cursor.set_gates(g);
        std::vector<int> codes(cursor.leaf_count(), 0);
        reset(cursor, codes);
        do {
          if (!visit(cursor.formula())) return false;
        } while (advance(cursor, codes));
      }
    }
  }
  return true;
}

}  // namespace

std::uint64_t count_formulas(int size, int vars) {
  if (size < 1) return 0;
  return catalan(size - 1) * (std::uint64_t{1} << (size - 1)) * ipow(2 * static_cast<std::uint64_t>(vars), size);
}

void enumerate_formulas(int max_size, int max_vars, const FormulaVisitor& visit) {
  check_enumeration_limits(max_size, max_vars);
  const int literals = 2 * max_vars;
  const auto apply = [](FormulaShapeCursor& c, std::size_t k, int code) { c.set_leaf(k, code / 2 + 1, code % 2); };
  walk_shapes(
      max_size, visit,
      [&](FormulaShapeCursor& c, std::vector<int>& codes) {
        for (std::size_t k = 0; k < codes.size(); ++k) apply(c, k, codes[k]);
      },
      [&](FormulaShapeCursor& c, std::vector<int>& codes) {
        for (std::size_t k = codes.size(); k-- > 0;) {
          if (++codes[k] < literals) {
            apply(c, k, codes[k]);
            return true;
          }
          codes[k] = 0;
          apply(c, k, 0);
        }
        return false;
      });
}

std::uint64_t count_canonical_formulas(int size, int vars) {
  if (size < 1) return 0;
  // Stirling numbers of the second kind S(size, k).
  std::vector<std::vector<std::uint64_t>> s(size + 1, std::vector<std::uint64_t>(size + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= size; ++i) {
    for (int k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  }
  std::uint64_t labelings = 0;
  for (int k = 1; k <= std::min(size, vars); ++k) labelings += s[size][k] << (size - k);
  return catalan(size - 1) * (std::uint64_t{1} << (size - 1)) * labelings;
}

void enumerate_canonical_formulas(int max_size, int max_vars, const FormulaVisitor& visit) {
  check_enumeration_limits(max_size, max_vars);
  // codes[k] = 2*variable0 + negated. A leaf may reuse any variable seen so far
  // or introduce the next one, and a first occurrence is never negated.
  const auto reset_from = [](FormulaShapeCursor& c, std::vector<int>& codes, std::size_t from) {
    for (std::size_t k = from; k < codes.size(); ++k) {
      codes[k] = 0;
      c.set_leaf(k, 1, false);
    }
  };
  walk_shapes(
      max_size, visit,
      [&](FormulaShapeCursor& c, std::vector<int>& codes) { reset_from(c, codes, 0); },
      [&](FormulaShapeCursor& c, std::vector<int>& codes) {
        for (std::size_t k = codes.size(); k-- > 0;) {
          int distinct = 0;
          for (std::size_t j = 0; j < k; ++j) distinct = std::max(distinct, codes[j] / 2 + 1);
          for (int code = codes[k] + 1; code < 2 * max_vars; ++code) {
            const int variable0 = code / 2;
            const bool negated = code % 2;
            if (variable0 > distinct) break;
            if (variable0 == distinct && negated) continue;
            codes[k] = code;
            c.set_leaf(k, variable0 + 1, negated);
            reset_from(c, codes, k + 1);
            return true;
          }
        }
        return false;
      });
}

}  // namespace signlab
