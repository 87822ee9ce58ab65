#pragma once

#include <span>
#include <string>
#include <vector>

#include "nashtopo/errors.hpp"

namespace nashtopo {

/// A named vector variable visible to an expression (a player's embedded
/// strategy coordinates).
struct ExprVar {
  std::string name;
  int dim = 1;
};

/// Small arithmetic language over embedding coordinates: + - * /, unary
/// minus, norm(v), abs/sin/cos (componentwise), numeric constants, variable
/// references and component indexing `x[k]`.  Dimensions are inferred at
/// parse time; the utility surface requires a scalar result.
class Expression {
public:
  static constexpr int kMaxDim = 16;

  static Expression parse(const std::string& text, const std::vector<ExprVar>& vars);

  int result_dim() const { return nodes_.empty() ? 0 : nodes_[root_].dim; }
  const std::string& text() const { return text_; }

  /// values[i] points at vars[i].dim doubles.
  void evaluate(std::span<const double* const> values, double* out) const;
  double evaluate_scalar(std::span<const double* const> values) const;

private:
  enum class Op { Const, Var, Index, Neg, Add, Sub, Mul, Div, Norm, Abs, Sin, Cos };
  struct Node {
    Op op;
    int a = -1, b = -1; // child node ids
    int var = -1;       // Op::Var
    int index = 0;      // Op::Index component
    double value = 0;   // Op::Const
    int dim = 1;
  };

  friend class ExprParser;
  int eval_node(int id, std::span<const double* const> values, double* out) const;

  std::string text_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

} // namespace nashtopo
