#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

struct RingExpr;
using ExprPtr = std::shared_ptr<const RingExpr>;

struct ZModExpr {
  std::size_t n;
};
struct GFExpr {
  std::size_t p;
  std::size_t k;
};
struct ProdExpr {
  ExprPtr left;
  ExprPtr right;
};
/// R/<gens>, gens are element indices of R.
struct QuotExpr {
  ExprPtr base;
  std::vector<Elem> gens;
};
/// R(+)R/<gens>.
struct IdealizationExpr {
  ExprPtr base;
  std::vector<Elem> gens;
};
/// R x R, the target of the diagonal map.
struct DiagExpr {
  ExprPtr base;
};

struct RingExpr {
  std::variant<ZModExpr, GFExpr, ProdExpr, QuotExpr, IdealizationExpr, DiagExpr> node;
};

/// Structural equality of expression trees.
bool operator==(const RingExpr& a, const RingExpr& b);

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// expr := term ("x" term)*
/// term := atom ("/<" INT ("," INT)* ">")*
/// atom := "Z/" INT | "GF(" INT ["," INT] ")" | "Id(" expr ";" INT ("," INT)* ")"
///       | "Diag(" expr ")" | "(" expr ")"
/// Products associate to the left. GF(q) accepts a prime power q.
ExprPtr parse_ring_expr(std::string_view text);

/// Canonical text; parse_ring_expr(print_ring_expr(e)) equals e.
std::string print_ring_expr(const RingExpr& e);

/// Constructs the ring. Out-of-range indices raise PreconditionError and
/// oversize rings CapExceeded.
RingPtr build_ring(const RingExpr& e, const BuildOptions& opts = {});

inline ExprPtr make_expr(auto node) { return std::make_shared<const RingExpr>(RingExpr{std::move(node)}); }

}  // namespace finring
