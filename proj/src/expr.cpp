#include "finring/expr.hpp"

#include <cctype>
#include <limits>

#include "finring/ideal.hpp"

namespace finring {

bool operator==(const RingExpr& a, const RingExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, ZModExpr>) return x.n == y.n;
        if constexpr (std::is_same_v<T, GFExpr>) return x.p == y.p && x.k == y.k;
        if constexpr (std::is_same_v<T, ProdExpr>) return *x.left == *y.left && *x.right == *y.right;
        if constexpr (std::is_same_v<T, QuotExpr> || std::is_same_v<T, IdealizationExpr>)
          return *x.base == *y.base && x.gens == y.gens;
        if constexpr (std::is_same_v<T, DiagExpr>) return *x.base == *y.base;
      },
      a.node);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::size_t integer() {
    skip();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t digit = s_[pos_] - '0';
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) fail("integer too large");
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) {
      pos_ = start;
      fail("expected integer");
    }
    return value;
  }

  std::vector<Elem> index_list() {
    std::vector<Elem> out{static_cast<Elem>(integer())};
    while (accept(",")) out.push_back(static_cast<Elem>(integer()));
    return out;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (accept("x")) e = make_expr(ProdExpr{e, term()});
    return e;
  }

  ExprPtr term() {
    ExprPtr e = atom();
    while (accept("/<")) {
      std::vector<Elem> gens = index_list();
      expect(">");
      e = make_expr(QuotExpr{e, std::move(gens)});
    }
    return e;
  }

  ExprPtr atom() {
    skip();
    const std::size_t start = pos_;
    if (accept("Z/")) {
      const std::size_t n = integer();
      if (n < 2) {
        pos_ = start;
        fail("Z/n needs n >= 2");
      }
      return make_expr(ZModExpr{n});
    }
    if (accept("GF(")) {
      const std::size_t first = integer();
      std::size_t p = first, k = 1;
      if (accept(",")) {
        k = integer();
        if (!is_prime_number(p) || k == 0) {
          pos_ = start;
          fail("GF(p,k) needs a prime p and k >= 1");
        }
      } else {
        p = 0;
        for (std::size_t d = 2; d <= first; ++d)
          if (first % d == 0) {
            p = d;
            break;
          }
        std::size_t q = first;
        k = 0;
        while (p && q % p == 0) {
          q /= p;
          ++k;
        }
        if (!p || q != 1) {
          pos_ = start;
          fail("GF argument " + std::to_string(first) + " is not a prime power");
        }
      }
      expect(")");
      return make_expr(GFExpr{p, k});
    }
    if (accept("Id(")) {
      ExprPtr base = expr();
      expect(";");
      std::vector<Elem> gens = index_list();
      expect(")");
      return make_expr(IdealizationExpr{base, std::move(gens)});
    }
    if (accept("Diag(")) {
      ExprPtr base = expr();
      expect(")");
      return make_expr(DiagExpr{base});
    }
    if (accept("(")) {
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    fail("expected a ring expression");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<Elem>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

bool is_product(const ExprPtr& e) { return std::holds_alternative<ProdExpr>(e->node); }

std::string print_operand(const ExprPtr& e) {
  return is_product(e) ? "(" + print_ring_expr(*e) + ")" : print_ring_expr(*e);
}

}  // namespace

ExprPtr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_ring_expr(const RingExpr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ZModExpr>) return "Z/" + std::to_string(x.n);
        if constexpr (std::is_same_v<T, GFExpr>) {
          std::size_t q = 1;
          for (std::size_t i = 0; i < x.k; ++i) q *= x.p;
          return "GF(" + std::to_string(q) + ")";
        }
        if constexpr (std::is_same_v<T, ProdExpr>) return print_ring_expr(*x.left) + " x " + print_operand(x.right);
        if constexpr (std::is_same_v<T, QuotExpr>) return print_operand(x.base) + "/<" + join(x.gens) + ">";
        if constexpr (std::is_same_v<T, IdealizationExpr>)
          return "Id(" + print_ring_expr(*x.base) + "; " + join(x.gens) + ")";
        if constexpr (std::is_same_v<T, DiagExpr>) return "Diag(" + print_ring_expr(*x.base) + ")";
      },
      e.node);
}

RingPtr build_ring(const RingExpr& e, const BuildOptions& opts) {
  return std::visit(
      [&](const auto& x) -> RingPtr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ZModExpr>) return zmod(x.n, opts);
        if constexpr (std::is_same_v<T, GFExpr>) return galois_field(x.p, x.k, opts);
        if constexpr (std::is_same_v<T, ProdExpr>)
          return product(build_ring(*x.left, opts), build_ring(*x.right, opts), opts).ring;
        if constexpr (std::is_same_v<T, QuotExpr>) {
          RingPtr base = build_ring(*x.base, opts);
          for (Elem g : x.gens) base->check_element(g);
          return quotient(ideal_generated(base, x.gens), opts).ring;
        }
        if constexpr (std::is_same_v<T, IdealizationExpr>) {
          RingPtr base = build_ring(*x.base, opts);
          for (Elem g : x.gens) base->check_element(g);
          return idealization(CyclicModuleSpec{base, ideal_generated(base, x.gens)}, opts).ring;
        }
        if constexpr (std::is_same_v<T, DiagExpr>) {
          RingPtr base = build_ring(*x.base, opts);
          return product(base, base, opts).ring;
        }
      },
      e.node);
}

}  // namespace finring
