#ifndef WARING_FRONTEND_HPP
#define WARING_FRONTEND_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "waring/mpoly.hpp"
#include "waring/point.hpp"
#include "waring/results.hpp"

namespace waring {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(std::size_t p, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

/// Expression tree for the input grammar: sums, products, integer powers,
/// negation, rational literals, the imaginary unit (point coordinates only)
/// and variable identifiers.
struct ExprAST {
    enum class Kind { Sum, Product, Power, Negate, Rational, Imaginary, Var };
    Kind kind;
    std::vector<std::unique_ptr<ExprAST>> children;
    int exponent = 0;   // Power
    Rat value{0};       // Rational
    std::string name;   // Var
    std::size_t pos = 0;
};

std::unique_ptr<ExprAST> parse_expr(const std::string& text);

struct ParsedPoly {
    Poly poly;
    std::vector<std::string> vars;
};

/// Parse a polynomial; variable order is the declared list when given,
/// first-appearance order otherwise.  'i' is an ordinary identifier here.
ParsedPoly parse_poly(const std::string& text,
                      const std::optional<std::vector<std::string>>& vars = std::nullopt);

/// Parse "[a_0 : ... : a_n]" (brackets optional, ':' or ',' separated);
/// coordinates are constant expressions where 'i' is the imaginary unit.
ProjPoint parse_point(const std::string& text);

/// Throws with a diagnostic naming two offending terms unless F is
/// homogeneous and nonzero.
void require_homogeneous_input(const Poly& F, const std::vector<std::string>& vars);

std::vector<std::string> default_var_names(int nvars);
/// Dual names are uppercase counterparts by positional index.
std::vector<std::string> dual_var_names(const std::vector<std::string>& vars);

/// Canonical text form, graded-lex descending; parse(print(F)) == F for
/// rational F.
std::string print_poly(const Poly& F, const std::vector<std::string>& vars);
std::string print_poly(const Poly& F);

// --- JSON --------------------------------------------------------------------
// Stable schemas; field names: "rank", "type", "locus_kind", "equations",
// "points", "residual".  See README for the full schema reference.

std::string decomposition_to_json(const Decomposition& d,
                                  const std::vector<std::string>& vars);
std::string rank_to_json(const RankResult& r, const std::vector<std::string>& vars);
std::string locus_to_json(const LocusDescription& l,
                          const std::vector<std::string>& dual_vars);

Decomposition decomposition_from_json(const std::string& text);
RankResult rank_from_json(const std::string& text);
LocusDescription locus_from_json(const std::string& text,
                                 const std::vector<std::string>& dual_vars);

}  // namespace waring

#endif
