#ifndef SL2COH_POLY_HPP
#define SL2COH_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sl2coh {

struct ContextError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ordered list of variable names.  Only variables flagged `laurent` may carry
/// negative exponents; variables flagged `parameter` do not count toward the
/// coefficient-module degree.
class VarContext {
  public:
    VarContext(std::vector<std::string> names, std::vector<std::string> laurent = {},
               std::vector<std::string> parameters = {});

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    bool laurent(size_t i) const { return laurent_[i]; }
    bool parameter(size_t i) const { return parameter_[i]; }
    /// Index of a variable, or -1 when absent.
    int index_of(std::string_view name) const;

    bool operator==(const VarContext& other) const {
        return names_ == other.names_ && laurent_ == other.laurent_ && parameter_ == other.parameter_;
    }

  private:
    std::vector<std::string> names_;
    std::vector<bool> laurent_;
    std::vector<bool> parameter_;
};

using Ctx = std::shared_ptr<const VarContext>;

Ctx make_context(std::vector<std::string> names, std::vector<std::string> laurent = {},
                 std::vector<std::string> parameters = {});
/// Concatenation of contexts with disjoint variable names.
Ctx concat_contexts(const Ctx& a, const Ctx& b);

/// Exponent vector over a VarContext.  Compared in graded-lex order
/// (total exponent sum first, then lexicographically).
struct Monomial {
    std::vector<int32_t> exps;

    Monomial() = default;
    explicit Monomial(size_t width) : exps(width, 0) {}

    int64_t grade() const;
    /// Sum of |exponents| over non-parameter variables.
    int64_t degree(const VarContext& ctx) const;
    /// Sum of |exponents| restricted to the given variable indices.
    int64_t degree_in(const std::vector<size_t>& vars) const;
    bool is_one() const;

    bool operator==(const Monomial& other) const { return exps == other.exps; }
    bool operator<(const Monomial& other) const;
};

/// Sparse multivariate polynomial over GF(2): a set of monomials, each with
/// coefficient 1.  Addition is symmetric difference.  Immutable value type.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Ctx ctx) : ctx_(std::move(ctx)) {}
    /// Takes ownership of a term list; sorts and cancels duplicate pairs.
    Poly(Ctx ctx, std::vector<Monomial> terms);

    static Poly zero(const Ctx& ctx) { return Poly(ctx); }
    static Poly one(const Ctx& ctx);
    static Poly var(const Ctx& ctx, std::string_view name, int32_t exp = 1);
    static Poly monomial(const Ctx& ctx, Monomial m);

    const Ctx& ctx() const { return ctx_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
    size_t term_count() const { return terms_.size(); }
    /// Max coefficient-module degree over terms; -1 for the zero polynomial.
    int64_t degree() const;

    Poly operator+(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

    Poly pow(uint64_t n) const;

    /// Ring-homomorphism image under variable -> polynomial substitution.
    /// Variables absent from the map are sent to the same-named variable of
    /// the target context (error if missing).  Negative source exponents
    /// require the image to be an invertible monomial in the target.
    Poly substitute(const std::map<std::string, Poly>& images, const Ctx& target) const;

    /// Formal partial derivative with respect to one variable (char 2).
    Poly derivative(std::string_view var) const;

  private:
    Ctx ctx_;
    std::vector<Monomial> terms_;  // sorted ascending graded-lex, no duplicates
    void check_exponents() const;
};

/// Canonical text form: terms in descending graded-lex order joined by " + ",
/// factors joined by "*", exponents as VAR^INT.  Zero prints as "0".
std::string format(const Poly& p);
/// Inverse of format, plus whitespace tolerance.
Poly parse(const std::string& text, const Ctx& ctx);

}  // namespace sl2coh

#endif
