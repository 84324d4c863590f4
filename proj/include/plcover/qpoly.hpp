#ifndef PLCOVER_QPOLY_HPP
#define PLCOVER_QPOLY_HPP

#include <vector>
#include <optional>
#include "plcover/rational.hpp"

namespace plcover {

/// Dense univariate polynomial over Q, coefficients ascending (coef[i] * x^i).
/// Zero polynomial is the empty coefficient vector.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coef);
    static QPoly constant(const Rat& c);
    static QPoly x();

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; } // -1 for zero
    const Rat& operator[](int i) const { return coef_[i]; }
    const std::vector<Rat>& coef() const { return coef_; }
    const Rat& lead() const { return coef_.back(); }

    Rat eval(const Rat& x) const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& c) const;
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return coef_ == o.coef_; }

    QPoly derivative() const;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

    /// Exact division; throws std::domain_error if remainder is nonzero.
    static QPoly exact_div(const QPoly& a, const QPoly& b);

    /// Monic gcd (zero if both zero).
    static QPoly gcd(const QPoly& a, const QPoly& b);

    /// p / gcd(p, p') normalized monic: same roots, all simple.
    QPoly squarefree_part() const;

    QPoly monic() const;

    /// Cauchy bound: all real roots lie in (-B, B).
    Rat root_bound() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> coef_;
};

/// Sturm chain of p (built on the squarefree part internally by callers that need it).
std::vector<QPoly> sturm_chain(const QPoly& p);

/// Sign variations of the chain evaluated at x.
int sturm_variations(const std::vector<QPoly>& chain, const Rat& x);

/// Number of distinct real roots of p in [a, b) (closed left, open right).
/// p must be nonzero; multiplicity is ignored (squarefree part taken internally).
long sturm_count_interval(const QPoly& p, const Rat& a, const Rat& b);

/// Number of distinct real roots in [a, +infinity).
long sturm_count_ray(const QPoly& p, const Rat& a);

/// Characteristic polynomial det(xI - M) of a square rational matrix,
/// by the Faddeev-LeVerrier recurrence. Exact.
QPoly char_poly(const std::vector<std::vector<Rat>>& m);

} // namespace plcover

#endif
