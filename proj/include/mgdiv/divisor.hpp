#ifndef MGDIV_DIVISOR_HPP
#define MGDIV_DIVISOR_HPP

#include <map>
#include <vector>

#include "mgdiv/admissible.hpp"

namespace mgdiv {

/// A divisor: finite integer-weighted point map with canonical PointRef keys
/// and no zero entries.
class Divisor {
public:
    Divisor() = default;

    void add(const PointRef& p, long long coeff);
    long long coeff(const PointRef& p) const;

    long long degree() const;
    bool is_effective() const;
    bool is_zero() const { return entries_.empty(); }
    std::vector<PointRef> support() const;

    const std::map<PointRef, long long>& entries() const { return entries_; }

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { a += b; return a; }
    friend Divisor operator-(Divisor a, const Divisor& b) { a -= b; return a; }

    friend bool operator==(const Divisor& a, const Divisor& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

    /// True iff this <= other pointwise (other - this effective).
    bool dominated_by(const Divisor& other) const { return (other - *this).is_effective(); }

    std::string str() const;

private:
    std::map<PointRef, long long> entries_;
};

/// deg(D|_S): sum of D over the support points lying in the closed set S.
long long degree_on(const Divisor& D, const AdmissibleSet& S);

/// One chip-firing move: fire the closed set S to distance eps.
struct FiringStep {
    AdmissibleSet set;
    Rat eps;
};

/// Ordered list of firing moves witnessing a linear equivalence.
struct FiringCertificate {
    std::vector<FiringStep> steps;
    bool empty() const { return steps.empty(); }
};

/// D + div(phi_{S,eps}) for phi_{S,eps}(x) = min{eps, d(x,S)}: each edge-end
/// leaving S transports one chip along its direction. Requires S nonempty,
/// proper, and eps <= dist(S, branch points outside S); complement segments
/// returning to S are handled exactly (opposing fronts merge at the segment
/// midpoint), so convexity of S is not required. Degree is preserved, the
/// result need not be effective.
Divisor fire_set(const Divisor& D, const AdmissibleSet& S, const Rat& eps);

/// Left-to-right fold of fire_set over the certificate steps.
Divisor apply_certificate(const Divisor& D, const FiringCertificate& cert);

/// True iff every support point is a vertex or has an integer offset.
/// Requires all edge lengths to be positive integers.
bool is_integral(const MetricGraph& g, const Divisor& D);

} // namespace mgdiv

#endif
