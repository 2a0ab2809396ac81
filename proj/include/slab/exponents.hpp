#pragma once

#include <string>

#include "slab/rational.hpp"

namespace slab {

// Coordinates of every admissibility condition: dimension d, dispersion
// order a, and the time/radial/angular Lebesgue exponents (q, p, s).
// Exponents live in [2, inf] with inf representable exactly.
struct ExponentTuple {
    int d = 2;
    double a = 2.0;
    ExtRat q = ExtRat(2);
    ExtRat p = ExtRat(2);
    ExtRat s = ExtRat(2);

    void validate() const; // throws std::domain_error on a bad tuple
};

// Wave admissibility: 1/q <= ((d-1)/2)(1/2 - 1/p), excluding (2, inf, 3).
bool wa_admissible(const ExponentTuple& e);

// Schroedinger admissibility: 1/q <= (d/2)(1/2 - 1/p), excluding (2, inf, 2).
bool sa_admissible(const ExponentTuple& e);

// Radial wave admissibility, strict: 1/q < (d-1)(1/2 - 1/p), or (q,p) = (inf,2).
bool rwa_admissible(const ExponentTuple& e);

// Radial Schroedinger admissibility: 1/q <= (d - 1/2)(1/2 - 1/p),
// excluding the endpoint (q,p) = (2, (4d-2)/(2d-3)).
bool rsa_admissible(const ExponentTuple& e);

// The main estimate's range for a > 1: strict condition for d = 2 (with the
// (inf,2) exception), rsa_admissible for d >= 3.  Rejects a <= 1.
bool thm11_admissible(const ExponentTuple& e);

// beta(p) = 2p(d-1) / ((4-p)d + 2p - 2), exact.  Valid for
// (4d-2)/(2d-3) < p < 2d/(d-2) (upper bound inf when d = 2).
Rat beta_of_p(int d, const Rat& p);

// d/2 - 2/q - (2d-1)/p + (d-1)/s: the predicted log-log slope of the
// Knapp ratio in delta.  Nonnegative iff the necessary condition holds.
Rat knapp_predicted_slope(const ExponentTuple& e);

// Tri-state verdicts for the CLI: genuinely unresolved endpoint cases
// are reported as such rather than guessed.
enum class Verdict { True, False, Open };

const char* verdict_name(Verdict v);

enum class Condition { WA, SA, RWA, RSA, Thm11 };

// Classifies e under the given condition, reporting Open exactly at the
// unresolved endpoints: (q,p) = (2,(4d-2)/(2d-3)) for RSA/Thm11, and the
// d = 2 equality line 1/q = (d-1/2)(1/2-1/p) (minus (inf,2)) for Thm11.
Verdict classify(Condition c, const ExponentTuple& e);

// Signed rational distance from 1/q to the condition's boundary curve;
// positive means strictly inside.
Rat boundary_distance(Condition c, const ExponentTuple& e);

} // namespace slab
