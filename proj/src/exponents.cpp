#include "slab/exponents.hpp"

#include <cctype>
#include <stdexcept>

namespace slab {

ExtRat parse_extrat(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return ExtRat::infinity();
    auto parse_int = [](const std::string& t) -> std::int64_t {
        if (t.empty()) throw std::invalid_argument("empty number");
        size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("trailing junk in number: " + t);
        return v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return ExtRat(Rat(parse_int(s)));
    std::int64_t n = parse_int(s.substr(0, slash));
    std::int64_t d = parse_int(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return ExtRat(Rat(n, d));
}

void ExponentTuple::validate() const {
    if (d < 2) throw std::domain_error("ExponentTuple: d must be >= 2");
    if (!(a > 0)) throw std::domain_error("ExponentTuple: a must be > 0");
    for (const ExtRat* e : {&q, &p, &s})
        if (!e->is_inf() && e->finite() < Rat(2))
            throw std::domain_error("ExponentTuple: exponents must lie in [2, inf]");
}

namespace {

Rat half_minus(const ExtRat& p) { return Rat(1, 2) - p.recip(); }

// The excluded radial endpoint p-value (4d-2)/(2d-3), defined for d >= 2.
Rat rsa_endpoint_p(int d) { return Rat(4 * d - 2, 2 * d - 3); }

bool on_rsa_endpoint(const ExponentTuple& e) {
    return e.q == ExtRat(2) && e.p == ExtRat(rsa_endpoint_p(e.d));
}

} // namespace

bool wa_admissible(const ExponentTuple& e) {
    e.validate();
    if (e.d == 3 && e.q == ExtRat(2) && e.p.is_inf()) return false;
    return e.q.recip() <= Rat(e.d - 1, 2) * half_minus(e.p);
}

bool sa_admissible(const ExponentTuple& e) {
    e.validate();
    if (e.d == 2 && e.q == ExtRat(2) && e.p.is_inf()) return false;
    return e.q.recip() <= Rat(e.d, 2) * half_minus(e.p);
}

bool rwa_admissible(const ExponentTuple& e) {
    e.validate();
    if (e.q.is_inf() && e.p == ExtRat(2)) return true;
    return e.q.recip() < Rat(e.d - 1) * half_minus(e.p);
}

bool rsa_admissible(const ExponentTuple& e) {
    e.validate();
    if (on_rsa_endpoint(e)) return false;
    return e.q.recip() <= (Rat(e.d) - Rat(1, 2)) * half_minus(e.p);
}

bool thm11_admissible(const ExponentTuple& e) {
    e.validate();
    if (!(e.a > 1)) throw std::domain_error("thm11_admissible: requires a > 1");
    if (e.d >= 3) return rsa_admissible(e);
    // d = 2: strict inequality, with the (inf, 2) exception
    if (e.q.is_inf() && e.p == ExtRat(2)) return true;
    return e.q.recip() < (Rat(e.d) - Rat(1, 2)) * half_minus(e.p);
}

Rat beta_of_p(int d, const Rat& p) {
    if (d < 2) throw std::domain_error("beta_of_p: d must be >= 2");
    Rat lo = rsa_endpoint_p(d);
    if (!(p > lo))
        throw std::domain_error("beta_of_p: p must exceed (4d-2)/(2d-3) = " + lo.str());
    if (d >= 3) {
        Rat hi(2 * d, d - 2);
        if (!(p < hi))
            throw std::domain_error("beta_of_p: p must be below 2d/(d-2) = " + hi.str());
    }
    Rat den = (Rat(4) - p) * Rat(d) + Rat(2) * p - Rat(2);
    return Rat(2) * p * Rat(d - 1) / den;
}

Rat knapp_predicted_slope(const ExponentTuple& e) {
    e.validate();
    return Rat(e.d, 2) - Rat(2) * e.q.recip() - Rat(2 * e.d - 1) * e.p.recip()
           + Rat(e.d - 1) * e.s.recip();
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        default: return "open";
    }
}

Verdict classify(Condition c, const ExponentTuple& e) {
    e.validate();
    switch (c) {
        case Condition::WA: return wa_admissible(e) ? Verdict::True : Verdict::False;
        case Condition::SA: return sa_admissible(e) ? Verdict::True : Verdict::False;
        case Condition::RWA: return rwa_admissible(e) ? Verdict::True : Verdict::False;
        case Condition::RSA:
            if (on_rsa_endpoint(e)) return Verdict::Open;
            return rsa_admissible(e) ? Verdict::True : Verdict::False;
        case Condition::Thm11: {
            if (e.d >= 3) {
                if (on_rsa_endpoint(e)) return Verdict::Open;
                return thm11_admissible(e) ? Verdict::True : Verdict::False;
            }
            // d = 2: the equality line (minus (inf,2)) is open
            if (!(e.q.is_inf() && e.p == ExtRat(2))
                && e.q.recip() == (Rat(e.d) - Rat(1, 2)) * half_minus(e.p))
                return Verdict::Open;
            return thm11_admissible(e) ? Verdict::True : Verdict::False;
        }
    }
    throw std::logic_error("classify: bad condition");
}

Rat boundary_distance(Condition c, const ExponentTuple& e) {
    e.validate();
    Rat rhs;
    switch (c) {
        case Condition::WA: rhs = Rat(e.d - 1, 2) * half_minus(e.p); break;
        case Condition::SA: rhs = Rat(e.d, 2) * half_minus(e.p); break;
        case Condition::RWA: rhs = Rat(e.d - 1) * half_minus(e.p); break;
        case Condition::RSA:
        case Condition::Thm11: rhs = (Rat(e.d) - Rat(1, 2)) * half_minus(e.p); break;
    }
    return rhs - e.q.recip();
}

} // namespace slab
