#include "qgen/exact.hpp"

#include <cctype>

namespace qgen {

std::string ExactScalar::str() const {
    if (im == 0) return re.get_str();
    return re.get_str() + (im > 0 ? "+" : "") + im.get_str() + "i";
}

ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    return {x.re + y.re, x.im + y.im};
}

ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    return {x.re - y.re, x.im - y.im};
}

ExactScalar operator-(const ExactScalar& x) {
    return {-x.re, -x.im};
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
    if (y.is_zero()) throw DomainError("ExactScalar: division by zero");
    mpq_class n = y.norm();
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
}

bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.re == y.re && x.im == y.im;
}

ExactScalar es_inv(const ExactScalar& x) {
    return ExactScalar(1) / x;
}

ExactScalar es_pow(const ExactScalar& base, long e) {
    if (e < 0) return es_inv(es_pow(base, -e));
    ExactScalar acc(1), p = base;
    for (long m = e; m > 0; m >>= 1) {
        if (m & 1) acc = acc * p;
        p = p * p;
    }
    return acc;
}

ExactParams::ExactParams(mpq_class q_, ExactScalar beta_, mpq_class a_, long b_, long k_)
    : q(std::move(q_)), beta(std::move(beta_)), a(std::move(a_)), b(b_), k(k_) {
    if (!(q > 0 && q < 1)) throw DomainError("q must lie in (0,1)");
    if (k < 1) throw DomainError("k must be a positive integer");
    if (a == 0) throw DomainError("a must be nonzero");
    if (beta.is_zero()) throw DomainError("beta must be nonzero");
    if (b == 0) throw DomainError("b must be a nonzero integer");
}

ExactScalar ExactParams::ratio() const {
    return es_pow(beta / ExactScalar(a), b);
}

ModelParams ExactParams::downcast() const {
    return {q.get_d(), beta.to_complex(), a.get_d(), b, k};
}

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw DomainError("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal: digits before and after the point
        std::string intpart = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool neg = false;
        if (!intpart.empty() && (intpart[0] == '+' || intpart[0] == '-')) {
            neg = intpart[0] == '-';
            intpart.erase(0, 1);
        }
        if (intpart.empty()) intpart = "0";
        for (char c : intpart + frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw DomainError("bad rational literal: " + s);
        mpz_class num(intpart + frac, 10);
        mpz_class den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        mpq_class r(num, den);
        r.canonicalize();
        return neg ? mpq_class(-r) : r;
    }
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
    if (r.get_den() == 0) throw DomainError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

} // namespace qgen
