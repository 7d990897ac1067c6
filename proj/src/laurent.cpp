#include "qwalk/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

LaurentPolynomial LaurentPolynomial::constant(const Rational& c, Var v) {
    LaurentPolynomial p(v);
    if (!qwalk::is_zero(c)) {
        p.lo_ = 0;
        p.coeffs_ = {c};
    }
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Var v, long exp, const Rational& c) {
    LaurentPolynomial p(v);
    if (!qwalk::is_zero(c)) {
        p.lo_ = exp;
        p.coeffs_ = {c};
    }
    return p;
}

LaurentPolynomial LaurentPolynomial::from_coeffs(Var v, long lo, std::vector<Rational> coeffs) {
    LaurentPolynomial p(v);
    p.lo_ = lo;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

void LaurentPolynomial::normalize() {
    size_t drop = 0;
    while (drop < coeffs_.size() && qwalk::is_zero(coeffs_[drop])) ++drop;
    if (drop == coeffs_.size()) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    if (drop > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(drop));
        lo_ += static_cast<long>(drop);
    }
    while (!coeffs_.empty() && qwalk::is_zero(coeffs_.back())) coeffs_.pop_back();
}

bool LaurentPolynomial::compatible(const LaurentPolynomial& o) const {
    return var_ == o.var_ || is_constant() || o.is_constant();
}

long LaurentPolynomial::lo() const {
    if (is_zero()) throw error("valuation of zero Laurent polynomial");
    return lo_;
}

long LaurentPolynomial::hi() const {
    if (is_zero()) throw error("degree of zero Laurent polynomial");
    return lo_ + static_cast<long>(coeffs_.size()) - 1;
}

const Rational& LaurentPolynomial::coeff(long exp) const {
    static const Rational kZero(0);
    long i = exp - lo_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

size_t LaurentPolynomial::term_count() const {
    size_t n = 0;
    for (const auto& c : coeffs_)
        if (!qwalk::is_zero(c)) ++n;
    return n;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    if (!compatible(o)) throw error("adding Laurent polynomials in different variables");
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (!is_constant() || o.is_constant()) {
        // keep var_; otherwise adopt the non-constant side's variable
    } else {
        var_ = o.var_;
    }
    long new_lo = std::min(lo_, o.lo_);
    long new_hi = std::max(hi(), o.hi());
    std::vector<Rational> out(static_cast<size_t>(new_hi - new_lo + 1), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<size_t>(lo_ - new_lo) + i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        out[static_cast<size_t>(o.lo_ - new_lo) + i] += o.coeffs_[i];
    lo_ = new_lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
    if (qwalk::is_zero(c)) {
        coeffs_.clear();
        lo_ = 0;
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (!a.compatible(b)) throw error("multiplying Laurent polynomials in different variables");
    LaurentPolynomial p(a.is_constant() ? b.var_ : a.var_);
    if (a.is_zero() || b.is_zero()) return p;
    p.lo_ = a.lo_ + b.lo_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (qwalk::is_zero(a.coeffs_[i])) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (qwalk::is_zero(b.coeffs_[j])) continue;
            p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    p.normalize();
    return p;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return compatible(o) && lo_ == o.lo_ && coeffs_ == o.coeffs_;
}

LaurentPolynomial LaurentPolynomial::mirror() const {
    LaurentPolynomial p(var_);
    if (is_zero()) return p;
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.lo_ = -hi();
    return p;
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
    LaurentPolynomial p(*this);
    if (!p.is_zero()) p.lo_ += k;
    return p;
}

LaurentPolynomial LaurentPolynomial::restricted(long from, long to) const {
    LaurentPolynomial p(var_);
    if (is_zero() || from > to) return p;
    long a = std::max(from, lo_);
    long b = std::min(to, hi());
    if (a > b) return p;
    p.lo_ = a;
    p.coeffs_.assign(coeffs_.begin() + (a - lo_), coeffs_.begin() + (b - lo_ + 1));
    p.normalize();
    return p;
}

LaurentPolynomial LaurentPolynomial::nonneg_part() const {
    if (is_zero()) return *this;
    return restricted(0, hi());
}

LaurentPolynomial LaurentPolynomial::nonpos_part() const {
    if (is_zero()) return *this;
    return restricted(lo_, 0);
}

std::optional<LaurentPolynomial> LaurentPolynomial::inverse() const {
    if (!is_monomial()) return std::nullopt;
    return monomial(var_, -lo_, Rational(1) / coeffs_[0]);
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(const LaurentPolynomial& d) const {
    if (d.is_zero()) throw error("division by zero Laurent polynomial");
    if (is_zero()) return zero(d.var());
    if (!compatible(d)) return std::nullopt;
    // Long division from the top; exact iff the remainder vanishes.
    LaurentPolynomial rem(*this);
    LaurentPolynomial quot(is_constant() ? d.var() : var_);
    const Rational& dl = d.coeffs_.back();
    long dhi = d.hi();
    while (!rem.is_zero() && rem.hi() - rem.lo() + 1 >= static_cast<long>(d.coeffs_.size())) {
        Rational q = rem.coeffs_.back() / dl;
        LaurentPolynomial m = monomial(quot.var(), rem.hi() - dhi, q);
        quot += m;
        rem -= m * d;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

LaurentPolynomial LaurentPolynomial::poly_mod(const LaurentPolynomial& d) const {
    if (is_zero()) return *this;
    if (lo() < 0 || d.lo() < 0) throw error("poly_mod requires plain polynomials");
    LaurentPolynomial rem(*this);
    const Rational& dl = d.coeffs_.back();
    while (!rem.is_zero() && rem.hi() >= d.hi()) {
        Rational q = rem.coeffs_.back() / dl;
        rem -= d.shifted(rem.hi() - d.hi()) * q;
    }
    return rem;
}

Rational LaurentPolynomial::evaluate(const Rational& v) const {
    if (is_zero()) return Rational(0);
    if (lo_ < 0 && qwalk::is_zero(v)) throw error("evaluating Laurent polynomial with poles at 0");
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    if (lo_ != 0) {
        Rational p(1);
        Rational base = lo_ > 0 ? v : Rational(1) / v;
        for (long i = 0; i < std::abs(lo_); ++i) p *= base;
        acc *= p;
    }
    return acc;
}

std::string LaurentPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (qwalk::is_zero(c)) continue;
        long e = lo_ + static_cast<long>(i);
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0)
            os << "-";
        first = false;
        Rational a = abs(c);
        if (e == 0) {
            os << to_string(a);
        } else {
            if (!is_one(a)) os << to_string(a) << "*";
            os << var_name(var_);
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace qwalk
