#include "dpi/rational.hpp"
#include "dpi/errors.hpp"

#include <algorithm>
#include <sstream>

namespace dpi {

BigRat parse_rational(const std::string& s) {
    if (s.empty()) throw UsageError("empty numeric literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigRat q(s);
        q.canonicalize();
        return q;
    }
    std::string mant = s;
    long expo = 0;
    auto epos = mant.find_first_of("eE");
    if (epos != std::string::npos) {
        try {
            expo = std::stol(mant.substr(epos + 1));
        } catch (const std::exception&) {
            throw UsageError("bad exponent in numeric literal: " + s);
        }
        mant = mant.substr(0, epos);
    }
    auto dot = mant.find('.');
    std::string t = mant;
    long shift = 0;
    if (dot != std::string::npos) {
        shift = static_cast<long>(mant.size() - dot - 1);
        t = mant.substr(0, dot) + mant.substr(dot + 1);
    }
    if (t.empty() || t == "-" || t == "+") throw UsageError("bad numeric literal: " + s);
    BigRat q;
    try {
        q = BigRat{BigInt(t)};
    } catch (const std::exception&) {
        throw UsageError("bad numeric literal: " + s);
    }
    long net = expo - shift;
    BigInt p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    if (net >= 0) q *= BigRat(p10);
    else q /= BigRat(p10);
    q.canonicalize();
    return q;
}

Poly Poly::monomial(BigInt coeff, int degree) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = std::move(coeff);
    Poly p(std::move(c));
    return p;
}

const BigInt& Poly::coeff(int i) const {
    static const BigInt zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRat Poly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

HPReal Poly::eval(const HPReal& x) const {
    HPReal acc(0L, x.digits());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + HPReal(BigRat(*it), x.digits());
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] -= b.c_[i];
    }
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<BigInt> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const BigInt& k) {
    std::vector<BigInt> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] * k;
    return Poly(std::move(c));
}

BigInt Poly::content() const {
    BigInt g(0);
    for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (!c_.empty() && c_.back() < 0) g = -g;
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return Poly();
    BigInt g = content();
    std::vector<BigInt> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] / g;
    return Poly(std::move(c));
}

namespace {
// Pseudo-remainder of a by b (deg a >= deg b, b != 0).
Poly pseudo_rem(Poly a, const Poly& b) {
    int db = b.degree();
    const BigInt& lb = b.coeff(db);
    while (!a.is_zero() && a.degree() >= db) {
        int da = a.degree();
        Poly shifted = Poly::monomial(a.coeff(da), da - db) * b;
        a = a * lb - shifted;
    }
    return a;
}
} // namespace

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        BigInt a = abs(c_[i]);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

RationalFunc::RationalFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

RationalFunc RationalFunc::constant(const BigRat& q) {
    return RationalFunc(Poly(BigInt(q.get_num())), Poly(BigInt(q.get_den())));
}

RationalFunc RationalFunc::variable() { return RationalFunc(Poly::monomial(BigInt(1), 1), Poly(BigInt(1))); }

void RationalFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(BigInt(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        // Divide exactly by g via pseudo-division on the primitive parts.
        auto divide_exact = [](const Poly& p, const Poly& g) {
            // Exact polynomial division p / g over Q, result known integral up to content.
            std::vector<BigRat> rem(p.coeffs().size());
            for (size_t i = 0; i < rem.size(); ++i) rem[i] = BigRat(p.coeff(static_cast<int>(i)));
            int dg = g.degree();
            BigRat lg(g.coeff(dg));
            int dq = p.degree() - dg;
            std::vector<BigRat> q(dq + 1);
            for (int i = dq; i >= 0; --i) {
                BigRat f = rem[i + dg] / lg;
                q[i] = f;
                for (int j = 0; j <= dg; ++j) rem[i + j] -= f * BigRat(g.coeff(j));
            }
            // Clear denominators (they must cancel for exact division of integer polys
            // by their gcd up to content; scale by lcm to stay in Z).
            BigInt l(1);
            for (auto& x : q) {
                x.canonicalize();
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
            }
            std::vector<BigInt> zi(q.size());
            for (size_t i = 0; i < q.size(); ++i) {
                BigRat s = q[i] * BigRat(l);
                s.canonicalize();
                zi[i] = s.get_num();
            }
            return std::pair<Poly, BigInt>(Poly(std::move(zi)), l);
        };
        auto [qn, ln] = divide_exact(num_, g);
        auto [qd, ld] = divide_exact(den_, g);
        // num/den = (qn/ln) / (qd/ld) = qn*ld / (qd*ln)
        num_ = qn * ld;
        den_ = qd * ln;
    }
    BigInt cn = num_.content(), cd = den_.content();
    BigInt gg;
    mpz_gcd(gg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cd < 0) gg = -gg;
    if (gg != 1 && gg != 0) {
        std::vector<BigInt> n(num_.coeffs()), d(den_.coeffs());
        for (auto& x : n) x /= gg;
        for (auto& x : d) x /= gg;
        num_ = Poly(std::move(n));
        den_ = Poly(std::move(d));
    }
    if (den_.coeff(den_.degree()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

BigRat RationalFunc::eval(const BigRat& x) const {
    BigRat d = den_.eval(x);
    if (d == 0) throw PoleError(0, x.get_d());
    return num_.eval(x) / d;
}

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
    if (b.num_.is_zero()) throw DomainError("division by zero rational function");
    return RationalFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunc& a, const RationalFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::vector<BigRat> RationalFunc::taylor(int order) const {
    if (den_.coeff(0) == 0) throw DomainError("taylor expansion at a pole");
    std::vector<BigRat> out(order + 1);
    BigRat d0(den_.coeff(0));
    for (int k = 0; k <= order; ++k) {
        BigRat acc(num_.coeff(k));
        for (int j = 1; j <= k; ++j) acc -= BigRat(den_.coeff(j)) * out[k - j];
        out[k] = acc / d0;
    }
    return out;
}

} // namespace dpi
