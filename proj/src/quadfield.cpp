#include "hecke/quadfield.hpp"

#include <sstream>

#include "field_impl.hpp"
#include "hecke/arith.hpp"
#include "hecke/error.hpp"

namespace hecke {

long compute_class_number(const QuadField& K);

void QuadInt::check_same(const QuadInt& o) const {
    if (!(tag_ == o.tag_)) {
        throw DomainError("elements of different fields: d=" + std::to_string(tag_.d) + " and d=" +
                          std::to_string(o.tag_.d));
    }
}

QuadInt QuadInt::operator+(const QuadInt& o) const {
    check_same(o);
    return QuadInt(tag_, a_ + o.a_, b_ + o.b_);
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
    check_same(o);
    return QuadInt(tag_, a_ - o.a_, b_ - o.b_);
}

QuadInt QuadInt::operator-() const { return QuadInt(tag_, -a_, -b_); }

QuadInt QuadInt::operator*(const QuadInt& o) const {
    check_same(o);
    BigInt bb = b_ * o.b_;
    BigInt a = a_ * o.a_ - bb * tag_.norm;
    BigInt b = a_ * o.b_ + b_ * o.a_ + bb * tag_.trace;
    return QuadInt(tag_, a, b);
}

bool QuadInt::operator==(const QuadInt& o) const { return tag_ == o.tag_ && a_ == o.a_ && b_ == o.b_; }

QuadInt QuadInt::conj() const { return QuadInt(tag_, a_ + b_ * tag_.trace, -b_); }

BigInt QuadInt::norm() const { return a_ * a_ + a_ * b_ * tag_.trace + b_ * b_ * tag_.norm; }

BigInt QuadInt::trace() const { return 2 * a_ + b_ * tag_.trace; }

QuadInt QuadInt::pow(unsigned long e) const {
    QuadInt result(tag_, 1, 0);
    QuadInt base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

QuadInt QuadInt::divide(const QuadInt& o) const {
    check_same(o);
    BigInt n = o.norm();
    if (n == 0) throw DomainError("division by zero");
    QuadInt num = *this * o.conj();
    if (!mpz_divisible_p(num.a_.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.b_.get_mpz_t(), n.get_mpz_t()))
        throw DomainError(o.to_string() + " does not divide " + to_string());
    BigInt a = num.a_ / n, b = num.b_ / n;
    return QuadInt(tag_, a, b);
}

std::string QuadInt::to_string() const {
    std::ostringstream out;
    out << a_.get_str() << (b_ < 0 ? "-" : "+") << BigInt(abs(b_)).get_str() << "*w";
    return out.str();
}

QuadField::QuadField(long d) : impl_(std::make_shared<Impl>()) {
    if (d == 0 || d == 1) throw DomainError("d must not be 0 or 1");
    if (d > (1L << 31) || d < -(1L << 31)) throw DomainError("|d| too large");
    if (!arith::is_squarefree(d)) throw DomainError("d = " + std::to_string(d) + " is not squarefree");
    Impl& s = *impl_;
    s.d = d;
    if (arith::mod(d, 4) == 1) {
        s.disc = d;
        s.tag = FieldTag{d, 1, (1 - d) / 4};
    } else {
        s.disc = 4 * d;
        s.tag = FieldTag{d, 0, -d};
    }
    if (d < 0) return;

    // Continued fraction of omega = (P0 + sqrt d) / Q0; the first convergent p/q with
    // p - q*omega' a unit gives the fundamental unit.
    long P = (s.tag.trace == 1) ? 1 : 0;
    long Q = (s.tag.trace == 1) ? 2 : 1;
    long root = arith::isqrt(d);
    BigInt p1 = 1, p2 = 0, q1 = 0, q2 = 1;
    for (int step = 0; step < 1000000; ++step) {
        if (Q <= 0) throw std::logic_error("continued fraction denominator not positive");
        long a = (P + root) / Q;
        BigInt p = a * p1 + p2;
        BigInt q = a * q1 + q2;
        QuadInt cand(s.tag, p - q * s.tag.trace, q);
        BigInt n = cand.norm();
        if (n == 1 || n == -1) {
            s.unit = cand;
            s.unit_norm = (n == 1) ? 1 : -1;
            return;
        }
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = q;
        P = a * Q - P;
        Q = (d - P * P) / Q;
    }
    throw ResourceLimit("fundamental unit search did not terminate");
}

long QuadField::d() const { return impl_->d; }
long QuadField::disc() const { return impl_->disc; }
FieldTag QuadField::tag() const { return impl_->tag; }

int QuadField::torsion_order() const {
    if (d() == -1) return 4;
    if (d() == -3) return 6;
    return 2;
}

QuadInt QuadField::torsion_generator() const {
    // omega is i for d = -1 and (1 + sqrt(-3))/2, of order six, for d = -3
    if (d() == -1 || d() == -3) return omega();
    return from_int(-1);
}

const std::optional<QuadInt>& QuadField::fundamental_unit() const { return impl_->unit; }

int QuadField::unit_norm() const { return impl_->unit_norm; }

int QuadField::sign_at(const QuadInt& x, int k) const {
    if (!is_real()) throw DomainError("sign_at needs a real field");
    // x = (A + B sqrt d) / den with den > 0
    BigInt A, B;
    if (impl_->tag.trace == 1) {
        A = 2 * x.a() + x.b();
        B = x.b();
    } else {
        A = x.a();
        B = x.b();
    }
    if (k == 1) B = -B;
    int sa = sgn(A), sb = sgn(B);
    if (sa == 0) return sb;
    if (sb == 0 || sa == sb) return sa;
    BigInt lhs = A * A, rhs = B * B * d();
    return lhs > rhs ? sa : sb;
}

long QuadField::class_number() const {
    std::call_once(impl_->class_number_once, [this] { impl_->class_number = compute_class_number(*this); });
    return impl_->class_number;
}

} // namespace hecke
