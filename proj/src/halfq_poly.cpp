#include "qfaul/halfq_poly.hpp"

#include <sstream>

namespace qfaul {

HalfQPoly HalfQPoly::monomial(Integer c, int e) {
    if (e < 0) throw std::invalid_argument("monomial: negative exponent");
    if (c == 0) return {};
    std::vector<Integer> v(static_cast<size_t>(e) + 1, Integer(0));
    v.back() = std::move(c);
    return HalfQPoly(std::move(v));
}

HalfQPoly HalfQPoly::one_minus_t(int e) {
    if (e < 1) throw std::invalid_argument("one_minus_t: exponent must be >= 1");
    std::vector<Integer> v(static_cast<size_t>(e) + 1, Integer(0));
    v.front() = 1;
    v.back() = -1;
    return HalfQPoly(std::move(v));
}

HalfQPoly HalfQPoly::one_plus_t(int e) {
    if (e < 1) throw std::invalid_argument("one_plus_t: exponent must be >= 1");
    std::vector<Integer> v(static_cast<size_t>(e) + 1, Integer(0));
    v.front() = 1;
    v.back() = 1;
    return HalfQPoly(std::move(v));
}

HalfQPoly HalfQPoly::geometric(int count, int step) {
    if (count < 0) throw std::invalid_argument("geometric: negative term count");
    if (step < 1) throw std::invalid_argument("geometric: step must be >= 1");
    if (count == 0) return {};
    std::vector<Integer> v(static_cast<size_t>(step) * (count - 1) + 1, Integer(0));
    for (int j = 0; j < count; ++j) v[static_cast<size_t>(step) * j] = 1;
    return HalfQPoly(std::move(v));
}

HalfQPoly HalfQPoly::operator-() const {
    HalfQPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

HalfQPoly& HalfQPoly::operator+=(const HalfQPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

HalfQPoly& HalfQPoly::operator-=(const HalfQPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

HalfQPoly operator*(const HalfQPoly& a, const HalfQPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return HalfQPoly(std::move(v));
}

HalfQPoly HalfQPoly::operator*(const Integer& c) const {
    if (c == 0 || is_zero()) return {};
    HalfQPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

HalfQPoly HalfQPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    HalfQPoly base = *this;
    HalfQPoly r(Integer(1));
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

HalfQPoly HalfQPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("shifted: negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<Integer> v(coeffs_.size() + static_cast<size_t>(k), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i + static_cast<size_t>(k)] = coeffs_[i];
    return HalfQPoly(std::move(v));
}

Integer HalfQPoly::eval_at_one() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

Integer HalfQPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

HalfQPoly HalfQPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    HalfQPoly r = *this;
    for (auto& c : r.coeffs_) c /= g;
    return r;
}

bool HalfQPoly::all_coeffs_nonnegative() const {
    for (const auto& c : coeffs_)
        if (c < 0) return false;
    return true;
}

std::string HalfQPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        const Integer& c = coeffs_[e];
        if (c == 0) continue;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0) os << mag.get_str();
        if (e > 0) {
            if (mag != 1) os << "*";
            os << "t";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

NonExactDivision::NonExactDivision(HalfQPoly dividend, HalfQPoly divisor)
    : std::runtime_error("non-exact polynomial division: (" + dividend.to_string() + ") / (" +
                         divisor.to_string() + ")"),
      dividend_(std::move(dividend)),
      divisor_(std::move(divisor)) {}

HalfQPoly exact_div(const HalfQPoly& a, const HalfQPoly& b) {
    if (b.is_zero()) throw NonExactDivision(a, b);
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw NonExactDivision(a, b);
    std::vector<Integer> rem = a.coeffs();
    const std::vector<Integer>& d = b.coeffs();
    const Integer& lead = d.back();
    size_t qsize = rem.size() - d.size() + 1;
    std::vector<Integer> quot(qsize, Integer(0));
    for (size_t i = qsize; i-- > 0;) {
        Integer& top = rem[i + d.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) throw NonExactDivision(a, b);
        Integer qc = top / lead;
        for (size_t j = 0; j < d.size(); ++j) rem[i + j] -= qc * d[j];
        quot[i] = std::move(qc);
    }
    for (const auto& c : rem)
        if (c != 0) throw NonExactDivision(a, b);
    return HalfQPoly(std::move(quot));
}

namespace {

// Pseudo-remainder: rem(lc(b)^(deg a - deg b + 1) * a, b), computed in place.
HalfQPoly pseudo_rem(const HalfQPoly& a, const HalfQPoly& b) {
    std::vector<Integer> r = a.coeffs();
    const std::vector<Integer>& d = b.coeffs();
    const Integer& lead = d.back();
    int scalings_left = a.degree() - b.degree() + 1;
    while (r.size() >= d.size()) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() < d.size()) break;
        Integer top = r.back();
        for (auto& c : r) c *= lead;
        --scalings_left;
        size_t off = r.size() - d.size();
        for (size_t j = 0; j < d.size(); ++j) r[off + j] -= top * d[j];
    }
    HalfQPoly rem{std::vector<Integer>(r)};
    // Keep the classical normalization lc(b)^(delta+1) even when the loop
    // terminated early; the subresultant divisors assume it.
    while (scalings_left-- > 0) rem = rem * lead;
    return rem;
}

}  // namespace

HalfQPoly poly_gcd(const HalfQPoly& a, const HalfQPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) {
        HalfQPoly r = b.primitive_part() * b.content();
        return r.leading() < 0 ? -r : r;
    }
    if (b.is_zero()) {
        HalfQPoly r = a.primitive_part() * a.content();
        return r.leading() < 0 ? -r : r;
    }
    Integer cont = int_gcd(a.content(), b.content());
    HalfQPoly A = a.primitive_part();
    HalfQPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    Integer g = 1, h = 1;
    while (true) {
        int delta = A.degree() - B.degree();
        HalfQPoly R = pseudo_rem(A, B);
        if (R.is_zero()) break;
        if (R.degree() == 0) {
            B = HalfQPoly(Integer(1));
            break;
        }
        A = B;
        Integer divisor = g * int_pow(h, delta);
        std::vector<Integer> cs = R.coeffs();
        for (auto& c : cs) c /= divisor;
        B = HalfQPoly(std::move(cs));
        g = A.leading();
        if (delta > 0) h = int_pow(g, delta) / int_pow(h, delta - 1);
    }
    HalfQPoly r = B.primitive_part() * cont;
    return r.leading() < 0 ? -r : r;
}

}  // namespace qfaul
