#include "plcover/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace plcover {

QPoly::QPoly(std::vector<Rat> coef) : coef_(std::move(coef)) { trim(); }

QPoly QPoly::constant(const Rat& c) {
    if (c == 0) return QPoly();
    return QPoly({c});
}

QPoly QPoly::x() { return QPoly({Rat(0), Rat(1)}); }

void QPoly::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> c(std::max(coef_.size(), o.coef_.size()), Rat(0));
    for (size_t i = 0; i < coef_.size(); ++i) c[i] += coef_[i];
    for (size_t i = 0; i < o.coef_.size(); ++i) c[i] += o.coef_[i];
    return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    std::vector<Rat> c = coef_;
    for (auto& x : c) x = -x;
    return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> c(coef_.size() + o.coef_.size() - 1, Rat(0));
    for (size_t i = 0; i < coef_.size(); ++i)
        for (size_t j = 0; j < o.coef_.size(); ++j) c[i + j] += coef_[i] * o.coef_[j];
    return QPoly(std::move(c));
}

QPoly QPoly::operator*(const Rat& c) const {
    if (c == 0) return QPoly();
    std::vector<Rat> out = coef_;
    for (auto& x : out) x *= c;
    return QPoly(std::move(out));
}

QPoly QPoly::derivative() const {
    if (coef_.size() <= 1) return QPoly();
    std::vector<Rat> c(coef_.size() - 1);
    for (size_t i = 1; i < coef_.size(); ++i) c[i - 1] = coef_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> rem = a.coef_;
    int db = b.degree();
    if (a.degree() < db) return {QPoly(), a};
    std::vector<Rat> quo(a.degree() - db + 1, Rat(0));
    for (int i = a.degree(); i >= db; --i) {
        Rat q = rem[i] / b.lead();
        if (q == 0) continue;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coef_[j];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::exact_div(const QPoly& a, const QPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

QPoly QPoly::monic() const {
    if (is_zero()) return QPoly();
    return *this * (Rat(1) / lead());
}

QPoly QPoly::squarefree_part() const {
    if (is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    if (degree() == 0) return QPoly::constant(Rat(1));
    QPoly g = gcd(*this, derivative());
    return exact_div(*this, g).monic();
}

Rat QPoly::root_bound() const {
    if (is_zero() || degree() == 0) return Rat(1);
    Rat m = 0;
    for (int i = 0; i < degree(); ++i) {
        Rat a = rat_abs(coef_[i] / lead());
        if (a > m) m = a;
    }
    return m + 1;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (coef_[i] == 0) continue;
        if (!first) os << (coef_[i] > 0 ? " + " : " - ");
        else if (coef_[i] < 0) os << "-";
        Rat a = rat_abs(coef_[i]);
        if (i == 0 || a != 1) os << rat_str(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain;
    chain.push_back(p);
    QPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const QPoly& a = chain[chain.size() - 2];
        const QPoly& b = chain[chain.size() - 1];
        QPoly r = QPoly::divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sturm_variations(const std::vector<QPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.is_zero() ? 0 : sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

long sturm_count_interval(const QPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw std::domain_error("sturm count of zero polynomial");
    if (b <= a) return 0;
    QPoly q = p.squarefree_part();
    if (q.degree() <= 0) return 0;
    auto chain = sturm_chain(q);
    // Sturm on (a, b]: V(a) - V(b); adjust endpoints for the [a, b) convention.
    long n = sturm_variations(chain, a) - sturm_variations(chain, b);
    if (q.eval(a) == 0) n += 1; // closed left endpoint
    if (q.eval(b) == 0) n -= 1; // open right endpoint
    return n;
}

long sturm_count_ray(const QPoly& p, const Rat& a) {
    if (p.is_zero()) throw std::domain_error("sturm count of zero polynomial");
    QPoly q = p.squarefree_part();
    if (q.degree() <= 0) return 0;
    Rat b = q.root_bound();
    if (b <= a) b = a + 1;
    return sturm_count_interval(p, a, b + 1);
}

QPoly char_poly(const std::vector<std::vector<Rat>>& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("char_poly: matrix not square");
    // Faddeev-LeVerrier: M1 = A, c_{n-1} = -tr; M_{k+1} = A (M_k + c_k I).
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    std::vector<std::vector<Rat>> mk = m;
    for (size_t k = 1; k <= n; ++k) {
        Rat tr = 0;
        for (size_t i = 0; i < n; ++i) tr += mk[i][i];
        Rat ck = -tr / Rat(static_cast<long>(k));
        c[n - k] = ck;
        if (k == n) break;
        // mk = A * (mk + ck I)
        std::vector<std::vector<Rat>> tmp = mk;
        for (size_t i = 0; i < n; ++i) tmp[i][i] += ck;
        std::vector<std::vector<Rat>> nxt(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rat s = 0;
                for (size_t l = 0; l < n; ++l) s += m[i][l] * tmp[l][j];
                nxt[i][j] = s;
            }
        mk = std::move(nxt);
    }
    return QPoly(std::move(c));
}

} // namespace plcover
