#include "dehornoy/fqsym.hpp"

#include <stdexcept>
#include <utility>

#include "dehornoy/symmetric_group.hpp"

namespace dehornoy {

FQSymElement FQSymElement::basis(const Permutation& p, mpz_class coeff) {
    FQSymElement e;
    if (coeff != 0) e.terms_.emplace(p, std::move(coeff));
    return e;
}

mpz_class FQSymElement::coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

bool FQSymElement::homogeneous(int d) const {
    for (const auto& [p, c] : terms_)
        if (p.degree() != d) return false;
    return true;
}

mpz_class FQSymElement::coefficient_sum() const {
    mpz_class s = 0;
    for (const auto& [p, c] : terms_) s += c;
    return s;
}

void FQSymElement::add_term(const Permutation& p, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FQSymElement& FQSymElement::operator+=(const FQSymElement& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

FQSymElement& FQSymElement::operator-=(const FQSymElement& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

FQSymElement FQSymElement::operator+(const FQSymElement& o) const {
    FQSymElement r = *this;
    r += o;
    return r;
}

FQSymElement FQSymElement::operator-(const FQSymElement& o) const {
    FQSymElement r = *this;
    r -= o;
    return r;
}

FQSymElement FQSymElement::operator-() const {
    FQSymElement r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

FQSymElement& FQSymElement::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [p, v] : terms_) v *= c;
    }
    return *this;
}

FQSymElement FQSymElement::operator*(const mpz_class& c) const {
    FQSymElement r = *this;
    r *= c;
    return r;
}

std::string FQSymElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (a != 1) s += a.get_str() + "*";
        s += "F[" + p.to_string() + "]";
    }
    return s;
}

FQSymElement multiply(const FQSymElement& x, const FQSymElement& y) {
    FQSymElement r;
    for (const auto& [a, ca] : x.terms()) {
        for (const auto& [b, cb] : y.terms()) {
            const mpz_class c = ca * cb;
            for (const Permutation& g : shifted_shuffle(a, b)) r.add_term(g, c);
        }
    }
    return r;
}

FQSymElement operator*(const FQSymElement& x, const FQSymElement& y) { return multiply(x, y); }

FQSymElement derivation(const FQSymElement& x) {
    FQSymElement r;
    for (const auto& [p, c] : x.terms()) {
        for (int i = 1; i <= p.degree(); ++i) {
            const int s = sign_at(p, i);
            if (s == 0) continue;
            r.add_term(delete_letter(p, i), s > 0 ? c : -c);
        }
    }
    return r;
}

FQSymElement derivation_partial(const FQSymElement& x, int i) {
    if (i < 1) throw std::out_of_range("derivation_partial: letter index must be positive");
    FQSymElement r;
    for (const auto& [p, c] : x.terms()) {
        if (i > p.degree()) continue;
        const int s = sign_at(p, i);
        if (s == 0) continue;
        r.add_term(delete_letter(p, i), s > 0 ? c : -c);
    }
    return r;
}

FQSymElement phi(const FQSymElement& x) {
    FQSymElement r;
    for (const auto& [p, c] : x.terms()) {
        const auto& table = SymmetricGroupTable::get(p.degree());
        const std::uint64_t des = descents(p).mask;
        for (std::size_t t = 0; t < table.size(); ++t)
            if ((table.rec_mask(t) & ~des) == 0) r.add_term(table.perm(t), c);
    }
    return r;
}

FQSymElement ribbon_complete(const Composition& c) {
    FQSymElement r = FQSymElement::unit();
    for (int part : c.parts) {
        if (part < 1) throw std::invalid_argument("ribbon_complete: nonpositive part");
        r = multiply(r, FQSymElement::basis(Permutation::identity(part)));
    }
    return r;
}

FQSymElement phi_basis(const Permutation& p) { return ribbon_complete(descent_composition(p)); }

FQSymElement derivation_of_ribbon(const Composition& c) {
    FQSymElement r;
    for (std::size_t j = 0; j < c.parts.size(); ++j) {
        const int coeff = c.parts[j] - 2;
        if (coeff == 0) continue;
        Composition lowered;
        for (std::size_t t = 0; t < c.parts.size(); ++t) {
            int part = c.parts[t] - (t == j ? 1 : 0);
            if (part > 0) lowered.parts.push_back(part);
        }
        r += ribbon_complete(lowered) * mpz_class(coeff);
    }
    return r;
}

}  // namespace dehornoy
