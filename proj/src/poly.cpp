#include "reflex/poly.hpp"

namespace reflex {

Rat GradedPoly::eval(const Rat& t) const {
    Rat s = 0;
    for (const auto& [e, v] : c_) {
        check(e >= 0, "eval: negative exponent");
        Rat p = 1;
        for (int i = 0; i < e; ++i) p *= t;
        s += v * p;
    }
    return s;
}

GradedPoly GradedPoly::divide_one_minus_t(unsigned k) const {
    // Synthetic division: if p = (1-t) q then q_e = -(sum_{i<=e} p_i) read off
    // from p(t) = q(t) - t q(t).
    GradedPoly p = *this;
    for (unsigned it = 0; it < k; ++it) {
        if (p.is_zero()) continue;
        GradedPoly q;
        Rat run = 0;
        int lo = p.low_degree(), hi = p.degree();
        for (int e = lo; e < hi; ++e) {
            run += p.coeff(e);
            q.add_term(e, run);
        }
        run += p.coeff(hi);
        check(run == 0, "divide_one_minus_t: not divisible by (1-t)");
        p = q;
    }
    return p;
}

std::string GradedPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [e, v] : c_) {
        if (!s.empty()) s += " + ";
        std::string c = rat_str(v);
        if (e == 0) {
            s += c;
        } else {
            if (c != "1") s += c + "*";
            s += var;
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

std::string Poly2::str(const std::string& u, const std::string& v) const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : c_) {
        if (!s.empty()) s += " + ";
        std::string cs = rat_str(c);
        bool wrote = false;
        if (cs != "1" || (e.first == 0 && e.second == 0)) {
            s += cs;
            wrote = true;
        }
        auto app = [&](const std::string& name, int x) {
            if (x == 0) return;
            if (wrote) s += "*";
            s += name;
            if (x != 1) s += "^" + std::to_string(x);
            wrote = true;
        };
        app(u, e.first);
        app(v, e.second);
    }
    return s;
}

GradedPoly geometric_sum(unsigned k) {
    GradedPoly p;
    for (unsigned i = 0; i < k; ++i) p.add_term(static_cast<int>(i), Rat(1));
    return p;
}

}  // namespace reflex
