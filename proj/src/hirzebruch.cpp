#include "surgery/hirzebruch.hpp"

namespace surgery {

static void require_ruled(const lattice& l) {
    if (l.kind != surface_kind::ruled)
        throw std::invalid_argument("operation requires a ruled-surface lattice");
}

divisor ruled_C0(const lattice& l) {
    require_ruled(l);
    divisor d(static_cast<size_t>(l.rank()), Int(0));
    d[0] = 1;
    d[1] = -l.param;
    return d;
}

bool very_ample(int n, const Int& a, const Int& b) {
    return a > 0 && b > a * n;
}

bool irreducible_curve_exists(int n, const Int& a, const Int& b) {
    if (a == 0 && b == 1) return true;           // a fiber
    if (a == 1 && b == 0) return true;           // the negative section
    if (very_ample(n, a, b)) return true;
    if (n > 0 && a > 0 && b == a * n) return true;
    return false;
}

lattice to_blowup_lattice(const lattice& rp) {
    require_ruled(rp);
    int n = rp.param;
    int k = rp.rank() - 2;   // user exceptionals
    if (n == 2) {
        if (k < 1)
            throw std::invalid_argument(
                "F_2 conversion consumes one exceptional; blow up at least once first");
        lattice l = make_blowup(0);
        l.param = k + 1;
        // h, e1, e2, then the user names from the second exceptional on.
        l.gens = {"h", "e1", "e2"};
        for (int i = 3; i < rp.rank(); ++i) {
            const std::string& nm = rp.gens[static_cast<size_t>(i)];
            if (nm == "h" || nm == "e1" || nm == "e2")
                throw std::invalid_argument("exceptional name collides with target basis: " + nm);
            l.gens.push_back(nm);
        }
        int m = l.rank();
        l.gram.assign(static_cast<size_t>(m) * m, Int(0));
        l.g(0, 0) = 1;
        for (int i = 1; i < m; ++i) l.g(i, i) = -1;
        divisor K(static_cast<size_t>(m), Int(0));
        K[0] = -3;
        for (int i = 1; i < m; ++i) K[static_cast<size_t>(i)] = 1;
        l.K = K;
        return l;
    }
    if (n == 3) {
        lattice l = make_blowup(0);
        l.param = k + 1;
        l.gens = {"h", "e1"};
        for (int i = 2; i < rp.rank(); ++i) {
            const std::string& nm = rp.gens[static_cast<size_t>(i)];
            if (nm == "h" || nm == "e1")
                throw std::invalid_argument("exceptional name collides with target basis: " + nm);
            l.gens.push_back(nm);
        }
        int m = l.rank();
        l.gram.assign(static_cast<size_t>(m) * m, Int(0));
        l.g(0, 0) = 1;
        for (int i = 1; i < m; ++i) l.g(i, i) = -1;
        divisor K(static_cast<size_t>(m), Int(0));
        K[0] = -3;
        for (int i = 1; i < m; ++i) K[static_cast<size_t>(i)] = 1;
        l.K = K;
        return l;
    }
    throw std::invalid_argument("conversion implemented for F_2 and F_3 only");
}

divisor to_blowup_basis(const lattice& rp, const divisor& d) {
    lattice target = to_blowup_lattice(rp);
    if (static_cast<int>(d.size()) != rp.rank())
        throw std::invalid_argument("to_blowup_basis: class/lattice rank mismatch");
    int n = rp.param;
    int m = target.rank();
    divisor out(static_cast<size_t>(m), Int(0));
    auto addmul = [&](const Int& c, std::initializer_list<std::pair<int, int>> terms) {
        for (auto [idx, coef] : terms) out[static_cast<size_t>(idx)] += c * coef;
    };
    if (n == 2) {
        // Cinf -> 2h - e1 - e2, F -> h - e1, first exceptional -> h - e1 - e2.
        addmul(d[0], {{0, 2}, {1, -1}, {2, -1}});
        addmul(d[1], {{0, 1}, {1, -1}});
        addmul(d[2], {{0, 1}, {1, -1}, {2, -1}});
        for (int i = 3; i < rp.rank(); ++i) out[static_cast<size_t>(i)] += d[static_cast<size_t>(i)];
    } else {
        // Cinf -> 2h - e1, F -> h - e1.
        addmul(d[0], {{0, 2}, {1, -1}});
        addmul(d[1], {{0, 1}, {1, -1}});
        for (int i = 2; i < rp.rank(); ++i) out[static_cast<size_t>(i)] += d[static_cast<size_t>(i)];
    }
    return out;
}

pencil_info genus_pencil(int n, int g) {
    Int k = Int(g) + 1 - n;
    if (k <= 0)
        throw std::invalid_argument("genus pencil |2Cinf + kF| needs k = g + 1 - n > 0");
    lattice fn = make_ruled(n);
    pencil_info pi;
    pi.k = k;
    pi.member = divisor{Int(2), k};
    pi.base_points = pair(fn, pi.member, pi.member);
    pi.g = genus(fn, pi.member);
    if (pi.g != g)
        throw check_error("pencil member genus does not match the requested genus");
    return pi;
}

fibration_totals_t fibration_totals(const fibration_data& fd) {
    fibration_totals_t t;
    Int gb = Int(fd.g - 1) * (fd.b - 1);
    t.c1sq = fd.Kf2 + 8 * gb;
    t.chiO = fd.chif + gb;
    t.e = 12 * t.chiO - t.c1sq;
    t.sigma = t.c1sq - 8 * t.chiO;
    return t;
}

} // namespace surgery
