#include "hecke/dihedral.hpp"

#include <numeric>
#include <set>

#include "hecke/error.hpp"

namespace hecke::dihedral {

std::string to_string(Variant v) { return v == Variant::cyclic ? "cyclic" : "product"; }

namespace {

int md(int a, int m) { return ((a % m) + m) % m; }

Matrix diag(int L, int a, int b) {
    Matrix x;
    x.L = L;
    x.e = {Entry{false, md(a, L)}, Entry{}, Entry{}, Entry{false, md(b, L)}};
    return x;
}

Matrix identity(int L) { return diag(L, 0, 0); }

} // namespace

Matrix Matrix::operator*(const Matrix& o) const {
    if (L != o.L) throw DomainError("matrices over different root systems");
    Matrix r;
    r.L = L;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Entry acc;
            for (int t = 0; t < 2; ++t) {
                const Entry& x = e[2 * i + t];
                const Entry& y = o.e[2 * t + j];
                if (x.zero || y.zero) continue;
                if (!acc.zero) throw DomainError("product of non-monomial matrices");
                acc = Entry{false, md(x.k + y.k, L)};
            }
            r.e[2 * i + j] = acc;
        }
    }
    return r;
}

bool Matrix::operator<(const Matrix& o) const {
    for (int i = 0; i < 4; ++i) {
        if (e[i].zero != o.e[i].zero) return e[i].zero < o.e[i].zero;
        if (e[i].k != o.e[i].k) return e[i].k < o.e[i].k;
    }
    return false;
}

bool Matrix::is_scalar() const { return e[1].zero && e[2].zero && !e[0].zero && e[0] == e[3]; }

int Group::chi(const Element& h) const {
    if (!h.in_H) throw DomainError("chi is defined on H only");
    return h.matrix.e[0].k;
}

int Group::delta(const Element& h) const {
    if (!h.in_H) throw DomainError("delta is taken on H only");
    return md(h.matrix.e[3].k - h.matrix.e[0].k, L);
}

Group build_group(int m, Variant v, int chi_c2) {
    if (m <= 0 || m % 2 != 0) throw DomainError("m must be a positive even integer, got " + std::to_string(m));
    Group G;
    G.m = m;
    G.variant = v;
    G.L = std::lcm(2 * m, 4);
    const int L = G.L;
    if (md(chi_c2, L / m) != 0) throw DomainError("chi(c^2) must be an m-th root of unity");
    G.chi_c2 = md(chi_c2, L);
    G.c.L = L;
    G.c.e = {Entry{}, Entry{false, G.chi_c2}, Entry{false, 0}, Entry{}};

    std::vector<Element> H;
    if (v == Variant::cyclic) {
        Matrix h0 = diag(L, L / (2 * m), L / (2 * m) + L / 2);
        Matrix x = identity(L);
        for (int j = 0; j < 2 * m; ++j) {
            H.push_back(Element{"h0^" + std::to_string(j), x, true});
            x = x * h0;
        }
    } else {
        Matrix z0 = diag(L, L / m, L / m), h1 = diag(L, 0, L / 2);
        Matrix x = identity(L);
        for (int j = 0; j < m; ++j) {
            H.push_back(Element{"z0^" + std::to_string(j), x, true});
            H.push_back(Element{"z0^" + std::to_string(j) + "*h1", x * h1, true});
            x = x * z0;
        }
    }
    G.elements = H;
    for (const auto& h : H) G.elements.push_back(Element{h.label + "*c", h.matrix * G.c, false});
    return G;
}

bool StructureReport::ok() const {
    return center_is_kernel_of_delta && quotient_is_klein_four && c_action && faithful;
}

StructureReport verify_structure(const Group& G) {
    StructureReport rep;
    const int L = G.L;
    std::set<Matrix> listed;
    for (const auto& g : G.elements) listed.insert(g.matrix);

    // closure of the generators
    std::vector<Matrix> gens{G.c};
    if (G.variant == Variant::cyclic) {
        gens.push_back(G.elements[1].matrix);
    } else {
        gens.push_back(G.elements[2].matrix);
        gens.push_back(G.elements[1].matrix);
    }
    std::set<Matrix> closure{identity(L)};
    std::vector<Matrix> frontier{identity(L)};
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                Matrix y = x * g;
                if (closure.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    rep.order = static_cast<long>(closure.size());
    rep.faithful = listed.size() == G.elements.size() && closure == listed && rep.order == 4L * G.m;

    std::set<Matrix> center, kernel;
    for (const auto& g : G.elements) {
        bool central = true;
        for (const auto& x : G.elements) {
            if (!(g.matrix * x.matrix == x.matrix * g.matrix)) {
                central = false;
                break;
            }
        }
        if (central) center.insert(g.matrix);
        if (g.in_H && G.delta(g) == 0) kernel.insert(g.matrix);
    }
    rep.center_order = static_cast<long>(center.size());
    rep.center_is_kernel_of_delta = center == kernel && rep.center_order == G.m;

    std::set<std::set<Matrix>> cosets;
    bool squares_central = true;
    for (const auto& g : G.elements) {
        std::set<Matrix> coset;
        for (const auto& z : center) coset.insert(g.matrix * z);
        cosets.insert(coset);
        if (!center.count(g.matrix * g.matrix)) squares_central = false;
    }
    rep.quotient_is_klein_four = cosets.size() == 4 && squares_central;

    // c^-1 = c^3 since c^2 is central of finite order; compute it by search
    Matrix c_inv;
    for (const auto& g : G.elements) {
        if (g.matrix * G.c == identity(L)) c_inv = g.matrix;
    }
    const Matrix z1 = diag(L, L / 2, L / 2);
    rep.c_action = true;
    for (const auto& h : G.elements) {
        if (!h.in_H) continue;
        Matrix conj = G.c * h.matrix * c_inv;
        Matrix want = G.delta(h) == 0 ? h.matrix : z1 * h.matrix;
        if (!(conj == want)) rep.c_action = false;
    }
    return rep;
}

bool FaithfulnessReport::equivalent() const {
    return faithful_on_H == kernel_contained && kernel_contained == power_is_delta &&
           power_is_delta == conjugate_is_power;
}

FaithfulnessReport faithfulness_criteria(int r, Variant v) {
    if (r <= 0 || r % 4 != 0) throw DomainError("r must be a positive multiple of 4");
    FaithfulnessReport rep;
    rep.r = r;
    rep.variant = v;
    rep.m = v == Variant::cyclic ? r / 2 : r;
    Group G = build_group(rep.m, v);
    const int L = G.L;
    rep.faithful_on_H = rep.kernel_contained = rep.power_is_delta = rep.conjugate_is_power = true;
    for (const auto& h : G.elements) {
        if (!h.in_H) continue;
        const int x = G.chi(h), d = G.delta(h);
        const bool identity_elem = h.matrix == identity(L);
        if (x == 0 && !identity_elem) rep.faithful_on_H = false;
        if (x == 0 && d != 0) rep.kernel_contained = false;
        if (md(x * (r / 2), L) != d) rep.power_is_delta = false;
        // chi^c(h) = chi(c h c^-1) is the lower diagonal entry
        if (md(h.matrix.e[3].k, L) != md(x * (1 + r / 2), L)) rep.conjugate_is_power = false;
    }
    return rep;
}

} // namespace hecke::dihedral
