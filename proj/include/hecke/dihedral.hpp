#pragma once

#include <array>
#include <string>
#include <vector>

// Finite 2x2 monomial matrix groups over roots of unity: the image of an induced
// representation of a dihedral-type Galois group.
namespace hecke::dihedral {

enum class Variant {
    cyclic,   // H = Z/2m, generator acting by diag(zeta_2m, -zeta_2m)
    product,  // H = Z/m x Z/2, generators diag(zeta_m, zeta_m) and diag(1, -1)
};

std::string to_string(Variant v);

// Entries are 0 or exp(2 pi i k / L).
struct Entry {
    bool zero = true;
    int k = 0;
    bool operator==(const Entry&) const = default;
};

struct Matrix {
    int L = 1;
    std::array<Entry, 4> e{};  // row major

    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const { return L == o.L && e == o.e; }
    bool operator<(const Matrix& o) const;
    bool is_scalar() const;
};

struct Element {
    std::string label;  // word in the generators, e.g. "h0^3*c"
    Matrix matrix;
    bool in_H = false;
};

struct Group {
    int m = 0;
    Variant variant = Variant::cyclic;
    int L = 0;
    int chi_c2 = 0;  // exponent of chi(c^2) over L
    Matrix c;
    std::vector<Element> elements;  // H first, then H*c

    // chi(h) and sign character with kernel Z, for h in H
    int chi(const Element& h) const;
    int delta(const Element& h) const;
};

// m must be even and chi(c^2) = exp(2 pi i chi_c2 / L) an m-th root of unity, L = lcm(2m, 4).
Group build_group(int m, Variant v, int chi_c2 = 0);

struct StructureReport {
    long order = 0;
    long center_order = 0;
    bool center_is_kernel_of_delta = false;
    bool quotient_is_klein_four = false;
    bool c_action = false;  // c h c^-1 = h on Z and z1 h off Z
    bool faithful = false;  // labelled elements are distinct and closed
    bool ok() const;
};

StructureReport verify_structure(const Group& G);

struct FaithfulnessReport {
    int r = 0;
    Variant variant = Variant::cyclic;
    int m = 0;
    bool faithful_on_H = false;          // (a)
    bool kernel_contained = false;       // (b) ker chi in ker delta
    bool power_is_delta = false;         // (c) chi^(r/2) = delta
    bool conjugate_is_power = false;     // (d) chi^c = chi^(1+r/2)
    bool equivalent() const;
};

// Evaluates the four conditions for a character of order r (r = 0 mod 4) on H.
FaithfulnessReport faithfulness_criteria(int r, Variant v);

} // namespace hecke::dihedral
