#pragma once

#include <optional>
#include <string>

#include "hecke/lfunc.hpp"

namespace hecke {

struct PartnerOptions {
    long prime_bound = 200;  // primes sampled to identify the partner field
    long coeff_bound = 10000;
};

// The quadratic field M != K with chi * chi^c = (character of M/Q) o N_K/Q.
// Raises Ambiguous when the sampled primes do not single out one field.
QuadField partner_field(const HeckeCharacter& chi, const PartnerOptions& opts = {});

struct EquivCertificate {
    long d_K = 0;
    long d_M = 0;
    std::string conductor_chi;
    std::string conductor_eta;
    long N = 0;
    bool matched = false;
    long first_mismatch = 0;  // 0 when none up to N
    long level_chi = 0;
    long level_eta = 0;
    FormDescriptor form;
    bool oracle_agrees = false;  // both tables agree with the ideal-sum oracle
    long candidates_searched = 0;
    long candidates_matched = 0;
};

// Compares the L-series coefficients of chi on K and eta on M up to N.
EquivCertificate verify_equiv(const HeckeCharacter& chi, const HeckeCharacter& eta, long N);

struct Partner {
    HeckeCharacter eta;
    EquivCertificate certificate;
};

// Searches quadratic characters of the partner field whose level matches and returns the
// first one with the same coefficients. The candidate counts go into the certificate.
Partner construct_partner(const HeckeCharacter& chi, const PartnerOptions& opts = {});

} // namespace hecke
