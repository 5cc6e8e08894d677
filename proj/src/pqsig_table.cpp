#include "qthreat/pqsig_table.hpp"

#include <algorithm>
#include <array>

namespace qthreat::pqsig {

namespace {

// Type I lattice, II multivariate, III hash, IV code based.
const std::array<SignatureRecord, 11> kRecords = {{
    {"I.1", "GPV", 100, 300.0, 240.0, 540.0, "Gentry-Peikert-Vaikuntanathan 2008"},
    {"I.2", "LYU", 100, 65.0, 103.0, 168.0, "Lyubashevsky 2012"},
    {"I.3", "BLISS", 128, 7.0, 5.0, 12.0, "Ducas-Durmus-Lepoint-Lyubashevsky 2013"},
    {"I.4", "DILITHIUM", 138, 11.8, 21.6, 33.4, "Ducas et al. 2017"},
    {"II.1", "RAINBOW", 160, 305.0, 0.244, 305.0, "Ding-Schmidt 2005"},
    {"III.1", "LMS", 128, 0.448, 20.0, 20.5, "Leighton-Micali 1995"},
    {"III.2", "XMSS", 128, 0.544, 20.0, 20.5, "Buchmann-Dahmen-Huelsing 2011"},
    {"III.3", "SPHINCS", 128, 8.0, 328.0, 336.0, "Bernstein et al. 2015"},
    {"III.4", "NSW", 128, 0.256, 36.0, 36.0, "Naor-Shenhav-Wool 2005"},
    {"IV.1", "CFS", 83, 9216.0, 0.1, 9216.0, "Courtois-Finiasz-Sendrier 2001"},
    {"IV.2", "QUARTZ", 80, 568.0, 0.128, 568.0, "Patarin-Courtois-Goubin 2001"},
}};

double key_value(const SignatureRecord& r, SortKey key) {
    switch (key) {
        case SortKey::SecurityBits: return r.security_bits;
        case SortKey::PublicKeyLength: return r.pk_kb;
        case SortKey::SignatureLength: return r.sig_kb;
        case SortKey::TotalLength: return r.total_kb;
    }
    return 0.0;
}

}  // namespace

std::span<const SignatureRecord> signature_records() { return kRecords; }

std::vector<SignatureRecord> sorted_records(SortKey key, bool descending) {
    std::vector<SignatureRecord> records(kRecords.begin(), kRecords.end());
    std::stable_sort(records.begin(), records.end(),
                     [&](const SignatureRecord& a, const SignatureRecord& b) {
                         return descending ? key_value(a, key) > key_value(b, key)
                                           : key_value(a, key) < key_value(b, key);
                     });
    return records;
}

}  // namespace qthreat::pqsig
