#pragma once

#include <span>
#include <string>
#include <vector>

namespace qthreat::pqsig {

// One row of the post-quantum signature comparison. pk/sig/total are kilobits
// as printed in the survey literature; the printed totals are kept verbatim
// even where the rounding is inconsistent (e.g. RAINBOW's 305 for 305.244).
struct SignatureRecord {
    std::string type_code;  // I.1 lattice ... IV.2 code based
    std::string name;
    int security_bits;      // classical security level
    double pk_kb;
    double sig_kb;
    double total_kb;
    std::string reference;  // scheme's original publication
};

enum class SortKey { SecurityBits, PublicKeyLength, SignatureLength, TotalLength };

// All 11 scheme records.
std::span<const SignatureRecord> signature_records();

// Stable sort; ascending unless descending is set.
std::vector<SignatureRecord> sorted_records(SortKey key, bool descending = false);

}  // namespace qthreat::pqsig
