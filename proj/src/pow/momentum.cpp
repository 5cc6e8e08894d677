#include "qthreat/pow/momentum.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qthreat::pow {

namespace {

void put_u64be(std::uint8_t* out, std::uint64_t v) {
    for (int i = 7; i >= 0; --i) {
        out[i] = static_cast<std::uint8_t>(v);
        v >>= 8;
    }
}

// Top `bits` bits of the digest, as an integer.
std::uint64_t truncate_digest(const Digest& digest, int bits) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = v << 8 | digest[i];
    return bits == 64 ? v : v >> (64 - bits);
}

std::uint64_t max_value(int bits) {
    return bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

MomentumParams::MomentumParams(int n_bits, int ell_bits, int subset_log2, std::uint64_t h1_target)
    : n(n_bits), ell(ell_bits), subset_bits(subset_log2), target(h1_target) {
    if (n < 1 || n > 64) throw std::invalid_argument("h1 width must lie in [1, 64]");
    if (ell < n || ell > 64) throw std::invalid_argument("h2 width must lie in [n, 64]");
    if (subset_bits < 0 || subset_bits > ell)
        throw std::invalid_argument("subset width must lie in [0, ell]");
    if (target == 0 || target > max_value(n))
        throw std::invalid_argument("h1 target must lie in [1, 2^n - 1]");
}

std::uint64_t momentum_header_hash(const BlockHeader& header, const MomentumParams& params) {
    const HeaderBytes bytes = serialize(header);
    return truncate_digest(sha256(bytes), params.n);
}

std::uint64_t momentum_h1(std::uint64_t h, std::uint64_t a, std::uint64_t b,
                          const MomentumParams& params) {
    std::uint8_t msg[24];
    put_u64be(msg, h);
    put_u64be(msg + 8, a);
    put_u64be(msg + 16, b);
    return truncate_digest(sha256(msg), params.n);
}

std::uint64_t momentum_h2(std::uint64_t h, std::uint64_t nonce, const MomentumParams& params) {
    std::uint8_t msg[17];
    msg[0] = 0x02;  // domain separation from h1
    put_u64be(msg + 1, h);
    put_u64be(msg + 9, nonce);
    return truncate_digest(sha256(msg), params.ell);
}

namespace {

template <typename OnSolution>
MomentumStats scan_subset(std::uint64_t h, const MomentumParams& params, OnSolution&& on_solution) {
    MomentumStats stats;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> table;
    table.reserve(params.subset_size());
    for (std::uint64_t a = 0; a < params.subset_size(); ++a) {
        const std::uint64_t digest = momentum_h2(h, a, params);
        ++stats.h2_evals;
        auto& bucket = table[digest];
        for (std::uint64_t prior : bucket) {  // insertion order, so prior < a
            ++stats.h1_evals;
            if (momentum_h1(h, prior, a, params) <= params.target) {
                if (!on_solution(MomentumSolution{h, prior, a})) return stats;
            }
        }
        bucket.push_back(a);
    }
    return stats;
}

}  // namespace

MomentumResult momentum_mine(std::uint64_t h, const MomentumParams& params) {
    MomentumResult result;
    result.stats = scan_subset(h, params, [&](const MomentumSolution& sol) {
        result.solution = sol;
        return false;  // stop at the first
    });
    return result;
}

std::vector<MomentumSolution> momentum_mine_all(std::uint64_t h, const MomentumParams& params,
                                                MomentumStats* stats) {
    std::vector<MomentumSolution> solutions;
    MomentumStats s = scan_subset(h, params, [&](const MomentumSolution& sol) {
        solutions.push_back(sol);
        return true;
    });
    if (stats) *stats = s;
    return solutions;
}

bool momentum_verify(const MomentumSolution& solution, const MomentumParams& params) {
    if (solution.a == solution.b) return false;
    const std::uint64_t nonce_max = max_value(params.ell);
    if (solution.a > nonce_max || solution.b > nonce_max) return false;
    if (solution.h > max_value(params.n)) return false;
    if (momentum_h2(solution.h, solution.a, params) != momentum_h2(solution.h, solution.b, params))
        return false;
    return momentum_h1(solution.h, solution.a, solution.b, params) <= params.target;
}

std::vector<MomentumSolution> momentum_bruteforce_oracle(std::uint64_t h,
                                                         const MomentumParams& params) {
    if (params.ell > 14) throw std::invalid_argument("oracle is limited to ell <= 14");
    const std::uint64_t space = std::uint64_t{1} << params.ell;

    std::vector<std::uint64_t> digests(space);
    for (std::uint64_t a = 0; a < space; ++a) digests[a] = momentum_h2(h, a, params);

    std::vector<MomentumSolution> solutions;
    for (std::uint64_t a = 0; a + 1 < space; ++a) {
        for (std::uint64_t b = a + 1; b < space; ++b) {
            if (digests[a] != digests[b]) continue;
            if (momentum_h1(h, a, b, params) <= params.target)
                solutions.push_back({h, a, b});
        }
    }
    return solutions;
}

std::string solution_to_record(const MomentumSolution& solution, const MomentumParams& params) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "momentum n=%d ell=%d target=%llx h=%llx a=%llx b=%llx",
                  params.n, params.ell, static_cast<unsigned long long>(params.target),
                  static_cast<unsigned long long>(solution.h),
                  static_cast<unsigned long long>(solution.a),
                  static_cast<unsigned long long>(solution.b));
    return buf;
}

std::optional<std::pair<MomentumSolution, MomentumParams>> solution_from_record(
    const std::string& record) {
    std::istringstream iss(record);
    std::string tag;
    iss >> tag;
    if (tag != "momentum") return std::nullopt;

    int n = -1, ell = -1;
    std::uint64_t target = 0, h = 0, a = 0, b = 0;
    bool have_h = false, have_a = false, have_b = false;
    std::string token;
    while (iss >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) return std::nullopt;
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        try {
            if (key == "n") {
                n = std::stoi(value);
            } else if (key == "ell") {
                ell = std::stoi(value);
            } else if (key == "target") {
                target = std::stoull(value, nullptr, 16);
            } else if (key == "h") {
                h = std::stoull(value, nullptr, 16);
                have_h = true;
            } else if (key == "a") {
                a = std::stoull(value, nullptr, 16);
                have_a = true;
            } else if (key == "b") {
                b = std::stoull(value, nullptr, 16);
                have_b = true;
            } else {
                return std::nullopt;
            }
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (n < 0 || ell < 0 || target == 0 || !have_h || !have_a || !have_b) return std::nullopt;
    try {
        // Subset width is a miner parameter; verification does not need it.
        MomentumParams params(n, ell, 0, target);
        return std::make_pair(MomentumSolution{h, a, b}, params);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace qthreat::pow
