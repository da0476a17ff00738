#include "knaprsa/cca.hpp"

#include "knaprsa/errors.hpp"
#include "knaprsa/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace knaprsa {

namespace {

BitString random_bits(std::size_t len, Rng& rng) {
    return BitString::from_nat(rng.bits(len), len);
}

std::pair<BitString, BitString> random_message_pair(std::size_t k, Rng& rng) {
    BitString m0 = random_bits(k, rng);
    BitString m1 = random_bits(k, rng);
    while (m1 == m0) {
        m1 = random_bits(k, rng);
    }
    return {std::move(m0), std::move(m1)};
}

std::string fmt_rate(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

class RandomGuessAdversary final : public Adversary {
public:
    std::pair<BitString, BitString> choose_messages(const PublicKey& pk,
                                                    DecryptionOracle&, Rng& rng) override {
        return random_message_pair(pk.k(), rng);
    }

    int guess(const PublicKey&, const Ciphertext&, const BitString&, const BitString&,
              DecryptionOracle&, Rng& rng) override {
        return rng.next_bit();
    }
};

class MaulC2Adversary final : public Adversary {
public:
    std::pair<BitString, BitString> choose_messages(const PublicKey& pk,
                                                    DecryptionOracle&, Rng& rng) override {
        return random_message_pair(pk.k(), rng);
    }

    int guess(const PublicKey& pk, const Ciphertext& challenge, const BitString& m0,
              const BitString& m1, DecryptionOracle& oracle, Rng& rng) override {
        return maul_adversary_step(pk, challenge, m0, m1, oracle, rng);
    }
};

} // namespace

double GameStats::advantage() const {
    if (trials == 0) {
        return 0.0;
    }
    return std::abs(static_cast<double>(wins) / static_cast<double>(trials) - 0.5);
}

double GameStats::ci95() const {
    if (trials == 0) {
        return 0.0;
    }
    const double p = static_cast<double>(wins) / static_cast<double>(trials);
    return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

DecryptionOracle::Answer DecryptionOracle::query(const Ciphertext& c) {
    if (challenge_ && c == *challenge_) {
        ++refusals_;
        return {true, {}};
    }
    ++queries_;
    DecryptResult res = decrypt(*sk_, c);
    if (!res.ok()) {
        ++rejects_;
    }
    return {false, std::move(res)};
}

std::unique_ptr<Adversary> make_adversary(const std::string& name) {
    if (name == "random-guess") {
        return std::make_unique<RandomGuessAdversary>();
    }
    if (name == "maul-c2") {
        return std::make_unique<MaulC2Adversary>();
    }
    throw ParamError("unknown adversary '" + name + "'");
}

bool adversary_registered(const std::string& name) {
    return name == "random-guess" || name == "maul-c2";
}

GameResult run_game(const GameConfig& cfg) {
    cfg.params.validate();
    if (cfg.trials < 1) {
        throw ParamError("run_game: trials must be >= 1");
    }
    if (!adversary_registered(cfg.adversary)) {
        throw ParamError("run_game: unknown adversary '" + cfg.adversary + "'");
    }

    GameResult res;
    res.stats.trials = cfg.trials;

    std::optional<std::pair<PublicKey, PrivateKey>> shared;
    if (cfg.shared_key) {
        // Key stream is disjoint from every trial stream.
        SplitMix64Rng key_rng(derive_seed(~cfg.seed, 0));
        shared = keygen(cfg.params, key_rng);
    }

    for (std::size_t t = 0; t < cfg.trials; ++t) {
        SplitMix64Rng rng(derive_seed(cfg.seed, t));
        std::optional<std::pair<PublicKey, PrivateKey>> fresh;
        if (!shared) {
            fresh = keygen(cfg.params, rng);
        }
        const PublicKey& pk = shared ? shared->first : fresh->first;
        const PrivateKey& sk = shared ? shared->second : fresh->second;

        auto adversary = make_adversary(cfg.adversary);
        DecryptionOracle oracle(sk);

        TrialOutcome outcome;
        outcome.trial = t;

        auto [m0, m1] = adversary->choose_messages(pk, oracle, rng);
        if (m0.size() != pk.k() || m1.size() != pk.k()) {
            // Malformed challenge pair: trial aborted and scored a loss.
            ++res.stats.aborts;
        } else {
            const int b = rng.next_bit();
            const Ciphertext challenge = encrypt(pk, b ? m1 : m0, rng);
            oracle.set_challenge(challenge);
            const int guess = adversary->guess(pk, challenge, m0, m1, oracle, rng);
            outcome.challenge_bit = b;
            outcome.guess = guess;
            outcome.win = (guess == b);
            if (outcome.win) {
                ++res.stats.wins;
            }
        }
        outcome.queries = oracle.queries();
        res.stats.oracle_queries += oracle.queries();
        res.stats.rejects += oracle.rejects();
        res.stats.challenge_refusals += oracle.refusals();
        if (cfg.record_trials) {
            res.outcomes.push_back(outcome);
        }
    }
    return res;
}

int maul_adversary_step(const PublicKey& pk, const Ciphertext& c_star,
                        const BitString& m0, const BitString& m1,
                        DecryptionOracle& oracle, Rng& rng) {
    const std::size_t k = pk.k();
    const std::size_t i = rng.below_u64(k);
    const Ciphertext probe{c_star.c1, Nat(c_star.c2 + pk.knapsack.a[i])};
    const DecryptionOracle::Answer answer = oracle.query(probe);
    if (answer.refused || !answer.result.ok()) {
        return rng.next_bit();
    }
    const BitString& out = *answer.result.message;
    // A successful maul decrypts under the challenge mask with bit i
    // flipped, so compare against each candidate both as-is and with
    // that bit flipped.
    const std::size_t d0 = std::min(out.hamming_distance(m0),
                                    out.hamming_distance(m0.with_flipped(i)));
    const std::size_t d1 = std::min(out.hamming_distance(m1),
                                    out.hamming_distance(m1.with_flipped(i)));
    if (d0 < d1) {
        return 0;
    }
    if (d1 < d0) {
        return 1;
    }
    return rng.next_bit();
}

LegitimacyReport measure_legitimacy_rate(const SystemParams& params,
                                         std::size_t trials, std::uint64_t seed) {
    params.validate();
    if (trials < 1) {
        throw ParamError("measure_legitimacy_rate: trials must be >= 1");
    }

    LegitimacyReport rep;
    rep.params = params;
    rep.rate_claimed = std::ldexp(1.0, -static_cast<int>(params.k - 1));

    const std::size_t k = params.k;
    std::size_t samples = 0;
    std::size_t knap_pass = 0;
    std::size_t full_pass = 0;
    std::size_t exhaustive_pass = 0;

    if (k <= 12) {
        // Exhaustive mode: `trials` keys, every weight-h mask, every i.
        rep.keys = trials;
        for (std::size_t key_idx = 0; key_idx < trials; ++key_idx) {
            SplitMix64Rng rng(derive_seed(seed, key_idx));
            auto [pk, sk] = keygen(params, rng);

            // All 2^k subset sums of the private weights, undisguised.
            // This is the independent existence oracle: the 2-adic peel
            // must accept exactly the sums in this set.
            std::set<Nat> sums;
            for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
                Nat sum = 0;
                for (std::size_t j = 0; j < k; ++j) {
                    if (mask & (1u << j)) {
                        sum += sk.knapsack.b[j];
                    }
                }
                sums.insert(std::move(sum));
            }

            for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
                if (static_cast<std::size_t>(std::popcount(mask)) != params.h) {
                    continue;
                }
                BitString bits(k);
                for (std::size_t j = 0; j < k; ++j) {
                    bits.set_bit(j, (mask >> j) & 1u);
                }
                const MaskVector x = make_mask(std::move(bits));
                const BitString m = random_bits(k, rng);
                const Ciphertext c_star = encrypt_with_mask(pk, m, x, rng);
                for (std::size_t i = 0; i < k; ++i) {
                    const Nat c2 = c_star.c2 + pk.knapsack.a[i];
                    ++samples;
                    if (knapsack_decode(sk.knapsack, c2)) {
                        ++knap_pass;
                    }
                    const Nat r = c2 * sk.knapsack.mult_inv % sk.knapsack.modulus;
                    if (sums.count(r)) {
                        ++exhaustive_pass;
                    }
                    if (decrypt(sk, Ciphertext{c_star.c1, c2}).ok()) {
                        ++full_pass;
                    }
                }
            }
        }
        rep.rate_exhaustive = static_cast<double>(exhaustive_pass) /
                              static_cast<double>(samples);
    } else {
        // Sampled mode: batches of trials share a key.
        constexpr std::size_t kBatch = 64;
        std::size_t keys = 0;
        std::optional<std::pair<PublicKey, PrivateKey>> kp;
        for (std::size_t t = 0; t < trials; ++t) {
            SplitMix64Rng rng(derive_seed(seed, t));
            if (t % kBatch == 0) {
                SplitMix64Rng key_rng(derive_seed(~seed, t / kBatch));
                kp = keygen(params, key_rng);
                ++keys;
            }
            const MaskVector x = gen_mask(k, params.h, rng);
            const BitString m = random_bits(k, rng);
            const Ciphertext c_star = encrypt_with_mask(kp->first, m, x, rng);
            const std::size_t i = rng.below_u64(k);
            const Nat c2 = c_star.c2 + kp->first.knapsack.a[i];
            ++samples;
            if (knapsack_decode(kp->second.knapsack, c2)) {
                ++knap_pass;
            }
            if (decrypt(kp->second, Ciphertext{c_star.c1, c2}).ok()) {
                ++full_pass;
            }
        }
        rep.keys = keys;
    }

    rep.samples = samples;
    rep.rate_knapsack_pass = static_cast<double>(knap_pass) / static_cast<double>(samples);
    rep.rate_full_decrypt_pass = static_cast<double>(full_pass) / static_cast<double>(samples);
    return rep;
}

CaseProbeReport case_probe(ProbeCase which, const SystemParams& params,
                           std::size_t trials, std::uint64_t seed) {
    params.validate();
    if (trials < 1) {
        throw ParamError("case_probe: trials must be >= 1");
    }

    CaseProbeReport rep;
    rep.which = which;
    rep.params = params;
    rep.trials = trials;

    SplitMix64Rng setup(derive_seed(~seed, 0));
    auto [pk, sk] = keygen(params, setup);
    auto [m0, m1] = random_message_pair(params.k, setup);
    const int b = setup.next_bit();
    const BitString& m_b = b ? m1 : m0;
    const Ciphertext c_star = encrypt(pk, m_b, setup);
    const Nat y_star = rsa_decrypt(sk.rsa_pub, sk.rsa, c_star.c1);

    DecryptionOracle oracle(sk);
    oracle.set_challenge(c_star);

    if (which == ProbeCase::case1) {
        rep.predicted_rate = std::ldexp(1.0, -static_cast<int>(params.n_bits - params.k));
        for (std::size_t t = 0; t < trials; ++t) {
            SplitMix64Rng rng(derive_seed(seed, t));
            Nat c1 = rng.below(pk.rsa.n);
            while (c1 == c_star.c1) {
                c1 = rng.below(pk.rsa.n);
            }
            const DecryptionOracle::Answer answer = oracle.query(Ciphertext{c1, c_star.c2});
            if (!answer.result.ok()) {
                ++rep.rejects;
                continue;
            }
            ++rep.answered;
            if (*answer.result.message == m_b) {
                ++rep.mb_collisions;
            }
            if (rsa_decrypt(sk.rsa_pub, sk.rsa, c1) == y_star) {
                ++rep.ystar_collisions;   // impossible: RSA is a bijection
            }
        }
        if (rep.answered > 0) {
            rep.collision_rate = static_cast<double>(rep.mb_collisions) /
                                 static_cast<double>(rep.answered);
            const double p0 = rep.predicted_rate;
            rep.ci95_halfwidth =
                1.96 * std::sqrt(p0 * (1.0 - p0) / static_cast<double>(rep.answered));
            rep.consistent = std::abs(rep.collision_rate - p0) <= rep.ci95_halfwidth;
        }
    } else {
        std::vector<std::size_t> agree(params.k, 0);
        for (std::size_t t = 0; t < trials; ++t) {
            SplitMix64Rng rng(derive_seed(seed, t));
            Ciphertext probe{c_star.c1, Nat(0)};
            do {
                probe.c2 = knapsack_encode(pk.knapsack, gen_mask(params.k, params.h, rng));
            } while (probe.c2 == c_star.c2);
            const DecryptionOracle::Answer answer = oracle.query(probe);
            if (!answer.result.ok()) {
                ++rep.rejects;
                continue;
            }
            ++rep.answered;
            const BitString& out = *answer.result.message;
            for (std::size_t j = 0; j < params.k; ++j) {
                agree[j] += out.bit(j) == m_b.bit(j);
            }
        }
        if (rep.answered > 0) {
            const double n = static_cast<double>(rep.answered);
            std::size_t total = 0;
            rep.per_bit_agreement.reserve(params.k);
            for (std::size_t j = 0; j < params.k; ++j) {
                total += agree[j];
                rep.per_bit_agreement.push_back(static_cast<double>(agree[j]) / n);
                const double dev = 2.0 * static_cast<double>(agree[j]) - n;
                rep.chi_square += dev * dev / n;
            }
            rep.bit_agreement_rate =
                static_cast<double>(total) / (n * static_cast<double>(params.k));
        }
    }
    return rep;
}

std::string render_report(const GameConfig& cfg, const GameStats& stats) {
    std::ostringstream out;
    out << "experiment=cca2-game\n";
    out << "adversary=" << cfg.adversary << "\n";
    out << "k=" << cfg.params.k << "\n";
    out << "nbits=" << cfg.params.n_bits << "\n";
    out << "h=" << cfg.params.h << "\n";
    out << "trials=" << stats.trials << "\n";
    out << "shared_key=" << (cfg.shared_key ? 1 : 0) << "\n";
    out << "seed=" << cfg.seed << "\n";
    out << "wins=" << stats.wins << "\n";
    out << "win_rate="
        << fmt_rate(stats.trials ? static_cast<double>(stats.wins) /
                                       static_cast<double>(stats.trials)
                                 : 0.0)
        << "\n";
    out << "advantage=" << fmt_rate(stats.advantage()) << "\n";
    out << "ci95=" << fmt_rate(stats.ci95()) << "\n";
    out << "oracle_queries=" << stats.oracle_queries << "\n";
    out << "oracle_rejects=" << stats.rejects << "\n";
    out << "challenge_refusals=" << stats.challenge_refusals << "\n";
    out << "aborts=" << stats.aborts << "\n";
    return out.str();
}

std::string render_report(const LegitimacyReport& rep) {
    std::ostringstream out;
    out << "experiment=legitimacy-rate\n";
    out << "k=" << rep.params.k << "\n";
    out << "nbits=" << rep.params.n_bits << "\n";
    out << "h=" << rep.params.h << "\n";
    out << "keys=" << rep.keys << "\n";
    out << "samples=" << rep.samples << "\n";
    out << "rate_knapsack_pass=" << fmt_rate(rep.rate_knapsack_pass) << "\n";
    out << "rate_full_decrypt_pass=" << fmt_rate(rep.rate_full_decrypt_pass) << "\n";
    out << "rate_exhaustive="
        << (rep.rate_exhaustive ? fmt_rate(*rep.rate_exhaustive) : "n/a") << "\n";
    out << "rate_claimed=" << fmt_rate(rep.rate_claimed) << "\n";
    return out.str();
}

std::string render_report(const CaseProbeReport& rep) {
    std::ostringstream out;
    out << "experiment=" << (rep.which == ProbeCase::case1 ? "case1-probe" : "case2-probe")
        << "\n";
    out << "k=" << rep.params.k << "\n";
    out << "nbits=" << rep.params.n_bits << "\n";
    out << "h=" << rep.params.h << "\n";
    out << "trials=" << rep.trials << "\n";
    out << "answered=" << rep.answered << "\n";
    out << "rejects=" << rep.rejects << "\n";
    if (rep.which == ProbeCase::case1) {
        out << "mb_collisions=" << rep.mb_collisions << "\n";
        out << "ystar_collisions=" << rep.ystar_collisions << "\n";
        out << "collision_rate=" << fmt_rate(rep.collision_rate) << "\n";
        out << "predicted_rate=" << fmt_rate(rep.predicted_rate) << "\n";
        out << "ci95_halfwidth=" << fmt_rate(rep.ci95_halfwidth) << "\n";
        out << "consistent=" << (rep.consistent ? "yes" : "no") << "\n";
    } else {
        out << "bit_agreement_rate=" << fmt_rate(rep.bit_agreement_rate) << "\n";
        out << "chi_square=" << fmt_rate(rep.chi_square) << "\n";
        out << "chi_square_dof=" << rep.params.k << "\n";
        out << "per_bit_agreement=";
        for (std::size_t j = 0; j < rep.per_bit_agreement.size(); ++j) {
            if (j != 0) {
                out << ",";
            }
            out << fmt_rate(rep.per_bit_agreement[j]);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_csv(const std::vector<TrialOutcome>& outcomes) {
    std::ostringstream out;
    out << "trial,challenge_bit,guess,win,queries\n";
    for (const TrialOutcome& o : outcomes) {
        out << o.trial << "," << o.challenge_bit << "," << o.guess << ","
            << (o.win ? 1 : 0) << "," << o.queries << "\n";
    }
    return out.str();
}

} // namespace knaprsa
