#include "knaprsa/precoder.hpp"

#include "knaprsa/errors.hpp"

#include <numeric>
#include <vector>

namespace knaprsa {

namespace {

void check_weight(std::size_t k, std::size_t h) {
    if (h == 0 || h >= k) {
        throw ParamError("mask weight must satisfy 0 < h < k");
    }
    if (k % h != 0) {
        throw ParamError("mask weight must divide k");
    }
}

} // namespace

MaskVector gen_mask(std::size_t k, std::size_t h, Rng& rng) {
    check_weight(k, h);
    // Partial Fisher-Yates: the first h entries end up as h distinct
    // uniform positions.
    std::vector<std::size_t> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    BitString bits(k);
    for (std::size_t j = 0; j < h; ++j) {
        const std::size_t swap_at = j + rng.below_u64(k - j);
        std::swap(pos[j], pos[swap_at]);
        bits.set_bit(pos[j], 1);
    }
    return make_mask(std::move(bits));
}

BlockLayout block_params(std::size_t k, std::size_t h, std::size_t n_bits) {
    check_weight(k, h);
    if (n_bits <= k) {
        throw ParamError("block_params: n_bits must exceed k");
    }
    BlockLayout layout;
    layout.k = k;
    layout.h = h;
    layout.n_bits = n_bits;
    layout.v = k / h;
    layout.s = (n_bits - 1 - k) / (k - h);
    if (layout.s < 1) {
        throw ModulusTooSmallError("block_params: no room for confuse blocks");
    }
    layout.total = k + (k - h) * layout.s;
    return layout;
}

BitString encode_message(const BitString& m, const MaskVector& x,
                         const BlockLayout& layout, Rng& rng) {
    if (m.size() != layout.k || x.bits.size() != layout.k) {
        throw ParamError("encode_message: message and mask must have length k");
    }
    if (x.weight != layout.h) {
        throw ParamError("encode_message: mask weight does not match layout");
    }
    const BitString masked = m ^ x.bits;
    BitString out;
    std::size_t next_block = 0;   // data blocks are consumed in order
    for (std::size_t i = 0; i < layout.k; ++i) {
        if (x.bits.bit(i)) {
            out.append(masked.slice(next_block * layout.v, layout.v));
            ++next_block;
        } else {
            for (std::size_t j = 0; j < layout.s; ++j) {
                out.append_bit(rng.next_bit());
            }
        }
    }
    return out;
}

BitString decode_message(const BitString& m_prime, const MaskVector& x,
                         const BlockLayout& layout) {
    if (x.bits.size() != layout.k || x.weight != layout.h) {
        throw ParamError("decode_message: mask inconsistent with layout");
    }
    if (m_prime.size() != layout.total) {
        throw ParamError("decode_message: malformed payload length");
    }
    BitString masked;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < layout.k; ++i) {
        if (x.bits.bit(i)) {
            masked.append(m_prime.slice(pos, layout.v));
            pos += layout.v;
        } else {
            pos += layout.s;
        }
    }
    return masked ^ x.bits;
}

} // namespace knaprsa
