#ifndef SDC_RANDOM_HPP_
#define SDC_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "sdc/bits.hpp"
#include "sdc/errors.hpp"
#include "sdc/gf2e.hpp"

namespace sdc {

/* All protocol randomness (ramp keys V, pad keys T) flows through this
   interface so the audits can replace it with exhaustive assignment. */
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual uint8_t bit() = 0;

    BitVec bits(size_t n) {
        BitVec v(n);
        for (auto& b : v) b = bit();
        return v;
    }

    uint64_t symbol(const gf::FieldSpec& spec) {
        uint64_t x = 0;
        for (unsigned i = 0; i < spec.z; ++i) x = x << 1 | bit();
        return x;
    }
};

class SeededSource final : public RandomSource {
public:
    explicit SeededSource(uint64_t seed) : engine_(seed) {}
    uint8_t bit() override { return static_cast<uint8_t>(engine_() & 1); }

private:
    std::mt19937_64 engine_;
};

class OsSource final : public RandomSource {
public:
    uint8_t bit() override { return static_cast<uint8_t>(device_() & 1); }

private:
    std::random_device device_;
};

// Replays a fixed bit tape; exhausting it is a hard error.
class TapeSource final : public RandomSource {
public:
    explicit TapeSource(BitVec tape) : tape_(std::move(tape)) {}
    uint8_t bit() override {
        if (pos_ >= tape_.size()) throw ProtocolError("TapeSource: tape exhausted");
        return tape_[pos_++];
    }
    size_t consumed() const { return pos_; }

private:
    BitVec tape_;
    size_t pos_ = 0;
};

// Sabotage mode: every key degenerates to zero.
class ZeroSource final : public RandomSource {
public:
    uint8_t bit() override { return 0; }
};

} // namespace sdc

#endif
