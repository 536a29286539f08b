#pragma once

// Finite field contexts and vector states.
//
// Three field kinds are supported:
//   GF2   - the binary field
//   GFp   - prime fields, arbitrary precision residues
//   GF2w  - binary extension fields GF(2^w), w <= 32, elements as bit masks
//           (bit i = coefficient of x^i) reduced by a fixed irreducible
//
// Vectors over GF(2) are bit-packed into 64-bit words; this is the layout the
// linear algebra relies on for throughput.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "locinv/errors.hpp"

namespace locinv {

enum class FieldKind { GF2, GFp, GF2w };

// Scalar element payload. Interpretation depends on the owning field:
// GF2 / GF2w use `w` (bit or polynomial mask), GFp uses `z` (canonical residue).
// All arithmetic goes through Field, which knows the kind.
struct Fe {
    uint64_t w = 0;
    mpz_class z;

    Fe() = default;
    explicit Fe(uint64_t mask) : w(mask) {}
    explicit Fe(mpz_class v) : z(std::move(v)) {}
};

class Field {
  public:
    Field() = default;

    static Field gf2();
    // p must be an odd prime >= 3 (probabilistic primality check).
    static Field gfp(const mpz_class& p);
    // reduction: degree-w polynomial mask including the x^w bit; must be
    // irreducible over GF(2). 1 <= w <= 32.
    static Field gf2w(unsigned w, uint64_t reduction);

    bool valid() const { return impl_ != nullptr; }
    FieldKind kind() const;
    const mpz_class& prime() const;  // GFp only
    unsigned width() const;          // GF2w: w, GF2: 1
    uint64_t reduction() const;      // GF2w only
    mpz_class order() const;         // |F|

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    Fe zero() const;
    Fe one() const;
    Fe from_uint(uint64_t v) const;
    Fe from_mpz(const mpz_class& v) const;
    mpz_class to_mpz(const Fe& a) const;  // canonical integer code of the element

    bool is_zero(const Fe& a) const;
    bool eq(const Fe& a, const Fe& b) const;
    Fe add(const Fe& a, const Fe& b) const;
    Fe sub(const Fe& a, const Fe& b) const;
    Fe neg(const Fe& a) const;
    Fe mul(const Fe& a, const Fe& b) const;
    Fe inv(const Fe& a) const;  // throws InversionOfZero
    Fe pow(const Fe& a, const mpz_class& e) const;
    Fe pow(const Fe& a, uint64_t e) const;

    std::string to_string(const Fe& a) const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    const Impl& ref() const;
};

// Carry-less multiply of two GF(2)[x] polynomials given as bit masks,
// reduced by `reduction` (degree w). Exposed for the extension-field targets.
uint64_t gf2x_mulmod(uint64_t a, uint64_t b, uint64_t reduction, unsigned w);
// True iff the degree-w mask is irreducible over GF(2). w <= 32.
bool gf2x_irreducible(uint64_t reduction, unsigned w);

// Vector over a field. GF(2) vectors are bit-packed (LSB of words()[0] is
// coordinate 0); GF2w stores one mask per coordinate; GFp one residue per
// coordinate.
class StateVec {
  public:
    StateVec() = default;
    StateVec(const Field& f, size_t dim);

    bool valid() const { return field_.valid(); }
    const Field& field() const { return field_; }
    size_t dim() const { return dim_; }

    Fe get(size_t i) const;
    void set(size_t i, const Fe& v);

    // GF(2) fast path.
    bool bit(size_t i) const;
    void set_bit(size_t i, bool b);
    const std::vector<uint64_t>& words() const { return u_; }
    std::vector<uint64_t>& words() { return u_; }

    bool operator==(const StateVec& o) const;
    bool operator!=(const StateVec& o) const { return !(*this == o); }

    // this += c * other (used by the solution formula).
    void add_scaled(const StateVec& other, const Fe& c);
    void scale(const Fe& c);

  private:
    Field field_;
    size_t dim_ = 0;
    std::vector<uint64_t> u_;    // GF2: packed bits; GF2w: one mask per coord
    std::vector<mpz_class> z_;   // GFp: one residue per coord

    void check_index(size_t i) const;
};

// Base-|F| positional codec, least significant digit first.
// encode: 0 <= value < |F|^n, else ValueOutOfRange.
StateVec encode_value(const Field& f, size_t n, const mpz_class& value);
mpz_class decode_value(const StateVec& v);
// decode_value narrowed to uint64_t; ValueOutOfRange if it does not fit.
uint64_t decode_index(const StateVec& v);

// Hex serialization: lowercase, no prefix on output; input accepts an
// optional 0x/0X prefix. Bit vectors serialize as the hex of decode_value.
std::string to_hex(const mpz_class& v);
mpz_class from_hex(const std::string& s);  // ParseError on bad input
std::string vec_to_hex(const StateVec& v);

}  // namespace locinv
