#include "locinv/field.hpp"

#include <algorithm>
#include <cctype>

namespace locinv {

struct Field::Impl {
    FieldKind kind = FieldKind::GF2;
    mpz_class p;            // GFp
    unsigned w = 1;         // GF2w
    uint64_t reduction = 0; // GF2w, includes the x^w bit
};

namespace {

unsigned mask_degree(uint64_t m) {
    unsigned d = 0;
    while (m > 1) {
        m >>= 1;
        ++d;
    }
    return d;
}

// Product of two GF(2)[x] masks, no reduction. Inputs of degree < 32.
uint64_t gf2x_mul_raw(uint64_t a, uint64_t b) {
    uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        a <<= 1;
        b >>= 1;
    }
    return acc;
}

uint64_t gf2x_mod(uint64_t a, uint64_t reduction, unsigned w) {
    if (reduction == 0) return a;
    while (a >> w) {
        unsigned d = mask_degree(a);
        a ^= reduction << (d - w);
    }
    return a;
}

uint64_t gf2x_powmod(uint64_t a, uint64_t e, uint64_t red, unsigned w) {
    uint64_t acc = 1;
    a = gf2x_mod(a, red, w);
    while (e) {
        if (e & 1) acc = gf2x_mulmod(acc, a, red, w);
        a = gf2x_mulmod(a, a, red, w);
        e >>= 1;
    }
    return acc;
}

uint64_t gf2x_gcd(uint64_t a, uint64_t b) {
    while (b) {
        unsigned db = mask_degree(b);
        while (a && mask_degree(a) >= db) {
            a ^= b << (mask_degree(a) - db);
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

uint64_t gf2x_mulmod(uint64_t a, uint64_t b, uint64_t reduction, unsigned w) {
    return gf2x_mod(gf2x_mul_raw(a, b), reduction, w);
}

bool gf2x_irreducible(uint64_t reduction, unsigned w) {
    if (w == 0 || w > 32) return false;
    if (mask_degree(reduction) != w) return false;
    if ((reduction & 1) == 0) return false;  // divisible by x
    // f irreducible iff x^(2^w) == x mod f and gcd(x^(2^(w/r)) - x, f) = 1
    // for every prime divisor r of w.
    auto pow2k_of_x = [&](unsigned k) {
        // x^(2^k) mod f by repeated squaring of x.
        uint64_t t = 2;  // x
        for (unsigned i = 0; i < k; ++i) t = gf2x_mulmod(t, t, reduction, w);
        return t;
    };
    if (pow2k_of_x(w) != 2) return false;
    unsigned rem = w;
    for (unsigned r = 2; r * r <= rem; ++r) {
        if (rem % r == 0) {
            while (rem % r == 0) rem /= r;
            uint64_t t = pow2k_of_x(w / r) ^ 2;  // x^(2^(w/r)) - x
            if (gf2x_gcd(t, reduction) != 1) return false;
        }
    }
    if (rem > 1 && rem < w) {
        uint64_t t = pow2k_of_x(w / rem) ^ 2;
        if (gf2x_gcd(t, reduction) != 1) return false;
    }
    return true;
}

const Field::Impl& Field::ref() const {
    if (!impl_) throw BadField("field handle is empty");
    return *impl_;
}

Field Field::gf2() {
    auto impl = std::make_shared<Impl>();
    impl->kind = FieldKind::GF2;
    return Field(std::move(impl));
}

Field Field::gfp(const mpz_class& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw BadField("GFp modulus must be an odd prime >= 3");
    if (mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
        throw BadField("GFp modulus failed primality check");
    auto impl = std::make_shared<Impl>();
    impl->kind = FieldKind::GFp;
    impl->p = p;
    return Field(std::move(impl));
}

Field Field::gf2w(unsigned w, uint64_t reduction) {
    if (w < 1 || w > 32) throw BadField("GF2w width must be in [1,32]");
    if (!gf2x_irreducible(reduction, w))
        throw BadField("GF2w reduction polynomial is not irreducible of degree w");
    auto impl = std::make_shared<Impl>();
    impl->kind = FieldKind::GF2w;
    impl->w = w;
    impl->reduction = reduction;
    return Field(std::move(impl));
}

FieldKind Field::kind() const { return ref().kind; }

const mpz_class& Field::prime() const {
    if (ref().kind != FieldKind::GFp) throw BadField("prime() on non-GFp field");
    return ref().p;
}

unsigned Field::width() const {
    return ref().kind == FieldKind::GF2w ? ref().w : 1;
}

uint64_t Field::reduction() const {
    if (ref().kind != FieldKind::GF2w) throw BadField("reduction() on non-GF2w field");
    return ref().reduction;
}

mpz_class Field::order() const {
    const Impl& i = ref();
    switch (i.kind) {
        case FieldKind::GF2: return 2;
        case FieldKind::GFp: return i.p;
        case FieldKind::GF2w: {
            mpz_class o = 1;
            o <<= i.w;
            return o;
        }
    }
    return 0;
}

bool Field::operator==(const Field& o) const {
    if (impl_ == o.impl_) return true;
    if (!impl_ || !o.impl_) return false;
    if (impl_->kind != o.impl_->kind) return false;
    switch (impl_->kind) {
        case FieldKind::GF2: return true;
        case FieldKind::GFp: return impl_->p == o.impl_->p;
        case FieldKind::GF2w:
            return impl_->w == o.impl_->w && impl_->reduction == o.impl_->reduction;
    }
    return false;
}

Fe Field::zero() const { return ref().kind == FieldKind::GFp ? Fe(mpz_class(0)) : Fe(uint64_t(0)); }

Fe Field::one() const { return ref().kind == FieldKind::GFp ? Fe(mpz_class(1)) : Fe(uint64_t(1)); }

Fe Field::from_uint(uint64_t v) const {
    const Impl& i = ref();
    switch (i.kind) {
        case FieldKind::GF2: return Fe(v & 1);
        case FieldKind::GFp: {
            mpz_class t;
            mpz_import(t.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
            return Fe(mpz_class(t % i.p));
        }
        case FieldKind::GF2w:
            if (i.w < 64 && (v >> i.w) != 0)
                throw ValueOutOfRange("GF2w element mask exceeds field width");
            return Fe(v);
    }
    return Fe();
}

Fe Field::from_mpz(const mpz_class& v) const {
    const Impl& i = ref();
    if (i.kind == FieldKind::GFp) {
        mpz_class t = v % i.p;
        if (t < 0) t += i.p;
        return Fe(std::move(t));
    }
    if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
        throw ValueOutOfRange("element code does not fit the field");
    return from_uint(mpz_get_ui(v.get_mpz_t()));
}

mpz_class Field::to_mpz(const Fe& a) const {
    if (ref().kind == FieldKind::GFp) return a.z;
    mpz_class t;
    mpz_import(t.get_mpz_t(), 1, 1, sizeof(a.w), 0, 0, &a.w);
    return t;
}

bool Field::is_zero(const Fe& a) const {
    return ref().kind == FieldKind::GFp ? a.z == 0 : a.w == 0;
}

bool Field::eq(const Fe& a, const Fe& b) const {
    return ref().kind == FieldKind::GFp ? a.z == b.z : a.w == b.w;
}

Fe Field::add(const Fe& a, const Fe& b) const {
    const Impl& i = ref();
    if (i.kind == FieldKind::GFp) {
        mpz_class t = a.z + b.z;
        if (t >= i.p) t -= i.p;
        return Fe(std::move(t));
    }
    return Fe(a.w ^ b.w);
}

Fe Field::sub(const Fe& a, const Fe& b) const {
    const Impl& i = ref();
    if (i.kind == FieldKind::GFp) {
        mpz_class t = a.z - b.z;
        if (t < 0) t += i.p;
        return Fe(std::move(t));
    }
    return Fe(a.w ^ b.w);
}

Fe Field::neg(const Fe& a) const {
    const Impl& i = ref();
    if (i.kind == FieldKind::GFp) {
        if (a.z == 0) return Fe(mpz_class(0));
        return Fe(mpz_class(i.p - a.z));
    }
    return a;
}

Fe Field::mul(const Fe& a, const Fe& b) const {
    const Impl& i = ref();
    switch (i.kind) {
        case FieldKind::GF2: return Fe(a.w & b.w);
        case FieldKind::GFp: {
            mpz_class t = a.z * b.z;
            t %= i.p;
            return Fe(std::move(t));
        }
        case FieldKind::GF2w: return Fe(gf2x_mulmod(a.w, b.w, i.reduction, i.w));
    }
    return Fe();
}

Fe Field::inv(const Fe& a) const {
    const Impl& i = ref();
    if (is_zero(a)) throw InversionOfZero();
    switch (i.kind) {
        case FieldKind::GF2: return Fe(uint64_t(1));
        case FieldKind::GFp: {
            mpz_class t;
            mpz_invert(t.get_mpz_t(), a.z.get_mpz_t(), i.p.get_mpz_t());
            return Fe(std::move(t));
        }
        case FieldKind::GF2w: {
            // a^(2^w - 2); w <= 32 so the exponent fits a word.
            uint64_t e = (i.w == 64) ? ~uint64_t(1) : ((uint64_t(1) << i.w) - 2);
            return Fe(gf2x_powmod(a.w, e, i.reduction, i.w));
        }
    }
    return Fe();
}

Fe Field::pow(const Fe& a, const mpz_class& e) const {
    const Impl& i = ref();
    if (e < 0) throw ValueOutOfRange("negative exponent");
    if (i.kind == FieldKind::GFp) {
        mpz_class t;
        mpz_powm(t.get_mpz_t(), a.z.get_mpz_t(), e.get_mpz_t(), i.p.get_mpz_t());
        return Fe(std::move(t));
    }
    Fe acc = one();
    Fe base = a;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

Fe Field::pow(const Fe& a, uint64_t e) const {
    mpz_class k;
    mpz_import(k.get_mpz_t(), 1, 1, sizeof(e), 0, 0, &e);
    return pow(a, k);
}

std::string Field::to_string(const Fe& a) const { return to_mpz(a).get_str(10); }

// ---------------------------------------------------------------------------
// StateVec

StateVec::StateVec(const Field& f, size_t dim) : field_(f), dim_(dim) {
    switch (f.kind()) {
        case FieldKind::GF2: u_.assign((dim + 63) / 64, 0); break;
        case FieldKind::GF2w: u_.assign(dim, 0); break;
        case FieldKind::GFp: z_.assign(dim, mpz_class(0)); break;
    }
}

void StateVec::check_index(size_t i) const {
    if (i >= dim_) throw IndexOutOfRange("StateVec coordinate");
}

Fe StateVec::get(size_t i) const {
    check_index(i);
    switch (field_.kind()) {
        case FieldKind::GF2: return Fe(uint64_t((u_[i / 64] >> (i % 64)) & 1));
        case FieldKind::GF2w: return Fe(u_[i]);
        case FieldKind::GFp: return Fe(z_[i]);
    }
    return Fe();
}

void StateVec::set(size_t i, const Fe& v) {
    check_index(i);
    switch (field_.kind()) {
        case FieldKind::GF2:
            if (v.w & 1)
                u_[i / 64] |= uint64_t(1) << (i % 64);
            else
                u_[i / 64] &= ~(uint64_t(1) << (i % 64));
            break;
        case FieldKind::GF2w: u_[i] = v.w; break;
        case FieldKind::GFp: z_[i] = v.z; break;
    }
}

bool StateVec::bit(size_t i) const {
    check_index(i);
    return (u_[i / 64] >> (i % 64)) & 1;
}

void StateVec::set_bit(size_t i, bool b) {
    check_index(i);
    if (b)
        u_[i / 64] |= uint64_t(1) << (i % 64);
    else
        u_[i / 64] &= ~(uint64_t(1) << (i % 64));
}

bool StateVec::operator==(const StateVec& o) const {
    if (!field_.valid() || !o.field_.valid()) return field_.valid() == o.field_.valid();
    if (field_ != o.field_ || dim_ != o.dim_) return false;
    if (field_.kind() == FieldKind::GFp) return z_ == o.z_;
    return u_ == o.u_;
}

void StateVec::add_scaled(const StateVec& other, const Fe& c) {
    if (field_ != other.field_) throw MismatchedField("StateVec::add_scaled");
    if (dim_ != other.dim_) throw DimensionMismatch("StateVec::add_scaled");
    switch (field_.kind()) {
        case FieldKind::GF2:
            if (c.w & 1)
                for (size_t k = 0; k < u_.size(); ++k) u_[k] ^= other.u_[k];
            break;
        case FieldKind::GF2w: {
            for (size_t k = 0; k < dim_; ++k)
                u_[k] ^= gf2x_mulmod(other.u_[k], c.w, field_.reduction(), field_.width());
            break;
        }
        case FieldKind::GFp: {
            const mpz_class& p = field_.prime();
            for (size_t k = 0; k < dim_; ++k) {
                z_[k] += other.z_[k] * c.z;
                z_[k] %= p;
            }
            break;
        }
    }
}

void StateVec::scale(const Fe& c) {
    switch (field_.kind()) {
        case FieldKind::GF2:
            if (!(c.w & 1)) std::fill(u_.begin(), u_.end(), 0);
            break;
        case FieldKind::GF2w:
            for (size_t k = 0; k < dim_; ++k)
                u_[k] = gf2x_mulmod(u_[k], c.w, field_.reduction(), field_.width());
            break;
        case FieldKind::GFp: {
            const mpz_class& p = field_.prime();
            for (size_t k = 0; k < dim_; ++k) {
                z_[k] *= c.z;
                z_[k] %= p;
            }
            break;
        }
    }
}

// ---------------------------------------------------------------------------
// Codec

StateVec encode_value(const Field& f, size_t n, const mpz_class& value) {
    if (value < 0) throw ValueOutOfRange("negative value");
    StateVec out(f, n);
    switch (f.kind()) {
        case FieldKind::GF2: {
            if (mpz_sizeinbase(value.get_mpz_t(), 2) > n && value != 0)
                throw ValueOutOfRange("value needs more than n bits");
            for (size_t i = 0; i < n; ++i)
                out.set_bit(i, mpz_tstbit(value.get_mpz_t(), i));
            break;
        }
        case FieldKind::GF2w: {
            unsigned w = f.width();
            if (mpz_sizeinbase(value.get_mpz_t(), 2) > n * w && value != 0)
                throw ValueOutOfRange("value exceeds |F|^n");
            for (size_t i = 0; i < n; ++i) {
                uint64_t mask = 0;
                for (unsigned b = 0; b < w; ++b)
                    if (mpz_tstbit(value.get_mpz_t(), i * w + b)) mask |= uint64_t(1) << b;
                out.set(i, Fe(mask));
            }
            break;
        }
        case FieldKind::GFp: {
            mpz_class rest = value, digit;
            const mpz_class& p = f.prime();
            for (size_t i = 0; i < n; ++i) {
                mpz_tdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(),
                            p.get_mpz_t());
                out.set(i, Fe(digit));
            }
            if (rest != 0) throw ValueOutOfRange("value exceeds |F|^n");
            break;
        }
    }
    return out;
}

mpz_class decode_value(const StateVec& v) {
    const Field& f = v.field();
    mpz_class acc = 0;
    switch (f.kind()) {
        case FieldKind::GF2:
            for (size_t i = v.dim(); i-- > 0;) {
                acc <<= 1;
                if (v.bit(i)) acc |= 1;
            }
            break;
        case FieldKind::GF2w: {
            unsigned w = f.width();
            for (size_t i = v.dim(); i-- > 0;) {
                acc <<= w;
                acc |= mpz_class(f.to_mpz(v.get(i)));
            }
            break;
        }
        case FieldKind::GFp:
            for (size_t i = v.dim(); i-- > 0;) {
                acc *= f.prime();
                acc += v.get(i).z;
            }
            break;
    }
    return acc;
}

uint64_t decode_index(const StateVec& v) {
    mpz_class t = decode_value(v);
    if (mpz_sizeinbase(t.get_mpz_t(), 2) > 64)
        throw ValueOutOfRange("state index does not fit 64 bits");
    return mpz_get_ui(t.get_mpz_t());
}

std::string to_hex(const mpz_class& v) {
    if (v < 0) throw ValueOutOfRange("negative value has no hex form here");
    return v.get_str(16);
}

mpz_class from_hex(const std::string& s) {
    std::string t = s;
    if (t.size() >= 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) t = t.substr(2);
    if (t.empty()) throw ParseError("empty hex string");
    for (char c : t)
        if (!std::isxdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad hex digit in '" + s + "'");
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), t.c_str(), 16) != 0)
        throw ParseError("bad hex string '" + s + "'");
    return v;
}

std::string vec_to_hex(const StateVec& v) { return to_hex(decode_value(v)); }

}  // namespace locinv
