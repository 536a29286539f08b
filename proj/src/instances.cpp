#include "locinv/instances.hpp"

#include <fstream>
#include <sstream>

namespace locinv {

namespace {

const nlohmann::json& need(const nlohmann::json& obj, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError("missing field \"" + key + "\"");
    return *it;
}

}  // namespace

mpz_class json_val_mpz(const nlohmann::json& v, const std::string& what) {
    if (v.is_string()) return from_hex(v.get<std::string>());
    if (v.is_number_unsigned()) return mpz_class(v.get<uint64_t>());
    if (v.is_number_integer()) {
        int64_t s = v.get<int64_t>();
        if (s < 0) throw ParseError("\"" + what + "\" must be nonnegative");
        return mpz_class(static_cast<uint64_t>(s));
    }
    throw ParseError("\"" + what + "\" must be a hex string or integer");
}

mpz_class json_mpz(const nlohmann::json& obj, const std::string& key) {
    return json_val_mpz(need(obj, key), key);
}

mpz_class json_mpz_or(const nlohmann::json& obj, const std::string& key,
                      const mpz_class& fallback) {
    auto it = obj.find(key);
    return it == obj.end() ? fallback : json_val_mpz(*it, key);
}

uint64_t json_u64(const nlohmann::json& obj, const std::string& key) {
    mpz_class v = json_mpz(obj, key);
    if (!v.fits_ulong_p()) throw ParseError("\"" + key + "\" out of range");
    return mpz_get_ui(v.get_mpz_t());
}

uint64_t json_u64_or(const nlohmann::json& obj, const std::string& key, uint64_t fallback) {
    return obj.contains(key) ? json_u64(obj, key) : fallback;
}

bool json_bool_or(const nlohmann::json& obj, const std::string& key, bool fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_boolean()) throw ParseError("\"" + key + "\" must be a boolean");
    return it->get<bool>();
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
    return j;
}

TargetInstance load_instance(const nlohmann::json& spec) {
    if (!spec.is_object()) throw ParseError("instance descriptor must be a JSON object");
    std::string kind = need(spec, "target").get<std::string>();
    TargetInstance inst;
    inst.kind = kind;

    if (kind == "rsa_fe") {
        mpz_class n = json_mpz(spec, "n");
        mpz_class e = json_mpz(spec, "e");
        mpz_class c = json_mpz(spec, "c");
        inst.map = rsa_fe_map(n, e);
        if (c < 0 || c >= n) throw ParseError("\"c\" must lie in [0, n)");
        inst.y = encode_value(inst.map.field, inst.map.n_out, c);
        inst.extra = {{"n", to_hex(n)}, {"e", to_hex(e)}};
    } else if (kind == "rsa_fc") {
        mpz_class n = json_mpz(spec, "n");
        mpz_class c = json_mpz(spec, "c");
        mpz_class m = json_mpz(spec, "m");
        inst.map = rsa_fc_map(n, c);
        if (m < 0 || m >= n) throw ParseError("\"m\" must lie in [0, n)");
        inst.y = encode_value(inst.map.field, inst.map.n_out, m);
        inst.extra = {{"n", to_hex(n)}, {"c", to_hex(c)}};
        if (spec.contains("e")) inst.extra["e"] = to_hex(json_mpz(spec, "e"));
    } else if (kind == "dlp_fp") {
        mpz_class p = json_mpz(spec, "p");
        mpz_class a = json_mpz(spec, "a");
        mpz_class b = json_mpz(spec, "b");
        inst.map = dlp_fp_map(p, a);
        if (b < 0 || b >= p) throw ParseError("\"b\" must lie in [0, p)");
        inst.y = StateVec(inst.map.field, 1);
        inst.y.set(0, inst.map.field.from_mpz(b));
    } else if (kind == "dlp_f2w") {
        unsigned w = static_cast<unsigned>(json_u64(spec, "w"));
        uint64_t red;
        if (spec.contains("reduction")) {
            red = json_u64(spec, "reduction");
        } else {
            auto std_red = standard_reduction(w);
            if (!std_red) throw ParseError("no stock reduction for this w; pass \"reduction\"");
            red = *std_red;
        }
        uint64_t a = json_u64(spec, "a");
        uint64_t b = json_u64(spec, "b");
        bool reversed = json_bool_or(spec, "reversed", false);
        inst.map = dlp_f2w_map(w, red, a, reversed);
        inst.y = encode_value(inst.map.field, inst.map.n_out, mpz_class(b));
    } else if (kind == "spn") {
        uint64_t pt = json_u64(spec, "plaintext");
        uint64_t ct = json_u64(spec, "ciphertext");
        if (pt > 0xffff || ct > 0xffff) throw ParseError("spn blocks are 16-bit");
        inst.map = spn_kpa_map(static_cast<uint16_t>(pt));
        inst.y = encode_value(inst.map.field, inst.map.n_out, mpz_class(ct));
    } else if (kind == "stream") {
        uint64_t iv = json_u64(spec, "iv");
        uint64_t ks = json_u64(spec, "keystream");
        size_t k0 = json_u64_or(spec, "k0", 8);
        if (iv > 0xff) throw ParseError("\"iv\" is 8-bit");
        if (ks > 0xffff) throw ParseError("\"keystream\" is a 16-bit window");
        inst.map = stream_kpa_map(static_cast<uint8_t>(iv), k0);
        inst.y = encode_value(inst.map.field, inst.map.n_out, mpz_class(ks));
    } else if (kind == "ecdlp") {
        mpz_class q = json_mpz(spec, "q");
        mpz_class A = json_mpz(spec, "A");
        mpz_class B = json_mpz(spec, "B");
        const nlohmann::json& pj = need(spec, "P");
        const nlohmann::json& qj = need(spec, "Q");
        if (!pj.is_array() || pj.size() != 2 || !qj.is_array() || qj.size() != 2)
            throw ParseError("\"P\" and \"Q\" must be [x, y] pairs");
        EcCurve curve(q, A, B);
        EcPoint P(json_val_mpz(pj[0], "P"), json_val_mpz(pj[1], "P"));
        EcPoint Q(json_val_mpz(qj[0], "Q"), json_val_mpz(qj[1], "Q"));
        mpz_class order = json_mpz(spec, "order");
        auto ec = std::make_shared<EcdlpInstance>(curve, P, Q, order);
        inst.map = ecdlp_map(*ec);
        inst.y = ec_encode_point(*ec, Q);
        inst.extra = {{"r", ec->r}, {"l", ec->l}};
    } else if (kind == "lut") {
        size_t n = json_u64(spec, "n");
        const nlohmann::json& tj = need(spec, "table");
        if (!tj.is_array()) throw ParseError("\"table\" must be an array");
        std::vector<uint64_t> table;
        table.reserve(tj.size());
        for (const auto& v : tj) table.push_back(json_val_mpz(v, "table").get_ui());
        inst.map = lut_map(n, std::move(table));
        inst.y = encode_value(inst.map.field, inst.map.n_out, json_mpz(spec, "y"));
    } else if (kind == "identity") {
        size_t n = json_u64(spec, "n");
        if (n == 0 || n > 4096) throw ParseError("\"n\" must lie in [1, 4096]");
        inst.map.field = Field::gf2();
        inst.map.n_in = inst.map.n_out = n;
        inst.map.name = "identity";
        inst.map.fn = [](const StateVec& x) { return x; };
        inst.y = encode_value(inst.map.field, n, json_mpz_or(spec, "y", 0));
    } else {
        throw ParseError("unknown target \"" + kind + "\"");
    }

    inst.embedding = !inst.map.square();
    return inst;
}

std::string instance_help() {
    std::ostringstream os;
    os << "Target descriptors (JSON object; numbers are hex strings, 0x prefix optional;\n"
          "plain JSON integers also accepted):\n"
          "  rsa_fe   {\"target\":\"rsa_fe\", \"n\":hex, \"e\":hex, \"c\":hex}\n"
          "           invert x -> (x mod n)^e mod n at y = c (plaintext recovery)\n"
          "  rsa_fc   {\"target\":\"rsa_fc\", \"n\":hex, \"c\":hex, \"m\":hex, \"e\":hex?}\n"
          "           invert x -> c^x mod n at y = m (exponent recovery; x decrypts c)\n"
          "  dlp_fp   {\"target\":\"dlp_fp\", \"p\":hex, \"a\":hex, \"b\":hex}\n"
          "           invert x -> a^x mod p at y = b (discrete log over GF(p))\n"
          "  dlp_f2w  {\"target\":\"dlp_f2w\", \"w\":int, \"a\":hex, \"b\":hex,\n"
          "            \"reduction\":hex?, \"reversed\":bool?}\n"
          "           discrete log over GF(2^w); stock reductions for w = 4, 8, 16\n"
          "  spn      {\"target\":\"spn\", \"plaintext\":hex, \"ciphertext\":hex}\n"
          "           recover the 16-bit key K with E_K(plaintext) = ciphertext\n"
          "  stream   {\"target\":\"stream\", \"iv\":hex, \"keystream\":hex, \"k0\":int?}\n"
          "           recover the 16-bit key behind a keystream window (default k0 = 8)\n"
          "  ecdlp    {\"target\":\"ecdlp\", \"q\":hex, \"A\":hex, \"B\":hex,\n"
          "            \"P\":[hex,hex], \"Q\":[hex,hex], \"order\":hex}\n"
          "           recover k with [k]P = Q; solved through the windowed embedding\n"
          "  lut      {\"target\":\"lut\", \"n\":int, \"table\":[int...], \"y\":hex}\n"
          "           arbitrary small map over GF(2)^n given by a lookup table\n"
          "  identity {\"target\":\"identity\", \"n\":int, \"y\":hex?}\n";
    return os.str();
}

}  // namespace locinv
