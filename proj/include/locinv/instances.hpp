#pragma once

// JSON target descriptors: the CLI contract for naming a concrete inversion
// problem. A descriptor is an object with a "target" tag plus parameters;
// numeric parameters are hex strings (optional 0x prefix) and plain JSON
// integers are accepted for small counts like widths.
//
//   {"target":"rsa_fe",  "n":hex, "e":hex, "c":hex}
//   {"target":"rsa_fc",  "n":hex, "c":hex, "m":hex, "e":hex?}
//   {"target":"dlp_fp",  "p":hex, "a":hex, "b":hex}
//   {"target":"dlp_f2w", "w":int, "a":hex, "b":hex, "reduction":hex?, "reversed":bool?}
//   {"target":"spn",     "plaintext":hex, "ciphertext":hex}
//   {"target":"stream",  "iv":hex, "keystream":hex, "k0":int?}
//   {"target":"ecdlp",   "q":hex, "A":hex, "B":hex, "P":[hex,hex], "Q":[hex,hex], "order":hex}
//   {"target":"lut",     "n":int, "table":[int...], "y":hex}
//   {"target":"identity","n":int, "y":hex?}

#include <string>

#include <json.hpp>

#include "locinv/targets.hpp"

namespace locinv {

struct TargetInstance {
    std::string kind;
    BlackBoxMap map;
    StateVec y;
    bool embedding = false;   // solve with invert_embedding instead of invert_local
    nlohmann::json extra;     // reporting hooks (e.g. n, e for the RSA congruences)
};

// Parse helpers shared with the density samplers.
mpz_class json_val_mpz(const nlohmann::json& value, const std::string& what);
mpz_class json_mpz(const nlohmann::json& obj, const std::string& key);
mpz_class json_mpz_or(const nlohmann::json& obj, const std::string& key,
                      const mpz_class& fallback);
uint64_t json_u64(const nlohmann::json& obj, const std::string& key);
uint64_t json_u64_or(const nlohmann::json& obj, const std::string& key, uint64_t fallback);
bool json_bool_or(const nlohmann::json& obj, const std::string& key, bool fallback);

TargetInstance load_instance(const nlohmann::json& spec);
nlohmann::json load_json_file(const std::string& path);  // ParseError on failure

// Human-readable list of descriptor shapes for the `targets` subcommand.
std::string instance_help();

}  // namespace locinv
