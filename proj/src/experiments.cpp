#include "locinv/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "locinv/embed.hpp"
#include "locinv/instances.hpp"

namespace locinv {

// ---------------------------------------------------------------------------
// Bound tables
// ---------------------------------------------------------------------------

BoundRow bounds_row(unsigned l, unsigned k) {
    if (l < 2) throw ValueOutOfRange("bounds_row: l must be >= 2");
    if (k < 1) throw ValueOutOfRange("bounds_row: k must be >= 1");
    BoundRow row;
    row.l = l;
    row.k = k;
    mpz_ui_pow_ui(row.bound.get_mpz_t(), l, k);
    row.half = row.bound / 2;
    return row;
}

std::string group_digits(const mpz_class& v) {
    std::string digits = v.get_str();
    std::string out;
    size_t lead = digits.size() % 3 == 0 ? 3 : digits.size() % 3;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i != 0 && (i + 3 - lead) % 3 == 0) out += ',';
        out += digits[i];
    }
    return out;
}

std::string bounds_label(const mpz_class& v) {
    static const mpz_class kMillion = 1000000;
    if (v < kMillion) return group_digits(v);
    const char* unit = "Million";
    double scaled = v.get_d() / 1e6;
    if (v >= kMillion * kMillion) {
        unit = "Trillion";
        scaled = v.get_d() / 1e12;
    } else if (v >= kMillion * 1000) {
        unit = "Billion";
        scaled = v.get_d() / 1e9;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g %s", scaled, unit);
    return group_digits(v) + " (" + buf + ")";
}

std::vector<BoundTable> canonical_bound_tables() {
    auto make = [](std::string name, std::string caption,
                   std::initializer_list<std::pair<unsigned, unsigned>> lk) {
        BoundTable t;
        t.name = std::move(name);
        t.caption = std::move(caption);
        for (auto [l, k] : lk) t.rows.push_back(bounds_row(l, k));
        return t;
    };
    std::vector<BoundTable> tables;
    tables.push_back(make("aes128",
                          "128-bit key map; 88 effective bits after a 40-bit exhaustive split",
                          {{128, 3}, {128, 2}, {88, 3}, {88, 2}}));
    tables.push_back(make("aes192",
                          "192-bit key map (two-block embedding); 152 bits after a 40-bit split",
                          {{192, 3}, {192, 2}, {152, 3}, {152, 2}}));
    tables.push_back(make("aes256",
                          "256-bit key map (two-block embedding); 216 bits after a 40-bit split",
                          {{256, 3}, {256, 2}, {216, 3}, {216, 2}}));
    BoundTable rsa = make("rsa",
                          "modulus bit lengths; bound M = l^k, largest system size floor(M/2)",
                          {{1024, 3}, {1024, 2}, {2048, 3}, {2048, 2}});
    for (BoundRow& row : rsa.rows) {
        if (row.l == 2048 && row.k == 3)
            row.note = "sometimes quoted as 8.5 Trillion / 4.3 Trillion; "
                       "2048^3 = 8,589,934,592 (~8.6 Billion), half 4,294,967,296";
    }
    tables.push_back(std::move(rsa));
    tables.push_back(make("secp256k1",
                          "256-bit curve; l = 258 covers the Hasse bound on the group order",
                          {{258, 3}, {258, 2}}));
    return tables;
}

nlohmann::json bound_tables_json() {
    nlohmann::json out = nlohmann::json::array();
    for (const BoundTable& t : canonical_bound_tables()) {
        nlohmann::json tj;
        tj["name"] = t.name;
        tj["caption"] = t.caption;
        tj["rows"] = nlohmann::json::array();
        for (const BoundRow& r : t.rows) {
            nlohmann::json rj;
            rj["l"] = r.l;
            rj["k"] = r.k;
            rj["M"] = r.bound.get_str();
            rj["half"] = r.half.get_str();
            rj["M_label"] = bounds_label(r.bound);
            rj["half_label"] = bounds_label(r.half);
            if (!r.note.empty()) rj["note"] = r.note;
            tj["rows"].push_back(std::move(rj));
        }
        out.push_back(std::move(tj));
    }
    return out;
}

std::string bound_tables_text() {
    std::ostringstream os;
    for (const BoundTable& t : canonical_bound_tables()) {
        os << t.name << ": " << t.caption << "\n";
        for (const BoundRow& r : t.rows) {
            os << "  l=" << r.l << " k=" << r.k << "  M=" << bounds_label(r.bound)
               << "  half=" << bounds_label(r.half) << "\n";
            if (!r.note.empty()) os << "    note: " << r.note << "\n";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Seeding
// ---------------------------------------------------------------------------

uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t subseed(uint64_t seed, uint64_t index) {
    uint64_t s = seed ^ (0xd1342543de82ef95ULL * (index + 1));
    return splitmix64(s);
}

namespace {

class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() { return splitmix64(state_); }

    uint64_t below(uint64_t n) {
        if (n == 0) throw ValueOutOfRange("Rng::below(0)");
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    mpz_class below(const mpz_class& n) {
        if (n <= 0) throw ValueOutOfRange("Rng::below: bound must be positive");
        size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        size_t words = (bits + 63) / 64;
        for (;;) {
            mpz_class r = 0;
            for (size_t i = 0; i < words; ++i) {
                r <<= 64;
                r |= mpz_class(next());
            }
            mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), bits);
            if (r < n) return r;
        }
    }

  private:
    uint64_t state_;
};

struct SampleSpec {
    BlackBoxMap map;
    StateVec y;
    size_t n_bits = 0;
    bool secret_forward = false;
};

size_t domain_bits(const BlackBoxMap& map) {
    return static_cast<size_t>(mpz_sizeinbase(map.field.order().get_mpz_t(), 2) - 1) *
               map.n_in +
           (map.field.kind() == FieldKind::GFp ? map.n_in : 0);
}

SampleSpec make_sample(const DensityConfig& cfg, Rng& rng) {
    const nlohmann::json& p = cfg.params;
    SampleSpec s;
    if (cfg.family == "identity") {
        size_t n = json_u64_or(p, "n", 8);
        if (n == 0 || n > 4096) throw ParseError("identity: n must lie in [1, 4096]");
        s.map.field = Field::gf2();
        s.map.n_in = s.map.n_out = n;
        s.map.name = "identity";
        s.map.fn = [](const StateVec& x) { return x; };
        mpz_class v = rng.below(mpz_class(1) << n);
        s.y = encode_value(s.map.field, n, v);
        s.n_bits = n;
    } else if (cfg.family == "random_gf2") {
        size_t n = json_u64_or(p, "n", 8);
        if (n == 0 || n > 20) throw ParseError("random_gf2: n must lie in [1, 20]");
        uint64_t size = uint64_t{1} << n;
        std::vector<uint64_t> table(size);
        for (uint64_t& t : table) t = rng.below(size);
        s.map = lut_map(n, std::move(table));
        s.y = encode_value(s.map.field, n, mpz_class(rng.below(size)));
        s.n_bits = n;
    } else if (cfg.family == "rsa_fe") {
        mpz_class n = json_mpz(p, "n");
        mpz_class e = json_mpz(p, "e");
        s.map = rsa_fe_map(n, e);
        mpz_class m = rng.below(n);
        s.y = s.map.eval(encode_value(s.map.field, s.map.n_in, m));
        s.n_bits = rsa_bits(n);
        s.secret_forward = true;
    } else if (cfg.family == "rsa_fc") {
        mpz_class n = json_mpz(p, "n");
        mpz_class e = json_mpz(p, "e");
        mpz_class m = rng.below(n);
        mpz_class c;
        mpz_powm(c.get_mpz_t(), m.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
        s.map = rsa_fc_map(n, c);
        s.y = encode_value(s.map.field, s.map.n_out, m);
        s.n_bits = rsa_bits(n);
        s.secret_forward = true;
    } else if (cfg.family == "dlp_fp") {
        mpz_class prime = json_mpz(p, "p");
        mpz_class a = json_mpz(p, "a");
        s.map = dlp_fp_map(prime, a);
        mpz_class x = rng.below(prime - 1);
        StateVec xs(s.map.field, 1);
        xs.set(0, s.map.field.from_mpz(x));
        s.y = s.map.eval(xs);
        s.n_bits = mpz_sizeinbase(prime.get_mpz_t(), 2);
        s.secret_forward = true;
    } else if (cfg.family == "dlp_f2w") {
        unsigned w = static_cast<unsigned>(json_u64(p, "w"));
        uint64_t red;
        if (p.contains("reduction")) {
            red = json_u64(p, "reduction");
        } else {
            auto std_red = standard_reduction(w);
            if (!std_red) throw ParseError("dlp_f2w: no stock reduction for this w");
            red = *std_red;
        }
        uint64_t a = json_u64(p, "a");
        bool reversed = json_bool_or(p, "reversed", false);
        s.map = dlp_f2w_map(w, red, a, reversed);
        uint64_t x = rng.below(uint64_t{1} << w);
        s.y = s.map.eval(encode_value(s.map.field, w, mpz_class(x)));
        s.n_bits = w;
        s.secret_forward = true;
    } else if (cfg.family == "spn") {
        uint64_t pt = p.contains("plaintext") ? json_u64(p, "plaintext") : rng.below(0x10000);
        if (pt > 0xffff) throw ParseError("spn: plaintext is 16-bit");
        s.map = spn_kpa_map(static_cast<uint16_t>(pt));
        uint64_t key = rng.below(0x10000);
        s.y = s.map.eval(encode_value(s.map.field, 16, mpz_class(key)));
        s.n_bits = 16;
        s.secret_forward = true;
    } else if (cfg.family == "stream") {
        uint64_t iv = p.contains("iv") ? json_u64(p, "iv") : rng.below(0x100);
        if (iv > 0xff) throw ParseError("stream: iv is 8-bit");
        size_t k0 = json_u64_or(p, "k0", 8);
        s.map = stream_kpa_map(static_cast<uint8_t>(iv), k0);
        uint64_t key = rng.below(0x10000);
        s.y = s.map.eval(encode_value(s.map.field, 16, mpz_class(key)));
        s.n_bits = 16;
        s.secret_forward = true;
    } else if (cfg.family == "ecdlp") {
        EcCurve curve(json_mpz(p, "q"), json_mpz(p, "A"), json_mpz(p, "B"));
        const nlohmann::json& pj = p.at("P");
        if (!pj.is_array() || pj.size() != 2) throw ParseError("ecdlp: \"P\" must be [x, y]");
        EcPoint P(json_val_mpz(pj[0], "P"), json_val_mpz(pj[1], "P"));
        mpz_class order = json_mpz(p, "order");
        mpz_class k = 1 + rng.below(order - 1);
        EcPoint Q = curve.scalar_mul(k, P);
        EcdlpInstance inst(curve, P, Q, order);
        s.map = ecdlp_map(inst);
        s.y = ec_encode_point(inst, Q);
        s.n_bits = inst.r;
        s.secret_forward = true;
    } else {
        throw ParseError("unknown family \"" + cfg.family + "\"");
    }
    if (s.n_bits == 0) s.n_bits = domain_bits(s.map);
    return s;
}

DensityRecord run_one(const DensityConfig& cfg, uint64_t index) {
    DensityRecord rec;
    rec.target = cfg.family;
    rec.instance_id = index;
    rec.bound = cfg.bound;
    rec.mode = cfg.mode == InvertMode::paper ? "paper" : "progressive";
    rec.seed = subseed(cfg.seed, index);
    try {
        Rng rng(rec.seed);
        SampleSpec s = make_sample(cfg, rng);
        rec.n_bits = s.n_bits;
        InvertOptions opts;
        opts.mode = cfg.mode;
        opts.early_shortcut = cfg.early_shortcut;
        InversionOutcome out = s.map.square()
                                   ? invert_local(s.map, s.y, cfg.bound, opts)
                                   : invert_embedding(s.map, s.y, cfg.bound, opts);
        rec.outcome = out.outcome_name();
        rec.false_positives = out.false_positives;
        rec.eval_count = out.eval_count;
        if (const auto* sv = std::get_if<Solved>(&out.result)) rec.lc = sv->lc;
        if (const auto* ep = std::get_if<EarlyPeriod>(&out.result)) rec.period = ep->period;
        if (const StateVec* x = out.solution()) rec.verify_ok = s.map.eval(*x) == s.y;
    } catch (const std::exception& e) {
        rec.outcome = "error";
        rec.error = e.what();
    }
    return rec;
}

}  // namespace

DensityResult density_run(const DensityConfig& cfg) {
    if (cfg.samples == 0) throw ValueOutOfRange("density_run: samples must be >= 1");
    auto t0 = std::chrono::steady_clock::now();

    DensityResult res;
    res.records.resize(cfg.samples);
    unsigned workers = std::max(1u, cfg.threads);
    workers = static_cast<unsigned>(std::min<size_t>(workers, cfg.samples));
    std::atomic<uint64_t> cursor{0};
    auto drain = [&]() {
        for (;;) {
            uint64_t i = cursor.fetch_add(1);
            if (i >= cfg.samples) break;
            res.records[i] = run_one(cfg, i);
        }
    };
    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(drain);
        for (std::thread& t : pool) t.join();
    }

    DensitySummary& s = res.summary;
    s.samples = cfg.samples;
    for (const DensityRecord& r : res.records) {
        if (r.outcome == "solved") {
            ++s.solved;
            if (r.lc) ++s.lc_histogram[*r.lc];
        } else if (r.outcome == "early_period") {
            ++s.early_period;
        } else if (r.outcome == "no_conclusion") {
            ++s.no_conclusion;
        } else if (r.outcome == "no_solution") {
            ++s.no_solution;
        } else {
            ++s.errors;
        }
    }
    s.fraction = static_cast<double>(s.solved + s.early_period) / static_cast<double>(s.samples);
    bool forward = cfg.family != "identity" && cfg.family != "random_gf2";
    s.sampling = forward ? "secret-forward" : "uniform-y";
    s.wall_ms = static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - t0)
                                          .count());
    return res;
}

std::string density_csv(const std::vector<DensityRecord>& records) {
    std::ostringstream os;
    os << "target,instance_id,n_bits,bound_M,mode,outcome,lc,period,verify_ok,"
          "false_positives,eval_count,seed,elapsed_ms\n";
    for (const DensityRecord& r : records) {
        os << r.target << ',' << r.instance_id << ',' << r.n_bits << ',' << r.bound << ','
           << r.mode << ',' << r.outcome << ',';
        if (r.lc) os << *r.lc;
        os << ',';
        if (r.period) os << *r.period;
        os << ',' << (r.verify_ok ? 1 : 0) << ',' << r.false_positives << ',' << r.eval_count
           << ',' << r.seed << ",0\n";
    }
    return os.str();
}

nlohmann::json density_summary_json(const DensityConfig& cfg, const DensitySummary& s) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [lc, count] : s.lc_histogram) hist[std::to_string(lc)] = count;
    return nlohmann::json{{"family", cfg.family},
                          {"samples", s.samples},
                          {"bound_M", cfg.bound},
                          {"mode", cfg.mode == InvertMode::paper ? "paper" : "progressive"},
                          {"early_shortcut", cfg.early_shortcut},
                          {"seed", cfg.seed},
                          {"threads", cfg.threads},
                          {"sampling", s.sampling},
                          {"solved", s.solved},
                          {"early_period", s.early_period},
                          {"no_conclusion", s.no_conclusion},
                          {"no_solution", s.no_solution},
                          {"errors", s.errors},
                          {"fraction", s.fraction},
                          {"lc_histogram", hist},
                          {"wall_ms", s.wall_ms}};
}

std::string family_help() {
    return "Density families (--target JSON needs \"family\" plus parameters):\n"
           "  identity    {n?}                  fixed point map; y sampled uniformly\n"
           "  random_gf2  {n?}                  fresh random map on GF(2)^n per sample; uniform y\n"
           "  rsa_fe      {n, e}                m sampled, y = m^e mod n\n"
           "  rsa_fc      {n, e}                m sampled, c = m^e; invert x -> c^x at y = m\n"
           "  dlp_fp      {p, a}                exponent sampled, y = a^x mod p\n"
           "  dlp_f2w     {w, a, reduction?}    exponent sampled, y = a^[x] in GF(2^w)\n"
           "  spn         {plaintext?}          key sampled, y = E_K(plaintext)\n"
           "  stream      {iv?, k0?}            key sampled, y = keystream window\n"
           "  ecdlp       {q, A, B, P, order}   multiplier sampled, y = [k]P (embedding)\n"
           "Keyed families sample the secret and derive y by forward evaluation\n"
           "(secret-forward); identity / random_gf2 sample y uniformly (uniform-y).\n";
}

}  // namespace locinv
