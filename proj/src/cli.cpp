#include "sector/cli.hpp"

#include "sector/certificate.hpp"
#include "sector/errors.hpp"
#include "sector/generator.hpp"
#include "sector/interlace.hpp"
#include "sector/ray.hpp"
#include "sector/roots.hpp"
#include "sector/sector.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <thread>
#include <vector>

namespace sector {

namespace {

// Input characters with whitespace removed, remembering original positions.
struct Compact {
    std::string chars;
    std::vector<std::size_t> pos;

    explicit Compact(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
            chars.push_back(text[i]);
            pos.push_back(i);
        }
        pos.push_back(text.size());
    }
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

Polynomial parse_coefficient_list(const Compact& in) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    for (;;) {
        const std::size_t end = std::min(in.chars.find(',', start), in.chars.size());
        const auto token = std::string_view(in.chars).substr(start, end - start);
        auto q = parse_rational(token);
        if (!q) throw ParseError(in.pos[start], token.empty() ? "empty coefficient" : "malformed coefficient");
        coeffs.push_back(*q);
        if (end == in.chars.size()) break;
        start = end + 1;
    }
    return make_polynomial(std::move(coeffs));
}

Polynomial parse_monomials(const Compact& in) {
    const std::string& s = in.chars;
    std::map<int, Rational> terms;
    std::size_t i = 0;
    if (s.empty()) throw ParseError(in.pos[0], "empty polynomial");
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw ParseError(in.pos[i], "expected '+' or '-'");
        }
        Rational coeff = 1;
        bool has_coeff = false;
        const std::size_t num_start = i;
        while (i < s.size() && (is_digit(s[i]) || s[i] == '/')) ++i;
        if (i > num_start) {
            auto q = parse_rational(std::string_view(s).substr(num_start, i - num_start));
            if (!q) throw ParseError(in.pos[num_start], "malformed coefficient");
            coeff = *q;
            has_coeff = true;
        }
        int power = 0;
        if (i < s.size() && s[i] == '*') {
            if (!has_coeff) throw ParseError(in.pos[i], "unexpected '*'");
            ++i;
            if (i >= s.size() || s[i] != 'z') throw ParseError(in.pos[i], "expected 'z' after '*'");
        }
        if (i < s.size() && s[i] == 'z') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                const std::size_t e_start = i;
                while (i < s.size() && is_digit(s[i])) ++i;
                if (i == e_start) throw ParseError(in.pos[i], "expected exponent");
                const auto digits = s.substr(e_start, i - e_start);
                if (digits.size() > 4) throw ParseError(in.pos[e_start], "exponent too large");
                power = std::stoi(digits);
            }
        } else if (!has_coeff) {
            throw ParseError(in.pos[i], i < s.size() ? "unexpected character" : "dangling sign");
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-') throw ParseError(in.pos[i], "unexpected character");
        terms[power] += sign * coeff;
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(terms.rbegin()->first) + 1, Rational(0));
    for (const auto& [k, c] : terms) coeffs[static_cast<std::size_t>(k)] = c;
    return make_polynomial(std::move(coeffs));
}

// Batch exit status by severity: counterexample > precondition >
// indeterminate > usage > ok.
int worse(int a, int b) {
    static const int rank[] = {0, 4, 2, 1, 3};
    return rank[b] > rank[a] ? b : a;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::OutOfRange:
    case ErrorKind::InvalidArgument:
    case ErrorKind::ZeroPolynomial:
        return kExitUsage;
    case ErrorKind::SignIndeterminate:
    case ErrorKind::CertificationFailed:
    case ErrorKind::GenerationExhausted:
        return kExitIndeterminate;
    default:
        return kExitPrecondition;
    }
}

int exit_code_for(Verdict v) {
    switch (v) {
    case Verdict::Verified: return kExitOk;
    case Verdict::Counterexample: return kExitCounterexample;
    case Verdict::Indeterminate: return kExitIndeterminate;
    }
    return kExitIndeterminate;
}

struct Settings {
    CliConfig config;
    std::string poly;
    std::string poly_b;
    std::string phi;
    std::string theta;
    std::string input_path;
    std::string phi_range = "1/60:9/20";
    std::string degree_range = "2:24";
    std::string radius_target = "1e-12";
    std::string boundary = "verified";
    int jobs = 1;
    bool timing = false;
};

struct Outcome {
    Json doc;
    int code = kExitOk;
};

PrecisionPolicy policy_of(const CliConfig& c) { return {64, c.precision_ceiling_bits}; }

RootFindOptions root_options(const CliConfig& c) { return {c.radius_target, policy_of(c)}; }

Json base_document(std::string_view command, const Settings& s) {
    Json doc = certificate_skeleton(command);
    doc["parameters"]["precision_ceiling_bits"] = s.config.precision_ceiling_bits;
    doc["parameters"]["radius_target"] = s.radius_target;
    return doc;
}

Json with_polynomial(Json doc, const Polynomial& p) {
    doc["input"]["polynomial"] = polynomial_json(p);
    return doc;
}

Outcome cmd_roots(const Polynomial& p, const Settings& s) {
    Json doc = with_polynomial(base_document("roots", s), p);
    const RootFindResult r = find_root_enclosures(p, root_options(s.config));
    for (const auto& e : r.roots) doc["roots"].push_back(root_json(e));
    doc["precision_bits"] = r.precision_used;
    return {doc, kExitOk};
}

Outcome cmd_min_arg(const Polynomial& p, const Settings& s) {
    Json doc = with_polynomial(base_document("min-arg", s), p);
    const MinArgument m = min_argument(p, root_options(s.config));
    for (const auto& e : m.roots.roots) doc["roots"].push_back(root_json(e));
    doc["result"] = {{"min_arg_lower_over_pi", to_string(m.lower_turns)},
                     {"min_arg_lower_over_pi_decimal", m.lower_turns.get_d()},
                     {"min_arg_radians", decimal(m.radians)}};
    doc["precision_bits"] = m.roots.precision_used;
    return {doc, kExitOk};
}

Outcome cmd_delta(const Polynomial& p, const Angle& theta, const Settings& s, bool count_only) {
    Json doc = with_polynomial(base_document(count_only ? "count-sector" : "delta", s), p);
    doc["parameters"]["theta"] = theta.to_string();
    const QuadrantTrace trace = trace_quadrants(p, theta, policy_of(s.config));
    const ArgVariation v = argument_variation(p, theta, policy_of(s.config));
    if (count_only)
        doc["result"] = {{"zeros_in_upper_sector", v.m}};
    else
        doc["result"] = {{"arg_variation", arg_variation_json(v)}, {"trace", trace_json(trace)}};
    return {doc, kExitOk};
}

Outcome cmd_verify(const Polynomial& p, const Angle& phi, const Settings& s) {
    Json doc = with_polynomial(base_document("verify", s), p);
    doc["parameters"]["phi"] = phi.to_string();
    doc["parameters"]["boundary"] = s.boundary;
    VerifyOptions opts{root_options(s.config),
                       s.boundary == "indeterminate" ? BoundaryPolicy::Indeterminate : BoundaryPolicy::Verified};
    const SectorCertificate cert = verify_theorem(p, phi, opts);
    fill_certificate(doc, cert);
    return {doc, exit_code_for(cert.verdict)};
}

Outcome cmd_proof_steps(const Polynomial& p, const Angle& theta, const Settings& s) {
    Json doc = with_polynomial(base_document("proof-steps", s), p);
    doc["parameters"]["theta"] = theta.to_string();
    const ProofStepReport r = verify_proof_steps(p, theta, policy_of(s.config));
    doc["proof_steps"] = proof_steps_json(r);
    doc["verdict"] = r.all_pass() ? "verified" : "counterexample";
    return {doc, r.all_pass() ? kExitOk : kExitCounterexample};
}

Outcome cmd_interlace(const Polynomial& a, const Polynomial& b, const Settings& s) {
    Json doc = base_document("interlace", s);
    doc["input"]["a"] = polynomial_json(a);
    doc["input"]["b"] = polynomial_json(b);
    const ZeroList za = real_zeros(a, policy_of(s.config));
    const ZeroList zb = real_zeros(b, policy_of(s.config));
    doc["result"] = {{"zeros_a", zero_list_json(za)},
                     {"zeros_b", zero_list_json(zb)},
                     {"interlace", interlaces(za, zb)},
                     {"weakly_interlace", weakly_interlaces(za, zb)}};
    return {doc, kExitOk};
}

std::pair<Rational, Rational> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError(0, "expected 'a:b'");
    const Angle lo = parse_angle(text.substr(0, colon));
    const Angle hi = parse_angle(text.substr(colon + 1));
    if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty range " + text);
    return {lo.turns(), hi.turns()};
}

std::pair<int, int> parse_int_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError(0, "expected 'lo:hi'");
    const auto lo = parse_rational(text.substr(0, colon));
    const auto hi = parse_rational(text.substr(colon + 1));
    if (!lo || !hi || !is_integer(*lo) || !is_integer(*hi)) throw ParseError(0, "expected integers in 'lo:hi'");
    return {static_cast<int>(lo->get_num().get_si()), static_cast<int>(hi->get_num().get_si())};
}

// Rational multiple of π with denominator at most 60, uniform over the
// admissible (num, den) pairs of a uniformly drawn denominator.
Angle sample_angle(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
    std::uniform_int_distribution<long> den_dist(1, 60);
    for (int tries = 0; tries < 10000; ++tries) {
        const long den = den_dist(rng);
        std::vector<long> nums;
        for (long num = 1; num <= den; ++num) {
            const Rational t(num, den);
            if (t >= lo && t <= hi) nums.push_back(num);
        }
        if (nums.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, nums.size() - 1);
        return Angle(Rational(nums[pick(rng)], den));
    }
    throw Error(ErrorKind::InvalidArgument, "no rational multiple of pi with denominator <= 60 in the range");
}

struct Trial {
    int index = 0;
    int degree = 0;
    std::string phi;
    std::string poly;
    std::string verdict;
    int precision = 0;
    std::vector<std::string> events;
};

Trial run_trial(int index, const Settings& s, const std::pair<Rational, Rational>& phis) {
    std::seed_seq seq{static_cast<std::uint32_t>(s.config.seed), static_cast<std::uint32_t>(s.config.seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> deg(s.config.degree_range.first, s.config.degree_range.second);
    Trial t;
    t.index = index;
    t.degree = deg(rng);
    const Angle phi = sample_angle(rng, phis.first, phis.second);
    t.phi = phi.to_string();
    try {
        const Polynomial p = generate_sector_poly(t.degree, phi, rng());
        t.poly = format_coefficients(p);
        const SectorCertificate cert =
            verify_theorem(p, phi, {root_options(s.config), BoundaryPolicy::Verified});
        t.verdict = std::string(to_string(cert.verdict));
        t.precision = cert.precision_bits;
        t.events = cert.events;
    } catch (const Error& e) {
        t.verdict = "error";
        t.events.push_back(e.what());
    }
    return t;
}

Outcome cmd_fuzz(const Settings& s) {
    Json doc = base_document("fuzz", s);
    const auto phis = parse_range(s.phi_range);
    doc["parameters"]["trials"] = s.config.fuzz_trials;
    doc["parameters"]["phi_range"] = s.phi_range;
    doc["parameters"]["degree_range"] = s.degree_range;
    doc["seed"] = s.config.seed;

    std::vector<Trial> trials(static_cast<std::size_t>(s.config.fuzz_trials));
    std::atomic<int> next{0};
    const auto worker = [&] {
        for (int i = next++; i < s.config.fuzz_trials; i = next++) trials[static_cast<std::size_t>(i)] = run_trial(i, s, phis);
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < s.jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::map<std::string, int> tally{{"verified", 0}, {"counterexample", 0}, {"indeterminate", 0}, {"error", 0}};
    int precision = 0;
    Json flagged = Json::array();
    for (const auto& t : trials) {
        ++tally[t.verdict];
        precision = std::max(precision, t.precision);
        if (t.verdict != "verified" || !t.events.empty()) {
            flagged.push_back({{"index", t.index},
                               {"degree", t.degree},
                               {"phi", t.phi},
                               {"polynomial", t.poly},
                               {"verdict", t.verdict},
                               {"events", t.events}});
            for (const auto& e : t.events) doc["events"].push_back("trial " + std::to_string(t.index) + ": " + e);
        }
    }
    doc["result"] = {{"verified", tally["verified"]},
                     {"counterexample", tally["counterexample"]},
                     {"indeterminate", tally["indeterminate"]},
                     {"error", tally["error"]},
                     {"flagged", flagged}};
    doc["precision_bits"] = precision;
    int code = kExitOk;
    if (tally["indeterminate"] > 0 || tally["error"] > 0) code = kExitIndeterminate;
    if (tally["counterexample"] > 0) code = kExitCounterexample;
    doc["verdict"] = code == kExitOk ? "verified" : (code == kExitCounterexample ? "counterexample" : "indeterminate");
    return {doc, code};
}

Json error_json(const Error& e) { return {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}; }

std::vector<std::string> read_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

} // namespace

void CliConfig::validate() const {
    if (precision_ceiling_bits < 64) throw Error(ErrorKind::InvalidArgument, "precision ceiling must be >= 64 bits");
    const auto [lo, hi] = degree_range;
    if (lo < 2 || hi > 64 || lo > hi) throw Error(ErrorKind::InvalidArgument, "degree range must lie within [2, 64]");
    if (radius_target <= 0) throw Error(ErrorKind::InvalidArgument, "radius target must be positive");
    if (fuzz_trials < 0) throw Error(ErrorKind::InvalidArgument, "trial count must be non-negative");
}

Polynomial parse_polynomial(std::string_view text) {
    const Compact in(text);
    if (in.chars.find('z') != std::string::npos || in.chars.find('^') != std::string::npos)
        return parse_monomials(in);
    return parse_coefficient_list(in);
}

Angle parse_angle(std::string_view text) {
    const Compact in(text);
    std::string_view s = in.chars;
    for (std::string_view suffix : {"*pi", "pi", "π"}) {
        if (s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix) {
            s.remove_suffix(suffix.size());
            break;
        }
    }
    if (s.empty() && !in.chars.empty()) return Angle(Rational(1));
    const auto q = parse_rational(s);
    if (!q) throw ParseError(in.pos[0], "malformed angle '" + std::string(text) + "'");
    return Angle(*q);
}

Rational parse_decimal(std::string_view text) {
    if (auto q = parse_rational(text)) return *q;
    const std::string s(text);
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    std::string digits;
    long exp10 = 0;
    bool any = false, dot = false;
    for (; i < s.size() && (is_digit(s[i]) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (dot) throw ParseError(i, "second decimal point");
            dot = true;
            continue;
        }
        any = true;
        digits.push_back(s[i]);
        if (dot) --exp10;
    }
    if (!any) throw ParseError(i, "expected digits");
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        const auto e = parse_rational(std::string_view(s).substr(i));
        if (!e || !is_integer(*e) || abs(*e) > 10000) throw ParseError(i, "malformed exponent");
        exp10 += e->get_num().get_si();
        i = s.size();
    }
    if (i != s.size()) throw ParseError(i, "unexpected character");
    Integer mant(digits, 10), scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    Rational q = exp10 >= 0 ? Rational(mant * scale) : Rational(mant, scale);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified sector checks for polynomials with non-negative coefficients", "sector-lab"};
    app.require_subcommand(1);
    Settings s;
    if (const char* env = std::getenv("SECTOR_PRECISION_CEILING")) {
        try {
            s.config.precision_ceiling_bits = std::stoi(env);
        } catch (const std::exception&) {
            err << "ignoring malformed SECTOR_PRECISION_CEILING=" << env << "\n";
        }
    }
    std::string output;
    app.add_option("--precision-ceiling", s.config.precision_ceiling_bits, "Precision ceiling in bits");
    app.add_option("--radius-target", s.radius_target, "Root disk radius target");
    app.add_option("--output", output, "Write the certificate here instead of stdout");
    app.add_flag("--timing", s.timing, "Record runtime_ms (breaks byte-identical output)");

    const auto with_poly = [&](CLI::App* sub, bool batch) {
        auto* opt = sub->add_option("--poly", s.poly, "Polynomial: '1,2,1' or 'z^2+2z+1'");
        if (batch) {
            auto* in = sub->add_option("--input", s.input_path, "File with one polynomial per line");
            opt->excludes(in);
        } else {
            opt->required();
        }
    };
    auto* roots = app.add_subcommand("roots", "Certified root enclosures");
    with_poly(roots, true);
    auto* delta = app.add_subcommand("delta", "Argument variation along the ray at theta");
    with_poly(delta, false);
    delta->add_option("--theta", s.theta)->required();
    auto* count = app.add_subcommand("count-sector", "Zeros with argument in (0, theta)");
    with_poly(count, false);
    count->add_option("--theta", s.theta)->required();
    auto* inter = app.add_subcommand("interlace", "Interlacing of the real zeros of two polynomials");
    inter->add_option("--a,--poly", s.poly)->required();
    inter->add_option("--b", s.poly_b)->required();
    auto* verify = app.add_subcommand("verify", "Certify that the critical points stay in S(phi)");
    with_poly(verify, true);
    verify->add_option("--phi", s.phi)->required();
    verify->add_option("--boundary", s.boundary, "Roots exactly on |arg| = phi: verified or indeterminate")
        ->check(CLI::IsMember({"verified", "indeterminate"}));
    auto* steps = app.add_subcommand("proof-steps", "Check each intermediate claim at theta");
    with_poly(steps, true);
    steps->add_option("--theta", s.theta)->required();
    auto* fuzz = app.add_subcommand("fuzz", "Verify generated sector polynomials");
    fuzz->add_option("--trials", s.config.fuzz_trials);
    fuzz->add_option("--phi-range", s.phi_range, "a:b as multiples of pi");
    fuzz->add_option("--degree-range", s.degree_range, "lo:hi");
    fuzz->add_option("--seed", s.config.seed);
    fuzz->add_option("--jobs", s.jobs)->check(CLI::Range(1, 256));
    auto* minarg = app.add_subcommand("min-arg", "Certified lower bound on min |arg| over the roots");
    with_poly(minarg, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    Json doc;
    int code = kExitOk;
    try {
        s.config.radius_target = parse_decimal(s.radius_target);
        s.config.degree_range = parse_int_range(s.degree_range);
        if (!output.empty()) s.config.output_path = output;
        s.config.validate();

        const auto one = [&](const Polynomial& p) -> Outcome {
            if (roots->parsed()) return cmd_roots(p, s);
            if (minarg->parsed()) return cmd_min_arg(p, s);
            if (delta->parsed()) return cmd_delta(p, parse_angle(s.theta), s, false);
            if (count->parsed()) return cmd_delta(p, parse_angle(s.theta), s, true);
            if (verify->parsed()) return cmd_verify(p, parse_angle(s.phi), s);
            return cmd_proof_steps(p, parse_angle(s.theta), s);
        };
        const auto guarded = [&](const std::string& text, std::string_view command) -> Outcome {
            try {
                return one(parse_polynomial(text));
            } catch (const Error& e) {
                Json d = base_document(command, s);
                d["input"]["text"] = text;
                d["error"] = error_json(e);
                return {d, exit_code_for(e.kind())};
            }
        };

        if (fuzz->parsed()) {
            auto o = cmd_fuzz(s);
            doc = std::move(o.doc);
            code = o.code;
        } else if (inter->parsed()) {
            auto o = cmd_interlace(parse_polynomial(s.poly), parse_polynomial(s.poly_b), s);
            doc = std::move(o.doc);
            code = o.code;
        } else {
            const std::string command = app.get_subcommands().front()->get_name();
            if (!s.input_path.empty()) {
                doc = {{"schema_version", kSchemaVersion}, {"command", command}, {"batch", Json::array()}};
                for (const auto& line : read_batch(s.input_path)) {
                    auto o = guarded(line, command);
                    doc["batch"].push_back(std::move(o.doc));
                    code = worse(code, o.code);
                }
            } else {
                if (s.poly.empty()) throw Error(ErrorKind::InvalidArgument, "--poly or --input is required");
                auto o = one(parse_polynomial(s.poly));
                doc = std::move(o.doc);
                code = o.code;
            }
        }
    } catch (const Error& e) {
        err << "sector-lab: " << e.what() << "\n";
        const std::string command = app.get_subcommands().front()->get_name();
        doc = base_document(command, s);
        doc["error"] = error_json(e);
        code = exit_code_for(e.kind());
    }

    if (s.timing && doc.contains("runtime_ms")) {
        doc["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - started)
                                .count();
    }
    const std::string text = doc.dump(2) + "\n";
    if (s.config.output_path) {
        std::ofstream file(*s.config.output_path, std::ios::binary);
        if (!file) {
            err << "sector-lab: cannot write " << *s.config.output_path << "\n";
            return kExitUsage;
        }
        file << text;
    } else {
        out << text;
    }
    return code;
}

} // namespace sector
