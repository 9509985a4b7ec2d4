// bezlab: exact arithmetic over commutative Bezout rings from the command
// line. Every subcommand prints one JSON document (keys sorted, elements as
// strings) and exits 0 on success, 1 on domain errors, 2 on usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bezlab/bezlab.hpp"

namespace {

using bezlab::json;

struct CommandIO {
    std::string ring_spec;
    std::vector<std::string> args;
    std::string json_path;
    std::string theorem = "THM9_2";
    long long bound = 30;
    bool check = false;
};

bezlab::RingDescriptor ring_of(const CommandIO& io) {
    if (io.ring_spec.empty()) bezlab::fail(bezlab::errc::parse_error, "--ring is required");
    return bezlab::parse_ring(io.ring_spec);
}

bezlab::Element arg_element(const CommandIO& io, const bezlab::RingDescriptor& ring,
                            std::size_t i) {
    if (i >= io.args.size())
        bezlab::fail(bezlab::errc::parse_error, "missing element argument #" +
                                                    std::to_string(i + 1));
    return bezlab::parse_element(ring, io.args[i]);
}

bezlab::Matrix load_matrix(const CommandIO& io) {
    if (io.json_path.empty())
        bezlab::fail(bezlab::errc::parse_error, "--json <file> with a matrix is required");
    std::ifstream in(io.json_path);
    if (!in) bezlab::fail(bezlab::errc::parse_error, "cannot open '" + io.json_path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        bezlab::fail(bezlab::errc::parse_error, std::string("bad JSON: ") + e.what());
    }
    bezlab::Matrix m = bezlab::matrix_from_json(j);
    if (!io.ring_spec.empty() && bezlab::parse_ring(io.ring_spec) != m.ring())
        bezlab::fail(bezlab::errc::ring_mismatch,
                     "--ring disagrees with the matrix ring " + m.ring().to_string());
    return m;
}

// Re-reads the emitted JSON and replays the verification it claims.
using CheckFn = bool (*)(const json&);

bool check_bezout(const json& j) {
    auto ring = bezlab::parse_ring(j.at("ring").get<std::string>());
    auto get = [&](const char* k) {
        return bezlab::parse_element(ring, j.at(k).get<std::string>());
    };
    bezlab::BezoutCertificate c{get("a"),  get("b"), get("d"), get("p"),
                                get("q"),  get("a0"), get("b0")};
    return c.verify() && bezlab::is_unit(bezlab::bezout_certificate(c.a0, c.b0).d);
}

bool check_witness_sum(const json& j) {
    if (!j.at("found").get<bool>()) return true;
    auto ring = bezlab::parse_ring(j.at("ring").get<std::string>());
    auto a = bezlab::parse_element(ring, j.at("a").get<std::string>());
    auto b = bezlab::parse_element(ring, j.at("b").get<std::string>());
    auto w = bezlab::parse_element(ring, j.at("witness").get<std::string>());
    bool square = j.at("op").get<std::string>() == "ssr1";
    return bezlab::is_unit((square ? a * a : a) + b * w);
}

bool check_sr2(const json& j) {
    auto ring = bezlab::parse_ring(j.at("ring").get<std::string>());
    std::vector<bezlab::Element> row, shifted;
    for (const auto& s : j.at("row")) row.push_back(bezlab::parse_element(ring, s.get<std::string>()));
    std::vector<bezlab::Element> shifts;
    for (const auto& s : j.at("shifts"))
        shifts.push_back(bezlab::parse_element(ring, s.get<std::string>()));
    if (shifts.size() + 1 != row.size()) return false;
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
        shifted.push_back(row[i] + row.back() * shifts[i]);
    return bezlab::is_unimodular(shifted);
}

bool check_toeplitz_reduce(const json& j) {
    auto t = bezlab::matrix_from_json(j.at("t"));
    const auto& ring = t.ring();
    auto a = bezlab::parse_element(ring, j.at("a").get<std::string>());
    auto b = bezlab::parse_element(ring, j.at("b").get<std::string>());
    auto d = bezlab::parse_element(ring, j.at("d").get<std::string>());
    if (!bezlab::is_toeplitz_shaped(t) || !bezlab::is_unit(bezlab::determinant(t))) return false;
    return a * t.at(0, 0) + b * t.at(1, 0) == d && (a * t.at(0, 1) + b * t.at(1, 1)).is_zero();
}

bool check_toeplitz_complete(const json& j) {
    auto t = bezlab::matrix_from_json(j.at("t"));
    const auto& ring = t.ring();
    auto a = bezlab::parse_element(ring, j.at("a").get<std::string>());
    auto b = bezlab::parse_element(ring, j.at("b").get<std::string>());
    return bezlab::is_toeplitz_shaped(t) && t.at(0, 0) == a && t.at(0, 1) == b &&
           bezlab::is_unit(bezlab::determinant(t));
}

bool check_reduction(const json& j) {
    auto cert = bezlab::reduction_certificate_from_json(j.at("certificate"));
    return bezlab::verify_reduction_certificate(cert);
}

bool check_find_pq(const json& j) {
    auto ring = bezlab::parse_ring(j.at("ring").get<std::string>());
    auto get = [&](const char* k) {
        return bezlab::parse_element(ring, j.at(k).get<std::string>());
    };
    auto a = get("a"), b = get("b"), c = get("c"), p = get("p"), q = get("q");
    return bezlab::is_unit(bezlab::bezout_certificate(p * a, p * b + q * c).d);
}

bool check_neat(const json& j) {
    if (!j.contains("r")) return true; // is_neat form: nothing to replay
    auto ring = bezlab::parse_ring(j.at("ring").get<std::string>());
    auto get = [&](const char* k) {
        return bezlab::parse_element(ring, j.at(k).get<std::string>());
    };
    bezlab::NeatWitness w{get("a"), get("b"), get("c"), get("r"), get("s")};
    return w.verify();
}

bool check_neat_shift(const json& j) {
    auto ring = bezlab::parse_ring(j.at("ring").get<std::string>());
    auto a = bezlab::parse_element(ring, j.at("a").get<std::string>());
    auto b = bezlab::parse_element(ring, j.at("b").get<std::string>());
    auto t = bezlab::parse_element(ring, j.at("t").get<std::string>());
    auto shifted = bezlab::parse_element(ring, j.at("shifted").get<std::string>());
    return a + b * t == shifted && bezlab::is_neat(shifted);
}

bool check_clean(const json& j) {
    auto q = bezlab::parse_ring(j.at("quotient").get<std::string>());
    auto get = [&](const char* k) {
        return bezlab::parse_element(q, j.at(k).get<std::string>());
    };
    auto e = get("idempotent"), u = get("unit"), x = get("x"), pe = get("proof_idempotent");
    return e * e == e && bezlab::is_unit(u) && e + u == x && pe * pe == pe;
}

bool check_prop5_forward(const json& j) {
    auto ring = bezlab::parse_ring(j.at("ring").get<std::string>());
    auto get = [&](const char* k) {
        return bezlab::parse_element(ring, j.at(k).get<std::string>());
    };
    auto a = get("a"), b = get("b"), c = get("c");
    auto l = get("lambda"), u = get("u"), v = get("v");
    return b + l * c == v * u && bezlab::is_unit(bezlab::bezout_certificate(u, a).d) &&
           bezlab::is_unit(bezlab::bezout_certificate(v, c).d);
}

bool check_prop5_backward(const json& j) { return check_find_pq(j); }

bool check_none(const json&) { return true; }

int emit(const json& payload, bool check, CheckFn fn) {
    json out = payload;
    out["status"] = "ok";
    std::string text = out.dump(2) + "\n";
    std::cout << text;
    if (check) {
        json replayed = json::parse(text);
        if (!fn(replayed)) {
            std::cerr << "check failed: emitted certificate does not replay\n";
            return 1;
        }
    }
    return 0;
}

int run_command(const std::string& name, const CommandIO& io) {
    using namespace bezlab;
    if (name == "bezout") {
        auto ring = ring_of(io);
        auto cert = bezout_certificate(arg_element(io, ring, 0), arg_element(io, ring, 1));
        json j = to_json(cert);
        j["ring"] = ring.to_string();
        return emit(j, io.check, check_bezout);
    }
    if (name == "sr1" || name == "ssr1") {
        auto ring = ring_of(io);
        auto a = arg_element(io, ring, 0);
        auto b = arg_element(io, ring, 1);
        auto rep = name == "sr1" ? sr1_witness(a, b) : ssr1_witness(a, b);
        json j = to_json(rep);
        j["ring"] = ring.to_string();
        j["a"] = render_element(a);
        j["b"] = render_element(b);
        j["op"] = name;
        return emit(j, io.check, check_witness_sum);
    }
    if (name == "sr2") {
        auto ring = ring_of(io);
        std::vector<Element> row;
        for (std::size_t i = 0; i < io.args.size(); ++i) row.push_back(arg_element(io, ring, i));
        auto shifts = sr2_reduce(row);
        json jr = json::array(), js = json::array();
        for (const auto& e : row) jr.push_back(render_element(e));
        for (const auto& e : shifts) js.push_back(render_element(e));
        json j{{"ring", ring.to_string()}, {"row", jr}, {"shifts", js}};
        return emit(j, io.check, check_sr2);
    }
    if (name == "toeplitz-reduce") {
        auto ring = ring_of(io);
        auto a = arg_element(io, ring, 0);
        auto b = arg_element(io, ring, 1);
        auto [t, d] = toeplitz_row_reduce(a, b);
        json j{{"ring", ring.to_string()},
               {"a", render_element(a)},
               {"b", render_element(b)},
               {"t", to_json(t)},
               {"d", render_element(d)}};
        return emit(j, io.check, check_toeplitz_reduce);
    }
    if (name == "toeplitz-complete") {
        auto ring = ring_of(io);
        auto a = arg_element(io, ring, 0);
        auto b = arg_element(io, ring, 1);
        auto t = toeplitz_complete(a, b);
        json j{{"ring", ring.to_string()},
               {"a", render_element(a)},
               {"b", render_element(b)},
               {"t", to_json(t)},
               {"det", render_element(t.det())}};
        return emit(j, io.check, check_toeplitz_complete);
    }
    if (name == "toeplitz-snf" || name == "snf") {
        auto m = load_matrix(io);
        auto cert = name == "toeplitz-snf" ? toeplitz_diag_2x2(m) : smith_nxm(m);
        json j{{"ring", m.ring().to_string()}, {"certificate", to_json(cert)}};
        return emit(j, io.check, check_reduction);
    }
    if (name == "find-pq") {
        auto ring = ring_of(io);
        auto a = arg_element(io, ring, 0);
        auto b = arg_element(io, ring, 1);
        auto c = arg_element(io, ring, 2);
        auto w = find_pq(a, b, c);
        json j = to_json(w);
        j["ring"] = ring.to_string();
        j["a"] = render_element(a);
        j["b"] = render_element(b);
        j["c"] = render_element(c);
        return emit(j, io.check, check_find_pq);
    }
    if (name == "neat") {
        auto ring = ring_of(io);
        auto a = arg_element(io, ring, 0);
        if (io.args.size() == 1) {
            json j{{"ring", ring.to_string()}, {"a", render_element(a)}, {"neat", is_neat(a)}};
            return emit(j, io.check, check_neat);
        }
        auto w = neat_witness(a, arg_element(io, ring, 1), arg_element(io, ring, 2));
        json j = to_json(w);
        j["ring"] = ring.to_string();
        return emit(j, io.check, check_neat);
    }
    if (name == "neat-shift") {
        auto ring = ring_of(io);
        auto a = arg_element(io, ring, 0);
        auto b = arg_element(io, ring, 1);
        auto t = neat_range1_shift(a, b);
        json j{{"ring", ring.to_string()},
               {"a", render_element(a)},
               {"b", render_element(b)},
               {"t", render_element(t)},
               {"shifted", render_element(a + b * t)}};
        return emit(j, io.check, check_neat_shift);
    }
    if (name == "clean") {
        auto ring = ring_of(io);
        auto d = clean_decompose(arg_element(io, ring, 0), arg_element(io, ring, 1),
                                 arg_element(io, ring, 2), arg_element(io, ring, 3));
        json j = to_json(d);
        j["ring"] = ring.to_string();
        return emit(j, io.check, check_clean);
    }
    if (name == "prop5-forward") {
        auto ring = ring_of(io);
        auto a = arg_element(io, ring, 0), b = arg_element(io, ring, 1),
             c = arg_element(io, ring, 2);
        auto f = prop5_forward(a, b, c, arg_element(io, ring, 3), arg_element(io, ring, 4));
        json j = to_json(f);
        j["ring"] = ring.to_string();
        j["a"] = render_element(a);
        j["b"] = render_element(b);
        j["c"] = render_element(c);
        return emit(j, io.check, check_prop5_forward);
    }
    if (name == "prop5-backward") {
        auto ring = ring_of(io);
        auto a = arg_element(io, ring, 0), b = arg_element(io, ring, 1),
             c = arg_element(io, ring, 2);
        auto w = prop5_backward(a, b, c, arg_element(io, ring, 3), arg_element(io, ring, 4),
                                arg_element(io, ring, 5));
        json j = to_json(w);
        j["ring"] = ring.to_string();
        j["a"] = render_element(a);
        j["b"] = render_element(b);
        j["c"] = render_element(c);
        return emit(j, io.check, check_prop5_backward);
    }
    if (name == "classify") {
        auto ring = ring_of(io);
        auto c = lab::classify(ring, io.bound);
        return emit(to_json(c), io.check, check_none);
    }
    if (name == "verify") {
        auto ring = ring_of(io);
        auto rep = lab::verify_theorem(ring, lab::parse_theorem(io.theorem), io.bound);
        json j = to_json(rep);
        int rc = emit(j, io.check, check_none);
        return rc != 0 ? rc : (rep.passed() ? 0 : 1);
    }
    bezlab::fail(bezlab::errc::parse_error, "unknown subcommand '" + name + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear algebra over commutative Bezout rings"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        bool wants_json;
        bool wants_theorem;
    };
    const Sub subs[] = {
        {"bezout", "gcd certificate for two elements", false, false},
        {"sr1", "witness y with a+b*y a unit", false, false},
        {"ssr1", "witness x with a^2+b*x a unit", false, false},
        {"sr2", "shorten a unimodular row of length >= 3", false, false},
        {"toeplitz-reduce", "invertible Toeplitz T with (a,b)T = (d,0)", false, false},
        {"toeplitz-complete", "complete a unimodular row to [[a,b],[x,a]]", false, false},
        {"toeplitz-snf", "2x2 diagonal reduction by Toeplitz transforms", true, false},
        {"snf", "Smith normal form with elementary transforms", true, false},
        {"find-pq", "(p,q) with (pa)R + (pb+qc)R = R", false, false},
        {"neat", "neat test (one element) or neat factorization (a b c)", false, false},
        {"neat-shift", "least t with a+b*t neat", false, false},
        {"clean", "idempotent+unit decomposition in R/(r*s)R from (r s a x)", false, false},
        {"prop5-forward", "(lambda,u,v) from (a b c p q)", false, false},
        {"prop5-backward", "(p,q) from (a b c lambda u v)", false, false},
        {"classify", "exhaustive ring flags for Z/n", false, false},
        {"verify", "exhaustive theorem check over Z/n", false, true},
    };

    CommandIO io;
    std::string chosen;
    for (const auto& s : subs) {
        auto* cmd = app.add_subcommand(s.name, s.help);
        cmd->add_option("--ring", io.ring_spec, "ring spec: Z, Z/<n>, GF(<p>)[x], Z_(<p>)");
        cmd->add_option("args", io.args, "element literals");
        if (s.wants_json) cmd->add_option("--json", io.json_path, "matrix JSON file");
        if (s.wants_theorem)
            cmd->add_option("--theorem", io.theorem,
                            "THM9_2, PROP5, PROP6, THM8, THM13 or THM10");
        cmd->add_option("--bound", io.bound, "modulus bound for exhaustive sweeps");
        cmd->add_flag("--check", io.check, "replay certificate verification");
        cmd->callback([&chosen, name = std::string(s.name)]() { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run_command(chosen, io);
    } catch (const bezlab::ring_error& e) {
        bezlab::json err{{"status", "error"},
                         {"error_code", std::string(e.code_name())},
                         {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        bezlab::json err{{"status", "error"},
                         {"error_code", "InternalError"},
                         {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
}
