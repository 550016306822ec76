// slopekit command-line front end.
//
// Exit codes: 0 success, 1 a verify bundle failed, 2 usage or domain error.

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "slopekit/census_io.hpp"
#include "slopekit/char_slopes.hpp"
#include "slopekit/error.hpp"
#include "slopekit/knot_spec.hpp"
#include "slopekit/lens.hpp"
#include "slopekit/seifert.hpp"
#include "slopekit/surgery_floer.hpp"
#include "slopekit/verify.hpp"

using namespace slopekit;
using json = nlohmann::ordered_json;

namespace {

enum class Format { Human, Json, Tsv };

const std::map<std::string, Format> kFormats{{"human", Format::Human}, {"json", Format::Json}, {"tsv", Format::Tsv}};

void add_format(CLI::App* cmd, Format& fmt) {
    cmd->add_option("--format", fmt, "human, json or tsv")->transform(CLI::CheckedTransformer(kFormats));
}

std::string join(const std::vector<Rational>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? sep : "") + xs[i].str();
    }
    return out;
}

json to_json(const std::vector<Rational>& xs) {
    json arr = json::array();
    for (const Rational& x : xs) {
        arr.push_back(x.str());
    }
    return arr;
}

// ---- dinv

struct DinvArgs {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::optional<std::int64_t> i;
    bool multiset = false;
    Format fmt = Format::Human;
};

int run_dinv(const DinvArgs& a) {
    if (!a.multiset && !a.i) {
        throw DomainError("dinv: give an index i or --multiset");
    }
    if (a.multiset) {
        const auto xs = d_multiset(a.p, a.q);
        switch (a.fmt) {
            case Format::Human:
                std::cout << join(xs, "\n") << '\n';
                break;
            case Format::Json:
                std::cout << json{{"p", a.p}, {"q", a.q}, {"multiset", to_json(xs)}}.dump() << '\n';
                break;
            case Format::Tsv:
                std::cout << "p\tq\td\n";
                for (const Rational& x : xs) {
                    std::cout << a.p << '\t' << a.q << '\t' << x << '\n';
                }
                break;
        }
        return 0;
    }
    const Rational d = d_invariant(a.p, a.q, *a.i);
    switch (a.fmt) {
        case Format::Human:
            std::cout << d << '\n';
            break;
        case Format::Json:
            std::cout << json{{"p", a.p}, {"q", a.q}, {"i", *a.i}, {"d", d.str()}}.dump() << '\n';
            break;
        case Format::Tsv:
            std::cout << "p\tq\ti\td\n" << a.p << '\t' << a.q << '\t' << *a.i << '\t' << d << '\n';
            break;
    }
    return 0;
}

// ---- surgery

struct SurgeryArgs {
    std::string knot;
    std::int64_t p = 0;
    std::int64_t q = 0;
    Format fmt = Format::Human;
};

// d-invariants when the result is a lens space, a sum of two, or a positive
// L-space surgery on a positive torus knot.
std::optional<std::vector<Rational>> surgery_d_multiset(const Knot& k, const SurgeryResult& y, std::int64_t p,
                                                        std::int64_t q) {
    const SurgeryResult r = y.resolved();
    if (const auto* l = r.get_if<LensSpace>()) {
        return d_multiset(l->p(), l->q());
    }
    if (const auto* sum = r.get_if<ConnectedSumLens>()) {
        std::vector<Rational> out;
        for (const Rational& x : *d_table(sum->first.p(), sum->first.q())) {
            for (const Rational& z : *d_table(sum->second.p(), sum->second.q())) {
                out.push_back(x + z);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    const auto* t = std::get_if<TorusKnot>(&k);
    if (t != nullptr && t->s() > 0 && p > 0 && p >= (2 * t->genus() - 1) * q) {
        return d_surgery_multiset(VTable::of(staircase(*t)), p, q);
    }
    return std::nullopt;
}

std::string knot_text(const Knot& k) {
    return std::visit([](const auto& x) { return x.str(); }, k);
}

int run_surgery(const SurgeryArgs& a) {
    const Knot k = parse_knot(a.knot);
    const SurgeryResult y = surgery(k, a.p, a.q);
    const std::string text = to_string(y);
    const auto ds = surgery_d_multiset(k, y, a.p, a.q);
    switch (a.fmt) {
        case Format::Human:
            std::cout << text << '\n';
            if (ds) {
                std::cout << "d: " << join(*ds, " ") << '\n';
            }
            break;
        case Format::Json: {
            json j{{"knot", knot_text(k)}, {"p", a.p}, {"q", a.q}, {"result", text}};
            j["d_multiset"] = ds ? to_json(*ds) : json(nullptr);
            std::cout << j.dump() << '\n';
            break;
        }
        case Format::Tsv:
            std::cout << "knot\tp\tq\tresult\td_multiset\n"
                      << knot_text(k) << '\t' << a.p << '\t' << a.q << '\t' << text << '\t'
                      << (ds ? join(*ds, ",") : "") << '\n';
            break;
    }
    return 0;
}

// ---- census

struct CensusArgs {
    std::int64_t s_max = 60;
    std::int64_t q_max = 5;
    Format fmt = Format::Tsv;
};

int run_census(const CensusArgs& a) {
    const auto records = cable_census(a.s_max, a.q_max);
    std::cout << (a.fmt == Format::Json ? census_to_jsonl(records) : census_to_tsv(records));
    return 0;
}

// ---- verify

struct VerifyArgs {
    std::string name;
    Format fmt = Format::Human;
};

int run_verify_cmd(const VerifyArgs& a) {
    const VerifyReport rep = run_verify(a.name);
    switch (a.fmt) {
        case Format::Human:
            std::cout << rep.name << ": " << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.checked << " checks, "
                      << rep.failure_count << " failures)\n";
            for (const std::string& f : rep.failures) {
                std::cout << "  " << f << '\n';
            }
            break;
        case Format::Json: {
            json j{{"name", rep.name},
                   {"pass", rep.pass()},
                   {"checked", rep.checked},
                   {"failure_count", rep.failure_count},
                   {"failures", rep.failures}};
            std::cout << j.dump() << '\n';
            break;
        }
        case Format::Tsv:
            std::cout << "name\tpass\tchecked\tfailures\n"
                      << rep.name << '\t' << (rep.pass() ? "true" : "false") << '\t' << rep.checked << '\t'
                      << rep.failure_count << '\n';
            break;
    }
    return rep.pass() ? 0 : 1;
}

// ---- classify

struct ClassifyArgs {
    std::int64_t r = 0, s = 0, p = 0, q = 0;
    Format fmt = Format::Human;
};

std::string condition_name(SlopeCondition c) {
    switch (c) {
        case SlopeCondition::I:
            return "I";
        case SlopeCondition::II:
            return "II";
        case SlopeCondition::III:
            return "III";
        case SlopeCondition::NotCovered:
            return "NotCovered";
    }
    return "?";
}

int run_classify(const ClassifyArgs& a) {
    const SlopeClassification c = classify_slope(a.r, a.s, a.p, a.q);
    const std::string conclusion = c.condition == SlopeCondition::NotCovered
                                       ? "none"
                                       : (c.known_cable ? "TrsOrSpecificCable" : "OnlyTrs");
    const std::string cable = c.known_cable ? c.known_cable->str() : "";
    switch (a.fmt) {
        case Format::Human:
            std::cout << to_string(c) << '\n';
            break;
        case Format::Json: {
            json j{{"r", a.r}, {"s", a.s}, {"p", a.p}, {"q", a.q}, {"condition", condition_name(c.condition)},
                   {"conclusion", conclusion}};
            j["known_cable"] = c.known_cable ? json(cable) : json(nullptr);
            std::cout << j.dump() << '\n';
            break;
        }
        case Format::Tsv:
            std::cout << "r\ts\tp\tq\tcondition\tconclusion\tknown_cable\n"
                      << a.r << '\t' << a.s << '\t' << a.p << '\t' << a.q << '\t' << condition_name(c.condition)
                      << '\t' << conclusion << '\t' << cable << '\n';
            break;
    }
    return 0;
}

// ---- maps

struct MapsArgs {
    std::int64_t p = 0, q = 0;
    Format fmt = Format::Human;
};

std::string map_role(const AffineMapCandidate& m) {
    if (!m.is_identity_like()) {
        return "other";
    }
    return m(0) == 0 && m(1 % m.p) == 1 % m.p ? "identity" : "conjugation";
}

int run_maps(const MapsArgs& a) {
    const AffineMapSearch found = enumerate_affine_maps(a.p, a.q);
    if (a.fmt == Format::Tsv) {
        std::cout << "p\tq\ta\ts0\ts1\ttype\trole\n";
    }
    for (const AffineMapCandidate& m : found.maps) {
        switch (a.fmt) {
            case Format::Human:
                std::cout << "a=" << m.a << " s0=" << m.s0 << " s1=" << m.s1 << " type " << to_string(m.type)
                          << " (" << map_role(m) << ")\n";
                break;
            case Format::Json:
                std::cout << json{{"p", a.p}, {"q", a.q}, {"a", m.a}, {"s0", m.s0}, {"s1", m.s1},
                                  {"type", to_string(m.type)}, {"role", map_role(m)}}
                                 .dump()
                          << '\n';
                break;
            case Format::Tsv:
                std::cout << a.p << '\t' << a.q << '\t' << m.a << '\t' << m.s0 << '\t' << m.s1 << '\t'
                          << to_string(m.type) << '\t' << map_role(m) << '\n';
                break;
        }
    }
    for (const std::string& bad : found.unclassified) {
        std::cerr << "unclassified: " << bad << '\n';
    }
    return found.unclassified.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact d-invariants, torus knot surgeries and characterizing slopes"};
    app.require_subcommand(1);

    DinvArgs dinv;
    auto* c_dinv = app.add_subcommand("dinv", "correction term d(p,q,i) of L(p,q)");
    c_dinv->add_option("p", dinv.p)->required();
    c_dinv->add_option("q", dinv.q)->required();
    c_dinv->add_option("i", dinv.i);
    c_dinv->add_flag("--multiset", dinv.multiset, "all p values, sorted");
    add_format(c_dinv, dinv.fmt);

    SurgeryArgs surg;
    auto* c_surg = app.add_subcommand("surgery", "S^3_{p/q}(K) for K = T(r,s) or C(w,c;T(r,s))");
    c_surg->add_option("knot", surg.knot)->required();
    c_surg->add_option("p", surg.p)->required();
    c_surg->add_option("q", surg.q)->required();
    add_format(c_surg, surg.fmt);

    CensusArgs census;
    auto* c_census = app.add_subcommand("census", "torus knots sharing a non-integral surgery with a cable");
    c_census->add_option("--smax", census.s_max)->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));
    c_census->add_option("--qmax", census.q_max)->check(CLI::Range(std::int64_t{2}, std::int64_t{1000}));
    add_format(c_census, census.fmt);

    VerifyArgs ver;
    auto* c_verify = app.add_subcommand("verify", "run a named check bundle");
    c_verify->add_option("name", ver.name, "poincare, remark-29-2, congruences, moser, mapform, contfrac")
        ->required();
    add_format(c_verify, ver.fmt);

    ClassifyArgs cls;
    auto* c_classify = app.add_subcommand("classify", "which characterizing-slope condition p/q meets for T(r,s)");
    c_classify->add_option("r", cls.r)->required();
    c_classify->add_option("s", cls.s)->required();
    c_classify->add_option("p", cls.p)->required();
    c_classify->add_option("q", cls.q)->required();
    add_format(c_classify, cls.fmt);

    MapsArgs maps;
    auto* c_maps = app.add_subcommand("maps", "affine spin^c maps surviving the parity test");
    c_maps->add_option("p", maps.p)->required();
    c_maps->add_option("q", maps.q)->required();
    add_format(c_maps, maps.fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_dinv->parsed()) {
            return run_dinv(dinv);
        }
        if (c_surg->parsed()) {
            return run_surgery(surg);
        }
        if (c_census->parsed()) {
            return run_census(census);
        }
        if (c_verify->parsed()) {
            return run_verify_cmd(ver);
        }
        if (c_classify->parsed()) {
            return run_classify(cls);
        }
        if (c_maps->parsed()) {
            return run_maps(maps);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return 2;
    } catch (const NotComparable& e) {
        std::cerr << "not comparable: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
