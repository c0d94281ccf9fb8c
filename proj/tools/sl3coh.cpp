#include "sl3coh/cohom.hpp"
#include "sl3coh/errors.hpp"
#include "sl3coh/hifilt.hpp"
#include "sl3coh/serialize.hpp"
#include "sl3coh/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

using namespace sl3coh;
using json = nlohmann::ordered_json;

namespace {

enum class Format { json, text, latex };

struct Options {
    Int p = 0;
    std::string weight;
    Format format = Format::json;
    int degree = -1;
    std::string suite = "all";
    Int box = 0;
    std::string delta = "alpha";
    Int n = 0;
};

Int parse_int(std::string_view s) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::invalid_argument(std::string(s));
    return v;
}

std::string check_weight(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return "weight must be a,b";
    try {
        parse_int(std::string_view(s).substr(0, comma));
        parse_int(std::string_view(s).substr(comma + 1));
    } catch (const std::invalid_argument&) {
        return "weight must be two integers a,b";
    }
    return {};
}

Weight parse_weight(const std::string& s) {
    auto comma = s.find(',');
    return {parse_int(std::string_view(s).substr(0, comma)), parse_int(std::string_view(s).substr(comma + 1))};
}

std::string check_prime(const std::string& s) {
    try {
        Int p = parse_int(s);
        if (!is_prime(p)) return "--p must be a prime >= 2, got " + s;
    } catch (const std::invalid_argument&) {
        return "--p must be an integer, got " + s;
    }
    return {};
}

Delta parse_delta(const std::string& s) {
    if (s == "alpha") return Delta::alpha;
    if (s == "beta") return Delta::beta;
    return Delta::zero;
}

void print_character(const Character& c, Format f) {
    switch (f) {
    case Format::json: std::cout << character_to_json(c).dump() << '\n'; break;
    case Format::text: std::cout << character_to_text(c); break;
    case Format::latex: std::cout << character_to_latex(c) << '\n'; break;
    }
}

std::string weight_text(const Weight& w) { return to_string(w); }

std::string e_latex(const EDescriptor& e) {
    std::ostringstream os;
    if (e.delta == Delta::zero)
        os << "(" << e.nu.a << "," << e.nu.b << ")";
    else
        os << "E_{\\" << to_string(e.delta) << "}(" << e.nu.a << "," << e.nu.b << ")";
    return os.str();
}

json layer_json(const Weight& nu0, const EDescriptor& e) {
    json j;
    j["nu0"] = weight_to_json(nu0);
    j["delta"] = to_string(e.delta);
    j["nu1"] = weight_to_json(e.nu);
    return j;
}

void print_dfilt(const std::vector<DLayer>& layers, Int p, Format f) {
    if (f == Format::json) {
        json out = json::array();
        for (const auto& l : layers) {
            json j = layer_json(l.nu0, l.e);
            j["character"] = character_to_json(d_layer_char(l, p));
            out.push_back(std::move(j));
        }
        std::cout << out.dump() << '\n';
        return;
    }
    for (const auto& l : layers) {
        if (f == Format::text)
            std::cout << "Lhat" << weight_text(l.nu0) << " x " << to_string(l.e) << "^(1)\n";
        else
            std::cout << "\\hat L(" << l.nu0.a << "," << l.nu0.b << ") \\otimes " << e_latex(l.e) << "^{(1)} \\\\\n";
    }
}

void print_hlayers(const std::vector<HLayer>& layers, Format f) {
    if (f == Format::json) {
        json out = json::array();
        for (const auto& l : layers) {
            json j = layer_json(l.nu0, l.e);
            j["degree"] = l.j;
            j["annotation"] = to_string(l.annotation);
            j["character"] = character_to_json(l.resolved);
            if (l.annotation == Annotation::Effaced) j["suppressed"] = character_to_json(l.suppressed);
            if (l.annotation == Annotation::PartialQuotient) j["image"] = character_to_json(l.image);
            out.push_back(std::move(j));
        }
        std::cout << out.dump() << '\n';
        return;
    }
    for (const auto& l : layers) {
        if (f == Format::text)
            std::cout << "L" << weight_text(l.nu0) << " x H^" << l.j << "(" << to_string(l.e) << ")^(1)  "
                      << to_string(l.annotation) << "  dim " << l.resolved.dim() << '\n';
        else
            std::cout << "L(" << l.nu0.a << "," << l.nu0.b << ") \\otimes H^{" << l.j << "}(" << e_latex(l.e)
                      << ")^{(1)} = " << character_to_latex(l.resolved) << " \\\\\n";
    }
}

void print_classify(const Weight& mu, Int p, Format f) {
    WeightProfile w = classify(mu, p);
    if (f == Format::json) {
        json j;
        j["weight"] = weight_to_json(mu);
        j["region"] = to_string(w.region);
        j["restricted_type"] = to_string(w.restricted);
        j["mu0"] = weight_to_json(w.mu0);
        j["mu1"] = weight_to_json(w.mu1);
        j["degree"] = w.degree ? json(*w.degree) : json(nullptr);
        json g;
        g["class"] = to_string(w.griffith.cls);
        if (w.griffith.params) {
            const auto& q = *w.griffith.params;
            g["params"] = json{{"d", q.d}, {"a", q.a}, {"r", q.r}, {"s", q.s}};
        } else {
            g["params"] = nullptr;
        }
        j["griffith"] = std::move(g);
        std::cout << j.dump() << '\n';
        return;
    }
    std::cout << "weight " << weight_text(mu) << '\n'
              << "region " << to_string(w.region) << '\n'
              << "restricted_type " << to_string(w.restricted) << '\n'
              << "digits " << weight_text(w.mu0) << " + p" << weight_text(w.mu1) << '\n'
              << "degree " << (w.degree ? std::to_string(*w.degree) : "-inf") << '\n'
              << "griffith " << to_string(w.griffith.cls) << '\n';
}

void print_wall(const WallFiltration& wf, Format f) {
    if (f == Format::json) {
        json out;
        json layers = json::array();
        for (const auto& l : wf.layers) {
            json j;
            j["level"] = l.level;
            j["outer"] = weight_to_json(l.outer);
            j["quotient"] = weight_to_json(l.quotient);
            j["quotient_character"] = character_to_json(l.quotient_char);
            j["character"] = character_to_json(l.character);
            layers.push_back(std::move(j));
        }
        json levels = json::array();
        for (const auto& lv : wf.levels) {
            json items = json::array();
            for (const auto& it : lv) {
                json j;
                j["nu"] = weight_to_json(it.nu);
                j["twist"] = it.twist;
                j["lambda"] = weight_to_json(it.lambda);
                j["character"] = character_to_json(it.character);
                items.push_back(std::move(j));
            }
            levels.push_back(std::move(items));
        }
        out["layers"] = std::move(layers);
        out["levels"] = std::move(levels);
        std::cout << out.dump() << '\n';
        return;
    }
    for (const auto& l : wf.layers)
        std::cout << "layer " << l.level << ": L" << weight_text(l.outer) << " x W" << weight_text(l.quotient)
                  << "  dim " << l.character.dim() << '\n';
    for (std::size_t i = 0; i < wf.levels.size(); ++i)
        for (const auto& it : wf.levels[i])
            std::cout << "level " << i + 1 << ": L" << weight_text(it.nu) << "^(" << it.twist << ") x V"
                      << weight_text(it.lambda) << "  dim " << it.character.dim() << '\n';
}

void print_report(const LayerReport& r, Format f) {
    if (f == Format::json) {
        json out;
        out["case"] = r.case_tag;
        out["subcase"] = json{{"R", r.R}, {"S", r.S}};
        json layers = json::array();
        for (const auto& l : r.layers) {
            json j;
            j["nu"] = weight_to_json(l.nu);
            j["status"] = to_string(l.status);
            j["character"] = character_to_json(l.character);
            j["image"] = character_to_json(l.image);
            layers.push_back(std::move(j));
        }
        out["layers"] = std::move(layers);
        std::cout << out.dump() << '\n';
        return;
    }
    std::cout << "case " << r.case_tag << "  R=" << r.R << " S=" << r.S << '\n';
    for (const auto& l : r.layers) {
        std::cout << "nu" << l.index << " = " << weight_text(l.nu) << "  " << to_string(l.status) << "  dim "
                  << l.character.dim();
        if (l.status == Annotation::PartialQuotient) std::cout << "  image dim " << l.image.dim();
        std::cout << '\n';
    }
}

int run_verify(const Options& o, bool have_p, bool have_box) {
    std::vector<std::string> names;
    if (o.suite == "all")
        for (const auto& s : suites()) names.push_back(s.name);
    else
        names.push_back(o.suite);
    for (const auto& name : names) {
        const SuiteInfo* info = find_suite(name);
        std::vector<Int> primes = have_p ? std::vector<Int>{o.p} : info->default_primes;
        for (Int p : primes) {
            SuiteResult r = run_suite(name, p, have_box ? std::optional<Int>(o.box) : std::nullopt);
            if (!r.ok) {
                std::cout << "FAIL " << name << " p=" << p << " " << r.counterexample << '\n';
                return 1;
            }
            std::cout << "ok " << name << " p=" << p << " checked=" << r.checked << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters of line bundle cohomology on SL3/B in characteristic p"};
    app.require_subcommand(1);
    Options o;

    auto prime_opt = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--p", o.p, "prime characteristic")->check(CLI::Validator(check_prime, "PRIME"));
        if (required) opt->required();
        return opt;
    };
    auto weight_opt = [&](CLI::App* sub) {
        return sub->add_option("--weight", o.weight, "weight a,b in fundamental coordinates")
            ->required()
            ->check(CLI::Validator(check_weight, "A,B"));
    };
    auto format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, Format>{{"json", Format::json}, {"text", Format::text}, {"latex", Format::latex}}));
    };
    auto degree_opt = [&](CLI::App* sub, const std::string& flag, const std::string& range) {
        sub->add_option(flag, o.degree, "cohomology degree")->required()->check(CLI::IsMember(
            range == "0..3" ? std::vector<int>{0, 1, 2, 3} : std::vector<int>{1, 2}));
    };

    auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic chi(mu)");
    weight_opt(chi_cmd);
    prime_opt(chi_cmd, false);
    format_opt(chi_cmd);

    auto* coh_cmd = app.add_subcommand("coh", "character of H^i(mu)");
    weight_opt(coh_cmd);
    prime_opt(coh_cmd, true);
    degree_opt(coh_cmd, "--i", "0..3");
    format_opt(coh_cmd);

    auto* simple_cmd = app.add_subcommand("simple", "character of the simple module L(lambda)");
    weight_opt(simple_cmd);
    prime_opt(simple_cmd, true);
    format_opt(simple_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "region, restricted type, degree and Griffith class");
    weight_opt(classify_cmd);
    prime_opt(classify_cmd, true);
    format_opt(classify_cmd);

    auto* dfilt_cmd = app.add_subcommand("dfilt", "D-filtration of Zhat(mu)");
    weight_opt(dfilt_cmd);
    prime_opt(dfilt_cmd, true);
    format_opt(dfilt_cmd);

    auto* phifilt_cmd = app.add_subcommand("phifilt", "p-H^j-D-filtration of H^j(mu)");
    weight_opt(phifilt_cmd);
    prime_opt(phifilt_cmd, true);
    degree_opt(phifilt_cmd, "--j", "0..3");
    format_opt(phifilt_cmd);

    auto* jantzen_cmd = app.add_subcommand("jantzen", "Jantzen p-filtration of the Weyl module of lambda");
    weight_opt(jantzen_cmd);
    prime_opt(jantzen_cmd, true);
    format_opt(jantzen_cmd);

    auto* wall_cmd = app.add_subcommand("wall", "filtrations of H^2(n, -n-2)");
    wall_cmd->add_option("--n", o.n, "wall parameter n >= 1")->required()->check(CLI::PositiveNumber);
    prime_opt(wall_cmd, true);
    format_opt(wall_cmd);

    auto* idelta_cmd = app.add_subcommand("idelta", "image of H^1(mu) -> H^2(mu - delta)");
    weight_opt(idelta_cmd);
    prime_opt(idelta_cmd, true);
    idelta_cmd->add_option("--delta", o.delta, "alpha or beta")->check(CLI::IsMember({"alpha", "beta"}));
    format_opt(idelta_cmd);

    auto* report_cmd = app.add_subcommand("report", "layer-by-layer structure of H^i(mu)");
    weight_opt(report_cmd);
    prime_opt(report_cmd, true);
    degree_opt(report_cmd, "--i", "1..2");
    format_opt(report_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    std::vector<std::string> suite_names{"all"};
    for (const auto& s : suites()) suite_names.push_back(s.name);
    verify_cmd->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suite_names));
    auto* box_opt = verify_cmd->add_option("--box", o.box, "scan extent")->check(CLI::PositiveNumber);
    auto* verify_p = prime_opt(verify_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const char* cache_path = std::getenv("SL3COH_CACHE");
    bool use_cache = cache_path && *cache_path && o.p != 0 && !verify_cmd->parsed();

    try {
        if (use_cache) cache_load(cache_path, o.p);
        int status = 0;
        if (chi_cmd->parsed()) {
            print_character(chi(parse_weight(o.weight)), o.format);
        } else if (coh_cmd->parsed()) {
            print_character(coh_char(o.degree, parse_weight(o.weight), o.p), o.format);
        } else if (simple_cmd->parsed()) {
            Weight l = parse_weight(o.weight);
            if (!l.dominant()) throw DomainError("simple modules are indexed by dominant weights");
            print_character(simple_char(l, o.p), o.format);
        } else if (classify_cmd->parsed()) {
            print_classify(parse_weight(o.weight), o.p, o.format);
        } else if (dfilt_cmd->parsed()) {
            print_dfilt(d_filtration(parse_weight(o.weight), o.p), o.p, o.format);
        } else if (phifilt_cmd->parsed()) {
            print_hlayers(p_hi_d_filtration(o.degree, parse_weight(o.weight), o.p), o.format);
        } else if (jantzen_cmd->parsed()) {
            print_hlayers(jantzen_p_filtration(parse_weight(o.weight), o.p), o.format);
        } else if (wall_cmd->parsed()) {
            print_wall(wall_h2_filtration(o.n, o.p), o.format);
        } else if (idelta_cmd->parsed()) {
            print_character(i_delta_char(parse_delta(o.delta), parse_weight(o.weight), o.p).character, o.format);
        } else if (report_cmd->parsed()) {
            print_report(hi_layer_report(o.degree, parse_weight(o.weight), o.p), o.format);
        } else if (verify_cmd->parsed()) {
            status = run_verify(o, verify_p->count() > 0, box_opt->count() > 0);
        }
        if (use_cache) cache_save(cache_path, o.p);
        return status;
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << '\n';
        return 1;
    }
}
