#include "nsymkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "nsymkit/classical.hpp"
#include "nsymkit/errors.hpp"
#include "nsymkit/json_io.hpp"
#include "nsymkit/nsym.hpp"
#include "nsymkit/skew_shape.hpp"
#include "nsymkit/tableau.hpp"
#include "nsymkit/verify.hpp"

namespace nsymkit {

namespace {

constexpr int kDefaultMaxDegree = 12;

int max_degree() {
    const char* raw = std::getenv("NSYMKIT_MAX_DEGREE");
    if (!raw || !*raw) return kDefaultMaxDegree;
    try {
        std::size_t used = 0;
        const int v = std::stoi(raw, &used);
        if (used != std::string(raw).size() || v < 0) throw std::invalid_argument("bad");
        return v;
    } catch (const std::exception&) {
        throw DomainError(std::string("NSYMKIT_MAX_DEGREE must be a non-negative integer, got '") + raw + "'");
    }
}

void require_degree(int degree, const std::string& what) {
    const int cap = max_degree();
    if (degree > cap) {
        throw DomainError(what + " has degree " + std::to_string(degree) + ", above NSYMKIT_MAX_DEGREE=" +
                          std::to_string(cap));
    }
}

void require_element_degree(const Element& e, const std::string& what) {
    const auto degrees = e.degrees();
    if (!degrees.empty()) require_degree(*degrees.rbegin(), what);
}

std::string read_source(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string set_text(const std::set<int>& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int x : s) {
        out << (first ? "" : ",") << x;
        first = false;
    }
    out << '}';
    return out.str();
}

Json set_json(const std::set<int>& s) { return Json(std::vector<int>(s.begin(), s.end())); }

std::string dump(const Json& j) { return j.dump() + "\n"; }

struct Settings {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

CommandResult cmd_mn(int n, const std::string& alpha_text, const std::string& method, bool check,
                     const Settings& settings) {
    if (n < 1) throw DomainError("--n must be >= 1");
    const Composition alpha = parse_composition(alpha_text);
    require_degree(alpha.size() + n, "Psi_" + std::to_string(n) + " * s_" + alpha.to_string());

    auto evaluate = [&](const std::string& m) {
        if (m == "connected") return mn_connected(n, alpha);
        if (m == "full") return mn_primordial(n, alpha);
        if (m == "ribbon") return mn_ribbon_route(n, alpha);
        return mn_rule(n, alpha);
    };
    const Element result = evaluate(method);

    CommandResult r;
    std::vector<std::string> mismatched;
    if (check) {
        for (const std::string m : {"rule", "connected", "full", "ribbon"}) {
            if (!(evaluate(m) == result)) mismatched.push_back(m);
        }
    }
    if (settings.json()) {
        Json j = Json::object();
        j["n"] = n;
        j["alpha"] = to_json(alpha);
        j["method"] = method;
        j["result"] = to_json(result);
        if (check) {
            j["check"] = mismatched.empty();
            if (!mismatched.empty()) j["mismatched"] = mismatched;
        }
        r.out = dump(j);
    } else {
        std::ostringstream out;
        out << "Psi_" << n << " * s_" << alpha.to_string() << " = " << result.to_string() << '\n';
        out << "terms: " << result.terms().size() << '\n';
        if (check) {
            if (mismatched.empty()) {
                out << "check: rule = connected = full = ribbon\n";
            } else {
                out << "check: FAILED\n";
            }
        }
        r.out = out.str();
    }
    if (!mismatched.empty()) {
        std::ostringstream err;
        err << "mn: evaluators disagree with --method " << method << ":";
        for (const auto& m : mismatched) err << ' ' << m << " = " << evaluate(m).to_string() << ';';
        r.err = err.str() + "\n";
        r.exit_code = 2;
    }
    return r;
}

CommandResult cmd_strips(const std::string& alpha_text, int n, bool only_p, const Settings& settings) {
    if (n < 1) throw DomainError("--n must be >= 1");
    const Composition alpha = parse_composition(alpha_text);
    require_degree(alpha.size() + n, "strips over " + alpha.to_string());
    const ShapeList shapes = only_p ? enumerate_P(alpha, n) : enumerate_B(alpha, n);

    CommandResult r;
    if (settings.json()) {
        Json rows = Json::array();
        for (const auto& [beta, shape] : shapes) {
            const ShapeStats st = classify(shape);
            const int coeff = st.north_east->empty() ? (*st.height % 2 == 0 ? 1 : -1) : 0;
            Json row = Json::object();
            row["beta"] = to_json(beta);
            row["shape"] = to_json(shape);
            row["E"] = set_json(*st.east);
            row["SE"] = set_json(*st.south_east);
            row["NE"] = set_json(*st.north_east);
            row["ht"] = *st.height;
            row["coeff"] = coeff;
            rows.push_back(std::move(row));
        }
        Json j = Json::object();
        j["alpha"] = to_json(alpha);
        j["n"] = n;
        j["only_p"] = only_p;
        j["count"] = shapes.size();
        j["strips"] = std::move(rows);
        r.out = dump(j);
        return r;
    }
    std::ostringstream out;
    out << (only_p ? "P" : "B") << " alpha=" << alpha.to_string() << " n=" << n << ": " << shapes.size()
        << " shapes\n";
    for (const auto& [beta, shape] : shapes) {
        const ShapeStats st = classify(shape);
        const int coeff = st.north_east->empty() ? (*st.height % 2 == 0 ? 1 : -1) : 0;
        out << "\nbeta=" << beta.to_string() << " E=" << set_text(*st.east) << " SE=" << set_text(*st.south_east)
            << " NE=" << set_text(*st.north_east) << " ht=" << *st.height << " coeff=" << coeff << '\n'
            << shape.render();
    }
    r.out = out.str();
    return r;
}

CommandResult cmd_convert(const std::string& in_path, const std::string& to, const Settings& settings) {
    const Element input = parse_element(read_source(in_path));
    require_element_degree(input, "input");
    const Element result = to_basis(input, parse_basis(to));
    CommandResult r;
    r.out = settings.json() ? dump(to_json(result)) : result.to_string() + "\n";
    return r;
}

CommandResult cmd_mul(const std::string& left_path, const std::string& right_path, const std::string& out_basis,
                      const Settings& settings) {
    const Element left = parse_element(read_source(left_path));
    const Element right = parse_element(read_source(right_path));
    const auto top = [](const Element& e) { return e.degrees().empty() ? 0 : *e.degrees().rbegin(); };
    require_degree(top(left) + top(right), "product");
    Basis target = left.basis() == Basis::PSI ? Basis::R : left.basis();
    if (!out_basis.empty()) target = parse_basis(out_basis);
    const Element result = mul(left, right, target);
    CommandResult r;
    r.out = settings.json() ? dump(to_json(result)) : result.to_string() + "\n";
    return r;
}

CommandResult cmd_srct(const std::string& alpha_text, bool count_only, bool descents, const Settings& settings) {
    const Composition alpha = parse_composition(alpha_text);
    require_degree(alpha.size(), "shape " + alpha.to_string());
    CommandResult r;
    std::ostringstream out;
    if (descents) {
        std::map<Composition, std::int64_t> row;
        for_each_srct(alpha, [&](const Filling& f) { ++row[descent_composition(f)]; });
        if (settings.json()) {
            Json terms = Json::array();
            for (const auto& [beta, d] : row) {
                Json t = Json::object();
                t["comp"] = to_json(beta);
                t["coeff"] = d;
                terms.push_back(std::move(t));
            }
            Json j = Json::object();
            j["alpha"] = to_json(alpha);
            j["descents"] = std::move(terms);
            out << dump(j);
        } else {
            out << "d_" << alpha.to_string() << ",beta (nonzero entries)\n";
            for (const auto& [beta, d] : row) out << beta.to_string() << ' ' << d << '\n';
        }
    } else if (count_only) {
        std::int64_t count = 0;
        for_each_srct(alpha, [&](const Filling&) { ++count; });
        if (settings.json()) {
            Json j = Json::object();
            j["alpha"] = to_json(alpha);
            j["count"] = count;
            out << dump(j);
        } else {
            out << count << '\n';
        }
    } else {
        const auto all = enumerate_srct(alpha);
        if (settings.json()) {
            Json list = Json::array();
            for (const auto& f : all) list.push_back(to_json(f));
            Json j = Json::object();
            j["alpha"] = to_json(alpha);
            j["count"] = all.size();
            j["tableaux"] = std::move(list);
            out << dump(j);
        } else {
            for (const auto& f : all) out << f.render() << '\n';
            out << "count: " << all.size() << '\n';
        }
    }
    r.out = out.str();
    return r;
}

CommandResult cmd_verify(const VerifyOptions& options, const Settings& settings) {
    const VerifyReport report = run_verification(options);
    CommandResult r;
    r.out = settings.json() ? dump(report.to_json()) : report.render_text();
    if (!report.passed()) {
        r.exit_code = 2;
        for (const auto& c : report.checks) {
            if (!c.passed()) {
                r.err = "verify: FAILED " + c.name + (c.counterexample ? ": " + *c.counterexample : "") + "\n";
                break;
            }
        }
    }
    return r;
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Exact computations with noncommutative symmetric functions and noncommutative Schur functions",
                 "nsymkit"};
    app.require_subcommand(1);
    Settings settings;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    int n = 0;
    std::string alpha;
    std::string method = "rule";
    bool check = false;
    auto* mn = app.add_subcommand("mn", "Expand Psi_n * s_alpha in noncommutative Schur functions");
    mn->add_option("--n", n, "Power sum degree")->required();
    mn->add_option("--alpha", alpha, "Composition, e.g. 2,1,3 (or 'empty')")->required();
    mn->add_option("--method", method, "Evaluator")->check(CLI::IsMember({"rule", "connected", "full", "ribbon"}));
    mn->add_flag("--check", check, "Compare all four evaluators; exit 2 on mismatch");
    add_format(mn);

    bool only_p = false;
    auto* strips = app.add_subcommand("strips", "List nc border strips of size n over alpha");
    strips->add_option("--alpha", alpha, "Inner composition")->required();
    strips->add_option("--n", n, "Strip size")->required();
    strips->add_flag("--only-p", only_p, "Only strips without a north-east column step");
    add_format(strips);

    std::string in_path, to_basis_name;
    auto* convert = app.add_subcommand("convert", "Change the basis of an element (JSON file, '-' for stdin)");
    convert->add_option("--in", in_path, "Element JSON file")->required();
    convert->add_option("--to", to_basis_name, "Target basis: H, R or S")->required();
    add_format(convert);

    std::string left_path, right_path, out_basis;
    auto* mul_cmd = app.add_subcommand("mul", "Multiply two elements given as JSON files");
    mul_cmd->add_option("--left", left_path, "Left factor")->required();
    mul_cmd->add_option("--right", right_path, "Right factor")->required();
    mul_cmd->add_option("--out-basis", out_basis, "Result basis (default: basis of the left factor)");
    add_format(mul_cmd);

    bool count_only = false, descents = false;
    auto* srct = app.add_subcommand("srct", "Standard reverse composition tableaux of a shape");
    srct->add_option("--alpha", alpha, "Shape")->required();
    srct->add_flag("--count", count_only, "Only print the number of tableaux");
    srct->add_flag("--descents", descents, "Print the nonzero d-coefficients of the shape");
    add_format(srct);

    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "Run the identity suite over a bounded sweep");
    verify->add_option("--max-size", vopts.max_size, "Largest |alpha|");
    verify->add_option("--max-n", vopts.max_n, "Largest n");
    verify->add_option("--seed", vopts.seed, "Seed for randomized trials");
    verify->add_option("--trials", vopts.trials, "Randomized trials per identity");
    verify->add_option("--threads", vopts.threads, "Worker threads (0 = all cores)");
    add_format(verify);

    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 1, out.str(), err.str()};
    }

    try {
        if (mn->parsed()) return cmd_mn(n, alpha, method, check, settings);
        if (strips->parsed()) return cmd_strips(alpha, n, only_p, settings);
        if (convert->parsed()) return cmd_convert(in_path, to_basis_name, settings);
        if (mul_cmd->parsed()) return cmd_mul(left_path, right_path, out_basis, settings);
        if (srct->parsed()) return cmd_srct(alpha, count_only, descents, settings);
        if (verify->parsed()) return cmd_verify(vopts, settings);
    } catch (const ConsistencyError& e) {
        return {2, "", std::string("internal consistency failure: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {1, "", std::string("error: ") + e.what() + "\n"};
    }
    return {1, "", "error: no subcommand\n"};
}

}  // namespace nsymkit
