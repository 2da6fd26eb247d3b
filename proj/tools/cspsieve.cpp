// cspsieve: exact computations and cyclic-sieving verification for signed
// standard Young tableaux. Exit codes: 0 all checks passed, 1 at least one
// mismatch, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "csp/border_strip.hpp"
#include "csp/json_io.hpp"
#include "csp/qanalog.hpp"
#include "csp/sieve.hpp"

namespace {

using namespace csp;
using nlohmann::json;

struct Output {
    std::string format = "text";
    std::string out_path;

    std::vector<std::string> lines;   // text mode
    std::string csv_header;
    std::vector<std::string> csv_rows;
    json payload = json::array();     // json mode

    void text(const std::string& line) { lines.push_back(line); }
    void csv(const std::string& row) { csv_rows.push_back(row); }
    void add(const json& j) { payload.push_back(j); }

    std::string render() const {
        std::ostringstream os;
        if (format == "json") {
            if (payload.size() == 1)
                os << payload.front().dump(2) << '\n';
            else
                os << payload.dump(2) << '\n';
        } else if (format == "csv") {
            os << csv_header << '\n';
            for (const auto& row : csv_rows) os << row << '\n';
        } else {
            for (const auto& line : lines) os << line << '\n';
        }
        return os.str();
    }

    void emit() const {
        std::string body = render();
        if (out_path.empty()) {
            std::cout << body;
            return;
        }
        // atomic write: temporary file in place, then rename
        std::string tmp = out_path + ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
            f << body;
        }
        std::filesystem::rename(tmp, out_path);
    }
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string eval_str(const std::optional<BigInt>& v) {
    return v ? v->str() : std::string("non-integer");
}

void add_format_options(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out.out_path, "write the report to this file (atomic)");
}

// ---------------------------------------------------------------- reports

void render_csp_report(const CspReport& report, Output& out, bool with_rows = true) {
    out.csv_header = "theorem,shape,n,k,m,d,s,fix,eval,match";
    std::ostringstream head;
    head << report.theorem << " shape=" << report.shape << " n=" << report.n;
    if (report.k) head << " k=" << *report.k;
    if (report.m) head << " m=" << *report.m;
    out.text(head.str());
    out.text("polynomial: " + report.polynomial.to_string());
    for (const auto& row : report.rows) {
        if (with_rows) {
            std::ostringstream os;
            os << "  d=" << row.d << " s=" << row.s << " fix=" << row.fix
               << " eval=" << eval_str(row.evaluation) << ' '
               << (row.match ? "ok" : "MISMATCH");
            out.text(os.str());
        }
        std::ostringstream cs;
        cs << report.theorem << ',' << '"' << report.shape << '"' << ',' << report.n
           << ',' << (report.k ? std::to_string(*report.k) : "") << ','
           << (report.m ? std::to_string(*report.m) : "") << ',' << row.d << ','
           << row.s << ',' << row.fix << ',' << eval_str(row.evaluation) << ','
           << bool_str(row.match);
        out.csv(cs.str());
    }
    out.text(std::string("verdict: ") + (report.verdict ? "PASS" : "FAIL"));
    out.add(to_json(report));
}

void render_mn(const MnVerification& rec, Output& out) {
    out.csv_header = "theorem,shape,n,d,eval,sign,bst_count,match";
    std::ostringstream os;
    os << "mn-rule shape=" << rec.shape.to_string() << " n=" << rec.n << " d=" << rec.d
       << " eval=" << eval_str(rec.eval_integer) << " sign=" << rec.sign
       << " bst=" << rec.bst_count << ' ' << (rec.match ? "ok" : "MISMATCH");
    out.text(os.str());
    std::ostringstream cs;
    cs << "mn-rule," << '"' << rec.shape.to_string() << '"' << ',' << rec.n << ','
       << rec.d << ',' << eval_str(rec.eval_integer) << ',' << rec.sign << ','
       << rec.bst_count << ',' << bool_str(rec.match);
    out.csv(cs.str());
    out.add(to_json(rec));
}

void render_content_lemma(const ContentLemmaVerification& rec, Output& out) {
    out.csv_header = "theorem,shape,n,s,applicable,uniform,strips_distinct,match";
    std::ostringstream os;
    os << "content-lemma shape=" << rec.shape.to_string() << " n=" << rec.n
       << " s=" << rec.s << " applicable=" << bool_str(rec.applicable);
    if (rec.applicable)
        os << " uniform=" << bool_str(rec.uniform)
           << " strips_distinct=" << bool_str(rec.strips_distinct);
    os << ' ' << (rec.match ? "ok" : "MISMATCH");
    out.text(os.str());
    std::ostringstream cs;
    cs << "content-lemma," << '"' << rec.shape.to_string() << '"' << ',' << rec.n << ','
       << rec.s << ',' << bool_str(rec.applicable) << ',' << bool_str(rec.uniform) << ','
       << bool_str(rec.strips_distinct) << ',' << bool_str(rec.match);
    out.csv(cs.str());
    out.add(to_json(rec));
}

void render_theorem_b(const TheoremBVerification& rec, Output& out) {
    out.csv_header =
        "theorem,shape,n,m,k,condition_holds,realizable,certificates_match,"
        "theorem_confirmed";
    std::ostringstream os;
    os << "theorem-b shape=" << rec.shape.to_string() << " n=" << rec.n
       << " m=" << rec.m << " k=" << rec.k;
    out.text(os.str());
    for (const auto& row : rec.condition_rows)
        out.text("  d=" + std::to_string(row.d) + " eval^m=" + eval_str(row.value));
    out.text(std::string("condition: ") + (rec.condition_holds ? "holds" : "FAILED"));
    if (rec.profile) {
        std::ostringstream ps;
        ps << "orbit profile:";
        for (const auto& [size, count] : rec.profile->orbit_counts)
            ps << ' ' << size << ':' << count.str();
        out.text(ps.str());
    } else {
        out.text("orbit profile: none");
    }
    out.text(std::string("realizable: ") + bool_str(rec.realizable));
    out.text(std::string("verdict: ") + (rec.theorem_confirmed ? "PASS" : "FAIL"));
    std::ostringstream cs;
    cs << "theorem-b," << '"' << rec.shape.to_string() << '"' << ',' << rec.n << ','
       << rec.m << ',' << rec.k << ',' << bool_str(rec.condition_holds) << ','
       << bool_str(rec.realizable) << ',' << bool_str(rec.certificates_match) << ','
       << bool_str(rec.theorem_confirmed);
    out.csv(cs.str());
    out.add(to_json(rec));
}

// ------------------------------------------------------------- subcommands

int run_count(const std::string& shape_text, Output& out) {
    Partition shape = Partition::parse(shape_text);
    BigInt hook = syt_count_hook(shape);
    out.csv_header = "shape,n,hook_count,enumerated_count";
    out.text("shape: " + shape.to_string());
    out.text("n: " + std::to_string(shape.size()));
    out.text("hook count: " + hook.str());
    json j{{"shape", shape.to_string()},
           {"n", shape.size()},
           {"hook_count", to_json(hook)},
           {"enumerated_count", nullptr}};
    std::string enum_csv;
    if (shape.size() <= 12) {
        size_t count = enumerate_syt(shape).size();
        out.text("enumerated count: " + std::to_string(count));
        j["enumerated_count"] = count;
        enum_csv = std::to_string(count);
    }
    out.csv('"' + shape.to_string() + "\"," + std::to_string(shape.size()) + ',' +
            hook.str() + ',' + enum_csv);
    out.add(j);
    return 0;
}

int run_gf(const std::string& shape_text, Output& out) {
    Partition shape = Partition::parse(shape_text);
    LaurentPolynomial gf = maj_gf_hook(shape);
    out.csv_header = "shape,polynomial";
    out.text(gf.to_string());
    out.csv('"' + shape.to_string() + "\",\"" + gf.to_string() + '"');
    out.add(to_json(gf));
    return 0;
}

int run_super_gf(const std::string& shape_text, int k, Output& out) {
    Partition shape = Partition::parse(shape_text);
    SuperGF gf(shape);
    out.csv_header = "shape,k,polynomial";
    if (k >= 0) {
        out.text(gf.grade(k).to_string());
        out.csv('"' + shape.to_string() + "\"," + std::to_string(k) + ",\"" +
                gf.grade(k).to_string() + '"');
        out.add(to_json(gf.grade(k)));
        return 0;
    }
    for (int g = 0; g <= gf.max_grade(); ++g) {
        out.text("k=" + std::to_string(g) + ": " + gf.grade(g).to_string());
        out.csv('"' + shape.to_string() + "\"," + std::to_string(g) + ",\"" +
                gf.grade(g).to_string() + '"');
    }
    out.add(to_json(gf));
    return 0;
}

StandardTableau parse_tableau(const std::string& text) {
    std::vector<int> entries;
    std::vector<int> parts;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, '/')) {
        std::stringstream cells(row);
        int v = 0, count = 0;
        while (cells >> v) {
            entries.push_back(v);
            ++count;
        }
        if (count == 0) throw std::invalid_argument("empty tableau row in '" + text + "'");
        parts.push_back(count);
    }
    if (parts.empty()) throw std::invalid_argument("empty tableau string");
    return StandardTableau(Partition(std::move(parts)), std::move(entries));
}

int run_promote(const std::string& shape_text, const std::string& tableau_text,
                Output& out) {
    Partition shape = Partition::parse(shape_text);
    StandardTableau start = tableau_text.empty()
        ? enumerate_syt(shape).front()
        : parse_tableau(tableau_text);
    if (!(start.shape() == shape))
        throw std::invalid_argument("tableau shape " + start.shape().to_string() +
                                    " does not match " + shape.to_string());
    out.csv_header = "step,entries";
    json orbit = json::array();
    StandardTableau current = start;
    long long step = 0;
    for (;;) {
        out.text("step " + std::to_string(step) + ":");
        out.text(current.to_string());
        std::ostringstream flat;
        for (size_t i = 0; i < current.entries().size(); ++i) {
            if (i) flat << ' ';
            flat << current.entries()[i];
        }
        out.csv(std::to_string(step) + ",\"" + flat.str() + '"');
        orbit.push_back(to_json(current));
        current = promotion(current);
        ++step;
        if (current == start) break;
        out.text("");
    }
    out.text("period: " + std::to_string(step));
    out.add(json{{"shape", shape.to_string()}, {"orbit", orbit}, {"period", step}});
    return 0;
}

int run_bst(const std::string& shape_text, int strip_size, bool list, Output& out) {
    Partition shape = Partition::parse(shape_text);
    if (strip_size < 1) throw std::invalid_argument("--strip-size must be positive");
    auto tilings = enumerate_bst(shape, strip_size);
    out.csv_header = "shape,strip_size,count";
    out.text("count: " + std::to_string(tilings.size()));
    out.csv('"' + shape.to_string() + "\"," + std::to_string(strip_size) + ',' +
            std::to_string(tilings.size()));
    json j{{"shape", shape.to_string()},
           {"strip_size", strip_size},
           {"count", tilings.size()}};
    if (list) {
        json arr = json::array();
        for (const auto& t : tilings) {
            out.text("");
            out.text(t.to_string());
            arr.push_back(to_json(t));
        }
        j["tableaux"] = std::move(arr);
    }
    out.add(j);
    return 0;
}

std::vector<Partition> rectangles_up_to(int max_n) {
    std::vector<Partition> out;
    for (int n = 1; n <= max_n; ++n)
        for (int a = 1; a <= n; ++a)
            if (n % a == 0) out.push_back(Partition(std::vector<int>(a, n / a)));
    return out;
}

int run_rect_family(bool trivial, const std::string& shape_text, int k, int max_n,
                    bool perturb, Output& out) {
    std::vector<Partition> shapes;
    if (!shape_text.empty())
        shapes.push_back(Partition::parse(shape_text));
    else if (max_n > 0)
        shapes = rectangles_up_to(max_n);
    else
        throw std::invalid_argument("need a shape or --max-n");
    bool all_ok = true;
    for (const auto& shape : shapes) {
        if (!shape.rectangle())
            throw std::invalid_argument("shape " + shape.to_string() +
                                        " is not rectangular");
        RectangleSieve sieve(shape);
        std::vector<int> ks;
        if (k >= 0)
            ks.push_back(k);
        else
            for (int kk = 0; kk <= shape.size(); ++kk) ks.push_back(kk);
        for (int kk : ks) {
            CspReport report = trivial ? sieve.trivial_csp(kk) : sieve.theorem_a(kk);
            if (perturb) {
                LaurentPolynomial bad = report.polynomial +
                    LaurentPolynomial::monomial(1, report.polynomial.min_exponent());
                report = verify_csp_triple(
                    product_action(CyclicAction(shape.size(),
                                                promotion_permutation(enumerate_syt(shape))),
                                   subset_cyc_action(shape.size(), kk)),
                    bad);
                report.theorem = trivial ? "trivial-csp" : "theorem-a";
                report.shape = shape.to_string();
                report.k = kk;
            }
            all_ok = all_ok && report.verdict;
            render_csp_report(report, out, shapes.size() == 1);
        }
    }
    return all_ok ? 0 : 1;
}

int run_product_formula(const std::string& shape_text, int max_n, Output& out) {
    std::vector<Partition> shapes;
    if (!shape_text.empty())
        shapes.push_back(Partition::parse(shape_text));
    else if (max_n > 0)
        for (int n = 1; n <= max_n; ++n)
            for (const auto& p : partitions_of(n)) shapes.push_back(p);
    else
        throw std::invalid_argument("need a shape or --max-n");
    out.csv_header = "theorem,shape,n,k,match";
    bool all_ok = true;
    for (const auto& shape : shapes) {
        SuperGF product(shape);
        for (int k = 0; k <= shape.size(); ++k) {
            bool match = super_gf_bruteforce(shape, k) == product.grade(k);
            all_ok = all_ok && match;
            out.text("product-formula shape=" + shape.to_string() +
                     " k=" + std::to_string(k) + ' ' + (match ? "ok" : "MISMATCH"));
            out.csv("product-formula,\"" + shape.to_string() + "\"," +
                    std::to_string(shape.size()) + ',' + std::to_string(k) + ',' +
                    bool_str(match));
            out.add(json{{"theorem", "product-formula"},
                         {"shape", shape.to_string()},
                         {"n", shape.size()},
                         {"k", k},
                         {"match", match}});
        }
    }
    out.text(std::string("verdict: ") + (all_ok ? "PASS" : "FAIL"));
    return all_ok ? 0 : 1;
}

int run_content_lemma(const std::string& shape_text, int max_n, Output& out) {
    std::vector<Partition> shapes;
    if (!shape_text.empty())
        shapes.push_back(Partition::parse(shape_text));
    else if (max_n > 0)
        for (int n = 1; n <= max_n; ++n)
            for (const auto& p : partitions_of(n)) shapes.push_back(p);
    else
        throw std::invalid_argument("need a shape or --max-n");
    bool all_ok = true;
    for (const auto& shape : shapes) {
        for (long long s : divisors(shape.size())) {
            auto rec = verify_content_lemma(shape, static_cast<int>(s));
            all_ok = all_ok && rec.match;
            render_content_lemma(rec, out);
        }
    }
    out.text(std::string("verdict: ") + (all_ok ? "PASS" : "FAIL"));
    return all_ok ? 0 : 1;
}

int run_mn(const std::string& shape_text, int d, int max_n, Output& out) {
    std::vector<Partition> shapes;
    if (!shape_text.empty())
        shapes.push_back(Partition::parse(shape_text));
    else if (max_n > 0)
        for (int n = 1; n <= max_n; ++n)
            for (const auto& p : partitions_of(n)) shapes.push_back(p);
    else
        throw std::invalid_argument("need a shape or --max-n");
    bool all_ok = true;
    for (const auto& shape : shapes) {
        std::vector<long long> ds;
        if (d > 0)
            ds.push_back(d);
        else
            ds = divisors(shape.size());
        for (long long dd : ds) {
            auto rec = verify_mn(shape, shape.size(), dd);
            all_ok = all_ok && rec.match;
            render_mn(rec, out);
        }
    }
    out.text(std::string("verdict: ") + (all_ok ? "PASS" : "FAIL"));
    return all_ok ? 0 : 1;
}

int run_theorem_b(const std::string& shape_text, int m, int k, int max_n, Output& out) {
    std::vector<Partition> shapes;
    if (!shape_text.empty())
        shapes.push_back(Partition::parse(shape_text));
    else if (max_n > 0)
        for (int n = 1; n <= max_n; ++n)
            for (const auto& p : partitions_of(n)) shapes.push_back(p);
    else
        throw std::invalid_argument("need a shape or --max-n");
    bool all_ok = true;
    for (const auto& shape : shapes) {
        std::vector<int> ks;
        if (k >= 0)
            ks.push_back(k);
        else
            for (int kk = 0; kk <= shape.size(); ++kk) ks.push_back(kk);
        for (int kk : ks) {
            auto rec = verify_theorem_b(shape, m, kk);
            all_ok = all_ok && rec.theorem_confirmed;
            render_theorem_b(rec, out);
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations and cyclic-sieving verification for signed "
                 "standard Young tableaux"};
    app.require_subcommand(1);
    Output out;

    std::string shape_text;
    std::string tableau_text;
    int k = -1, m = 1, d = -1, strip_size = 1, max_n = -1;
    bool list = false, perturb = false;

    auto* count = app.add_subcommand("count", "standard tableau counts for a shape");
    count->add_option("shape", shape_text, "shape string, e.g. 3,3 or 2x3")->required();
    add_format_options(count, out);

    auto* gf = app.add_subcommand("gf", "major index generating function");
    gf->add_option("shape", shape_text)->required();
    add_format_options(gf, out);

    auto* sgf = app.add_subcommand("super-gf",
                                   "super major index generating function grades");
    sgf->add_option("shape", shape_text)->required();
    sgf->add_option("--k", k, "single grade (number of negative entries)");
    add_format_options(sgf, out);

    auto* promote = app.add_subcommand("promote", "promotion orbit of a tableau");
    promote->add_option("shape", shape_text)->required();
    promote->add_option("--tableau", tableau_text,
                        "rows separated by '/', entries by spaces; defaults to the "
                        "first tableau in enumeration order");
    add_format_options(promote, out);

    auto* bst = app.add_subcommand("bst", "border strip tableaux of a shape");
    bst->add_option("shape", shape_text)->required();
    bst->add_option("--strip-size", strip_size, "size of every strip")->required();
    bst->add_flag("--list", list, "print the tilings");
    add_format_options(bst, out);

    auto* verify = app.add_subcommand("verify", "verification sweeps");
    verify->require_subcommand(1);

    auto* rect = verify->add_subcommand(
        "rect-csp", "sieving for signed rectangular tableaux under promotion + shift");
    rect->add_option("shape", shape_text);
    rect->add_option("--k", k, "number of negative entries (default: all)");
    rect->add_option("--max-n", max_n, "sweep all rectangles with at most this size");
    rect->add_flag("--perturb", perturb)->group("");  // hidden negative control
    add_format_options(rect, out);

    auto* trivial = verify->add_subcommand(
        "trivial-csp", "product-triple sieving with the untwisted polynomial");
    trivial->add_option("shape", shape_text);
    trivial->add_option("--k", k, "number of negative entries (default: all)");
    trivial->add_option("--max-n", max_n, "sweep all rectangles with at most this size");
    add_format_options(trivial, out);

    auto* product = verify->add_subcommand(
        "product-formula", "brute-force super gf against the content product formula");
    product->add_option("shape", shape_text);
    product->add_option("--max-n", max_n, "sweep all partitions of at most this size");
    add_format_options(product, out);

    auto* content = verify->add_subcommand(
        "content-lemma", "content residue distribution over strip tilings");
    content->add_option("shape", shape_text);
    content->add_option("--max-n", max_n, "sweep all partitions of at most this size");
    add_format_options(content, out);

    auto* mn = verify->add_subcommand(
        "mn", "root-of-unity evaluations against signed strip tiling counts");
    mn->add_option("shape", shape_text);
    mn->add_option("--d", d, "single divisor of n (default: all)");
    mn->add_option("--max-n", max_n, "sweep all partitions of at most this size");
    add_format_options(mn, out);

    auto* theob = verify->add_subcommand(
        "theorem-b", "evaluation condition against orbit realizability");
    theob->add_option("shape", shape_text);
    theob->add_option("--m", m, "number of Cartesian factors")->required();
    theob->add_option("--k", k, "number of negative entries (default: all)");
    theob->add_option("--max-n", max_n, "sweep all partitions of at most this size");
    add_format_options(theob, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        int status = 2;
        if (*count) status = run_count(shape_text, out);
        else if (*gf) status = run_gf(shape_text, out);
        else if (*sgf) status = run_super_gf(shape_text, k, out);
        else if (*promote) status = run_promote(shape_text, tableau_text, out);
        else if (*bst) status = run_bst(shape_text, strip_size, list, out);
        else if (*verify) {
            if (*rect) status = run_rect_family(false, shape_text, k, max_n, perturb, out);
            else if (*trivial) status = run_rect_family(true, shape_text, k, max_n, false, out);
            else if (*product) status = run_product_formula(shape_text, max_n, out);
            else if (*content) status = run_content_lemma(shape_text, max_n, out);
            else if (*mn) status = run_mn(shape_text, d, max_n, out);
            else if (*theob) status = run_theorem_b(shape_text, m, k, max_n, out);
        }
        out.emit();
        return status;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
