#include "fibdisp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibdisp/dispersion.hpp"
#include "fibdisp/numeric.hpp"
#include "fibdisp/point_io.hpp"
#include "fibdisp/point_set.hpp"
#include "fibdisp/search.hpp"
#include "fibdisp/splitting.hpp"
#include "fibdisp/verify.hpp"

namespace fibdisp::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format;
    std::string out_path;

    std::string gen_kind;
    int m = 0;
    std::int64_t n = 0;
    std::vector<std::int64_t> gens;
    std::string xi = "0";
    std::string eta = "0";

    bool nonperiodic = false;
    bool drop_origin = false;
    bool generic = false;
    std::vector<std::int64_t> lattice;
    std::string in_path;
    int fib_m = 0;

    std::int64_t q = -1;
    std::int64_t ell_max = 0;

    int dim = 2;
    std::string n_range;
    int jobs = 1;
    bool hits_only = false;

    std::string profile;
};

void write_points_csv(std::ostream& os, const GridPointSet& p) {
    for (int a = 0; a < p.dim(); ++a) os << (a ? "," : "") << "x" << a + 1;
    os << '\n';
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (int a = 0; a < p.dim(); ++a) os << (a ? "," : "") << p.coordinate(i, a);
        os << '\n';
    }
}

json points_json(const GridPointSet& p) {
    json pts = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        json row = json::array();
        for (int a = 0; a < p.dim(); ++a) row.push_back(p.coordinate(i, a).str());
        pts.push_back(row);
    }
    return {{"dim", p.dim()}, {"den", p.den()}, {"points", pts}};
}

int cmd_gen(const Options& o, std::ostream& out) {
    GridPointSet p = [&] {
        if (o.gen_kind == "fib") return gen_fibonacci_lattice(o.m);
        if (o.gen_kind == "lattice") return gen_integration_lattice({o.n, o.gens});
        if (o.gen_kind == "distorted") return gen_distorted_fibonacci({o.m, Rational::parse(o.xi), Rational::parse(o.eta)});
        throw UsageError("gen needs one of: fib, lattice, distorted");
    }();
    if (o.format == "csv") {
        write_points_csv(out, p);
    } else if (o.format == "json") {
        out << points_json(p).dump(2) << '\n';
    } else {
        write_points(out, p);
    }
    return kOk;
}

int cmd_disp(const Options& o, std::ostream& out, std::ostream& err) {
    const int sources = !o.lattice.empty() + !o.in_path.empty() + (o.fib_m != 0);
    if (sources != 1) throw UsageError("disp needs exactly one of --lattice, --in, --fib");

    std::optional<LatticeSpec> spec;
    GridPointSet p = [&] {
        if (!o.lattice.empty()) {
            if (o.lattice.size() < 2 || o.lattice.size() > 3) throw UsageError("--lattice takes n,q or n,q1,q2");
            spec = LatticeSpec{o.lattice[0], {o.lattice.begin() + 1, o.lattice.end()}};
            return gen_integration_lattice(*spec);
        }
        if (o.fib_m != 0) {
            auto lat = gen_fibonacci_lattice(o.fib_m);
            spec = LatticeSpec{fib(o.fib_m), {fib(o.fib_m - 2)}};
            return lat;
        }
        return load(o.in_path);
    }();

    if (o.drop_origin) {
        const std::vector<std::int64_t> origin(static_cast<std::size_t>(p.dim()), 0);
        if (p.contains(origin)) {
            p = p.without_point(origin);
            spec.reset();
        }
    }

    DispersionResult r;
    if (o.nonperiodic) {
        if (p.dim() != 2) throw UsageError("nonperiodic dispersion is only available in dimension 2");
        r = nonperiodic_dispersion_2d(p);
    } else if (spec && !o.generic && spec->generators.size() == 1) {
        r = lattice_dispersion_2d(spec->n, spec->generators[0]);
    } else if (spec && !o.generic && spec->generators.size() == 2) {
        r = lattice_dispersion_3d(spec->n, spec->generators[0], spec->generators[1]);
    } else {
        r = p.dim() == 2 ? periodic_dispersion_2d(p) : periodic_dispersion_nd(p);
    }

    if (!box_is_empty(p, r.witness) || r.witness.area() != r.value) {
        err << "internal error: witness box does not certify the value\n";
        return kVerificationFailed;
    }

    if (o.format == "json") {
        out << json::parse(to_json(r)).dump(2) << '\n';
        return kOk;
    }
    out << "value,algorithm";
    for (std::size_t a = 0; a < r.witness.axes.size(); ++a) out << ",lo" << a + 1 << ",len" << a + 1;
    out << '\n' << r.value << ',' << to_string(r.algorithm);
    for (const auto& ax : r.witness.axes) out << ',' << ax.lo << ',' << ax.len;
    out << '\n';
    return kOk;
}

int cmd_splittings(const Options& o, std::ostream& out) {
    if (o.n < 2) throw UsageError("--n must be at least 2");
    if (o.q < 0 || o.q >= o.n) throw UsageError("--q must lie in 0..n-1");
    const std::int64_t ell_max = o.ell_max > 0 ? std::min(o.ell_max, o.n) : o.n;
    const auto rows = splitting_table(o.n, o.q, ell_max);

    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json split = json::array();
            for (const auto& e : r.split.entries()) split.push_back({{"d", e.distance}, {"a", e.multiplicity}});
            json row{{"ell", r.ell}, {"splitting", split}};
            row["new_value"] = r.new_value ? json(*r.new_value) : json(nullptr);
            row["split_gap_len"] = r.split_gap_len ? json(*r.split_gap_len) : json(nullptr);
            arr.push_back(row);
        }
        out << arr.dump(2) << '\n';
        return kOk;
    }
    out << "ell,d1,a1,d2,a2,d3,a3,new_value,split_gap_len\n";
    for (const auto& r : rows) {
        out << r.ell;
        const auto& e = r.split.entries();
        for (std::size_t i = 0; i < 3; ++i) {
            if (i < e.size()) {
                out << ',' << e[i].distance << ',' << e[i].multiplicity;
            } else {
                out << ",,";
            }
        }
        out << ',' << (r.new_value ? std::to_string(*r.new_value) : "");
        out << ',' << (r.split_gap_len ? std::to_string(*r.split_gap_len) : "") << '\n';
    }
    return kOk;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const auto v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {v, v};
        }
        const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        const auto lo = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        const auto hi = std::stoll(b, &used);
        if (used != b.size()) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("--n-range expects A..B, got '" + s + "'");
    }
}

int cmd_search(const Options& o, std::ostream& out) {
    if (o.dim != 2 && o.dim != 3) throw UsageError("--dim must be 2 or 3");
    const auto [lo, hi] = parse_range(o.n_range);
    if (lo < 2 || hi < lo) throw UsageError("--n-range must satisfy 2 <= A <= B");

    std::vector<SearchReport> reports;
    if (o.dim == 2) {
        reports = search_range_2d(lo, hi, o.jobs);
    } else {
        for (std::int64_t n = lo; n <= hi; ++n) reports.push_back(search_optimal_3d(n, o.jobs));
    }

    bool ok = true;
    for (const auto& rep : reports) {
        ok = ok && rep.revalidation_ok;
        for (const auto& h : rep.hits) ok = ok && h.cls != LatticeClass::Unclassified;
    }

    if (o.format == "json") {
        json arr = json::array();
        for (const auto& rep : reports) {
            json rows = json::array();
            for (const auto& r : o.hits_only ? rep.hits : rep.rows) {
                rows.push_back({{"generators", r.generators},
                                {"dispersion", r.dispersion.str()},
                                {"optimal", r.optimal},
                                {"class", to_string(r.cls)}});
            }
            arr.push_back({{"n", rep.n},
                           {"dim", rep.dim},
                           {"candidates_examined", rep.candidates_examined},
                           {"hits", rep.hits.size()},
                           {"rows", rows}});
        }
        out << arr.dump(2) << '\n';
    } else {
        out << (o.dim == 2 ? "n,q1" : "n,q1,q2") << ",disp_num,disp_den,optimal,class\n";
        for (const auto& rep : reports) {
            for (const auto& r : o.hits_only ? rep.hits : rep.rows) {
                out << rep.n;
                for (auto g : r.generators) out << ',' << g;
                out << ',' << r.dispersion.num() << ',' << r.dispersion.den() << ',' << (r.optimal ? 1 : 0) << ','
                    << to_string(r.cls) << '\n';
            }
        }
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto profile = parse_profile(o.profile);
    if (!profile) throw UsageError("--profile must be quick or full");
    const auto results = verify_theorems(*profile, o.jobs);
    out << (o.format == "json" ? report_json(results) : report_text(results));
    return all_passed(results) ? kOk : kVerificationFailed;
}

int cmd_table(const Options& o, std::ostream& out) {
    struct Row {
        const char* quantity;
        const char* lower;
        const char* upper;
        const char* note;
    };
    static const Row rows[] = {
        {"a(2)", "2", "2", "liminf n disp(n,2)"},
        {"b(2)", "2", "(3+sqrt(5))/2 = 2.6180339...", "limsup n disp(n,2)"},
        {"a*(2)", "5/4", "2", "nonperiodic liminf"},
        {"b*(2)", "5/4", "(3+sqrt(5))/2 = 2.6180339...", "nonperiodic limsup"},
        {"disp*(P_n)", "5/(4(n+5))", "", "every n-point set in the unit square"},
        {"a(d)", "d", "2^(7d)", "general d"},
        {"b(d)", "d", "2^(7d+1)", "general d"},
        {"a*(d)", "log2(d)/4", "2^(7d)", "general d"},
        {"b*(d)", "log2(d)/4", "2^(7d+1)", "general d"},
    };
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"quantity", r.quantity}, {"lower", r.lower}, {"upper", r.upper}, {"note", r.note}});
        }
        out << arr.dump(2) << '\n';
        return kOk;
    }
    out << "quantity,lower,upper,note\n";
    for (const auto& r : rows) out << r.quantity << ',' << r.lower << ',' << r.upper << ',' << r.note << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact dispersion of lattice point sets on the torus", "fibdisp"};
    app.set_config("--config", "", "key=value file with default option values; flags win");
    app.require_subcommand(1);
    Options o;

    const auto data_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", o.format, "output format (default " + allowed.front() + ")")
            ->check(CLI::IsMember(allowed));
        sub->add_option("--out", o.out_path, "write results to FILE");
    };

    auto* gen = app.add_subcommand("gen", "generate a point set");
    gen->require_subcommand(1);
    auto* gen_fib = gen->add_subcommand("fib", "Fibonacci lattice with F(m) points");
    gen_fib->add_option("--m", o.m, "Fibonacci index")->required();
    auto* gen_lat = gen->add_subcommand("lattice", "integration lattice {(k, k q) / n}");
    gen_lat->add_option("--n", o.n, "number of points")->required();
    gen_lat->add_option("--q", o.gens, "generator(s), comma separated")->required()->delimiter(',');
    auto* gen_dist = gen->add_subcommand("distorted", "Fibonacci lattice with odd points shifted");
    gen_dist->add_option("--m", o.m, "Fibonacci index")->required();
    gen_dist->add_option("--xi", o.xi, "x shift (rational)");
    gen_dist->add_option("--eta", o.eta, "y shift (rational)");
    for (auto* s : {gen_fib, gen_lat, gen_dist}) data_format(s, {"points", "csv", "json"});

    auto* disp = app.add_subcommand("disp", "exact dispersion with a witness box");
    auto* per = disp->add_flag("--periodic", "boxes on the torus (default)");
    disp->add_flag("--nonperiodic", o.nonperiodic, "boxes inside the unit square")->excludes(per);
    disp->add_flag("--drop-origin", o.drop_origin, "remove the point at the origin first");
    disp->add_flag("--generic", o.generic, "skip the lattice fast paths");
    disp->add_option("--lattice", o.lattice, "n,q or n,q1,q2")->delimiter(',');
    disp->add_option("--in", o.in_path, "point file");
    disp->add_option("--fib", o.fib_m, "Fibonacci lattice index m");
    data_format(disp, {"csv", "json"});

    auto* split = app.add_subcommand("splittings", "gap splittings of k q mod n");
    split->add_option("--n", o.n, "modulus")->required();
    split->add_option("--q", o.q, "generator")->required();
    split->add_option("--ell-max", o.ell_max, "last ell (default n)");
    data_format(split, {"csv", "json"});

    auto* search = app.add_subcommand("search", "exhaustive search for lattices of dispersion d/n");
    search->add_option("--dim", o.dim, "2 or 3");
    search->add_option("--n-range", o.n_range, "A..B")->required();
    search->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    search->add_flag("--hits-only", o.hits_only, "only rows with dispersion d/n");
    data_format(search, {"csv", "json"});

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--profile", o.profile, "quick or full")->required();
    verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    data_format(verify, {"text", "json"});

    auto* table = app.add_subcommand("table", "published bounds for n disp(n, d) (report only)");
    data_format(table, {"csv", "json"});

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::FileError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    if (o.format.empty()) o.format = gen->parsed() ? "points" : verify->parsed() ? "text" : "csv";

    std::ostringstream buf;
    int code = kOk;
    try {
        if (gen->parsed()) {
            o.gen_kind = gen_fib->parsed() ? "fib" : gen_lat->parsed() ? "lattice" : "distorted";
            code = cmd_gen(o, buf);
        } else if (disp->parsed()) {
            code = cmd_disp(o, buf, err);
        } else if (split->parsed()) {
            code = cmd_splittings(o, buf);
        } else if (search->parsed()) {
            code = cmd_search(o, buf);
        } else if (verify->parsed()) {
            code = cmd_verify(o, buf);
        } else {
            code = cmd_table(o, buf);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kIo;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::overflow_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    if (o.out_path.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(o.out_path);
        if (!f || !(f << buf.str()) || !f.flush()) {
            err << "i/o error: cannot write " << o.out_path << '\n';
            return kIo;
        }
    }
    return code;
}

}  // namespace fibdisp::cli
