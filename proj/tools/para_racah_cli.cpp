// Command-line front end for the para-Racah library. Talks to the shared
// library exclusively through the C API in para_racah.h and renders tables
// as CSV or JSON. Exact values pass through untouched as "p/q" strings.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "para_racah/para_racah.h"

using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParams = 3;
constexpr int kExitCheckFailed = 4;
constexpr int kExitInternal = 1;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CliError{code, message}; }

[[noreturn]] void fail_status(pr_status status) {
    std::string message = std::string(pr_status_name(status)) + ": " + pr_last_error();
    switch (status) {
        case PR_ERR_REGIME:
        case PR_ERR_DEGENERATE:
            fail(kExitParams, message);
        case PR_ERR_PARSE:
        case PR_ERR_INDEX:
            fail(kExitUsage, message);
        default:
            fail(kExitInternal, message);
    }
}

void check(pr_status status) {
    if (status != PR_OK) fail_status(status);
}

// Owned string coming back from the C API.
struct ApiString {
    char* ptr = nullptr;
    ~ApiString() { pr_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct FamilyHandle {
    pr_family* f = nullptr;
    ~FamilyHandle() { pr_family_destroy(f); }
};

struct CertifyHandle {
    pr_certify* c = nullptr;
    ~CertifyHandle() { pr_certify_destroy(c); }
};

struct PkStudyHandle {
    pr_pk_study* s = nullptr;
    ~PkStudyHandle() { pr_pk_study_destroy(s); }
};

struct DualHahnHandle {
    pr_dual_hahn* d = nullptr;
    ~DualHahnHandle() { pr_dual_hahn_destroy(d); }
};

struct Options {
    long n = 0;
    std::string a, c;
    std::string alpha = "1/2";
    std::string delta;
    long theta_max = 4096;
    std::string format = "csv";
    std::string out_path;
    std::string config_path;
    int precision = 17;
    // Optional coefficient table from the config document (certify only).
    std::optional<std::vector<std::string>> table_b;
    std::optional<std::vector<std::string>> table_u;
};

std::string json_rational(const json& v, const std::string& key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    fail(kExitUsage, "config key \"" + key + "\" must be an exact rational string or integer");
}

void load_config(Options& opt, const CLI::App& cmd) {
    std::ifstream in(opt.config_path);
    if (!in) fail(kExitUsage, "cannot open config file " + opt.config_path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        fail(kExitUsage, std::string("config parse error: ") + e.what());
    }
    // Command-line flags win over config values.
    if (doc.contains("N") && cmd.count("--N") == 0) {
        if (!doc["N"].is_number_integer()) fail(kExitUsage, "config key \"N\" must be an integer");
        opt.n = doc["N"].get<long>();
    }
    if (doc.contains("a") && cmd.count("--a") == 0) opt.a = json_rational(doc["a"], "a");
    if (doc.contains("c") && cmd.count("--c") == 0) opt.c = json_rational(doc["c"], "c");
    if (doc.contains("alpha") && cmd.count("--alpha") == 0) {
        opt.alpha = json_rational(doc["alpha"], "alpha");
    }
    if (doc.contains("delta") && cmd.count("--delta") == 0) {
        opt.delta = json_rational(doc["delta"], "delta");
    }
    if (doc.contains("table")) {
        const json& t = doc["table"];
        if (!t.is_object() || !t.contains("b") || !t.contains("u")) {
            fail(kExitUsage, "config key \"table\" must hold arrays \"b\" and \"u\"");
        }
        std::vector<std::string> b, u;
        for (const auto& v : t["b"]) b.push_back(json_rational(v, "table.b"));
        for (const auto& v : t["u"]) u.push_back(json_rational(v, "table.u"));
        opt.table_b = std::move(b);
        opt.table_u = std::move(u);
    }
}

FamilyHandle open_family(const Options& opt) {
    if (opt.a.empty() || opt.c.empty()) {
        fail(kExitUsage, "parameters a and c are required (flags or --config)");
    }
    FamilyHandle h;
    pr_status rc = pr_family_create(opt.n, opt.a.c_str(), opt.c.c_str(), opt.alpha.c_str(), &h.f);
    if (rc != PR_OK) fail_status(rc);
    return h;
}

std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

// One emitted table: column names plus rows of (string | double | null) cells.
struct Cell {
    enum class Kind { text, number, empty } kind = Kind::empty;
    std::string text;
    double number = 0;

    static Cell str(std::string s) { return {Kind::text, std::move(s), 0}; }
    static Cell num(double v) { return {Kind::number, {}, v}; }
    static Cell none() { return {}; }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

void emit(const Table& table, const json& meta, const Options& opt) {
    std::ostringstream body;
    if (opt.format == "csv") {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            body << (i ? "," : "") << table.columns[i];
        }
        body << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) body << ",";
                switch (row[i].kind) {
                    case Cell::Kind::text: body << row[i].text; break;
                    case Cell::Kind::number: body << format_double(row[i].number, opt.precision); break;
                    case Cell::Kind::empty: break;
                }
            }
            body << "\n";
        }
    } else {
        json doc = meta;
        json rows = json::array();
        for (const auto& row : table.rows) {
            json r = json::object();
            for (std::size_t i = 0; i < row.size(); ++i) {
                switch (row[i].kind) {
                    case Cell::Kind::text: r[table.columns[i]] = row[i].text; break;
                    case Cell::Kind::number: r[table.columns[i]] = row[i].number; break;
                    case Cell::Kind::empty: r[table.columns[i]] = nullptr; break;
                }
            }
            rows.push_back(std::move(r));
        }
        doc["rows"] = std::move(rows);
        body << doc.dump(2) << "\n";
    }
    if (opt.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(opt.out_path);
        if (!out) fail(kExitUsage, "cannot write to " + opt.out_path);
        out << body.str();
    }
}

json family_meta(const Options& opt, const char* command, pr_family* f) {
    return json{{"command", command}, {"N", opt.n},       {"a", opt.a},
                {"c", opt.c},         {"alpha", opt.alpha}, {"regime", pr_family_regime(f)}};
}

// ---- commands ----

void cmd_coeffs(const Options& opt) {
    FamilyHandle h = open_family(opt);
    Table t;
    t.columns = {"n", "b", "u"};
    for (long n = 0; n <= opt.n; ++n) {
        ApiString b;
        check(pr_family_coeff_b(h.f, n, &b.ptr));
        if (n == 0) {
            t.add_row({Cell::str(std::to_string(n)), Cell::str(b.str()), Cell::none()});
        } else {
            ApiString u;
            check(pr_family_coeff_u(h.f, n, &u.ptr));
            t.add_row({Cell::str(std::to_string(n)), Cell::str(b.str()), Cell::str(u.str())});
        }
    }
    emit(t, family_meta(opt, "coeffs", h.f), opt);
}

std::string node_label(pr_family_label label, long s) {
    return (label == PR_FAMILY_A ? "A" : "C") + std::to_string(s);
}

void cmd_grid(const Options& opt) {
    FamilyHandle h = open_family(opt);
    Table t;
    t.columns = {"label", "lambda"};
    for (long s = 0; s <= opt.n; ++s) {
        pr_family_label label;
        long sub = 0;
        ApiString lambda;
        check(pr_family_node(h.f, s, &label, &sub, &lambda.ptr));
        t.add_row({Cell::str(node_label(label, sub)), Cell::str(lambda.str())});
    }
    emit(t, family_meta(opt, "grid", h.f), opt);
}

void cmd_weights(const Options& opt) {
    FamilyHandle h = open_family(opt);
    const bool degenerate = pr_family_alpha_degenerate(h.f) != 0;
    Table t;
    t.columns = {"label", "lambda", "w_closed", "w_spectral"};
    for (long s = 0; s <= opt.n; ++s) {
        pr_family_label label;
        long sub = 0;
        ApiString lambda, closed;
        check(pr_family_node(h.f, s, &label, &sub, &lambda.ptr));
        check(pr_family_weight_closed(h.f, s, &closed.ptr));
        Cell spectral = Cell::none();
        if (!degenerate) {
            ApiString w;
            check(pr_family_weight_spectral(h.f, s, &w.ptr));
            spectral = Cell::str(w.str());
        }
        t.add_row({Cell::str(node_label(label, sub)), Cell::str(lambda.str()),
                   Cell::str(closed.str()), spectral});
    }
    emit(t, family_meta(opt, "weights", h.f), opt);
}

void cmd_gram(const Options& opt) {
    FamilyHandle h = open_family(opt);
    Table t;
    t.columns = {"n", "m", "value", "expected"};
    for (long n = 0; n <= opt.n; ++n) {
        for (long m = 0; m <= opt.n; ++m) {
            ApiString value;
            check(pr_family_gram_entry(h.f, n, m, &value.ptr));
            Cell expected = Cell::none();
            if (n == m) {
                ApiString e;
                check(pr_family_gram_expected(h.f, n, &e.ptr));
                expected = Cell::str(e.str());
            }
            t.add_row({Cell::str(std::to_string(n)), Cell::str(std::to_string(m)),
                       Cell::str(value.str()), expected});
        }
    }
    emit(t, family_meta(opt, "gram", h.f), opt);
}

void cmd_bispectral(const Options& opt) {
    FamilyHandle h = open_family(opt);
    Table t;
    t.columns = {"n", "x", "residual_re", "residual_im"};
    // Half-integer sample points stay clear of the x = 0 pole.
    for (long k = 0; k < 2 * opt.n + 4; ++k) {
        std::string x = std::to_string(2 * k + 1) + "/2";
        for (long n = 0; n <= opt.n; ++n) {
            ApiString re, im;
            check(pr_family_difference_residual(h.f, n, x.c_str(), &re.ptr, &im.ptr));
            t.add_row({Cell::str(std::to_string(n)), Cell::str(x), Cell::str(re.str()),
                       Cell::str(im.str())});
        }
    }
    emit(t, family_meta(opt, "bispectral", h.f), opt);
}

void cmd_eigen(const Options& opt) {
    FamilyHandle h = open_family(opt);
    std::vector<double> eig(static_cast<std::size_t>(opt.n) + 1);
    check(pr_family_eigenvalues(h.f, eig.data(), eig.size()));
    Table t;
    t.columns = {"rank", "eigenvalue", "label", "lambda", "delta"};
    for (long rank = 0; rank <= opt.n; ++rank) {
        long node = 0;
        check(pr_family_sorted_node(h.f, rank, &node));
        pr_family_label label;
        long sub = 0;
        ApiString lambda;
        check(pr_family_node(h.f, node, &label, &sub, &lambda.ptr));
        double exact = std::strtod(lambda.str().c_str(), nullptr);
        if (lambda.str().find('/') != std::string::npos) {
            // "p/q" string: evaluate the quotient for the float delta column.
            double num = 0, den = 1;
            std::sscanf(lambda.str().c_str(), "%lf/%lf", &num, &den);
            exact = num / den;
        }
        t.add_row({Cell::str(std::to_string(rank)), Cell::num(eig[static_cast<std::size_t>(rank)]),
                   Cell::str(node_label(label, sub)), Cell::str(lambda.str()),
                   Cell::num(std::abs(eig[static_cast<std::size_t>(rank)] - exact))});
    }
    emit(t, family_meta(opt, "eigen", h.f), opt);
}

void cmd_pk_limit(const Options& opt) {
    if (opt.delta.empty()) fail(kExitUsage, "pk-limit requires --delta");
    PkStudyHandle study;
    pr_status rc = pr_pk_study_create(opt.n, opt.delta.c_str(), 16, opt.theta_max, &study.s);
    if (rc != PR_OK) fail_status(rc);

    Table t;
    t.columns = {"theta", "coeff_b_error", "coeff_u_error", "grid_error", "weight_error"};
    for (std::size_t i = 0; i < pr_pk_study_rows(study.s); ++i) {
        double theta, eb, eu, eg, ew;
        check(pr_pk_study_row(study.s, i, &theta, &eb, &eu, &eg, &ew));
        t.add_row({Cell::num(theta), Cell::num(eb), Cell::num(eu), Cell::num(eg), Cell::num(ew)});
    }
    double ob, ou, og, ow;
    check(pr_pk_study_orders(study.s, &ob, &ou, &og, &ow));
    json meta{{"command", "pk-limit"}, {"N", opt.n}, {"delta", opt.delta},
              {"theta_max", opt.theta_max},
              {"orders",
               {{"coeff_b", ob}, {"coeff_u", ou}, {"grid", og}, {"weights", ow}}}};
    emit(t, meta, opt);
}

void cmd_dual_hahn(const Options& opt) {
    if (opt.a.empty()) fail(kExitUsage, "dual-hahn requires --a");
    DualHahnHandle dh;
    pr_status rc = pr_dual_hahn_create(opt.n, opt.a.c_str(), &dh.d);
    if (rc != PR_OK) fail_status(rc);

    Table t;
    t.columns = {"n", "b_transformed", "b_reference", "u_transformed", "u_reference"};
    for (long m = 0; m <= opt.n; ++m) {
        ApiString bt, br, ut, ur;
        check(pr_dual_hahn_entry(dh.d, m, &bt.ptr, &br.ptr, &ut.ptr, &ur.ptr));
        t.add_row({Cell::str(std::to_string(m)), Cell::str(bt.str()), Cell::str(br.str()),
                   m >= 1 ? Cell::str(ut.str()) : Cell::none(),
                   m >= 1 ? Cell::str(ur.str()) : Cell::none()});
    }
    json meta{{"command", "dual-hahn"},
              {"N", opt.n},
              {"a", opt.a},
              {"match", pr_dual_hahn_match(dh.d) != 0},
              {"first_mismatch", pr_dual_hahn_first_mismatch(dh.d)}};
    emit(t, meta, opt);
    if (!pr_dual_hahn_match(dh.d)) {
        fail(kExitCheckFailed, "dual-hahn: transformed coefficients differ at degree " +
                                   std::to_string(pr_dual_hahn_first_mismatch(dh.d)));
    }
}

void cmd_certify(const Options& opt) {
    FamilyHandle h = open_family(opt);
    CertifyHandle cert;
    if (opt.table_b || opt.table_u) {
        if (!opt.table_b || !opt.table_u) {
            fail(kExitUsage, "config table must carry both b and u arrays");
        }
        std::vector<const char*> b, u;
        for (const auto& s : *opt.table_b) b.push_back(s.c_str());
        for (const auto& s : *opt.table_u) u.push_back(s.c_str());
        pr_status rc = pr_family_certify_table(h.f, b.data(), b.size(), u.data(), u.size(), &cert.c);
        if (rc != PR_OK) fail_status(rc);
    } else {
        pr_status rc = pr_family_certify(h.f, &cert.c);
        if (rc != PR_OK) fail_status(rc);
    }

    Table t;
    t.columns = {"check", "status", "detail"};
    for (std::size_t i = 0; i < pr_certify_count(cert.c); ++i) {
        t.add_row({Cell::str(pr_certify_name(cert.c, i)),
                   Cell::str(pr_certify_passed(cert.c, i) ? "pass" : "fail"),
                   Cell::str(pr_certify_detail(cert.c, i))});
    }
    json meta = family_meta(opt, "certify", h.f);
    meta["all_passed"] = pr_certify_all_passed(cert.c) != 0;
    emit(t, meta, opt);
    if (!pr_certify_all_passed(cert.c)) {
        fail(kExitCheckFailed,
             std::string("certification failed: ") + pr_certify_first_failure(cert.c));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"para-Racah polynomials: recurrence tables, bi-lattice grids, weights, "
                 "orthogonality and bispectrality reports"};
    app.require_subcommand(1);

    Options opt;
    const char* names[] = {"coeffs", "grid", "weights", "gram", "bispectral",
                           "eigen",  "pk-limit", "dual-hahn", "certify"};
    std::vector<CLI::App*> commands;
    for (const char* name : names) {
        CLI::App* cmd = app.add_subcommand(name);
        cmd->add_option("--N", opt.n, "number of points minus one");
        cmd->add_option("--a", opt.a, "parameter a (exact rational)");
        cmd->add_option("--c", opt.c, "parameter c (exact rational)");
        cmd->add_option("--alpha", opt.alpha, "deformation parameter in [0,1]");
        cmd->add_option("--delta", opt.delta, "para-Krawtchouk shift Delta");
        cmd->add_option("--theta-max", opt.theta_max, "largest theta in the pk study");
        cmd->add_option("--format", opt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
        cmd->add_option("--config", opt.config_path, "JSON parameter document");
        cmd->add_option("--precision", opt.precision, "digits for float rendering")
            ->check(CLI::Range(1, 17));
        commands.push_back(cmd);
    }

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            std::cerr << e.what() << "\n";
            return kExitUsage;
        }
        CLI::App* cmd = app.get_subcommands().front();
        if (!opt.config_path.empty()) load_config(opt, *cmd);
        const std::string name = cmd->get_name();
        if (name == "coeffs") cmd_coeffs(opt);
        else if (name == "grid") cmd_grid(opt);
        else if (name == "weights") cmd_weights(opt);
        else if (name == "gram") cmd_gram(opt);
        else if (name == "bispectral") cmd_bispectral(opt);
        else if (name == "eigen") cmd_eigen(opt);
        else if (name == "pk-limit") cmd_pk_limit(opt);
        else if (name == "dual-hahn") cmd_dual_hahn(opt);
        else if (name == "certify") cmd_certify(opt);
        return 0;
    } catch (const CliError& e) {
        std::cerr << "para-racah: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "para-racah: " << e.what() << "\n";
        return kExitInternal;
    }
}
