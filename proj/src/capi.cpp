#include "para_racah/para_racah.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "para_racah/bispectral.hpp"
#include "para_racah/certify.hpp"
#include "para_racah/degenerations.hpp"
#include "para_racah/exact.hpp"
#include "para_racah/explicit_form.hpp"
#include "para_racah/parameters.hpp"
#include "para_racah/recurrence.hpp"
#include "para_racah/spectral.hpp"

using namespace pararacah;

// Handle bodies. The family caches its derived data lazily so repeated
// queries (CLI table emission, Gram loops) do not recompute.
struct pr_family {
    ParamSet params;
    std::optional<RecurrenceTable> table;
    std::optional<BiLattice> lattice;
    std::optional<std::vector<Rational>> weights_closed;
    std::optional<std::vector<Rational>> weights_spec;
    std::optional<std::vector<std::vector<Rational>>> node_values; // P_n(x_s), per node

    const RecurrenceTable& get_table() {
        if (!table) table = recurrence_table(params);
        return *table;
    }
    const BiLattice& get_lattice() {
        if (!lattice) lattice = bi_lattice(params);
        return *lattice;
    }
    const std::vector<Rational>& get_weights_closed() {
        if (!weights_closed) weights_closed = weights_closed_form(params);
        return *weights_closed;
    }
    const std::vector<Rational>& get_weights_spectral() {
        if (!weights_spec) weights_spec = weights_spectral(params, get_table());
        return *weights_spec;
    }
    const std::vector<std::vector<Rational>>& get_node_values() {
        if (!node_values) {
            std::vector<std::vector<Rational>> v;
            for (const auto& node : get_lattice().nodes) {
                v.push_back(eval_poly_sequence(get_table(), node.lambda));
            }
            node_values = std::move(v);
        }
        return *node_values;
    }
};

struct pr_certify {
    std::vector<CheckResult> results;
};

struct pr_pk_study {
    PkStudy study;
};

struct pr_dual_hahn {
    DualHahnReport report;
};

namespace {

thread_local std::string g_last_error;

void set_last_error(const std::string& message) { g_last_error = message; }

pr_status status_from(Errc code) {
    switch (code) {
        case Errc::ok: return PR_OK;
        case Errc::parse_error: return PR_ERR_PARSE;
        case Errc::regime_violation: return PR_ERR_REGIME;
        case Errc::degenerate_parameters: return PR_ERR_DEGENERATE;
        case Errc::index_out_of_range: return PR_ERR_INDEX;
        case Errc::pole_at_x: return PR_ERR_POLE;
        case Errc::alpha_zero_branch: return PR_ERR_ALPHA_BRANCH;
        case Errc::not_block_degenerate: return PR_ERR_NOT_BLOCK_DEGENERATE;
        case Errc::colliding_nodes: return PR_ERR_COLLIDING_NODES;
        case Errc::convergence_failure: return PR_ERR_CONVERGENCE;
        case Errc::zero_at_node: return PR_ERR_ZERO_AT_NODE;
        case Errc::negative_offdiagonal: return PR_ERR_NEGATIVE_OFFDIAGONAL;
        case Errc::check_failed: return PR_ERR_CHECK_FAILED;
        case Errc::internal: return PR_ERR_INTERNAL;
    }
    return PR_ERR_INTERNAL;
}

template <typename Fn>
pr_status guarded(Fn&& fn) {
    try {
        fn();
        return PR_OK;
    } catch (const Error& e) {
        set_last_error(e.what());
        return status_from(e.code());
    } catch (const std::exception& e) {
        set_last_error(e.what());
        return PR_ERR_INTERNAL;
    } catch (...) {
        set_last_error("unknown error");
        return PR_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pr_status require(bool condition, const char* message) {
    if (!condition) {
        set_last_error(message);
        return PR_ERR_NULL_ARGUMENT;
    }
    return PR_OK;
}

} // namespace

extern "C" {

const char* pr_status_name(pr_status status) {
    switch (status) {
        case PR_OK: return "ok";
        case PR_ERR_NULL_ARGUMENT: return "null-argument";
        case PR_ERR_PARSE: return "parse-error";
        case PR_ERR_REGIME: return "regime-violation";
        case PR_ERR_DEGENERATE: return "degenerate-parameters";
        case PR_ERR_INDEX: return "index-out-of-range";
        case PR_ERR_POLE: return "pole-at-x";
        case PR_ERR_ALPHA_BRANCH: return "alpha-zero-branch";
        case PR_ERR_NOT_BLOCK_DEGENERATE: return "not-block-degenerate";
        case PR_ERR_COLLIDING_NODES: return "colliding-nodes";
        case PR_ERR_CONVERGENCE: return "convergence-failure";
        case PR_ERR_ZERO_AT_NODE: return "zero-at-node";
        case PR_ERR_NEGATIVE_OFFDIAGONAL: return "negative-offdiagonal";
        case PR_ERR_CHECK_FAILED: return "check-failed";
        case PR_ERR_BUFFER: return "buffer-too-small";
        case PR_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* pr_last_error(void) { return g_last_error.c_str(); }

void pr_string_free(char* s) { std::free(s); }

pr_status pr_family_create(long n, const char* a, const char* c, const char* alpha,
                           pr_family** out) {
    if (auto rc = require(a && c && alpha && out, "pr_family_create: null argument")) return rc;
    *out = nullptr;
    return guarded([&] {
        ParamSet params = validate(static_cast<int>(n), rational_from_string(a),
                                   rational_from_string(c), rational_from_string(alpha));
        *out = new pr_family{params, {}, {}, {}, {}, {}};
    });
}

void pr_family_destroy(pr_family* f) { delete f; }

long pr_family_n(const pr_family* f) { return f ? f->params.n_max : -1; }
long pr_family_j(const pr_family* f) { return f ? f->params.j : -1; }
int pr_family_is_odd(const pr_family* f) { return f && f->params.odd() ? 1 : 0; }
int pr_family_alpha_degenerate(const pr_family* f) {
    return f && f->params.alpha_degenerate ? 1 : 0;
}
const char* pr_family_regime(const pr_family* f) {
    return f ? regime_name(f->params.regime) : "?";
}

pr_status pr_family_coeff_b(pr_family* f, long n, char** out) {
    if (auto rc = require(f && out, "pr_family_coeff_b: null argument")) return rc;
    return guarded([&] {
        if (n < 0 || n > f->params.n_max) throw IndexOutOfRange("b index outside [0, N]");
        *out = dup_string(to_string(f->get_table().b[static_cast<std::size_t>(n)]));
    });
}

pr_status pr_family_coeff_u(pr_family* f, long n, char** out) {
    if (auto rc = require(f && out, "pr_family_coeff_u: null argument")) return rc;
    return guarded([&] {
        if (n < 1 || n > f->params.n_max) throw IndexOutOfRange("u index outside [1, N]");
        *out = dup_string(to_string(f->get_table().u[static_cast<std::size_t>(n)]));
    });
}

pr_status pr_family_wilson_a(pr_family* f, long n, char** out) {
    if (auto rc = require(f && out, "pr_family_wilson_a: null argument")) return rc;
    return guarded([&] { *out = dup_string(to_string(wilson_a(f->params, static_cast<int>(n)))); });
}

pr_status pr_family_wilson_c(pr_family* f, long n, char** out) {
    if (auto rc = require(f && out, "pr_family_wilson_c: null argument")) return rc;
    return guarded([&] { *out = dup_string(to_string(wilson_c(f->params, static_cast<int>(n)))); });
}

pr_status pr_family_eval(pr_family* f, long n, const char* lambda, char** out) {
    if (auto rc = require(f && lambda && out, "pr_family_eval: null argument")) return rc;
    return guarded([&] {
        Rational value = eval_poly(f->get_table(), static_cast<int>(n), rational_from_string(lambda));
        *out = dup_string(to_string(value));
    });
}

pr_status pr_family_eval_explicit(pr_family* f, long n, const char* lambda, char** out) {
    if (auto rc = require(f && lambda && out, "pr_family_eval_explicit: null argument")) return rc;
    return guarded([&] {
        Rational value = eval_explicit(f->params, static_cast<int>(n), rational_from_string(lambda));
        *out = dup_string(to_string(value));
    });
}

pr_status pr_family_char_poly(pr_family* f, const char* lambda, char** out) {
    if (auto rc = require(f && lambda && out, "pr_family_char_poly: null argument")) return rc;
    return guarded([&] {
        *out = dup_string(to_string(char_poly_explicit(f->params, rational_from_string(lambda))));
    });
}

pr_status pr_family_node(pr_family* f, long s, pr_family_label* label, long* sublattice_index,
                         char** lambda) {
    if (auto rc = require(f != nullptr, "pr_family_node: null family")) return rc;
    return guarded([&] {
        const BiLattice& grid = f->get_lattice();
        if (s < 0 || s >= grid.size()) throw IndexOutOfRange("node index outside [0, N]");
        const auto& node = grid.nodes[static_cast<std::size_t>(s)];
        if (label) {
            *label = node.family == BiLattice::Family::a_family ? PR_FAMILY_A : PR_FAMILY_C;
        }
        if (sublattice_index) *sublattice_index = node.s;
        if (lambda) *lambda = dup_string(to_string(node.lambda));
    });
}

pr_status pr_family_sorted_node(pr_family* f, long rank, long* node_index) {
    if (auto rc = require(f && node_index, "pr_family_sorted_node: null argument")) return rc;
    return guarded([&] {
        const BiLattice& grid = f->get_lattice();
        if (rank < 0 || rank >= grid.size()) throw IndexOutOfRange("rank outside [0, N]");
        *node_index = grid.sorted_order[static_cast<std::size_t>(rank)];
    });
}

pr_status pr_family_weight_closed(pr_family* f, long s, char** out) {
    if (auto rc = require(f && out, "pr_family_weight_closed: null argument")) return rc;
    return guarded([&] {
        const auto& w = f->get_weights_closed();
        if (s < 0 || s >= static_cast<long>(w.size())) throw IndexOutOfRange("node index outside [0, N]");
        *out = dup_string(to_string(w[static_cast<std::size_t>(s)]));
    });
}

pr_status pr_family_weight_spectral(pr_family* f, long s, char** out) {
    if (auto rc = require(f && out, "pr_family_weight_spectral: null argument")) return rc;
    return guarded([&] {
        const auto& w = f->get_weights_spectral();
        if (s < 0 || s >= static_cast<long>(w.size())) throw IndexOutOfRange("node index outside [0, N]");
        *out = dup_string(to_string(w[static_cast<std::size_t>(s)]));
    });
}

pr_status pr_family_gram_entry(pr_family* f, long n, long m, char** out) {
    if (auto rc = require(f && out, "pr_family_gram_entry: null argument")) return rc;
    return guarded([&] {
        const int N = f->params.n_max;
        if (n < 0 || n > N || m < 0 || m > N) throw IndexOutOfRange("Gram index outside [0, N]");
        const auto& values = f->get_node_values();
        const auto& w = f->get_weights_closed();
        Rational acc(0);
        for (int s = 0; s <= N; ++s) {
            acc += values[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)] *
                   values[static_cast<std::size_t>(s)][static_cast<std::size_t>(m)] *
                   w[static_cast<std::size_t>(s)];
        }
        *out = dup_string(to_string(acc));
    });
}

pr_status pr_family_gram_expected(pr_family* f, long n, char** out) {
    if (auto rc = require(f && out, "pr_family_gram_expected: null argument")) return rc;
    return guarded([&] {
        if (n < 0 || n > f->params.n_max) throw IndexOutOfRange("index outside [0, N]");
        Rational acc(1);
        for (long m = 1; m <= n; ++m) acc *= f->get_table().u[static_cast<std::size_t>(m)];
        *out = dup_string(to_string(acc));
    });
}

pr_status pr_family_difference_residual(pr_family* f, long n, const char* x, char** re,
                                        char** im) {
    if (auto rc = require(f && x && re && im, "pr_family_difference_residual: null argument")) {
        return rc;
    }
    return guarded([&] {
        Gaussian r = difference_residual(f->params, f->get_table(), static_cast<int>(n),
                                         rational_from_string(x));
        *re = dup_string(to_string(r.re));
        *im = dup_string(to_string(r.im));
    });
}

pr_status pr_family_eigenvalues(pr_family* f, double* eig, size_t capacity) {
    if (auto rc = require(f && eig, "pr_family_eigenvalues: null argument")) return rc;
    if (capacity < static_cast<size_t>(f->params.n_max) + 1) {
        set_last_error("eigenvalue buffer too small");
        return PR_ERR_BUFFER;
    }
    return guarded([&] {
        std::vector<double> values = eigenvalues(jacobi_matrix(f->get_table()));
        for (std::size_t i = 0; i < values.size(); ++i) eig[i] = values[i];
    });
}

pr_status pr_family_block_split(pr_family* f, long* first, long* second) {
    if (auto rc = require(f && first && second, "pr_family_block_split: null argument")) return rc;
    return guarded([&] {
        auto [a, b] = block_split(f->params);
        *first = a;
        *second = b;
    });
}

pr_status pr_family_degeneracy(pr_family* f, long* eigenvalue, long* multiplicity,
                               size_t capacity, size_t* count) {
    if (auto rc = require(f && count, "pr_family_degeneracy: null argument")) return rc;
    return guarded([&] {
        auto mult = spectrum_degeneracy(f->params);
        *count = mult.size();
        if (!eigenvalue || !multiplicity) return;
        if (capacity < mult.size()) throw Error(Errc::internal, "degeneracy buffer too small");
        std::size_t i = 0;
        for (const auto& [ev, m] : mult) {
            eigenvalue[i] = ev;
            multiplicity[i] = m;
            ++i;
        }
    });
}

pr_status pr_family_certify(pr_family* f, pr_certify** out) {
    if (auto rc = require(f && out, "pr_family_certify: null argument")) return rc;
    return guarded([&] { *out = new pr_certify{certify(f->params)}; });
}

pr_status pr_family_certify_table(pr_family* f, const char* const* b, size_t b_len,
                                  const char* const* u, size_t u_len, pr_certify** out) {
    if (auto rc = require(f && b && u && out, "pr_family_certify_table: null argument")) return rc;
    return guarded([&] {
        const std::size_t N = static_cast<std::size_t>(f->params.n_max);
        if (b_len != N + 1 || u_len != N) {
            throw IndexOutOfRange("table must carry N+1 b entries and N u entries");
        }
        RecurrenceTable table;
        table.u.assign(N + 2, Rational(0));
        for (std::size_t i = 0; i < b_len; ++i) table.b.push_back(rational_from_string(b[i]));
        for (std::size_t i = 0; i < u_len; ++i) table.u[i + 1] = rational_from_string(u[i]);
        *out = new pr_certify{certify(f->params, table)};
    });
}

void pr_certify_destroy(pr_certify* c) { delete c; }

size_t pr_certify_count(const pr_certify* c) { return c ? c->results.size() : 0; }

const char* pr_certify_name(const pr_certify* c, size_t i) {
    return (c && i < c->results.size()) ? c->results[i].name.c_str() : nullptr;
}

int pr_certify_passed(const pr_certify* c, size_t i) {
    return (c && i < c->results.size() && c->results[i].pass) ? 1 : 0;
}

const char* pr_certify_detail(const pr_certify* c, size_t i) {
    return (c && i < c->results.size()) ? c->results[i].detail.c_str() : nullptr;
}

int pr_certify_all_passed(const pr_certify* c) { return c && all_passed(c->results) ? 1 : 0; }

const char* pr_certify_first_failure(const pr_certify* c) {
    if (!c) return nullptr;
    for (const auto& r : c->results) {
        if (!r.pass) return r.name.c_str();
    }
    return nullptr;
}

pr_status pr_pk_limit_b(long n, const char* delta, long m, char** out) {
    if (auto rc = require(delta && out, "pr_pk_limit_b: null argument")) return rc;
    return guarded([&] {
        ParaKrawtchoukTarget t = pk_limit_coefficients(static_cast<int>(n), rational_from_string(delta));
        if (m < 0 || m > n) throw IndexOutOfRange("index outside [0, N]");
        *out = dup_string(to_string(t.coeffs.b[static_cast<std::size_t>(m)]));
    });
}

pr_status pr_pk_limit_u(long n, const char* delta, long m, char** out) {
    if (auto rc = require(delta && out, "pr_pk_limit_u: null argument")) return rc;
    return guarded([&] {
        ParaKrawtchoukTarget t = pk_limit_coefficients(static_cast<int>(n), rational_from_string(delta));
        if (m < 1 || m > n) throw IndexOutOfRange("index outside [1, N]");
        *out = dup_string(to_string(t.coeffs.u[static_cast<std::size_t>(m - 1)]));
    });
}

pr_status pr_pk_study_create(long n, const char* delta, long theta_min, long theta_max,
                             pr_pk_study** out) {
    if (auto rc = require(delta && out, "pr_pk_study_create: null argument")) return rc;
    return guarded([&] {
        *out = new pr_pk_study{pk_convergence_study(static_cast<int>(n),
                                                    rational_from_string(delta), theta_min,
                                                    theta_max)};
    });
}

void pr_pk_study_destroy(pr_pk_study* s) { delete s; }

size_t pr_pk_study_rows(const pr_pk_study* s) { return s ? s->study.rows.size() : 0; }

pr_status pr_pk_study_row(const pr_pk_study* s, size_t i, double* theta, double* coeff_b_error,
                          double* coeff_u_error, double* grid_error, double* weight_error) {
    if (auto rc = require(s != nullptr, "pr_pk_study_row: null study")) return rc;
    if (i >= s->study.rows.size()) {
        set_last_error("row index out of range");
        return PR_ERR_INDEX;
    }
    const PkStudyRow& row = s->study.rows[i];
    if (theta) *theta = static_cast<double>(row.theta);
    if (coeff_b_error) *coeff_b_error = row.coeff_b_error;
    if (coeff_u_error) *coeff_u_error = row.coeff_u_error;
    if (grid_error) *grid_error = row.grid_error;
    if (weight_error) *weight_error = row.weight_error;
    return PR_OK;
}

pr_status pr_pk_study_orders(const pr_pk_study* s, double* order_b, double* order_u,
                             double* order_grid, double* order_weights) {
    if (auto rc = require(s != nullptr, "pr_pk_study_orders: null study")) return rc;
    if (order_b) *order_b = s->study.order_b;
    if (order_u) *order_u = s->study.order_u;
    if (order_grid) *order_grid = s->study.order_grid;
    if (order_weights) *order_weights = s->study.order_weights;
    return PR_OK;
}

pr_status pr_dual_hahn_create(long n, const char* a, pr_dual_hahn** out) {
    if (auto rc = require(a && out, "pr_dual_hahn_create: null argument")) return rc;
    return guarded([&] {
        *out = new pr_dual_hahn{dual_hahn_check(static_cast<int>(n), rational_from_string(a))};
    });
}

void pr_dual_hahn_destroy(pr_dual_hahn* d) { delete d; }

int pr_dual_hahn_match(const pr_dual_hahn* d) { return d && d->report.match ? 1 : 0; }

long pr_dual_hahn_first_mismatch(const pr_dual_hahn* d) {
    return d ? d->report.first_mismatch : -1;
}

pr_status pr_dual_hahn_entry(const pr_dual_hahn* d, long m, char** b_transformed,
                             char** b_reference, char** u_transformed, char** u_reference) {
    if (auto rc = require(d != nullptr, "pr_dual_hahn_entry: null report")) return rc;
    return guarded([&] {
        const long n = d->report.n_max;
        if (m < 0 || m > n) throw IndexOutOfRange("index outside [0, N]");
        if (b_transformed) {
            *b_transformed = dup_string(to_string(d->report.transformed.b[static_cast<std::size_t>(m)]));
        }
        if (b_reference) {
            *b_reference = dup_string(to_string(d->report.reference.b[static_cast<std::size_t>(m)]));
        }
        if (m >= 1) {
            if (u_transformed) {
                *u_transformed =
                    dup_string(to_string(d->report.transformed.u[static_cast<std::size_t>(m - 1)]));
            }
            if (u_reference) {
                *u_reference =
                    dup_string(to_string(d->report.reference.u[static_cast<std::size_t>(m - 1)]));
            }
        } else {
            if (u_transformed) *u_transformed = nullptr;
            if (u_reference) *u_reference = nullptr;
        }
    });
}

} // extern "C"
