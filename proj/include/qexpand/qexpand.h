/* C API for the qexpand exact series toolkit.
 *
 * All functions operate through an opaque context handle. Numeric results are
 * returned as malloc'd decimal strings ("p/q" rationals, decimal integers) or
 * JSON documents; release them with qx_free_str. On failure the functions
 * return NULL (or a negative int) and store a code/message on the context.
 */
#ifndef QEXPAND_H
#define QEXPAND_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qx_ctx qx_ctx;

enum {
    QX_OK = 0,
    QX_EUSAGE = 1,        /* bad arguments / unknown names */
    QX_EDOMAIN = 2,       /* outside mathematical domain */
    QX_EVERIFY = 3,       /* verification suite found counterexamples */
    QX_EPRECISION = 4,    /* beyond configured oracle precision */
    QX_EINTERNAL = 5      /* internal inconsistency (two routes disagreed) */
};

qx_ctx* qx_ctx_new(void);
void qx_ctx_free(qx_ctx* ctx);

int qx_errno(const qx_ctx* ctx);
const char* qx_errmsg(const qx_ctx* ctx);

void qx_free_str(char* s);

/* Signed Stirling number s(n,k) as a decimal string. */
char* qx_stirling(qx_ctx* ctx, unsigned n, unsigned k);
/* JSON: {"schema":"1","n":N,"row":["s(n,0)",...,"s(n,n)"]} */
char* qx_stirling_row(qx_ctx* ctx, unsigned n);

/* Q(k,m) in canonical rational text. */
char* qx_q(qx_ctx* ctx, unsigned k, unsigned m);
/* JSON: {"schema":"1","k_max":K,"m_max":M,"rows":[["1","0",...],...]} */
char* qx_q_table(qx_ctx* ctx, unsigned k_max, unsigned m_max);

/* B_{n,k} at comma-separated rational values ("p/q,p/q,..."). */
char* qx_bell(qx_ctx* ctx, unsigned n, unsigned k, const char* values);
/* B_{m,k} at the arccos-ratio derivative sequence (both routes). */
char* qx_bell_arccos(qx_ctx* ctx, unsigned m, unsigned k);

/* JSON: {"schema":"1","variant":...,"coeffs":["c0","c1",...]} low-to-high.
 * variant: "consecutive" | "odd"; via_stirling selects the identity route. */
char* qx_prod(qx_ctx* ctx, unsigned k, const char* variant, int via_stirling);

/* JSON CoeffSeries {"schema":"1","expr":...,"center":...,"variable":...,
 * "parity":...,"global_sign":...,"coeffs":["p/q",...]}.
 * expr: arcsin-pow | arcsinh-pow | arccos-ratio | arccosh-ratio | shifted |
 * shifted-hyp | alpha-ratio. k used by the k-indexed families, alpha ("p/q",
 * may be NULL) by alpha-ratio. */
char* qx_series(qx_ctx* ctx, const char* expr, unsigned k, const char* alpha,
                unsigned terms);

/* As qx_series plus {"eval":{"x":...,"digits":D,"value":"..."}}. */
char* qx_series_eval(qx_ctx* ctx, const char* expr, unsigned k, const char* alpha,
                     unsigned terms, const char* x, unsigned digits);

/* JSON: partial sum, target, residual and ratio diagnostics for a pi series.
 * repr: sq8 | pow8 | sqrt2 | alpha9 | classic-basel | classic-odd |
 * classic-alt | classic-central. */
char* qx_pi(qx_ctx* ctx, const char* repr, unsigned k, const char* alpha,
            unsigned terms, unsigned digits);

/* JSON: {"schema":"1","k":K,"terms":M,"root_estimate":...,"ratios":[...]} */
char* qx_pi_l_estimate(qx_ctx* ctx, unsigned k, unsigned terms, unsigned digits);

/* JSON comparison report of a truncated series against the direct oracle
 * composition at x. */
char* qx_compare(qx_ctx* ctx, const char* expr, unsigned k, const char* alpha,
                 const char* x, unsigned terms, unsigned digits);

/* JSON: partial Maclaurin coefficient of x^j of (arccos x)^{2k} with tail
 * bound diagnostics. */
char* qx_maclaurin(qx_ctx* ctx, unsigned k, unsigned j, unsigned terms);

/* Runs a verification suite (stirling|q|bell|products|series|pi|all).
 * Returns QX_OK or QX_EVERIFY and stores the JSON report in *report_json
 * (caller frees); other codes on usage/domain errors (*report_json NULL). */
int qx_verify(qx_ctx* ctx, const char* suite, unsigned max_n, uint64_t seed,
              char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* QEXPAND_H */
