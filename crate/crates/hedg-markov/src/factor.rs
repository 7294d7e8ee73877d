use hedg_core::Hedg;
use hedg_dist::{ipf_fit, FiniteDist, DEFAULT_IPF_MAX_ITERS, DEFAULT_IPF_TOL};
use hedg_transform::moralize;

use crate::global::ancestral_sets;
use crate::report::{fmt_set, Accum, Violation};
use crate::MarkovError;

/// A fitted clique product farther than this from the target counts as a
/// genuine factorization failure; closer-but-unconverged fits are reported
/// as inconclusive rather than decided.
pub const IPF_VERDICT_TOL: f64 = 1e-6;

/// For every nonempty ancestrally closed set, projects the marginal onto the
/// products over the maximal cliques of the moralization and measures the
/// remaining total-variation gap.
pub(crate) fn check_afp_ipf(
    g: &Hedg,
    p: &FiniteDist,
    acc: &mut Accum,
) -> Result<(), MarkovError> {
    for a in ancestral_sets(g)? {
        if a.is_empty() {
            continue;
        }
        let pa = p.marginal(&a)?;
        let cliques = moralize(&g.induced_subhedg(&a)?).maximal_cliques();
        let fit = ipf_fit(&pa, &cliques, DEFAULT_IPF_MAX_ITERS, DEFAULT_IPF_TOL)?;
        acc.checked += 1;
        let statement = format!(
            "marginal on {} factorizes over its {} moral cliques",
            fmt_set(&a),
            cliques.len()
        );
        if fit.tv_distance >= IPF_VERDICT_TOL {
            acc.violations.push(Violation {
                statement,
                defect: fit.tv_distance,
            });
        } else if !fit.converged {
            acc.inconclusive.push(Violation {
                statement,
                defect: fit.tv_distance,
            });
        }
    }
    Ok(())
}
