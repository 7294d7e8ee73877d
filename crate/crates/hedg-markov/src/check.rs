use std::collections::BTreeMap;

use hedg_core::Hedg;
use hedg_dist::{FiniteDist, DEFAULT_CI_TOL};
use hedg_orders::{classify_order, TotalOrder};
use hedg_transform::{acyclic_augment, augment};

use crate::factor::check_afp_ipf;
use crate::global::{check_global, ensure_size, SUBSET_NODE_LIMIT};
use crate::local::{check_dlmp, check_olmp};
use crate::report::{Accum, MarkovReport};
use crate::undirected::{check_undirected, Flavor, Ground};
use crate::{MarkovError, PropertyKind, SepCriterion};

/// How closely a witness's observed marginal must match the given
/// distribution.
pub const WITNESS_MARGINAL_TOL: f64 = 1e-9;

/// Checks one Markov property of `(g, p)`.
///
/// `p`'s variables must be exactly the graph's nodes.  The ordered kinds
/// take the order through `ord`; the witnessed kinds take a distribution
/// over the augmented graph's nodes through `witness`, whose marginal onto
/// the observed nodes must reproduce `p`.
pub fn check(
    g: &Hedg,
    p: &FiniteDist,
    kind: PropertyKind,
    ord: Option<&TotalOrder>,
    witness: Option<&FiniteDist>,
) -> Result<MarkovReport, MarkovError> {
    if p.var_names() != *g.nodes() {
        return Err(MarkovError::VarMismatch);
    }
    let tol = DEFAULT_CI_TOL;
    let mut acc = Accum::default();
    match kind {
        PropertyKind::DGmp => {
            check_global(g, p, SepCriterion::D, tol, &mut acc)?;
        }
        PropertyKind::GdGmp => {
            check_global(g, p, SepCriterion::Sigma, tol, &mut acc)?;
        }
        PropertyKind::DLmp => {
            ensure_size(g, SUBSET_NODE_LIMIT)?;
            check_dlmp(g, p, tol, &mut acc)?;
        }
        PropertyKind::OLmp | PropertyKind::RFp => {
            let o = ord.ok_or(MarkovError::MissingOrder(kind.name()))?;
            ensure_size(g, SUBSET_NODE_LIMIT)?;
            check_olmp(g, p, o, tol, &mut acc)?;
        }
        PropertyKind::AuGmp => {
            ensure_size(g, SUBSET_NODE_LIMIT)?;
            check_undirected(g, p, Ground::Ancestral, Flavor::Global, tol, &mut acc)?;
        }
        PropertyKind::RuGmp => {
            ensure_size(g, SUBSET_NODE_LIMIT)?;
            check_undirected(g, p, Ground::All, Flavor::Global, tol, &mut acc)?;
        }
        PropertyKind::AuLmp => {
            ensure_size(g, SUBSET_NODE_LIMIT)?;
            check_undirected(g, p, Ground::Ancestral, Flavor::Local, tol, &mut acc)?;
        }
        PropertyKind::RuLmp => {
            ensure_size(g, SUBSET_NODE_LIMIT)?;
            check_undirected(g, p, Ground::All, Flavor::Local, tol, &mut acc)?;
        }
        PropertyKind::AuPmp => {
            ensure_size(g, SUBSET_NODE_LIMIT)?;
            check_undirected(g, p, Ground::Ancestral, Flavor::Pairwise, tol, &mut acc)?;
        }
        PropertyKind::RuPmp => {
            ensure_size(g, SUBSET_NODE_LIMIT)?;
            check_undirected(g, p, Ground::All, Flavor::Pairwise, tol, &mut acc)?;
        }
        PropertyKind::AFpIpf => {
            ensure_size(g, SUBSET_NODE_LIMIT)?;
            check_afp_ipf(g, p, &mut acc)?;
        }
        PropertyKind::WitnessMdGmp
        | PropertyKind::WitnessMgdGmp
        | PropertyKind::WitnessSmgdGmp
        | PropertyKind::WitnessMdLmp => {
            let w = witness.ok_or(MarkovError::MissingWitness(kind.name()))?;
            let aug = augment(g);
            if w.var_names() != *aug.nodes() {
                return Err(MarkovError::WitnessVarMismatch);
            }
            if !g.nodes().is_empty() {
                let back = w.marginal(g.nodes())?;
                let diff = back.tv_distance(p)?;
                if diff > WITNESS_MARGINAL_TOL {
                    return Err(MarkovError::WitnessMarginalMismatch { diff });
                }
            }
            match kind {
                PropertyKind::WitnessMdGmp => {
                    check_global(&aug, w, SepCriterion::D, tol, &mut acc)?;
                }
                PropertyKind::WitnessMgdGmp => {
                    check_global(&aug, w, SepCriterion::Sigma, tol, &mut acc)?;
                }
                PropertyKind::WitnessSmgdGmp => {
                    let acag = acyclic_augment(g);
                    check_global(&acag, w, SepCriterion::D, tol, &mut acc)?;
                }
                PropertyKind::WitnessMdLmp => {
                    ensure_size(&aug, SUBSET_NODE_LIMIT)?;
                    check_dlmp(&aug, w, tol, &mut acc)?;
                }
                _ => unreachable!(),
            }
        }
    }
    Ok(MarkovReport::from_accum(kind.name(), acc))
}

/// Runs every applicable non-witness property (the ordered ones only when an
/// order is given) and verifies that the outcome pattern respects the known
/// implications between the properties.  A conflict means a checker is
/// broken and comes back as an error; otherwise the per-property pass flags
/// are returned.
pub fn hierarchy_audit(
    g: &Hedg,
    p: &FiniteDist,
    ord: Option<&TotalOrder>,
) -> Result<BTreeMap<PropertyKind, bool>, MarkovError> {
    use PropertyKind::*;

    let mut passes = BTreeMap::new();
    for kind in [
        DGmp, GdGmp, DLmp, AuGmp, RuGmp, AuLmp, RuLmp, AuPmp, RuPmp, AFpIpf,
    ] {
        passes.insert(kind, check(g, p, kind, None, None)?.pass);
    }
    if let Some(o) = ord {
        for kind in [OLmp, RFp] {
            passes.insert(kind, check(g, p, kind, Some(o), None)?.pass);
        }
    }

    // Implications that hold for every graph and distribution; the refined
    // and ancestral global forms are mutually equivalent with the directed
    // global property, hence the back-and-forth pairs.
    let mut implications = vec![
        (DGmp, GdGmp),
        (DGmp, DLmp),
        (AFpIpf, DGmp),
        (DGmp, RuGmp),
        (RuGmp, DGmp),
        (RuGmp, AuGmp),
        (AuGmp, RuGmp),
        (RuGmp, RuLmp),
        (RuLmp, RuGmp),
        (RuLmp, RuPmp),
        (RuPmp, RuLmp),
        (AuGmp, AuLmp),
        (AuLmp, AuPmp),
        (RuLmp, AuLmp),
        (RuPmp, AuPmp),
    ];
    if let Some(o) = ord {
        implications.push((DGmp, OLmp));
        implications.push((OLmp, RFp));
        implications.push((RFp, OLmp));
        let shape = classify_order(g, o)?;
        if shape.perfect_elimination {
            implications.push((OLmp, DGmp));
        }
        if shape.pseudo_topological && shape.assembling {
            implications.push((DLmp, OLmp));
        }
    }
    if p.probs().iter().all(|&q| q > 0.0) {
        implications.push((AuPmp, AuGmp));
    }

    for (stronger, weaker) in implications {
        if let (Some(&a), Some(&b)) = (passes.get(&stronger), passes.get(&weaker)) {
            if a && !b {
                return Err(MarkovError::HierarchyConflict {
                    holds: stronger.name(),
                    fails: weaker.name(),
                });
            }
        }
    }
    Ok(passes)
}
