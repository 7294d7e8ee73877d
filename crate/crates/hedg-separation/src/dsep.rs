//! d-separation: the production moral-graph algorithm and the path oracle.

use crate::paths::{find_open_path, BlockRule};
use crate::{LinkKind, SepError, SepQuery, SepWitness};
use hedg_core::{Hedg, NodeId, NodeSet};
use hedg_transform::moralize;

/// Decides d-separation by reachability in the moralized ancestral closure:
/// take the ancestral closure of x∪y∪z, moralize it, delete z, and test
/// whether x∖z can reach y∖z.
pub fn d_separated(g: &Hedg, q: &SepQuery) -> Result<bool, SepError> {
    q.validate(g)?;
    let all: NodeSet = q.x.union(&q.y).cloned().chain(q.z.iter().cloned()).collect();
    let closure = g.ancestral_closure(&all)?;
    let reduced = moralize(&closure).without_nodes(&q.z);
    let from: NodeSet = q.x.difference(&q.z).cloned().collect();
    let reach = reduced.reachable_from(&from)?;
    Ok(q.y.difference(&q.z).all(|y| !reach.contains(y)))
}

struct DRule {
    z: NodeSet,
    anc_z: NodeSet,
}

impl BlockRule for DRule {
    fn blocked(
        &self,
        _prev: &NodeId,
        incoming: LinkKind,
        node: &NodeId,
        outgoing: LinkKind,
        _next: &NodeId,
    ) -> bool {
        let collider = incoming.head_at_right() && outgoing.head_at_left();
        if collider {
            !self.anc_z.contains(node)
        } else {
            self.z.contains(node)
        }
    }
}

/// Decides d-separation by enumerating simple paths: a path is blocked when
/// an endnode lies in z, a non-collider lies in z, or a collider lies
/// outside the ancestors of z. Returns an open path as witness when the
/// answer is negative. Errors with `SizeLimit` beyond 14 nodes.
pub fn d_separated_paths(
    g: &Hedg,
    q: &SepQuery,
) -> Result<(bool, Option<SepWitness>), SepError> {
    q.validate(g)?;
    let rule = DRule {
        z: q.z.clone(),
        anc_z: g.ancestors(&q.z)?,
    };
    let open = find_open_path(g, q, &rule)?;
    Ok((open.is_none(), open))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hedg_fixtures::{
        chain3, collider3, dsep_sigma_gap_graph, four_cycle, ns, seven_node_latent_graph,
        two_cycle_confounder_graph,
    };
    use hedg_transform::augment;

    fn q(x: &[&str], y: &[&str], z: &[&str]) -> SepQuery {
        SepQuery::new(ns(x), ns(y), ns(z))
    }

    #[test]
    fn gap_fixture_is_d_separated() {
        let g = dsep_sigma_gap_graph();
        let query = q(&["v1"], &["v3"], &["v2", "v6"]);
        assert!(d_separated(&g, &query).unwrap());
        assert!(d_separated_paths(&g, &query).unwrap().0);
    }

    #[test]
    fn x_inside_z_is_always_separated() {
        let g = chain3();
        let query = q(&["a"], &["c"], &["a", "b"]);
        assert!(d_separated(&g, &query).unwrap());
        assert!(d_separated_paths(&g, &query).unwrap().0);
    }

    #[test]
    fn augmented_two_cycle_is_not_separated_given_its_latents() {
        let aug = augment(&two_cycle_confounder_graph());
        let query = q(&["v3"], &["v4"], &["e{v1}", "e{v2}"]);
        assert!(!d_separated(&aug, &query).unwrap());
        assert!(!d_separated_paths(&aug, &query).unwrap().0);
    }

    #[test]
    fn open_chain_yields_a_witness() {
        let g = chain3();
        let (sep, witness) = d_separated_paths(&g, &q(&["a"], &["c"], &[])).unwrap();
        assert!(!sep);
        let w = witness.unwrap();
        assert_eq!(w.to_string(), "a -> b -> c");
    }

    #[test]
    fn conditioned_collider_opens() {
        let g = collider3();
        let query = q(&["a"], &["b"], &["c"]);
        assert!(!d_separated(&g, &query).unwrap());
        assert!(!d_separated_paths(&g, &query).unwrap().0);
        // Unconditioned, the collider blocks.
        let query = q(&["a"], &["b"], &[]);
        assert!(d_separated(&g, &query).unwrap());
    }

    #[test]
    fn four_cycle_interior_pair_is_separated() {
        let g = four_cycle();
        let query = q(&["x1"], &["x3"], &["x2", "x4"]);
        assert!(d_separated(&g, &query).unwrap());
        assert!(d_separated_paths(&g, &query).unwrap().0);
    }

    #[test]
    fn overlapping_query_nodes_follow_the_endnode_rule() {
        let g = seven_node_latent_graph();
        // v3 is in both x and y and not conditioned on: trivially connected.
        let query = q(&["v3"], &["v3"], &[]);
        let (sep, w) = d_separated_paths(&g, &query).unwrap();
        assert!(!sep);
        assert_eq!(w.unwrap().nodes.len(), 1);
        assert!(!d_separated(&g, &query).unwrap());
        // Conditioning on it blocks the single-node path.
        let query = q(&["v3"], &["v3"], &["v3"]);
        assert!(d_separated(&g, &query).unwrap());
        assert!(d_separated_paths(&g, &query).unwrap().0);
    }

    #[test]
    fn unknown_node_is_rejected() {
        let g = chain3();
        assert!(matches!(
            d_separated(&g, &q(&["a"], &["zz"], &[])),
            Err(SepError::Graph(_))
        ));
    }
}
