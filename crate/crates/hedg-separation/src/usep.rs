//! Separation in plain undirected graphs.

use crate::{SepError, SepQuery};
use hedg_core::{HedgError, NodeSet};
use hedg_transform::UGraph;

/// Decides undirected separation: every path from x to y passes through z,
/// endpoints included.
pub fn u_separated(ug: &UGraph, q: &SepQuery) -> Result<bool, SepError> {
    for v in q.x.iter().chain(&q.y).chain(&q.z) {
        if !ug.nodes().contains(v) {
            return Err(SepError::Graph(HedgError::UnknownNode(
                v.as_str().to_owned(),
            )));
        }
    }
    let reduced = ug.without_nodes(&q.z);
    let from: NodeSet = q.x.difference(&q.z).cloned().collect();
    let reach = reduced.reachable_from(&from)?;
    Ok(q.y.difference(&q.z).all(|y| !reach.contains(y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hedg_fixtures::{n, ns, seven_node_latent_graph};
    use hedg_transform::moralize;
    use std::collections::BTreeSet;

    fn ug(nodes: &[&str], edges: &[(&str, &str)]) -> UGraph {
        UGraph::new(
            ns(nodes),
            edges
                .iter()
                .map(|(a, b)| (n(a), n(b)))
                .collect::<BTreeSet<_>>(),
        )
        .unwrap()
    }

    fn q(x: &[&str], y: &[&str], z: &[&str]) -> SepQuery {
        SepQuery::new(ns(x), ns(y), ns(z))
    }

    #[test]
    fn middle_of_a_path_separates() {
        let g = ug(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert!(u_separated(&g, &q(&["a"], &["c"], &["b"])).unwrap());
    }

    #[test]
    fn triangle_is_never_separated_by_one_corner() {
        let g = ug(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        assert!(!u_separated(&g, &q(&["a"], &["c"], &["b"])).unwrap());
    }

    #[test]
    fn moral_fixture_isolates_v3_behind_v2() {
        // v2 is the only moral neighbor of v3 in the seven-node fixture, so
        // removing it disconnects v3 from everything, v6 included.
        let moral = moralize(&seven_node_latent_graph());
        assert!(u_separated(&moral, &q(&["v3"], &["v6"], &["v2"])).unwrap());
        assert!(!u_separated(&moral, &q(&["v3"], &["v6"], &[])).unwrap());
    }
}
