use hedg_core::{Hedg, HedgError, NodeId, NodeSet};

/// A separation query: is `x` separated from `y` given `z`?
///
/// The three sets may overlap; the endnode rule (a path whose endnode lies
/// in `z` is blocked) resolves overlaps without any special-casing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SepQuery {
    pub x: NodeSet,
    pub y: NodeSet,
    pub z: NodeSet,
}

impl SepQuery {
    pub fn new(x: NodeSet, y: NodeSet, z: NodeSet) -> Self {
        SepQuery { x, y, z }
    }

    /// Checks that every queried node exists in `g`.
    pub fn validate(&self, g: &Hedg) -> Result<(), HedgError> {
        for v in self.x.iter().chain(&self.y).chain(&self.z) {
            if !g.nodes().contains(v) {
                return Err(HedgError::UnknownNode(v.as_str().to_owned()));
            }
        }
        Ok(())
    }
}

/// How a path traverses the link between two consecutive nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkKind {
    /// Directed edge traversed with the arrow: v → w.
    Forward,
    /// Directed edge traversed against the arrow: v ← w.
    Backward,
    /// A shared hyperedge: v ↔ w.
    Bidirected,
}

impl LinkKind {
    /// Does this link put an arrowhead at its right endpoint?
    pub fn head_at_right(self) -> bool {
        matches!(self, LinkKind::Forward | LinkKind::Bidirected)
    }

    /// Does this link put an arrowhead at its left endpoint?
    pub fn head_at_left(self) -> bool {
        matches!(self, LinkKind::Backward | LinkKind::Bidirected)
    }
}

/// An open path certifying a negative separation answer: `nodes` joined by
/// `links`, with `links.len() == nodes.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SepWitness {
    pub nodes: Vec<NodeId>,
    pub links: Vec<LinkKind>,
}

impl std::fmt::Display for SepWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.nodes.iter().enumerate() {
            if i > 0 {
                let arrow = match self.links[i - 1] {
                    LinkKind::Forward => " -> ",
                    LinkKind::Backward => " <- ",
                    LinkKind::Bidirected => " <-> ",
                };
                f.write_str(arrow)?;
            }
            f.write_str(v.as_str())?;
        }
        Ok(())
    }
}
